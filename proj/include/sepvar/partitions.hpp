#ifndef SEPVAR_PARTITIONS_HPP
#define SEPVAR_PARTITIONS_HPP

#include <compare>
#include <string>
#include <vector>

#include "sepvar/rational.hpp"

namespace sepvar {

// Young diagram: weakly decreasing non-negative parts, trailing zeros
// normalized away.  Immutable value type.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Parses "4,3,1"; the empty string is the trivial diagram.
    static Partition parse(const std::string& s);

    int depth() const { return static_cast<int>(parts_.size()); }
    int boxes() const;
    // 1-based part access; indices beyond the depth give 0.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }
    bool trivial() const { return parts_.empty(); }

    // Part-wise sum (used for sigma_0 + mu recomposition).
    Partition operator+(const Partition& other) const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

// Length-k vector of half-integers stored as doubled integers, so all
// arithmetic stays exact even for odd n.
class Weight {
  public:
    Weight() = default;
    static Weight from_twice(std::vector<long long> twice);
    static Weight from_ints(const std::vector<long long>& coords);

    int size() const { return static_cast<int>(twice_.size()); }
    // 1-based doubled coordinate.
    long long twice(int i) const { return twice_.at(static_cast<size_t>(i - 1)); }
    const std::vector<long long>& twice_coords() const { return twice_; }
    Rat coord(int i) const { return rat_of(twice(i)) / 2; }

    long long sum_twice() const;
    bool weakly_decreasing() const;
    // All coordinate differences integral (same parity of doubled coords).
    bool integral_differences() const;
    // k-dominant integral: weakly decreasing with integral differences.
    bool k_dominant_integral() const { return weakly_decreasing() && integral_differences(); }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;

    // "-3/2,-5/2" with each coordinate an exact rational.
    std::string to_string() const;

    auto operator<=>(const Weight&) const = default;

  private:
    std::vector<long long> twice_;
};

struct NarrowDecomposition {
    int t = 0;       // rows of length >= 2
    int d = 0;       // depth
    Partition mu;    // remainder, sigma_i - 2 on the first t rows
};

int depth(const Partition& sigma);

// sigma in Sigma_{n,k}: at most n boxes in the first two columns, depth <= k.
bool in_sigma_nk(const Partition& sigma, int n, int k);

// Empty when sigma is in Sigma_{n,k}; otherwise names the violated condition.
std::string sigma_nk_violation(const Partition& sigma, int n, int k);

// sigma# = (-sigma_k - n/2, ..., -sigma_1 - n/2); rejects sigma outside
// Sigma_{n,k}.
Weight sigma_sharp(const Partition& sigma, int n, int k);

// Membership in Sigma^0_{n,k} by the closed-form description.  The
// Gamma-based test lives in the resolution engine; agreement of the two is a
// standing property test.
bool in_sigma0(const Partition& sigma, int n, int k);

NarrowDecomposition narrow_decompose(const Partition& sigma);

// Reassembles the narrow diagram of type (t,d) plus mu.
Partition narrow_recompose(const NarrowDecomposition& nd);

// All sigma in Sigma_{n,k} with at most max_boxes boxes, lexicographic.
std::vector<Partition> enumerate_sigma(int n, int k, int max_boxes);

}  // namespace sepvar

#endif
