#ifndef SEPVAR_HILBERT_HPP
#define SEPVAR_HILBERT_HPP

#include <string>
#include <vector>

#include "sepvar/resolution.hpp"
#include "sepvar/partitions.hpp"
#include "sepvar/rational.hpp"

namespace sepvar {

// Hilbert series as an integer-coefficient numerator in q over (1-q)^p,
// normalized so the numerator is not divisible by (1-q) while p > 0.
class RationalSeries {
  public:
    RationalSeries() = default;
    RationalSeries(std::vector<Int> numerator, int pole_order);

    static RationalSeries zero() { return RationalSeries({}, 0); }

    const std::vector<Int>& numerator() const { return num_; }
    int pole_order() const { return pole_; }
    bool is_zero() const { return num_.empty(); }

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator-(const RationalSeries& o) const;
    RationalSeries scaled(const Int& c) const;

    bool operator==(const RationalSeries& o) const = default;

    // First T+1 power-series coefficients.
    std::vector<Int> expand(int terms) const;

    // "3q(1+q)/(1-q)^5" style display.
    std::string to_string() const;

  private:
    std::vector<Int> num_;  // num_[i] is the coefficient of q^i; no trailing zeros
    int pole_ = 0;
};

// Weyl dimension formula for gl(k): prod_{i<j} (l_i - l_j + j - i)/(j - i).
// Accepts half-integer coordinates as long as differences are integral.
Int weyl_dim_gl(const Weight& lambda);

// dim F_lambda / (1-q)^{k(k+1)/2}.
RationalSeries hs_verma(const Weight& lambda, int k);

// Alternating sum over the resolution of L(sigma#).
RationalSeries hs_L(const Partition& sigma, int n, int k);

// Hilbert series of the invariant ring: free for n >= k, otherwise through
// the resolution of the trivial label.
RationalSeries hs_I(int n, int k);

// dim(F_{sigma#}) H_I - H_L; the zero series iff phi_sigma is injective.
RationalSeries hs_kernel(const Partition& sigma, int n, int k);

std::vector<Int> expand(const RationalSeries& s, int terms);

}  // namespace sepvar

#endif
