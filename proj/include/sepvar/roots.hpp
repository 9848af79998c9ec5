#ifndef SEPVAR_ROOTS_HPP
#define SEPVAR_ROOTS_HPP

#include <compare>
#include <string>
#include <vector>

#include "sepvar/partitions.hpp"
#include "sepvar/rational.hpp"

namespace sepvar {

// A root of sp(2k) in epsilon-coordinates: e_i - e_j (i != j, compact),
// +-(e_i + e_j) (i < j, short non-compact), or +-2e_i (long non-compact).
class Root {
  public:
    Root() = default;
    explicit Root(std::vector<int> v);

    static Root compact(int i, int j, int k);          // e_i - e_j
    static Root noncompact_short(int i, int j, int k); // e_i + e_j, i < j
    static Root noncompact_long(int i, int k);         // 2e_i
    Root negated() const;

    int size() const { return static_cast<int>(v_.size()); }
    int coeff(int i) const { return v_.at(static_cast<size_t>(i - 1)); }
    const std::vector<int>& vec() const { return v_; }

    bool is_compact() const;
    bool is_long() const;
    bool is_short_noncompact() const;
    bool is_positive() const;

    // "e1+e3", "2e2", "e1-e2", "-e1-e2", ...
    std::string to_string() const;

    auto operator<=>(const Root&) const = default;

  private:
    std::vector<int> v_;
};

// Element of the hyperoctahedral group acting by
// w(lambda)_i = signs[i] * lambda_{perm[i]} (1-based wrappers over 0-based
// storage).
class SignedPermutation {
  public:
    explicit SignedPermutation(int k);  // identity
    SignedPermutation(std::vector<int> perm, std::vector<int> signs);

    static SignedPermutation reflection(const Root& alpha);

    int size() const { return static_cast<int>(perm_.size()); }
    Weight apply(const Weight& w) const;
    Root apply(const Root& r) const;
    // (w.compose(v))(x) = w(v(x)).
    SignedPermutation compose(const SignedPermutation& v) const;

    auto operator<=>(const SignedPermutation&) const = default;

  private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

std::vector<Root> positive_roots(int k);
std::vector<Root> compact_positive(int k);
std::vector<Root> noncompact_positive(int k);
// All roots, both signs.
std::vector<Root> all_roots(int k);

// Half-sum of positive roots; equals (k, k-1, ..., 1).
Weight rho(int k);

// Euclidean inner product (alpha, mu) with (e_i, e_j) = delta_ij.
Rat inner(const Weight& mu, const Root& alpha);

// Coroot pairing mu(alpha^vee) = 2(alpha,mu)/(alpha,alpha).
Rat pairing(const Weight& mu, const Root& alpha);

// mu - pairing(mu,alpha) * alpha; involutive.
Weight reflect(const Weight& mu, const Root& alpha);

// Coordinates sorted weakly decreasing (compact Weyl group orbit
// representative; no sign changes).
Weight dominant_sort(const Weight& mu);

// Root-lattice dominance: beta - alpha is a non-negative integer combination
// of the simple roots e_i - e_{i+1}, 2e_k.
bool dominance_leq(const Root& alpha, const Root& beta);

}  // namespace sepvar

#endif
