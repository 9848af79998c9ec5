#ifndef SEPVAR_RESOLUTION_HPP
#define SEPVAR_RESOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "sepvar/partitions.hpp"
#include "sepvar/roots.hpp"

namespace sepvar {

// One N(mu) summand in the resolution of L(lambda).
struct ResolutionTerm {
    Weight weight;
    long long shift = 0;  // grading degree of the generator
    int stage = 0;
};

struct Resolution {
    Weight lambda;
    int r = 0;  // card(Delta_lambda^+ /\ Delta_n^+)
    // stages[i] holds the stage-i terms; stages[0] == {(lambda, 0)}.
    std::vector<std::vector<ResolutionTerm>> stages;
};

// Positive representatives of the singular set
// Psi_lambda = { alpha in Delta : (alpha, lambda + rho) = 0 }.
std::vector<Root> psi_set(const Weight& lambda, int k);

// Non-compact positive roots satisfying conditions (i)-(iii):
// integral positive coroot pairing with lambda + rho, orthogonal to
// Psi_lambda, and short whenever Psi_lambda contains a long root.
std::vector<Root> gamma_set(const Weight& lambda, int k);

// Dominance-minimum of gamma_set(sigma#); errors if the set is empty or the
// minimum is not unique.
Root gamma_min(const Weight& lambda, int k);

// (s_gamma(sigma# + rho))^+ - rho for gamma = min Gamma.
Weight lambda_prime(const Partition& sigma, int n, int k);

// <sigma# + rho, gamma^vee>; the lowest invariant degree contributing to
// Ker phi_sigma.
long long level_of_reduction(const Partition& sigma, int n, int k);

// Group closure of the reflections s_alpha, alpha in gamma_set(lambda).
std::vector<SignedPermutation> w_lambda(const Weight& lambda, int k);

// Roots alpha (both signs) with s_alpha in W_lambda.
std::vector<Root> delta_lambda(const Weight& lambda, int k);

Resolution resolution(const Partition& sigma, int n, int k);

// Closed-form cross-checks for lambda': stability under k -> k+1, the
// narrow-diagram formula, the mu-shift formula, and the boundary
// classifications for n = 2k-2 and n = 2k-3, each compared against the
// Gamma machinery computed from first principles.
struct ClosedFormCheck {
    std::string name;
    bool applicable = false;
    bool pass = false;
    std::string detail;
};

std::vector<ClosedFormCheck> closed_form_checks(int n, int k, const Partition& sigma);

}  // namespace sepvar

#endif
