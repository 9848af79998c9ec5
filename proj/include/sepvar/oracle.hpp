#ifndef SEPVAR_ORACLE_HPP
#define SEPVAR_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "sepvar/partitions.hpp"
#include "sepvar/polyalg.hpp"

namespace sepvar {

// degree -> dimension tables emitted by the CLI.
using GradedDims = std::map<int, std::int64_t>;

// Column guardrail, overridable through SEPVAR_MAX_COLUMNS.
std::int64_t oracle_max_columns();

// C(nk + m - 1, m): monomials of total degree m in nk variables.
std::int64_t dim_P(int n, int k, int m);

// Nullity of the stacked Laplacians P_e -> P_{e-2} over all a <= b, by exact
// fraction-free elimination (block-decomposed by multidegree and torus
// weight, which the Laplacians preserve).
std::int64_t dim_H(int n, int k, int e);

// Rank of the evaluation map sending degree-d monomials in R_ab to P_{2d}.
std::int64_t dim_I(int n, int k, int d);

// sum_{2d+e=m} dim_I(d) dim_H(e) - dim_P(m); non-negative by surjectivity.
std::int64_t dim_ker_total(int n, int k, int m);

// dim_I(d) * dim F - rank of the multiplication map on (degree-d invariant
// monomials) x (basis of F_{sigma#}).
std::int64_t dim_ker_sigma(int n, int k, const Partition& sigma, int d);

// Exact basis of the degree-d nullspace of the multiplication matrix; every
// returned element maps to zero under phi.
std::vector<TensorElement> kernel_vectors(int n, int k, const Partition& sigma, int d);

}  // namespace sepvar

#endif
