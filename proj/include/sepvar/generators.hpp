#ifndef SEPVAR_GENERATORS_HPP
#define SEPVAR_GENERATORS_HPP

#include <string>
#include <vector>

#include "sepvar/partitions.hpp"
#include "sepvar/polyalg.hpp"

namespace sepvar {

// The symmetric (n+k) x (n+k) matrix whose order-(n+1) minors produce all
// kernel generators.  Entries are generated on demand:
//   (i,j) with i,j <= k        -> R_ij
//   i <= k < j                 -> x_{i, n+k+1-j}   (reversed column order)
//   i,j > k                    -> antidiagonal identity
struct BorderedMatrix {
    int n = 0;
    int k = 0;

    int size() const { return n + k; }
    MPoly entry(int i, int j) const;
};

BorderedMatrix build_M(int n, int k);

// Determinant of the order-(n+1) window with top-left corner (a,b), as an
// element of I (x) H.  phi of the result is always zero.
TensorElement bordered_minor(int a, int b, int n, int k);

// (det M_{d-n+k, t-n+k}) * delta_mu for the narrow type (t,d) plus mu;
// highest weight vector in Ker phi_sigma for sigma = sigma_0 + mu.
TensorElement generator(int t, int d, const Partition& mu, int n, int k);

struct GeneratorReport {
    bool nonzero_in_IH = false;
    bool phi_zero = false;
    bool right_factors_harmonic = false;
    bool weight_matches = false;
    bool highest_weight = false;
    std::string weight;           // weight_of the generator
    std::string expected_weight;  // lambda_prime from the root combinatorics

    bool all_pass() const {
        return nonzero_in_IH && phi_zero && right_factors_harmonic && weight_matches &&
               highest_weight;
    }
};

GeneratorReport verify_generator(int t, int d, const Partition& mu, int n, int k);

// Closure of the highest weight vector under the lowering operators
// h_action(s,t), s < t, reduced to a linearly independent set; throws
// DimensionMismatchError unless the closure size equals target_dim.
std::vector<TensorElement> basis_of_F(const TensorElement& hwv, const Int& target_dim, int n,
                                      int k);
std::vector<MPoly> basis_of_F(const MPoly& hwv, const Int& target_dim, int n, int k);

}  // namespace sepvar

#endif
