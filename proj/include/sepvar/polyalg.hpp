#ifndef SEPVAR_POLYALG_HPP
#define SEPVAR_POLYALG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sepvar/partitions.hpp"
#include "sepvar/rational.hpp"

namespace sepvar {

// Variable identifiers.  R_ab (1 <= a <= b) sort before x_ij, rows before
// columns, so numeric id order is the canonical variable order.
using VarId = std::int32_t;

constexpr VarId kRBase = 0x10000;
constexpr VarId kXBase = 0x20000;

inline VarId var_R(int a, int b) { return kRBase + a * 256 + b; }  // requires a <= b
inline VarId var_x(int i, int j) { return kXBase + i * 256 + j; }
inline bool is_R(VarId v) { return v < kXBase; }
inline int var_first(VarId v) { return (v & 0xFFFF) >> 8; }   // a or i
inline int var_second(VarId v) { return v & 0xFF; }           // b or j
std::string var_name(VarId v);                                // "R12", "x21"
std::string var_latex(VarId v);                               // "r_{12}", "x_{21}"

// Sparse exponent vector, sorted by variable id, no zero exponents.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<VarId, int>> factors);

    const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }
    int degree() const;
    int degree_R() const;
    int degree_x() const;
    int exponent(VarId v) const;
    bool has_R() const;

    Monomial operator*(const Monomial& o) const;
    // Splits into (R-part, x-part).
    std::pair<Monomial, Monomial> split() const;
    // Degree of x-variables in row i plus occurrences of index i among
    // R-factors; the h_ii eigenvalue minus n/2.
    long long row_count(int i) const;

    bool operator==(const Monomial&) const = default;

  private:
    std::vector<std::pair<VarId, int>> factors_;
};

// Graded lexicographic order (total degree first, then greater power of the
// earlier variable wins).
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact multivariate polynomial over Q in the x_ij and R_ab variables.
class MPoly {
  public:
    using TermMap = std::map<Monomial, Rat, GrlexGreater>;

    MPoly() = default;
    static MPoly constant(const Rat& c);
    static MPoly variable(VarId v);
    static MPoly term(const Monomial& m, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int num_terms() const { return static_cast<int>(terms_.size()); }
    int degree() const;
    bool has_R() const;

    void add_term(const Monomial& m, const Rat& c);
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Rat& c) const;
    MPoly& operator+=(const MPoly& o);

    MPoly derivative(VarId v) const;

    std::string to_string() const;
    std::string to_latex() const;

    bool operator==(const MPoly&) const = default;

  private:
    TermMap terms_;
};

// Element of I (x) H: an MPoly whose monomials are read as
// (R-part) tensor (x-part).  The R-degree of a term is its grading degree.
struct TensorElement {
    MPoly poly;

    bool is_zero() const { return poly.is_zero(); }
    // Canonical grouping by x-monomial: x-part -> left R-polynomial.
    std::map<Monomial, MPoly, GrlexGreater> grouped_by_x() const;
    // Grouping by R-monomial: R-part -> right x-polynomial.
    std::map<Monomial, MPoly, GrlexGreater> grouped_by_R() const;
    // Lowest R-degree over the terms.
    int min_degree_R() const;

    bool operator==(const TensorElement&) const = default;
};

// r_ij = x_i1 x_jn + x_i2 x_{j,n-1} + ... + x_in x_j1.
MPoly r_eval(int i, int j, int n, int k);

// Delta_ab P = sum_l d/dx_al d/dx_{b,n+1-l} P; rejects P containing R-symbols.
MPoly laplacian(int a, int b, const MPoly& p, int n, int k);

// h_st P = sum_l x_sl d/dx_tl P + (n/2) delta_st P on x-polynomials.
MPoly h_action_x(int s, int t, const MPoly& p, int n, int k);

// Product of bottom-right corner minors delta_j^{a_j}, a_j = s_j - s_{j+1}.
MPoly delta_sigma(const Partition& sigma, int n, int k);

// Substitutes every R_ab by r_eval(a,b) and multiplies out.
MPoly phi(const TensorElement& T, int n);

// k-action through the module structure on I (x) H: bracket
// [h_st, r_ab] = delta_ta r_sb + delta_tb r_as across the R-part, the
// derivation part of h_st on the x-part, and the (n/2) delta_st scalar once.
TensorElement h_action_tensor(int s, int t, const TensorElement& T, int n);

// Weight of a simultaneous h_ii eigenvector, coordinates -(eigenvalue of
// h_ii); throws NotWeightVectorError if the eigenvalue differs across terms.
Weight weight_of(const TensorElement& T, int n, int k);

bool is_harmonic(const MPoly& p, int n, int k);

// Annihilated by every raising operator h_st with s > t.
bool is_hw_tensor(const TensorElement& T, int n, int k);

// Zero as an element of I (x) H: groups by x-monomial and evaluates each left
// factor through phi (the SFT realizes the relation ideal as the evaluation
// kernel).
bool is_zero_in_IH(const TensorElement& T, int n, int k);

}  // namespace sepvar

#endif
