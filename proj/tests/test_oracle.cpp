#include <doctest.h>

#include <cstdlib>
#include <set>

#include "sepvar/errors.hpp"
#include "sepvar/exactla.hpp"
#include "sepvar/generators.hpp"
#include "sepvar/hilbert.hpp"
#include "sepvar/oracle.hpp"

using namespace sepvar;

namespace {

// Unblocked reference: nullity of the stacked Laplacians on the full
// degree-e monomial basis, via dense rational elimination.  Keeps the blocked
// production path honest on small cases.
std::int64_t dim_H_unblocked(int n, int k, int e) {
    std::vector<Monomial> monos{Monomial()};
    for (int step = 0; step < e; ++step) {
        std::set<std::vector<std::pair<VarId, int>>> seen;
        std::vector<Monomial> next;
        for (const Monomial& m : monos)
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= n; ++j) {
                    Monomial prod = m * Monomial({{var_x(i, j), 1}});
                    if (seen.insert(prod.factors()).second) next.push_back(prod);
                }
        monos = std::move(next);
    }

    std::map<std::pair<int, std::vector<std::pair<VarId, int>>>, int> rows;
    std::vector<std::map<int, Rat>> cols(monos.size());
    int pair_idx = 0;
    for (int a = 1; a <= k; ++a)
        for (int b = a; b <= k; ++b, ++pair_idx)
            for (size_t c = 0; c < monos.size(); ++c) {
                MPoly img = laplacian(a, b, MPoly::term(monos[c], Rat(1)), n, k);
                for (const auto& [m, v] : img.terms()) {
                    auto it =
                        rows.emplace(std::make_pair(pair_idx, m.factors()),
                                     static_cast<int>(rows.size()))
                            .first;
                    cols[c][it->second] = v;
                }
            }
    QMatrix dense(rows.size(), std::vector<Rat>(monos.size(), Rat(0)));
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) dense[static_cast<size_t>(r)][c] = v;
    if (rows.empty()) return static_cast<std::int64_t>(monos.size());
    return static_cast<std::int64_t>(nullspace(dense).size());
}

}  // namespace

TEST_CASE("dim_P") {
    CHECK(dim_P(2, 2, 2) == 10);
    CHECK(dim_P(3, 2, 0) == 1);
    CHECK(dim_P(1, 2, 3) == 4);
}

TEST_CASE("dim_H classical values") {
    CHECK(dim_H(2, 2, 0) == 1);
    CHECK(dim_H(2, 2, 1) == 4);
    CHECK(dim_H(3, 2, 1) == 6);
    CHECK(dim_H(2, 2, 2) == 7);
    // Planar harmonics: two per degree.
    for (int d = 1; d <= 5; ++d) CHECK(dim_H(2, 1, d) == 2);
    // One scalar variable: only affine functions are harmonic.
    CHECK(dim_H(1, 1, 2) == 0);
}

TEST_CASE("dim_H blocked equals unblocked") {
    for (int n = 1; n <= 2; ++n)
        for (int k = 1; k <= 2; ++k)
            for (int e = 0; e <= 4; ++e) CHECK(dim_H(n, k, e) == dim_H_unblocked(n, k, e));
    CHECK(dim_H(3, 2, 3) == dim_H_unblocked(3, 2, 3));
}

TEST_CASE("dim_I") {
    // Free case for n >= k.
    for (int d = 0; d <= 4; ++d) {
        CHECK(dim_I(2, 2, d) == to_int64(binomial(static_cast<unsigned long>(3 + d - 1),
                                                  static_cast<unsigned long>(d))));
        CHECK(dim_I(3, 2, d) == dim_I(2, 2, d));
    }
    CHECK(dim_I(2, 3, 3) == 55);
    CHECK(dim_I(1, 2, 2) == 5);  // one relation among the six quadratic monomials
}

TEST_CASE("dim_I matches the Hilbert series of I") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 4; ++k) {
            if (n * k > 9) continue;
            auto coeffs = hs_I(n, k).expand(4);
            for (int d = 0; d <= 4; ++d) {
                if (binomial(static_cast<unsigned long>(k * (k + 1) / 2 + d - 1),
                             static_cast<unsigned long>(d)) > 3000)
                    continue;
                CHECK(int_of(dim_I(n, k, d)) == coeffs[static_cast<size_t>(d)]);
            }
        }
}

TEST_CASE("dim_ker_total") {
    // Injective range: zero through m = 4 at small sizes.
    for (int m = 0; m <= 4; ++m) {
        CHECK(dim_ker_total(1, 1, m) == 0);
        CHECK(dim_ker_total(3, 2, m) == 0);
    }
    CHECK(dim_ker_total(1, 2, 3) >= 1);
    for (int m = 0; m <= 1; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int k = 1; k <= 3; ++k) CHECK(dim_ker_total(n, k, m) == 0);
}

TEST_CASE("dim_ker_sigma") {
    CHECK(dim_ker_sigma(2, 3, Partition({1, 1}), 1) == 3);
    CHECK(dim_ker_sigma(2, 3, Partition({1, 1}), 2) == 18);
    CHECK(dim_ker_sigma(2, 3, Partition({1}), 1) == 0);
    CHECK(dim_ker_sigma(2, 3, Partition({1}), 2) == 3);
    for (int d = 0; d <= 3; ++d) CHECK(dim_ker_sigma(2, 2, Partition(), d) == 0);
}

TEST_CASE("kernel_vectors") {
    auto vecs = kernel_vectors(2, 2, Partition({2}), 1);
    REQUIRE(!vecs.empty());
    for (const auto& v : vecs) CHECK(phi(v, 2).is_zero());

    // The span contains D_(2).
    std::map<Monomial, int, GrlexGreater> keys;
    auto coords = [&keys](const TensorElement& t) {
        std::vector<std::pair<int, Rat>> v;
        for (const auto& [m, c] : t.poly.terms()) {
            auto it = keys.emplace(m, static_cast<int>(keys.size())).first;
            v.emplace_back(it->second, c);
        }
        return v;
    };
    IncrementalSpan span;
    for (const auto& v : vecs) span.add(coords(v));
    CHECK_FALSE(span.add(coords(bordered_minor(1, 1, 2, 2))));

    // Dimension agreement with dim_ker_sigma (no relations at n=k=2).
    CHECK(static_cast<std::int64_t>(vecs.size()) == dim_ker_sigma(2, 2, Partition({2}), 1));
}

TEST_CASE("embedding: (2,2) kernel witnesses stay in the kernel at (2,3)") {
    // The x_ij / R_ab symbols are shared across k, realizing the inclusions
    // of P, H and I into their three-variable counterparts; the embedded
    // witness is killed by the same substitution R_ab -> r_ab.
    for (const Partition& sigma : enumerate_sigma(2, 2, 4))
        for (int d = 0; d <= 3; ++d)
            for (const TensorElement& v : kernel_vectors(2, 2, sigma, d)) {
                CHECK(phi(v, 2).is_zero());
                CHECK(is_zero_in_IH(v, 2, 3) == is_zero_in_IH(v, 2, 2));
            }
}

TEST_CASE("column guardrail") {
    CHECK(oracle_max_columns() == 200000);
    setenv("SEPVAR_MAX_COLUMNS", "10", 1);
    CHECK(oracle_max_columns() == 10);
    CHECK_THROWS_AS(dim_H(2, 2, 3), ColumnBoundError);
    try {
        dim_H(2, 2, 3);
    } catch (const ColumnBoundError& e) {
        CHECK(std::string(e.what()).find("SEPVAR_MAX_COLUMNS = 10") != std::string::npos);
    }
    unsetenv("SEPVAR_MAX_COLUMNS");
    CHECK(dim_H(2, 2, 3) == 8);
}

TEST_CASE("sparse_rank and nullspace basics") {
    std::vector<SparseRow> rows;
    rows.push_back({{0, Int(1)}, {1, Int(2)}});
    rows.push_back({{0, Int(2)}, {1, Int(4)}});
    rows.push_back({{1, Int(1)}});
    CHECK(sparse_rank(rows) == 2);

    QMatrix m = {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}};
    auto ns = nullspace(m);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) {
        Rat dot = v[0] * 1 + v[1] * 2 + v[2] * 3;
        CHECK(dot == 0);
    }
}
