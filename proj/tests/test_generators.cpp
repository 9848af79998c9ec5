#include <doctest.h>

#include "sepvar/errors.hpp"
#include "sepvar/resolution.hpp"
#include "sepvar/exactla.hpp"
#include "sepvar/generators.hpp"
#include "sepvar/hilbert.hpp"

using namespace sepvar;

namespace {

TensorElement d2_element() {
    MPoly p;
    p.add_term(Monomial({{var_R(1, 2), 1}, {var_x(1, 2), 1}, {var_x(2, 2), 1}}), Rat(2));
    p.add_term(Monomial({{var_R(1, 1), 1}, {var_x(2, 2), 2}}), Rat(-1));
    p.add_term(Monomial({{var_R(2, 2), 1}, {var_x(1, 2), 2}}), Rat(-1));
    return TensorElement{p};
}

bool equal_up_to_sign(const TensorElement& a, const TensorElement& b) {
    return a == b || a.poly == b.poly.scaled(Rat(-1));
}

}  // namespace

TEST_CASE("bordered matrix entries") {
    BorderedMatrix m = build_M(2, 2);
    CHECK(m.size() == 4);
    CHECK(m.entry(1, 3) == MPoly::variable(var_x(1, 2)));
    CHECK(m.entry(1, 4) == MPoly::variable(var_x(1, 1)));
    CHECK(m.entry(3, 4) == MPoly::constant(Rat(1)));
    CHECK(m.entry(3, 3).is_zero());
    CHECK(m.entry(2, 1) == MPoly::variable(var_R(1, 2)));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) CHECK(m.entry(i, j) == m.entry(j, i));
}

TEST_CASE("minor reproduces the n=k=2 display up to sign") {
    TensorElement minor = bordered_minor(1, 1, 2, 2);
    CHECK(equal_up_to_sign(minor, d2_element()));
    CHECK(phi(minor, 2).is_zero());
}

TEST_CASE("minors of the 1x2 matrix give the scalar relations") {
    // The generator window for sigma = (1), type (0,1), is (d+1,t+1) = (2,1):
    // xy (x) y - y^2 (x) x, the dominant-weight form of the relation
    // x^2 (x) y - xy (x) x (rows swapped).
    TensorElement minor = bordered_minor(2, 1, 1, 2);
    MPoly expected;
    expected.add_term(Monomial({{var_R(1, 2), 1}, {var_x(2, 1), 1}}), Rat(1));
    expected.add_term(Monomial({{var_R(2, 2), 1}, {var_x(1, 1), 1}}), Rat(-1));
    CHECK(equal_up_to_sign(minor, TensorElement{expected}));
    CHECK(weight_of(minor, 1, 2) == lambda_prime(Partition({1}), 1, 2));
    CHECK(is_hw_tensor(minor, 1, 2));

    // x^2 (x) y - xy (x) x itself is a kernel element too.
    MPoly scalar_relation;
    scalar_relation.add_term(Monomial({{var_R(1, 1), 1}, {var_x(2, 1), 1}}), Rat(1));
    scalar_relation.add_term(Monomial({{var_R(1, 2), 1}, {var_x(1, 1), 1}}), Rat(-1));
    CHECK(phi(TensorElement{scalar_relation}, 1).is_zero());
    CHECK_FALSE(is_zero_in_IH(TensorElement{scalar_relation}, 1, 2));
}

TEST_CASE("phi kills every minor window") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            if (n + k > 8) continue;
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b)
                    CHECK(phi(bordered_minor(a, b, n, k), n).is_zero());
        }
}

TEST_CASE("generator weight examples") {
    TensorElement g = generator(1, 1, Partition(), 2, 3);
    CHECK(weight_of(g, 2, 3) == Weight::from_ints({-1, -3, -3}));
    CHECK(weight_of(g, 2, 3) == lambda_prime(Partition({2}), 2, 3));

    // mu multiplies the right factors: D_sigma = D_(2) x22^a at n=k=2.
    for (int a = 1; a <= 3; ++a) {
        TensorElement gs = generator(1, 1, Partition({a}), 2, 2);
        MPoly x22_pow = MPoly::constant(Rat(1));
        for (int i = 0; i < a; ++i) x22_pow = x22_pow * MPoly::variable(var_x(2, 2));
        CHECK(equal_up_to_sign(gs, TensorElement{d2_element().poly * x22_pow}));
        CHECK(weight_of(gs, 2, 2) == Weight::from_ints({-3, -3 - a}));
    }
}

TEST_CASE("generator precondition errors name the condition") {
    CHECK_THROWS_WITH_AS(generator(0, 0, Partition(), 2, 3), "generator requires d > 0",
                         InputError);
    CHECK_THROWS_AS(generator(2, 1, Partition(), 4, 3), InputError);        // t > d
    CHECK_THROWS_AS(generator(1, 1, Partition({1, 1}), 2, 3), InputError);  // depth mu > t
    CHECK_THROWS_AS(generator(1, 2, Partition(), 2, 3), InputError);        // t + d > n
    CHECK_THROWS_AS(generator(1, 1, Partition(), 4, 2), InputError);        // not in Sigma^0
}

TEST_CASE("verify_generator five checks") {
    GeneratorReport r22 = verify_generator(1, 1, Partition(), 2, 2);
    CHECK(r22.nonzero_in_IH);
    CHECK(r22.phi_zero);
    CHECK(r22.right_factors_harmonic);
    CHECK(r22.weight_matches);
    CHECK(r22.highest_weight);
    CHECK(r22.all_pass());

    // Even boundary n = 2k-2: sigma = (2,2) at (4,3), weight sigma# - 2e1.
    GeneratorReport r43 = verify_generator(2, 2, Partition(), 4, 3);
    CHECK(r43.all_pass());
    Weight sharp = sigma_sharp(Partition({2, 2}), 4, 3);
    std::vector<long long> t(sharp.twice_coords());
    t[0] -= 4;
    CHECK(r43.weight == Weight::from_twice(std::move(t)).to_string());

    // Odd boundary n = 2k-3: sigma = (2,1) at (3,3), weight sigma# - e1 - e2.
    GeneratorReport r33 = verify_generator(1, 2, Partition(), 3, 3);
    CHECK(r33.all_pass());
    Weight sharp33 = sigma_sharp(Partition({2, 1}), 3, 3);
    std::vector<long long> t33(sharp33.twice_coords());
    t33[0] -= 2;
    t33[1] -= 2;
    CHECK(r33.weight == Weight::from_twice(std::move(t33)).to_string());
}

TEST_CASE("generator R-degree starts at the level of reduction") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const Partition& sigma : enumerate_sigma(n, k, 5)) {
                if (sigma.trivial() || !in_sigma0(sigma, n, k)) continue;
                NarrowDecomposition nd = narrow_decompose(sigma);
                TensorElement g = generator(nd.t, nd.d, nd.mu, n, k);
                CHECK(g.min_degree_R() == level_of_reduction(sigma, n, k));
            }
}

TEST_CASE("generators verify beyond four variables") {
    // Spot probes outside the acceptance sweep.
    CHECK(verify_generator(0, 1, Partition(), 2, 5).all_pass());
    CHECK(verify_generator(1, 1, Partition({2}), 3, 4).all_pass());
    CHECK(verify_generator(0, 2, Partition(), 2, 5).all_pass());
}

TEST_CASE("basis_of_F on harmonics") {
    auto b = basis_of_F(delta_sigma(Partition({1}), 2, 2), Int(2), 2, 2);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == MPoly::variable(var_x(2, 2)));
    CHECK(b[1] == MPoly::variable(var_x(1, 2)));

    auto one = basis_of_F(MPoly::constant(Rat(1)), Int(1), 2, 2);
    CHECK(one.size() == 1);

    CHECK_THROWS_AS(basis_of_F(delta_sigma(Partition({1}), 2, 2), Int(3), 2, 2),
                    DimensionMismatchError);
}

TEST_CASE("basis_of_F matches the Weyl dimension across labels") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const Partition& sigma : enumerate_sigma(n, k, 4)) {
                Int dim = weyl_dim_gl(sigma_sharp(sigma, n, k));
                auto basis = basis_of_F(delta_sigma(sigma, n, k), dim, n, k);
                CHECK(Int(static_cast<long>(basis.size())) == dim);
            }
}

TEST_CASE("basis_of_F reproduces the spanning set D x12^i x22^(a-i)") {
    for (int a = 0; a <= 3; ++a) {
        Partition sigma({a + 2});
        TensorElement hwv = generator(1, 1, Partition({a}), 2, 2);
        Int dim = weyl_dim_gl(lambda_prime(sigma, 2, 2));
        CHECK(dim == a + 1);
        auto basis = basis_of_F(hwv, dim, 2, 2);
        REQUIRE(static_cast<int>(basis.size()) == a + 1);

        // The expected spanning vectors must already lie in the span.
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
        for (const auto& vec : basis) CHECK(span.add(coords(vec)));
        for (int i = 0; i <= a; ++i) {
            MPoly prod = d2_element().poly;
            for (int q = 0; q < i; ++q) prod = prod * MPoly::variable(var_x(1, 2));
            for (int q = 0; q < a - i; ++q) prod = prod * MPoly::variable(var_x(2, 2));
            CHECK_FALSE(span.add(coords(TensorElement{prod})));
        }
    }
}
