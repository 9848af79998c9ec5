#include <doctest.h>

#include "sepvar/errors.hpp"
#include "sepvar/hilbert.hpp"

using namespace sepvar;

TEST_CASE("weyl_dim_gl") {
    CHECK(weyl_dim_gl(Weight::from_ints({-1, -2, -2})) == 3);
    CHECK(weyl_dim_gl(Weight::from_ints({5, 5, 5, 5})) == 1);
    // sigma = (2) at n=2, k=3 has sharp weight (-1,-1,-3) and dimension 6,
    // feeding the 6q(1+q)/(1-q)^5 kernel series; sigma = (3) gives 10.
    CHECK(weyl_dim_gl(Weight::from_ints({-1, -1, -3})) == 6);
    CHECK(weyl_dim_gl(Weight::from_ints({-1, -1, -4})) == 10);
    // Half-integral entries with integral differences are fine.
    CHECK(weyl_dim_gl(Weight::from_twice({-3, -5})) == 2);
    CHECK_THROWS_AS(weyl_dim_gl(Weight::from_ints({0, 1})), InputError);
}

TEST_CASE("hs_verma") {
    CHECK(hs_verma(Weight::from_ints({-1, -2, -2}), 3) ==
          RationalSeries({Int(3)}, 6));
    CHECK(hs_verma(Weight::from_ints({0}), 1) == RationalSeries({Int(1)}, 1));
    CHECK(hs_verma(Weight::from_ints({-1, -3}), 2) == RationalSeries({Int(3)}, 3));
}

TEST_CASE("series arithmetic and normalization") {
    // 3(1-q)/(1-q)^6 normalizes to 3/(1-q)^5.
    RationalSeries s({Int(3), Int(-3)}, 6);
    CHECK(s == RationalSeries({Int(3)}, 5));
    CHECK(s.pole_order() == 5);

    RationalSeries zero = RationalSeries({Int(2)}, 4) - RationalSeries({Int(2)}, 4);
    CHECK(zero.is_zero());
    CHECK(zero == RationalSeries::zero());
}

TEST_CASE("hs_L") {
    CHECK(hs_L(Partition({1, 1}), 2, 3) == RationalSeries({Int(3)}, 5));
    CHECK(hs_L(Partition(), 5, 3) == RationalSeries({Int(1)}, 6));
    CHECK(hs_L(Partition(), 3, 1) == RationalSeries({Int(1)}, 1));
}

TEST_CASE("hs_I") {
    CHECK(hs_I(2, 3) == RationalSeries({Int(1), Int(1), Int(1)}, 5));
    CHECK(hs_I(3, 3) == RationalSeries({Int(1)}, 6));
    CHECK(hs_I(5, 2) == RationalSeries({Int(1)}, 3));
    CHECK(hs_I(1, 2) == RationalSeries({Int(1), Int(1)}, 2));
}

TEST_CASE("hs_kernel reproduces the dimension-two table") {
    CHECK(hs_kernel(Partition({1, 1}), 2, 3) == RationalSeries({Int(0), Int(3), Int(3)}, 5));
    CHECK(hs_kernel(Partition({1}), 2, 3) == RationalSeries({Int(0), Int(0), Int(3)}, 5));
    CHECK(hs_kernel(Partition({2}), 2, 3) == RationalSeries({Int(0), Int(6), Int(6)}, 5));
    for (int d = 0; d <= 3; ++d) {
        Int c1 = Int(3) * (d + 5) * (d + 2) / 2;
        Int c2 = Int(3) * (d + 3);
        CHECK(hs_kernel(Partition({3 + d}), 2, 3) == RationalSeries({Int(0), c1, c2}, 5));
    }
}

TEST_CASE("hs_kernel vanishes for the trivial label and in the semistable range") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 4; ++k) CHECK(hs_kernel(Partition(), n, k).is_zero());
    for (int k = 1; k <= 4; ++k)
        for (int n = 2 * k - 1; n <= 2 * k + 1; ++n)
            for (const Partition& sigma : enumerate_sigma(n, k, 5))
                CHECK(hs_kernel(sigma, n, k).is_zero());
}

TEST_CASE("first nonzero kernel coefficient sits at the level of reduction") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 5; ++k)
            for (const Partition& sigma : enumerate_sigma(n, k, 6)) {
                if (!in_sigma0(sigma, n, k) || sigma.trivial()) continue;
                auto coeffs = hs_kernel(sigma, n, k).expand(10);
                long long level = level_of_reduction(sigma, n, k);
                REQUIRE(level <= 10);
                for (long long d = 0; d < level; ++d)
                    CHECK(coeffs[static_cast<size_t>(d)] == 0);
                CHECK(coeffs[static_cast<size_t>(level)] > 0);
            }
}

TEST_CASE("expand") {
    RationalSeries s({Int(0), Int(3), Int(3)}, 5);
    auto e = s.expand(2);
    CHECK(e == std::vector<Int>{Int(0), Int(3), Int(18)});

    auto ones = RationalSeries({Int(1)}, 1).expand(6);
    for (const Int& c : ones) CHECK(c == 1);

    auto zeros = RationalSeries::zero().expand(4);
    for (const Int& c : zeros) CHECK(c == 0);

    // Non-negativity of hs_I / hs_L / hs_kernel expansions to order 10.
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            for (const Int& c : hs_I(n, k).expand(10)) CHECK(c >= 0);
            for (const Partition& sigma : enumerate_sigma(n, k, 4))
                for (const Int& c : hs_kernel(sigma, n, k).expand(10)) CHECK(c >= 0);
        }
}

TEST_CASE("series rendering") {
    CHECK(RationalSeries({Int(0), Int(3), Int(3)}, 5).to_string() == "3q(1+q)/(1-q)^5");
    CHECK(RationalSeries({Int(0), Int(0), Int(3)}, 5).to_string() == "3q^2/(1-q)^5");
    CHECK(RationalSeries({Int(1), Int(1), Int(1)}, 5).to_string() == "(1+q+q^2)/(1-q)^5");
    CHECK(RationalSeries({Int(1)}, 1).to_string() == "1/(1-q)");
    CHECK(RationalSeries::zero().to_string() == "0");
    CHECK(RationalSeries({Int(0), Int(15), Int(9)}, 5).to_string() == "3q(5+3q)/(1-q)^5");
}
