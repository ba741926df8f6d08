#include <doctest.h>

#include <algorithm>
#include <random>

#include "bergtoep/multiindex.hpp"
#include "support.hpp"

using namespace bergtoep;

TEST_CASE("basis enumeration matches hand-checked lists") {
    const BasisOrder b1 = enumerate_basis(1, 2);
    REQUIRE(b1.size() == 3);
    CHECK(b1.at(0).entries() == std::vector<int>{0});
    CHECK(b1.at(1).entries() == std::vector<int>{1});
    CHECK(b1.at(2).entries() == std::vector<int>{2});

    const BasisOrder b2 = enumerate_basis(2, 1);
    REQUIRE(b2.size() == 3);
    CHECK(b2.at(0).entries() == std::vector<int>{0, 0});
    CHECK(b2.at(1).entries() == std::vector<int>{1, 0});
    CHECK(b2.at(2).entries() == std::vector<int>{0, 1});

    CHECK(enumerate_basis(3, 4).size() == 35); // binomial(7, 3)
}

TEST_CASE("graded-lex is a total order and the enumeration is sorted") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= 6; ++m) {
            const BasisOrder b = enumerate_basis(n, m);
            CHECK(std::is_sorted(b.list().begin(), b.list().end(), graded_lex_less));
            for (std::size_t i = 0; i < b.size(); ++i) CHECK(*b.index_of(b.at(i)) == i);
        }
    }
}

TEST_CASE("basis sizes follow stars and bars up to n=6, m=10") {
    for (int n = 1; n <= 6; ++n)
        for (int m = 0; m <= 10; ++m)
            CHECK(enumerate_basis(n, m).size() == binomial_u64(n + m, n));
}

TEST_CASE("block degrees") {
    CHECK(block_degrees(MultiIndex({1, 2, 3}), Partition({1, 2})) == std::vector<int>{1, 5});
    CHECK(block_degrees(MultiIndex::zero(4), Partition({2, 2})) == std::vector<int>{0, 0});
    CHECK(block_degrees(MultiIndex({2, 0, 0, 1}), Partition({2, 2})) == std::vector<int>{2, 1});
    CHECK_THROWS_AS(block_degrees(MultiIndex({1, 2}), Partition({1, 2})), DimensionError);

    // Block degrees always sum to the total degree.
    std::mt19937_64 eng(12345);
    const Partition k({1, 2, 3});
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> e(6);
        for (auto& ei : e) ei = static_cast<int>(eng() % 5);
        const MultiIndex alpha(e);
        const auto s = block_degrees(alpha, k);
        int total = 0;
        for (int sj : s) total += sj;
        CHECK(total == alpha.degree());
    }
}

TEST_CASE("monomial norm constants") {
    SUBCASE("alpha = 0 gives 1 for every weight") {
        for (int m = 0; m <= 8; ++m) {
            CHECK(monomial_norm_sq(MultiIndex::zero(3), m) == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(monomial_norm_sq_exact(MultiIndex::zero(3), m) == Rational(1));
        }
    }
    SUBCASE("n=1, m=2, alpha=(1) against the direct quadrature oracle") {
        const double oracle = test_support::norm_sq_oracle_n1(1, 2);
        CHECK(oracle == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(monomial_norm_sq(MultiIndex({1}), 2) == doctest::Approx(oracle).epsilon(1e-9));
        CHECK(monomial_norm_sq_exact(MultiIndex({1}), 2) == Rational(1, 2));
    }
    SUBCASE("n=2, m=2, alpha=(1,1) against the direct quadrature oracle") {
        const double oracle = test_support::norm_sq_oracle_n2(1, 1, 2);
        CHECK(oracle == doctest::Approx(0.5).epsilon(1e-8));
        CHECK(monomial_norm_sq(MultiIndex({1, 1}), 2) == doctest::Approx(oracle).epsilon(1e-8));
        CHECK(monomial_norm_sq_exact(MultiIndex({1, 1}), 2) == Rational(1, 2));
    }
    SUBCASE("exact and floating paths agree over J_6(10)") {
        const BasisOrder b = enumerate_basis(6, 10);
        for (std::size_t i = 0; i < b.size(); ++i) {
            const double exact =
                monomial_norm_sq_exact(b.at(i), 10).convert_to<double>();
            const double fl = monomial_norm_sq(b.at(i), 10);
            CHECK(std::abs(fl - exact) <= 1e-14 * exact);
        }
    }
    SUBCASE("degree above the weight is rejected") {
        CHECK_THROWS_AS(monomial_norm_sq(MultiIndex({3}), 2), ValidationError);
        CHECK_THROWS_AS(monomial_norm_sq_exact(MultiIndex({3}), 2), ValidationError);
    }
}

TEST_CASE("multi-index arithmetic and validation") {
    CHECK((MultiIndex({1, 2}) + MultiIndex({0, 3})).entries() == std::vector<int>{1, 5});
    CHECK(try_subtract(MultiIndex({1, 2}), MultiIndex({0, 2}))->entries() ==
          std::vector<int>{1, 0});
    CHECK(!try_subtract(MultiIndex({1, 0}), MultiIndex({0, 1})).has_value());
    CHECK_THROWS_AS(MultiIndex({-1}), ValidationError);
    CHECK_THROWS_AS(Partition({2, 1}), ValidationError); // must be nondecreasing
    CHECK_THROWS_AS(Partition({0}), ValidationError);
    CHECK_THROWS_AS(Partition({}), ValidationError);
    const Partition k({1, 2});
    CHECK(k.dimension() == 3);
    CHECK(k.offset(1) == 1);
}
