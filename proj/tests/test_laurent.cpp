#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgl/laurent.hpp"

#include "test_util.hpp"

#include <stdexcept>

using namespace lgl;
using lgl_test::expv;
using lgl_test::gr;

TEST_CASE("degree") {
    CHECK(expv({4, 0, 0}).degree() == 4);
    CHECK(expv({0, 0, 0, 0}).degree() == 0);
    CHECK(expv({-1, 0, -1}).degree() == -2);
}

TEST_CASE("neg_support") {
    CHECK(expv({1, -2, 5}).neg_support() == index_set{2});
    CHECK(expv({3, 0, 1}).neg_support() == index_set{});
    CHECK(expv({-1, -1, -2}).neg_support() == index_set{1, 2, 3});
}

TEST_CASE("normalize_alpha") {
    SUBCASE("mixed entries") {
        auto [alpha, shift] = alpha_param::normalize(
            {gr(3, 2), gaussian_rational::i(), gr(-1, 2)});
        CHECK(alpha.entries() ==
              std::vector<gaussian_rational>{gr(1, 2), gaussian_rational::i(), gr(1, 2)});
        CHECK(shift == expv({1, 0, -1}));
        CHECK(alpha.zero_set() == index_set{});
    }
    SUBCASE("already normalized") {
        std::vector<gaussian_rational> raw{gr(0), gr(1, 2), gr(0), gr(0)};
        auto [alpha, shift] = alpha_param::normalize(raw);
        CHECK(alpha.entries() == raw);
        CHECK(shift == exponent::zero(4));
        CHECK(alpha.zero_set() == index_set{1, 3, 4});
    }
    SUBCASE("zero") {
        auto [alpha, shift] = alpha_param::normalize({gr(0), gr(0)});
        CHECK(alpha.is_zero());
        CHECK(shift == exponent::zero(2));
    }
    SUBCASE("raw minus normalized is the shift") {
        for (const auto& v : lgl_test::random_scalars(12, 3)) {
            auto [alpha, shift] = alpha_param::normalize({v, gr(0)});
            CHECK(v - alpha.at(1) == gr(shift.at(1)));
            const mpq_class& re = alpha.at(1).re();
            CHECK(sgn(re) >= 0);
            CHECK(re < 1);
        }
    }
}

TEST_CASE("from_normalized validates") {
    CHECK_THROWS_AS(alpha_param::from_normalized({gr(3, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(alpha_param::from_normalized({gr(-1, 2)}), std::invalid_argument);
    CHECK_NOTHROW(alpha_param::from_normalized({gr(0), gaussian_rational::i()}));
}

TEST_CASE("shift_iso") {
    laurent_poly f = laurent_poly::monomial(expv({2, 0, 0}));
    CHECK(shift_iso(f, expv({1, 0, -1})) == laurent_poly::monomial(expv({3, 0, -1})));
    CHECK(shift_iso(f, exponent::zero(3)) == f);

    laurent_poly g(2);
    g.add_term(expv({1, 0}), gr(2));
    g.add_term(expv({0, 1}), gr(3));
    laurent_poly expected(2);
    expected.add_term(expv({1, 1}), gr(2));
    expected.add_term(expv({0, 2}), gr(3));
    CHECK(shift_iso(g, expv({0, 1})) == expected);

    // degrees translate by degree(shift); supports are recomputed
    exponent shift = expv({2, -5});
    for (const exponent& k : lgl_test::random_monomials(2, 20, 17)) {
        laurent_poly moved = shift_iso(laurent_poly::monomial(k), shift);
        const exponent& kk = moved.terms().begin()->first;
        CHECK(kk.degree() == k.degree() + shift.degree());
        CHECK(kk.neg_support() == (k + shift).neg_support());
    }
}

TEST_CASE("poly arithmetic prunes zeros") {
    laurent_poly f = laurent_poly::monomial(expv({1, 0}));
    laurent_poly g = scale(gr(-1), f);
    CHECK((f + g).is_zero());

    laurent_poly zero(2);
    CHECK(zero + f == f);

    laurent_poly h(2);
    h.add_term(expv({1, 0}), gr(1));
    h.add_term(expv({0, 1}), gr(1));
    laurent_poly doubled(2);
    doubled.add_term(expv({1, 0}), gr(2));
    doubled.add_term(expv({0, 1}), gr(2));
    CHECK(scale(gr(2), h) == doubled);

    laurent_poly mixed = h - h + doubled - h;
    for (const auto& [k, c] : mixed.terms()) {
        (void)k;
        CHECK(!c.is_zero());
    }
}

TEST_CASE("dimension mismatch signals") {
    laurent_poly f(2);
    laurent_poly g(3);
    CHECK_THROWS_AS(f += g, std::invalid_argument);
    CHECK_THROWS_AS(f.add_term(expv({1, 2, 3}), gr(1)), std::invalid_argument);
    CHECK_THROWS_AS(shift_iso(f, expv({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("degree_window matches brute enumeration") {
    for (int n : {1, 2, 3}) {
        for (std::int64_t m : {-3, -1, 0, 2}) {
            auto fast = degree_window(n, m, 3);
            auto brute = lgl_test::brute_window(n, m, 3);
            CHECK(fast == brute); // brute odometer also emits lex order
        }
    }
    CHECK(degree_window(2, 9, 4).empty());
}
