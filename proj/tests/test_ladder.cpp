#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgl/ladder.hpp"

#include "lgl/modules.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <stdexcept>

using namespace lgl;
using lgl_test::alpha_of;
using lgl_test::expv;
using lgl_test::gr;
using lgl_test::gri;

TEST_CASE("degree 4 worked example") {
    alpha_param alpha = alpha_of({gr(1, 2), gaussian_rational::i(), gr(0)});
    ladder_certificate cert = ladder_word(expv({4, 0, 0}), expv({1, -2, 5}), alpha);

    REQUIRE(cert.steps.size() == 5);
    std::vector<matrix_unit> units;
    std::vector<gaussian_rational> coeffs;
    for (const ladder_step& s : cert.steps) {
        units.push_back(s.unit);
        coeffs.push_back(s.coeff);
    }
    CHECK(units == std::vector<matrix_unit>{{3, 1}, {3, 1}, {3, 1}, {3, 2}, {3, 2}});
    // application order: the three lowerings of x_1, then the two of x_2
    CHECK(coeffs == std::vector<gaussian_rational>{gr(9, 2), gr(7, 2), gr(5, 2),
                                                   gaussian_rational::i(), gri(-1, 1, 1, 1)});
    // coefficient multiset {9/2, 7/2, 5/2, -1+i, i}
    std::vector<gaussian_rational> expected{gr(9, 2), gr(7, 2), gr(5, 2), gri(-1, 1, 1, 1),
                                            gaussian_rational::i()};
    std::sort(coeffs.begin(), coeffs.end());
    std::sort(expected.begin(), expected.end());
    CHECK(coeffs == expected);

    CHECK(act(cert.word, laurent_poly::monomial(expv({4, 0, 0})), alpha) ==
          laurent_poly::monomial(expv({1, -2, 5})));
}

TEST_CASE("degree -2 worked example") {
    alpha_param alpha = alpha_param::zero(3);
    ladder_certificate cert = ladder_word(expv({-1, 0, -1}), expv({1, 2, -5}), alpha);

    gaussian_rational product(1);
    for (const ladder_step& s : cert.steps) product *= s.coeff;
    CHECK(product == gr(24));
    CHECK(cert.word.prefactor() == gr(1, 24));

    CHECK(act(cert.word, laurent_poly::monomial(expv({-1, 0, -1})), alpha) ==
          laurent_poly::monomial(expv({1, 2, -5})));
}

TEST_CASE("identity certificate") {
    ladder_certificate cert = ladder_word(expv({2, -1}), expv({2, -1}), alpha_param::zero(2));
    CHECK(cert.steps.empty());
    CHECK(cert.word.is_identity());
}

TEST_CASE("precondition violations") {
    alpha_param zero = alpha_param::zero(2);
    CHECK_THROWS_AS(ladder_word(expv({1, 0}), expv({1, 1}), zero), std::invalid_argument);
    // q has a barrier coordinate that p does not
    CHECK_THROWS_AS(ladder_word(expv({1, 0}), expv({2, -1}), zero), std::invalid_argument);
}

TEST_CASE("coefficient product equals the falling factorials") {
    alpha_param alpha = alpha_of({gr(1, 2), gr(0), gr(0)});
    auto falling = [&](const exponent& p, const exponent& q) {
        gaussian_rational out(1);
        for (int l = 1; l <= p.size(); ++l)
            for (std::int64_t v = p.at(l); v > q.at(l); --v)
                out *= gr(v) + alpha.at(l);
        return out;
    };
    struct pair_case {
        exponent p, q;
    };
    for (const pair_case& pc : {pair_case{expv({4, 0, 0}), expv({1, 2, 1})},
                                pair_case{expv({2, -1, 1}), expv({-1, 2, 1})},
                                pair_case{expv({0, -1, -2}), expv({3, -5, -1})}}) {
        ladder_certificate cert = ladder_word(pc.p, pc.q, alpha);
        gaussian_rational product(1);
        for (const ladder_step& s : cert.steps) product *= s.coeff;
        CHECK(product == falling(pc.p, pc.q));
        CHECK(product * cert.word.prefactor() == gr(1));
    }
}

TEST_CASE("box confinement and replay on random pairs") {
    alpha_param alpha = alpha_of({gr(0), gr(1, 3), gr(0)});
    auto starts = lgl_test::random_monomials(3, 40, 21, -4, 4);
    auto targets = lgl_test::random_monomials(3, 40, 22, -4, 4);
    for (std::size_t i = 0; i < starts.size(); ++i) {
        exponent p = starts[i];
        exponent q = targets[i];
        // align degrees by adjusting the non-barrier coordinate 2
        q.set(2, q.at(2) + (p.degree() - q.degree()));
        if (!is_subset(set_intersect(q.neg_support(), alpha.zero_set()),
                       set_intersect(p.neg_support(), alpha.zero_set())))
            continue;
        ladder_certificate cert = ladder_word(p, q, alpha);
        for (const ladder_step& s : cert.steps) {
            for (int l = 1; l <= 3; ++l) {
                CHECK(s.after.at(l) >= std::min(p.at(l), q.at(l)));
                CHECK(s.after.at(l) <= std::max(p.at(l), q.at(l)));
            }
        }
        CHECK(act(cert.word, laurent_poly::monomial(p), alpha) == laurent_poly::monomial(q));
    }
}

TEST_CASE("separation: single term") {
    laurent_poly f = laurent_poly::monomial(expv({2, -1}), gr(5));
    separation_certificate cert = separate_terms(f, alpha_param::zero(2));
    REQUIRE(cert.terms.size() == 1);
    CHECK(cert.terms[0].node == 0);
    CHECK(cert.terms[0].coeff == gr(5));
}

TEST_CASE("separation: x1 + x2") {
    laurent_poly f(2);
    f.add_term(expv({1, 0}), gr(1));
    f.add_term(expv({0, 1}), gr(1));
    alpha_param zero = alpha_param::zero(2);
    separation_certificate cert = separate_terms(f, zero);
    REQUIRE(cert.terms.size() == 2);
    std::vector<laurent_poly> vals = replay_separation(cert, zero);
    for (const isolated_term& t : cert.terms)
        CHECK(vals[t.node] == laurent_poly::monomial(t.exp, t.coeff));
}

TEST_CASE("separation: three terms, two rounds") {
    laurent_poly f(2);
    f.add_term(expv({2, -1}), gr(1));
    f.add_term(expv({1, 0}), gr(1));
    f.add_term(expv({0, 1}), gr(1));
    alpha_param zero = alpha_param::zero(2);
    separation_certificate cert = separate_terms(f, zero);
    REQUIRE(cert.terms.size() == 3);
    std::vector<laurent_poly> vals = replay_separation(cert, zero);
    for (const isolated_term& t : cert.terms)
        CHECK(vals[t.node] == laurent_poly::monomial(t.exp, t.coeff));
}

TEST_CASE("separation soundness on random polynomials") {
    alpha_param alpha = alpha_of({gr(1, 2), gr(0), gr(0)});
    auto exps = lgl_test::random_monomials(3, 50, 31, -3, 3);
    auto coeffs = lgl_test::random_scalars(50, 32);
    for (int trial = 0; trial < 10; ++trial) {
        laurent_poly f(3);
        for (int t = 0; t < 5; ++t) {
            std::size_t i = static_cast<std::size_t>(trial * 5 + t);
            f.add_term(exps[i], coeffs[i].is_zero() ? gr(1) : coeffs[i]);
        }
        if (f.is_zero()) continue;
        separation_certificate cert = separate_terms(f, alpha);
        CHECK(cert.terms.size() == f.term_count());
        std::vector<laurent_poly> vals = replay_separation(cert, alpha);
        for (const isolated_term& t : cert.terms)
            CHECK(vals[t.node] == laurent_poly::monomial(t.exp, t.coeff));
    }
}

TEST_CASE("separation rejects zero input") {
    CHECK_THROWS_AS(separate_terms(laurent_poly(2), alpha_param::zero(2)),
                    std::invalid_argument);
}
