#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgl/json_io.hpp"

#include "lgl/ladder.hpp"
#include "test_util.hpp"

using namespace lgl;
using lgl::io::json;
using lgl_test::alpha_of;
using lgl_test::expv;
using lgl_test::gr;

TEST_CASE("scalar round trip uses decimal strings") {
    gaussian_rational v = lgl_test::gri(-7, 3, 22, 5);
    json j = io::to_json(v);
    CHECK(j["re"]["num"].is_string());
    CHECK(j["re"]["num"] == "-7");
    CHECK(j["re"]["den"] == "3");
    CHECK(io::gr_from_json(j) == v);

    // big values survive the string transport
    gaussian_rational big(mpq_class(mpz_class("123456789012345678901234567890"), mpz_class(7)),
                          mpq_class(0));
    CHECK(io::gr_from_json(io::to_json(big)) == big);
}

TEST_CASE("polynomial round trip, sorted terms") {
    laurent_poly f(3);
    f.add_term(expv({1, -2, 5}), lgl_test::gri(0, 1, 1, 1));
    f.add_term(expv({-1, 0, 5}), gr(3, 2));
    f.add_term(expv({0, 0, 4}), gr(-2));
    json j = io::to_json(f);
    CHECK(j["n"] == 3);
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["exps"] == json::array({-1, 0, 5})); // lexicographic order
    CHECK(io::poly_from_json(j) == f);
}

TEST_CASE("uword round trip and envelopes") {
    uword w(gr(1, 24), {matrix_unit{1, 3}, matrix_unit{2, 3}});
    json j = io::to_json(w);
    CHECK(j["factors"] == json::array({json::array({1, 3}), json::array({2, 3})}));
    uword back = io::uword_from_json(j);
    CHECK(back.prefactor() == w.prefactor());
    CHECK(back.factors() == w.factors());

    json envelope{{"word", j}, {"p", json::array({1, 2})}};
    CHECK(io::uword_from_json(envelope).factors() == w.factors());
}

TEST_CASE("module id round trip") {
    alpha_param alpha = alpha_of({gr(0), gr(1, 2), gr(0), gr(0)});
    module_id v = module_id::make_V(alpha, 2, {1, 4});
    json jv = io::to_json(v);
    CHECK(jv["kind"] == "V");
    CHECK(jv["J"] == json::array({1, 4}));
    module_id v2 = io::module_id_from_json(jv);
    CHECK(v2.kind == module_kind::V);
    CHECK(v2.J == index_set{1, 4});
    CHECK(v2.alpha == alpha);

    module_id l = module_id::make_L(alpha, -3, 2);
    json jl = io::to_json(l);
    CHECK(jl["j"] == 2);
    CHECK(io::module_id_from_json(jl).j == 2);
}

TEST_CASE("ladder certificate round trip") {
    alpha_param alpha = alpha_of({gr(1, 2), gaussian_rational::i(), gr(0)});
    ladder_certificate cert = ladder_word(expv({4, 0, 0}), expv({1, -2, 5}), alpha);
    json j = io::to_json(cert);
    CHECK(j["steps"].size() == 5);
    CHECK(j["steps"][0]["unit"] == json::array({3, 1}));
    ladder_certificate back = io::ladder_from_json(j);
    CHECK(back.source == cert.source);
    CHECK(back.target == cert.target);
    CHECK(back.steps.size() == cert.steps.size());
    CHECK(back.word.prefactor() == cert.word.prefactor());
    // the embedded word replays on its own
    CHECK(act(back.word, laurent_poly::monomial(back.source), alpha) ==
          laurent_poly::monomial(back.target));
}

TEST_CASE("separation certificate serializes") {
    laurent_poly f(2);
    f.add_term(expv({1, 0}), gr(1));
    f.add_term(expv({0, 1}), gr(2));
    separation_certificate cert = separate_terms(f, alpha_param::zero(2));
    json j = io::to_json(cert);
    CHECK(j["ops"][0]["op"] == "root");
    CHECK(j["terms"].size() == 2);
}

TEST_CASE("sweep config round trip and report envelope") {
    sweep_config config;
    config.ns = {2, 3};
    config.m_lo = -2;
    config.m_hi = 2;
    config.bound = 4;
    config.alphas = {{}, {gr(1, 2), gaussian_rational::i()}};
    json j = io::to_json(config);
    CHECK(j["m_range"] == json::array({-2, 2}));
    CHECK(j["B"] == 4);
    sweep_config back = io::sweep_config_from_json(j);
    CHECK(back.ns == config.ns);
    CHECK(back.bound == config.bound);
    CHECK(back.alphas.size() == 2);

    // literal-string alpha entries are accepted too
    json literal = j;
    literal["alphas"] = json::array({json::array({"1/2", "i"})});
    sweep_config lit = io::sweep_config_from_json(literal);
    REQUIRE(lit.alphas.size() == 1);
    CHECK(lit.alphas[0][0] == gr(1, 2));
    CHECK(lit.alphas[0][1] == gaussian_rational::i());
}

TEST_CASE("dump determinism") {
    alpha_param alpha = alpha_of({gr(0), gr(1, 2)});
    module_id id = module_id::make_W(alpha, 1, {1});
    CHECK(io::to_json(id).dump(2) == io::to_json(id).dump(2));

    laurent_poly f(2);
    f.add_term(expv({3, -2}), gr(5, 7));
    f.add_term(expv({-2, 3}), gr(1));
    std::string once = io::to_json(f).dump();
    laurent_poly g(2);
    g.add_term(expv({-2, 3}), gr(1));
    g.add_term(expv({3, -2}), gr(5, 7));
    CHECK(once == io::to_json(g).dump()); // insertion order cannot leak
}
