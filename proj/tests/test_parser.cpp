#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qmx/parser.hpp"

using namespace qmx;

namespace {

laurent_poly M(std::initializer_list<std::pair<param, int>> f) { return presets::mono(f); }

}  // namespace

TEST_CASE("words and coefficients") {
    raw_poly p = parse_expression("zb*z");
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms().begin()->first == word{generator::zb, generator::z});
    CHECK(p.terms().begin()->second.is_one());

    raw_poly q = parse_expression("(q - q^-1)*vb");
    REQUIRE(q.terms().size() == 1);
    CHECK(q.terms().begin()->first == word{generator::vb});
    CHECK(q.terms().begin()->second == lambda_const());
}

TEST_CASE("a relation instance normalizes to zero") {
    nc_poly r = parse_nc("zb*v - (q13*q34*q^-2*q14^-1)*v*zb - (q-q^-1)*xp");
    CHECK(r.is_zero());
}

TEST_CASE("juxtaposition, powers, rationals") {
    CHECK(parse_nc("z v") == parse_nc("z*v"));
    CHECK(parse_nc("z^3") == parse_nc("z*z*z"));
    CHECK(parse_nc("3/2*q^2") == nc_poly::constant(rational(3, 2) * M({{param::q, 2}})));
    CHECK(parse_nc("(z + v)^2") == parse_nc("z*z + z*v + v*z + v*v"));
    CHECK(parse_laurent("q13*q24*q14^-1*q23^-1") ==
          M({{param::q13, 1}, {param::q24, 1}, {param::q14, -1}, {param::q23, -1}}));
    CHECK(parse_nc("-z - -v") == parse_nc("v - z"));
    CHECK(parse_nc("(q13*q24)^-2").to_string() == "q13^-2*q24^-2");
}

TEST_CASE("unicode aliases") {
    CHECK(parse_nc("x₊*x₋") == parse_nc("xp*xm"));
    CHECK(parse_nc("z̄*z") == parse_nc("zb*z"));
    CHECK(parse_nc("v̄") == parse_nc("vb"));
}

TEST_CASE("errors carry positions") {
    CHECK_THROWS_AS(parse_expression("z +"), parse_error);
    CHECK_THROWS_AS(parse_expression("foo"), parse_error);
    CHECK_THROWS_AS(parse_expression("z^(2)"), parse_error);
    CHECK_THROWS_AS(parse_expression("q12^1/2"), parse_error);  // non-integer exponent
    CHECK_THROWS_AS(parse_expression("(z"), parse_error);
    CHECK_THROWS_AS(parse_expression("z^-1"), parse_error);  // generator not invertible
    CHECK_THROWS_AS(parse_expression("1/0"), parse_error);
    try {
        parse_expression("z * fu");
    } catch (const parse_error& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("print-parse round trip on canonical output") {
    const std::vector<std::string> inputs = {
        "zb*z",
        "zb*v*z",
        "xp*xm",
        "(q - q^-1)*vb + 2*z*zb",
        "3/2*q13^2*q24^-1",
        "z + v + zb*z",
        "vb*xm*v - x₊",
        "q14^-3",
        "(z + vb)^3",
        "zb^2*z^2",
    };
    for (const auto& in : inputs) {
        std::string once = parse_nc(in).to_string();
        std::string twice = parse_nc(once).to_string();
        INFO(in << " -> " << once);
        CHECK(once == twice);
    }
}

TEST_CASE("laurent coefficients round trip") {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> nterms(0, 4);
    for (int t = 0; t < 80; ++t) {
        laurent_poly p;
        int n = nterms(rng);
        for (int k = 0; k < n; ++k) {
            param_exponent e{};
            for (int i = 0; i < n_params; ++i) e[i] = expo(rng);
            p += laurent_poly::term(rational(num(rng), den(rng)), e);
        }
        INFO(p.to_string());
        CHECK(parse_laurent(p.to_string()) == p);
    }
}

TEST_CASE("round trip on random normal forms") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> gen_dist(0, n_generators - 1);
    std::uniform_int_distribution<int> len_dist(0, 5);
    for (int t = 0; t < 60; ++t) {
        word w(static_cast<std::size_t>(len_dist(rng)));
        for (auto& g : w) g = static_cast<generator>(gen_dist(rng));
        nc_poly p = normal_order(w);
        nc_poly reparsed = parse_nc(p.to_string());
        CHECK(reparsed == p);
        CHECK(reparsed.to_string() == p.to_string());
    }
}
