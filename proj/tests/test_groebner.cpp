#include "test_util.hpp"

#include "sigcurve/groebner.hpp"
#include "sigcurve/parse.hpp"

#include <cmath>
#include <random>

using namespace sigcurve;

TEST_CASE("groebner elimination examples") {
    auto r = make_ring({"x", "k1", "k2"});
    auto P = [&](const char* s) { return parse_poly(s, r); };
    auto g = groebner_eliminate({P("x-k1"), P("x^2-k2")}, {"k1", "k2"});
    REQUIRE(g.size() == 1);
    CHECK(g[0] == P("k1^2-k2"));

    auto r2 = make_ring({"x", "y", "k1"});
    auto Q = [&](const char* s) { return parse_poly(s, r2); };
    auto h = groebner_eliminate({Q("y-x"), Q("x^2+y^2-1"), Q("k1-x")}, {"k1"});
    REQUIRE(h.size() == 1);
    CHECK(h[0] == Q("k1^2-1/2"));

    auto all = groebner_eliminate({Q("x^2-y"), Q("x*y-1")}, {"x", "y", "k1"});
    // reduced grevlex basis
    REQUIRE(all.size() == 3);
    CHECK(all[0] == Q("y^2-x"));
    CHECK(all[1] == Q("x*y-1"));
    CHECK(all[2] == Q("x^2-y"));
}

TEST_CASE("groebner budget") {
    auto r = make_ring({"x", "y", "z"});
    auto P = [&](const char* s) { return parse_poly(s, r); };
    Budget b;
    b.max_degree = 3;
    CHECK_THROWS_AS(groebner_eliminate({P("x^3-y^2*z"), P("y^3-x*z^2+1"), P("z^3-x^2+y")}, {"z"}, b), BudgetExceeded);
    CHECK(parse_budget("10,20").max_degree == 20);
    CHECK_THROWS(parse_budget("ten"));
    CHECK(parse_budget("10,20,2.5").max_seconds == 2.5);
    CHECK_THROWS(parse_budget("10.5"));
    CHECK_THROWS(parse_budget("1,2,3,4"));
}

TEST_CASE("elimination oracle on parametrized samples") {
    // Image of t -> (t^2 + a t, t^3 - b) for random small a, b; every returned generator must
    // vanish on sampled points.
    std::mt19937_64 rng(9);
    auto r = make_ring({"t", "u", "v"});
    for (int trial = 0; trial < 4; ++trial) {
        int a = int(rng() % 5) - 2, b = int(rng() % 5) - 2;
        auto u = parse_poly("u - t^2 - " + std::to_string(a) + "*t", r);
        auto v = parse_poly("v - t^3 + " + std::to_string(b), r);
        auto g = groebner_eliminate({u, v}, {"u", "v"});
        REQUIRE_FALSE(g.empty());
        for (int k = 0; k < 50; ++k) {
            double t = -2.0 + 4.0 * double(k) / 49.0;
            double uu = t * t + a * t, vv = t * t * t - b;
            for (const auto& p : g) {
                double val = evaluate_double(p, {t, uu, vv});
                double scale = 0;
                for (const auto& [m, c] : p.terms())
                    scale += std::fabs(c.get_d() * std::pow(uu, m.e[1]) * std::pow(vv, m.e[2]));
                CHECK(std::fabs(val) <= 1e-9 * (1 + scale));
            }
        }
    }
}
