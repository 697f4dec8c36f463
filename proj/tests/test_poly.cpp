#include "test_util.hpp"

#include "sigcurve/parse.hpp"
#include "sigcurve/poly.hpp"
#include "sigcurve/upoly.hpp"

#include <random>

using namespace sigcurve;

namespace {

RingPtr R2 = make_ring({"x", "y"});
RingPtr R3 = make_ring({"x", "y", "z"});

SparsePoly P(const char* s, const RingPtr& r = R2) { return parse_poly(s, r); }

SparsePoly random_poly(std::mt19937_64& rng, const RingPtr& r, int deg, int terms) {
    std::uniform_int_distribution<int> c(-9, 9), e(0, deg);
    std::vector<SparsePoly::Term> t;
    for (int i = 0; i < terms; ++i) {
        Mono m;
        int left = deg;
        for (int v = 0; v < r->size(); ++v) {
            int k = std::uniform_int_distribution<int>(0, left)(rng);
            m.e[v] = uint16_t(k);
            left -= k;
        }
        t.push_back({m, rat(c(rng), 1 + std::abs(c(rng)))});
    }
    (void)e;
    return SparsePoly::from_terms(r, t);
}

}  // namespace

TEST_CASE("arithmetic examples") {
    CHECK((P("x+y") * P("x-y")) == P("x^2-y^2"));
    CHECK((P("x+y") * P("0")).is_zero());
    CHECK(pow(P("x+1"), 3) == P("x^3+3x^2+3x+1"));
    CHECK(P("0").total_degree() == kDegNegInf);
    CHECK_THROWS_AS(P("x") + P("x", R3), ContractError);
}

TEST_CASE("ring laws randomized") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        auto a = random_poly(rng, R3, 4, 6), b = random_poly(rng, R3, 3, 5), c = random_poly(rng, R3, 5, 7);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        for (int v = 0; v < 3; ++v) CHECK(derivative(a * b, v) == a * derivative(b, v) + b * derivative(a, v));
    }
}

TEST_CASE("partial derivatives") {
    CHECK(derivative(P("x^2*y+y^2"), "y") == P("x^2+2y"));
    CHECK(derivative(P("y^3"), "x").is_zero());
    for (int d = 3; d <= 6; ++d) {
        auto f = pow(P("x"), d) + pow(P("y"), d) + P("1");
        CHECK(derivative(f, "y") == Rat(d) * pow(P("y"), d - 1));
    }
}

TEST_CASE("gcd content square-free") {
    CHECK(gcd(P("x^2-1"), P("x^2+2x+1")) == P("x+1"));
    auto [c, pp] = content_primitive(P("6x+9y"));
    CHECK(c == 3);
    CHECK(pp == P("2x+3y"));
    CHECK(square_free_part(P("(x+y)^2*(x-y)")) == P("(x+y)*(x-y)"));
    CHECK(gcd(P("0"), P("0")).is_zero());
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto a = random_poly(rng, R2, 3, 4), b = random_poly(rng, R2, 3, 4), g = random_poly(rng, R2, 2, 3);
        auto h = gcd(a * g, b * g);
        CHECK(divides(h, a * g));
        CHECK(divides(h, b * g));
        CHECK(divides(primitive_part(g), h));
    }
}

TEST_CASE("resultants") {
    auto r = make_ring({"x", "y"});
    CHECK(resultant(P("y^2-x"), P("y-1"), 1) == P("1-x"));
    auto f = P("x^2*y+y^2+y+1");
    CHECK(resultant(f, f, 1).is_zero());
    auto rv = make_ring({"v", "w"});
    // Sylvester convention: lc(p)^deg q * prod q(roots of p).
    CHECK(resultant(P("v*w-1", rv), P("w^2-v", rv), 1) == P("1-v^3", rv));
    CHECK_THROWS(resultant(P("x"), P("x+1"), 1));
    // Specialization on stable leading coefficients.
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        auto a = random_poly(rng, R2, 3, 5) + P("y^3"), b = random_poly(rng, R2, 2, 4) + P("y^2");
        Rat x0 = rat(long(rng() % 13) - 6, 1 + long(rng() % 5));
        auto res = resultant(a, b, 1);
        auto xs = SparsePoly::constant(R2, x0);
        auto a0 = substitute(a, 0, xs), b0 = substitute(b, 0, xs);
        CHECK(evaluate(res, {x0, 0}) == evaluate(resultant(a0, b0, 1), {0, 0}));
    }
}

TEST_CASE("homogenize and evaluate") {
    auto h = make_ring({"x0", "x1", "x2"});
    CHECK(homogenize(P("x^2+y+1"), h, 2) == P("x1^2+x0*x2+x0^2", h));
    for (int d = 3; d <= 5; ++d) {
        auto f = pow(P("x"), d) + pow(P("y"), d) + P("1");
        auto fh = homogenize(f, h, d);
        CHECK(fh == pow(P("x0", h), d) + pow(P("x1", h), d) + pow(P("x2", h), d));
        CHECK(dehomogenize(fh, 0, R2) == f);
    }
    CHECK_THROWS(homogenize(P("x^3"), h, 2));
    CHECK(evaluate(P("x^2+y^2-1"), {1, 0}) == 0);
    CHECK(evaluate(P("x^3+y^3+1"), {0, -1}) == 0);
    auto s = substitute(P("y+x^2"), 1, RatFunc(P("1-x^2")));
    CHECK(s.num() == P("1"));
}

TEST_CASE("parser round trip and errors") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        auto p = random_poly(rng, R2, 6, 8);
        CHECK(parse_poly(to_string(p), R2) == p);
    }
    CHECK(P("2x y - (x+1)^2") == P("2*x*y - x^2 - 2*x - 1"));
    CHECK(P("64/121") == SparsePoly::constant(R2, rat(64, 121)));
    CHECK(to_string(P("-x^2 + 3/2*x*y - 1")) == "-x^2 + 3/2 * x * y - 1");
    try {
        parse_curve("x^2 +\n  z");
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }
    CHECK_THROWS_AS(parse_curve("x^"), ParseError);
    CHECK_THROWS_AS(parse_curve("(x+1"), ParseError);
    CHECK_THROWS_AS(parse_curve("1.5x"), ParseError);
    CHECK_THROWS_AS(parse_curve("x/0"), ParseError);
}

TEST_CASE("univariate helpers") {
    UPoly a({-1, 0, 1}), b({1, 2, 1});
    CHECK(gcd(a, b) == UPoly({1, 1}));
    UPoly p = UPoly({0, 0, 0, 1}) * UPoly({-3, 2}) * UPoly({1, 0, 1});
    CHECK(root_order_sum(p, UPoly({0, 1})) == 3);
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == 0);
    CHECK(roots[1] == rat(3, 2));
    UPoly big = pow(UPoly({1, 3, 0, -2, 5}), 7) * pow(UPoly({-2, 0, 1}), 3);
    UPoly big2 = pow(UPoly({1, 3, 0, -2, 5}), 2) * UPoly({7, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    CHECK(gcd(big, big2) == pow(UPoly({1, 3, 0, -2, 5}), 2).monic());
}
