#include "sigcurve/elimination.hpp"
#include "sigcurve/parse.hpp"
#include "sigcurve/modp.hpp"
#include "test_util.hpp"

#include <chrono>

using namespace sigcurve;

namespace {
CurveInput curve(const char* s) { return make_curve(parse_curve(s)); }
SparsePoly kpoly(const char* s) { return parse_poly(s, kappa_ring()); }
const char* kEllipseS = "2916*k1^6+972*k1^4*k2^2+108*k1^2*k2^4+4*k2^6-13608*k1^5+1944*k1^3*k2^2+2187*k1^4";
}  // namespace

TEST_CASE("ellipse signature by elimination") {
    auto t0 = std::chrono::steady_clock::now();
    auto S = signature_by_groebner(curve("x^2+x*y+y^2-1"), GroupId::SE2, Budget{});
    std::chrono::duration<double> el = std::chrono::steady_clock::now() - t0;
    CHECK(S == kpoly(kEllipseS));
    CHECK(el.count() < 30);
}

TEST_CASE("ellipse signature by fitting agrees") {
    auto fit = signature_by_fitting(curve("x^2+x*y+y^2-1"), GroupId::SE2, 40, 1);
    CHECK(fit.degree == 6);
    CHECK(fit.S == kpoly(kEllipseS));
    CHECK(relation_kernel_dim(curve("x^2+x*y+y^2-1"), GroupId::SE2, 8, modp::prime(9), 3) == 6);
}

TEST_CASE("vanishing check rejects a wrong polynomial") {
    auto c = curve("x^2+x*y+y^2-1");
    CHECK(vanishes_on_signature_mod(c, GroupId::SE2, kpoly(kEllipseS), 2, 0));
    CHECK_FALSE(vanishes_on_signature_mod(c, GroupId::SE2, kpoly(kEllipseS) + kpoly("k2"), 2, 0));
}

TEST_CASE("constant signatures") {
    Rat k2;
    auto k1 = is_constant_signature(curve("x^2+y^2-1"), GroupId::SE2, &k2);
    REQUIRE(k1);
    CHECK(*k1 == 1);
    CHECK_FALSE(is_constant_signature(curve("x^2+x*y+y^2-1"), GroupId::SE2));
    CHECK_FALSE(is_constant_signature(curve("x^4+y^4+1"), GroupId::A2));
    auto r = signature_polynomial(curve("x^2+y^2-4"), GroupId::SE2);
    CHECK(r.is_point);
    CHECK(r.k1 == rat(1, 4));
}

TEST_CASE("numeric samples lie on the signature") {
    auto c = curve("x^2+x*y+y^2-1");
    auto res = signature_samples(c, GroupId::SE2, 25, 7);
    CHECK(res.warning.empty());
    REQUIRE(res.samples.size() == 25);
    for (const auto& s : res.samples) CHECK(relative_residual(kpoly(kEllipseS), s.k1, s.k2) < 1e-8);
    auto again = signature_samples(c, GroupId::SE2, 25, 7);
    CHECK(again.samples.front().k1 == res.samples.front().k1);
    CHECK(signature_samples(c, GroupId::SE2, 0, 1).samples.empty());
    CHECK_THROWS_AS(signature_samples(curve("x+2*y-1"), GroupId::SE2, 3, 0), ExceptionalCurveError);
    auto none = signature_samples(curve("x^2+y^2+1"), GroupId::SE2, 3, 0);
    CHECK(none.samples.empty());
    CHECK_FALSE(none.warning.empty());
}

TEST_CASE("signature orchestration") {
    auto r = signature_polynomial(curve("x^2+x*y+y^2-1"), GroupId::SE2);
    CHECK_FALSE(r.is_point);
    CHECK(r.poly.S == kpoly(kEllipseS));
    CHECK(r.poly.method == "groebner");
    SignatureOptions o;
    o.try_groebner = false;
    auto f = signature_polynomial(curve("x^2+x*y+y^2-1"), GroupId::SE2, o);
    CHECK(f.poly.S == kpoly(kEllipseS));
    CHECK(f.poly.method == "fitting");
}
