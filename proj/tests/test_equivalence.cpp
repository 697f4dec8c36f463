#include "sigcurve/equivalence.hpp"
#include "sigcurve/parse.hpp"
#include "test_util.hpp"

using namespace sigcurve;

namespace {
CurveInput curve(const std::string& s) { return make_curve(parse_curve(s)); }

SignatureOptions quick() {
    SignatureOptions o;
    o.budget.max_seconds = 2;
    return o;
}

// Cubic through (1/2, -1/3).
CurveInput pointed_cubic() {
    auto G = parse_curve("x^3+2*x^2*y-y^3+3*x*y-x+2*y+5");
    return make_curve(G - SparsePoly::constant(xy_ring(), evaluate(G, {rat(1, 2), rat(-1, 3)})));
}

const char* kCubic = "x^2*y+y^2+y+64/121";
const char* kTriCubic = "x^3-3*x*y^2+x^2+y^2-2";
}  // namespace

TEST_CASE("invariants agree at matched points") {
    auto F = pointed_cubic();
    Rat px = rat(1, 2), py = rat(-1, 3);
    for (GroupId g : kAllGroups) {
        CAPTURE(to_string(g));
        auto k = invariants_at(F, g, px, py);
        int checked = 0;
        for (uint64_t seed = 0; checked < 20 && seed < 200; ++seed) {
            auto m = random_group_element(g, seed);
            std::pair<Rat, Rat> q, k2;
            try {
                q = apply_to_point(m, px, py);
                k2 = invariants_at(apply_group_element(F, m, g), g, q.first, q.second);
            } catch (const PoleError&) {
                continue;
            }
            CHECK(k2 == k);
            ++checked;
        }
        CHECK(checked == 20);
    }
}

TEST_CASE("invariants at a point match the symbolic pair") {
    auto F = pointed_cubic();
    auto K = classifying_pair(F, GroupId::SE2);
    auto k = invariants_at(F, GroupId::SE2, rat(1, 2), rat(-1, 3));
    CHECK(K.K1.evaluate({rat(1, 2), rat(-1, 3)}) == k.first);
    CHECK(K.K2.evaluate({rat(1, 2), rat(-1, 3)}) == k.second);
    CHECK_THROWS_AS(invariants_at(F, GroupId::SE2, rat(1), rat(1)), std::domain_error);
}

TEST_CASE("a scaling is not a Euclidean motion") {
    auto F = pointed_cubic();
    Mat3 s = identity3();
    s[1][1] = s[2][2] = 2;
    auto k = invariants_at(F, GroupId::SE2, rat(1, 2), rat(-1, 3));
    auto k2 = invariants_at(apply_group_element(F, s, GroupId::A2), GroupId::SE2, rat(1), rat(-2, 3));
    CHECK(k2.first == k.first / 4);
    CHECK(k2 != k);
}

TEST_CASE("signature polynomial is invariant") {
    for (auto [src, g] : {std::pair{kCubic, GroupId::A2}, std::pair{kTriCubic, GroupId::SE2}}) {
        auto c = curve(src);
        auto S = signature_polynomial(c, g, quick()).poly.S;
        for (uint64_t seed : {3, 17}) {
            auto img = apply_group_element(c, random_group_element(g, seed), g);
            CHECK(signature_polynomial(img, g, quick()).poly.S == S);
        }
    }
}

TEST_CASE("equivalence verdicts") {
    auto c = curve(kTriCubic);
    auto g1 = random_group_element(GroupId::SE2, 5), g2 = random_group_element(GroupId::SE2, 6);
    auto c1 = apply_group_element(c, g1, GroupId::SE2);
    auto c2 = apply_group_element(c1, g2, GroupId::SE2);
    auto v = equivalent(c, c1, GroupId::SE2, quick());
    CHECK(v.equivalent == true);
    CHECK(v.reason == EquivalenceReason::SignaturesEqual);
    CHECK(equivalent(c1, c, GroupId::SE2, quick()).equivalent == true);
    CHECK(equivalent(c, c2, GroupId::SE2, quick()).equivalent == true);
    CHECK(equivalent(c, apply_group_element(c, g2 * g1, GroupId::SE2), GroupId::SE2, quick()).equivalent == true);

    auto f = equivalent(curve("x^3+y^3+1"), curve("x^4+y^4+1"), GroupId::PGL3, quick());
    CHECK(f.equivalent == false);
    CHECK(f.reason == EquivalenceReason::SignaturesDiffer);
    CHECK(f.signatures[0]->poly.S.total_degree() == 4);
    CHECK(f.signatures[1]->poly.S.total_degree() == 4);

    auto e = equivalent(curve("x^2+x*y+y^2-1"), curve("x^2+y^2-1"), GroupId::SE2, quick());
    CHECK(e.equivalent == false);
    CHECK(e.reason == EquivalenceReason::ConstantVsCurve);

    auto circ = equivalent(curve("x^2+y^2-1"), curve("(x-3)^2+(y+1/2)^2-1"), GroupId::SE2, quick());
    CHECK(circ.equivalent == true);
    CHECK(circ.reason == EquivalenceReason::BothConstantEqual);
    CHECK(circ.necessary_condition_only);
    CHECK(equivalent(curve("x^2+y^2-1"), curve("x^2+y^2-4"), GroupId::SE2, quick()).equivalent == false);

    auto x = equivalent(curve("x^2+y^2-1"), c, GroupId::A2, quick());
    CHECK_FALSE(x.equivalent.has_value());
    CHECK(x.reason == EquivalenceReason::ExceptionalInput);
}

TEST_CASE("symmetry orders") {
    SymmetryOptions o;
    o.signature = quick();
    CHECK(symmetry_order(curve(kCubic), GroupId::A2, o).n == 2);
    CHECK(symmetry_order(curve(kTriCubic), GroupId::SE2, o).n == 3);
    auto f = symmetry_order(curve("x^3+y^3+1"), GroupId::PGL3, o);
    CHECK(f.n == 54);
    CHECK(f.route == "degree-ratio");
    CHECK(f.deg_S == 4);
    CHECK(symmetry_order(curve("x^3+y^3+1"), GroupId::A2, o).n == 18);
    auto c = symmetry_order(curve("x^2+y^2-1"), GroupId::SE2, o);
    CHECK_FALSE(c.n.has_value());
    CHECK(c.route == "constant-signature");
    CHECK(c.constant == 1);
}
