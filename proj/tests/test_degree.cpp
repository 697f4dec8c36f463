#include "sigcurve/degree.hpp"
#include "sigcurve/parse.hpp"
#include "test_util.hpp"

#include <random>
#include <sstream>

using namespace sigcurve;

namespace {
CurveInput curve(const std::string& s) { return make_curve(parse_curve(s)); }

std::string dense_curve(int d, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> co(-9, 9);
    std::ostringstream o;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            int c = co(rng);
            if (c == 0) c = 1;
            o << (c < 0 ? "" : "+") << c << "*x^" << i << "*y^" << j;
        }
    return o.str();
}

const char* kCubic = "x^2*y+y^2+y+64/121";
// infinite points [0:1:0], [0:1:1], [0:1:-1], [0:1:2]
const char* kSplitQuartic = "y*(y-x)*(y+x)*(y-2*x)+3*x^3-2*x^2*y+5*y^3+x*y-7*x+4*y-2";
}  // namespace

TEST_CASE("generic degree table") {
    CHECK(generic_degree(GroupId::SE2, 4) == 72);
    CHECK(generic_degree(GroupId::A2, 5) == 360);
    CHECK(generic_degree(GroupId::SA2, 4) == 192);
    CHECK(generic_degree(GroupId::PGL3, 4) == 672);
}

TEST_CASE("truncated series arithmetic") {
    auto a = TruncatedSeries(-1, {1, 2, 3}, 5);
    auto b = a * a.inverse();
    CHECK(b.valuation() == 0);
    CHECK(b.coeff(0) == 1);
    CHECK(b.coeff(1) == 0);
    CHECK(b.coeff(2) == 0);
    CHECK(a.derivative().coeff(-2) == -1);
    CHECK(a.shift(3).valuation() == 2);
    CHECK_THROWS(a.coeff(5));
}

TEST_CASE("valuations along a rational infinite branch") {
    const std::array<int, 8> val{0, 3, 4, 8, 15, 19, 40, 60}, v{0, 2, 2, 4, 9, 11, 24, 36};
    auto c = curve("(y+x)*(x^3+y^3+4*x*y^2+x^2*y+x^2)+3*x^3-y^3+x*y-7*x-2+y");
    auto s = series_valuations(c, -1);
    CHECK(s.val == val);
    CHECK(s.v == v);
    CHECK(s.branch[0] == -1);
    CHECK(s.lead[3] == -36 * s.branch[2] * s.branch[2]);
    auto s2 = series_valuations(curve("(y-2*x)*(x^3+3*y^3-x*y^2+2*x^2*y)+x^3-2*y^3+x*y+5*x^2*y-3*y+7*x-1+2*y^2"), 2);
    CHECK(s2.val == val);
    CHECK(s2.v == v);
    CHECK_THROWS_AS(series_valuations(c, 5), std::invalid_argument);
}

TEST_CASE("series multiplicities sum to the resultant order") {
    auto c = curve(kSplitQuartic);
    const std::array<int, 4> per_point{0, 16, 12, 72};
    for (size_t gi = 0; gi < kAllGroups.size(); ++gi) {
        GroupId g = kAllGroups[gi];
        int sum = 0;
        for (int r : {0, 1, -1, 2}) {
            int m = series_multiplicity(series_valuations(c, r), g);
            CHECK(m == per_point[gi]);
            sum += m;
        }
        CHECK(mult_sum_line(c, g, {Rat(3217), Rat(-45), Rat(911)}) == sum);
    }
}

TEST_CASE("cubic example under the affine group") {
    auto c = curve(kCubic);
    auto rep = predict_degree(c, GroupId::A2, 2);
    CHECK(rep.deg_sigma == 26);
    CHECK(rep.cancelled);
    CHECK(rep.mult_sum == 30);
    CHECK(rep.mult.lower_bound == 30);
    CHECK(rep.mult.sandwich_closed);
    REQUIRE(rep.deg_S_predicted);
    CHECK(*rep.deg_S_predicted == 24);
    CHECK(mult_sum_line(c, GroupId::A2, {5, 1, 1}) == 30);
    // the line through [0:6:1] on the closure of S
    CHECK(mult_sum_line(c, GroupId::A2, {1, 1, -6}) == 32);
    CHECK(mult_sum_line(c, GroupId::A2, {1, -6, 1}) == 30);
    CHECK_THROWS_WITH_AS(predict_degree(c, GroupId::A2, 5), doctest::Contains("inconsistent n"), std::domain_error);
}

TEST_CASE("generic dense quartic") {
    auto c = curve(dense_curve(4, 11));
    const std::array<int, 4> per_point{0, 16, 12, 72};
    for (size_t gi = 0; gi < kAllGroups.size(); ++gi) {
        GroupId g = kAllGroups[gi];
        CAPTURE(to_string(g));
        auto rep = predict_degree(c, g, 1);
        CHECK(rep.mult_sum == 4 * per_point[gi]);
        CHECK(rep.mult.sandwich_closed);
        CHECK(*rep.deg_S_predicted == generic_degree(g, 4));
        CHECK(rep.affine_base_points_excluded);
        if (per_point[gi]) CHECK(rep.base_locus.at_infinity == 4);
    }
}

TEST_CASE("base locus of the Fermat cubic") {
    auto c = curve("x^3+y^3+1");
    DegreeOptions o;
    o.cancel_common = false;
    auto b = base_locus_on_curve(c, GroupId::PGL3, o);
    CHECK(b.affine == 0);
    CHECK(b.at_infinity == 3);
    CHECK(predict_degree(c, GroupId::PGL3, 54, o).deg_S_predicted == 4);
    CHECK(predict_degree(c, GroupId::A2, 18, o).deg_S_predicted == 2);
}

TEST_CASE("exceptional inputs are rejected") {
    CHECK_THROWS_AS(predict_degree(curve("x^2+y^2-1"), GroupId::A2), ExceptionalCurveError);
    CHECK_THROWS_AS(mult_min(curve("x+y"), GroupId::SE2), ExceptionalCurveError);
}
