#include "sigcurve/fermat.hpp"

#include "sigcurve/parse.hpp"

namespace sigcurve {

namespace {

const char* kProjective =
    "49392 (d-2)^4 d^3 (d+1)^4 (2d-1)^4 k2^4 + 602112 (d-2)^4 d^3 (d+1)^4 (2d-1)^4 k1 k2^2"
    " + 10584 (d-2)^3 d^2 (d+1)^3 (2d-1)^3 (10d^2-3d+3) (34d^2-27d+27) k2^3"
    " + 1835008 (d-2)^4 d^3 (d+1)^4 (2d-1)^4 k1^2"
    " - 9289728 (d-2)^3 d^2 (d+1)^3 (2d-1)^3 (d^2-d+1)^2 k1 k2"
    " + 61236 (d-2)^2 d (d+1)^2 (2d-1)^2 (d^2-d+1) (10d^2-3d+3)^2 (16d^2-9d+9) k2^2"
    " - 23328 (d-2)^2 d (d+1)^2 (2d-1)^2"
    "   (11792d^8-17376d^7+28152d^6-24424d^5+19473d^4-8940d^3+3358d^2-324d+81) k1"
    " + 118098 (d-2) (d+1) (2d-1) (d^2-d+1)^2 (10d^2-3d+3)^4 k2"
    " + 531441 d (d^2-d+1)^3 (10d^2-3d+3)^4";

const char* kAffine =
    "(d-3)^2 (d-2) d^2 (d+1) (2d-1)^3 k2^3 - (d-5)^3 d (2d-1)^2 k1^2"
    " + 3 (d-5) (d-2) d (d+1) (2d-1)^2 (5d-11) k1 k2"
    " + 6 (d-2)^2 d (d+1)^2 (2d-1)^2 (d^2-4d+6) k2^2"
    " + 2 (d-2)^2 (d+1)^2 (2d-1) (15d^2-10d+18) k1"
    " + 12 (d-2)^3 (d+1)^3 (2d-1) (d^2-2d+3) k2"
    " + 8 (d-2)^4 d (d+1)^4";

}  // namespace

CurveInput fermat_curve(int d) {
    if (d < 1) throw std::invalid_argument("Fermat degree must be positive");
    auto r = xy_ring();
    auto x = SparsePoly::variable(r, 0), y = SparsePoly::variable(r, 1);
    return make_curve(pow(x, unsigned(d)) + pow(y, unsigned(d)) + SparsePoly::constant(r, 1));
}

std::optional<SparsePoly> fermat_signature_closed_form(GroupId g, int d) {
    if (d < 3) return std::nullopt;
    const char* text = g == GroupId::PGL3 ? kProjective : g == GroupId::A2 ? kAffine : nullptr;
    if (!text) return std::nullopt;
    std::map<std::string, SparsePoly> bind{{"d", SparsePoly::constant(kappa_ring(), rat(d))}};
    return normalize(parse_poly(text, kappa_ring(), bind));
}

std::optional<int> fermat_signature_degree(GroupId g, int d) {
    if (d < 3) return std::nullopt;
    if (g == GroupId::PGL3) return 4;
    if (g == GroupId::A2) return d == 3 ? 2 : 3;
    return std::nullopt;
}

std::optional<int> fermat_symmetry_order(GroupId g, int d) {
    switch (g) {
        case GroupId::PGL3: return 6 * d * d;
        case GroupId::A2: return 2 * d * d;
        case GroupId::SE2: return d % 2 ? 1 : 4;
        default: return std::nullopt;
    }
}

}  // namespace sigcurve
