#pragma once

#include "sigcurve/poly.hpp"
#include "sigcurve/theta.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigcurve {

enum class GroupId { SE2, SA2, A2, PGL3 };

std::string to_string(GroupId g);
GroupId parse_group(std::string_view s);  // throws std::invalid_argument
constexpr std::array<GroupId, 4> kAllGroups{GroupId::SE2, GroupId::SA2, GroupId::A2, GroupId::PGL3};

struct CurveInput {
    SparsePoly F;  // in xy_ring()
    int d = 0;
    bool irreducible_asserted = true;
};

// F is moved into xy_ring() by variable name; throws ContractError if zero, constant, or
// using other variables.
CurveInput make_curve(const SparsePoly& F, bool irreducible_asserted = true);

struct VerticalLineError : std::domain_error {
    VerticalLineError() : std::domain_error("vertical-line curve: F_y vanishes identically") {}
};

struct ExceptionalCurveError : std::domain_error {
    explicit ExceptionalCurveError(const std::string& reason) : std::domain_error("exceptional: " + reason) {}
};

// y^(n) restricted to the curve equals P[n-1] / F_y^(2n-1).
struct JetRestriction {
    CurveInput curve;
    SparsePoly Fx, Fy;
    std::vector<SparsePoly> P;
    const SparsePoly& p(int n) const { return P.at(n - 1); }
};

JetRestriction implicit_jet(const CurveInput& c, int n_max);
// P_n / F_y^(2n-1) reduced.
RatFunc jet_value(const JetRestriction& j, int n);

// Theta_i restricted to the curve is content * T / F_y^d_i.
struct ThetaRestriction {
    int i = 0;
    SparsePoly T;  // primitive
    Rat content = 1;
    int d_i = 0;
    int tau = 0;
    SparsePoly full() const { return content * T; }
    int degree() const { return T.total_degree(); }
};

ThetaRestriction theta(const JetRestriction& j, int i);
ThetaRestriction theta(const CurveInput& c, int i);

// Shape of the projective extension: component k is x0^x0_power * prod Theta_i^power.
struct SigFactor {
    int theta, power;
};
struct SigComponent {
    int x0_power;
    std::vector<SigFactor> factors;
};
const std::array<SigComponent, 3>& sigma_shape(GroupId g);
int max_theta(GroupId g);
// Weighted F_y degree of every component (common to all three).
int sigma_fy_weight(GroupId g);
// Degree of the uncancelled projective extension for a degree d curve.
int sigma_degree(GroupId g, int d);
const char* invariant_labels(GroupId g);

struct ClassifyingPair {
    GroupId group;
    RatFunc K1, K2;
    std::string labels;
};

struct HomogeneousTriple {
    GroupId group;
    std::array<SparsePoly, 3> sigma;  // in ring (x0, x1, x2)
    int degree = 0;
    SparsePoly removed;  // common factor divided out (1 if none)
};

RingPtr proj_ring();  // x0, x1, x2

struct ExceptionalVerdict {
    bool exceptional = false;
    std::string reason;
};

ExceptionalVerdict exceptional_check(const CurveInput& c, GroupId g);

ClassifyingPair classifying_pair(const CurveInput& c, GroupId g);
// K1, K2 at a point of the curve from the local expansion y(x + s); throws std::domain_error
// off the curve, PoleError where F_y or the denominator vanishes.
std::pair<Rat, Rat> invariants_at(const CurveInput& c, GroupId g, const Rat& x, const Rat& y);
HomogeneousTriple projective_extension(const CurveInput& c, GroupId g, bool cancel_common = false);
// From explicit restrictions (index i at position i-1, may be partial).
HomogeneousTriple projective_extension(const std::vector<ThetaRestriction>& T, int d, GroupId g,
                                       bool cancel_common);

using Mat3 = std::array<std::array<Rat, 3>, 3>;
Mat3 identity3();
Mat3 inverse(const Mat3& m);  // throws std::domain_error when singular
Mat3 operator*(const Mat3& a, const Mat3& b);
// Throws std::invalid_argument when m is not of the subgroup's shape.
void check_group_shape(const Mat3& m, GroupId g);
// Image curve {g p : p on C} = V(F o g^-1), normalized.
CurveInput apply_group_element(const CurveInput& c, const Mat3& m, GroupId g);
// Random element with small rational entries; rotations come from Pythagorean parameters.
Mat3 random_group_element(GroupId g, uint64_t seed);
// Image of an affine point (x, y) as an affine point; throws PoleError at infinity.
std::pair<Rat, Rat> apply_to_point(const Mat3& m, const Rat& x, const Rat& y);

// Content 1 and positive leading coefficient under grlex in the ring order.
SparsePoly normalize(const SparsePoly& p);

}  // namespace sigcurve
