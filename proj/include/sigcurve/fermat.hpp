#pragma once

#include "sigcurve/elimination.hpp"

#include <optional>

namespace sigcurve {

// x^d + y^d + 1.
CurveInput fermat_curve(int d);

// Closed-form signature polynomial in kappa_ring(), normalized; PGL3 and A2 only, d >= 3.
std::optional<SparsePoly> fermat_signature_closed_form(GroupId g, int d);
// Degree of the closed form: 4 (PGL3); 2 at d = 3 and 3 otherwise (A2).
std::optional<int> fermat_signature_degree(GroupId g, int d);
// |Sym(X_d, G)|: 6d^2, 2d^2, and 1 or 4 for SE2 by parity; nothing stated for SA2.
std::optional<int> fermat_symmetry_order(GroupId g, int d);

}  // namespace sigcurve
