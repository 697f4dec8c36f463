#pragma once

#include "sigcurve/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sigcurve {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error(msg + " at line " + std::to_string(l) + ", column " + std::to_string(c)),
          line(l),
          column(c) {}
};

// Identifiers resolve first to bindings, then to ring variables; anything else is an error.
SparsePoly parse_poly(std::string_view text, const RingPtr& ring,
                      const std::map<std::string, SparsePoly>& bindings = {});

// Curve input: ring (x, y) only.
RingPtr xy_ring();
SparsePoly parse_curve(std::string_view text);

}  // namespace sigcurve
