#pragma once
#include "doctest.h"
#include "sigcurve/poly.hpp"

namespace doctest {
template <>
struct StringMaker<sigcurve::SparsePoly> {
    static String convert(const sigcurve::SparsePoly& p) { return sigcurve::to_string(p).c_str(); }
};
template <>
struct StringMaker<sigcurve::Rat> {
    static String convert(const sigcurve::Rat& r) { return sigcurve::to_string(r).c_str(); }
};
}  // namespace doctest
