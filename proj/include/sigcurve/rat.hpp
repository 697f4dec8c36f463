#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sigcurve {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Parses "p" or "p/q".
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }

// lcm of denominators and gcd of numerators over a span.
Int lcm_den(const std::vector<Rat>& v);
Int gcd_num(const std::vector<Rat>& v);

Rat pow(const Rat& a, unsigned e);
Int binom(unsigned n, unsigned k);

}  // namespace sigcurve
