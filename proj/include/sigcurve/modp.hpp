#pragma once

#include "sigcurve/rat.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sigcurve::modp {

using u64 = uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }
inline u64 add(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);

// Reduction of a rational; nullopt when p divides the denominator.
std::optional<u64> reduce(const Rat& r, u64 p);
u64 reduce(const Int& z, u64 p);

// Large primes below 2^62, descending.
u64 prime(size_t i);

// Dense polynomials over F_p, low degree first, trimmed.
using Poly = std::vector<u64>;
void trim(Poly& a);
int deg(const Poly& a);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 c, u64 p);
void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r, u64 p);
Poly gcd(Poly a, Poly b, u64 p);  // monic
u64 eval(const Poly& a, u64 x, u64 p);
// Interpolation through (xs[i], ys[i]) with distinct xs.
Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p);
u64 det(std::vector<u64> m, size_t n, u64 p);

// Rational reconstruction of a mod m with |num|, den <= sqrt(m/2).
std::optional<Rat> rat_reconstruct(const Int& a, const Int& m);

}  // namespace sigcurve::modp
