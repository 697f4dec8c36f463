#pragma once

#include "sigcurve/poly.hpp"

#include <vector>

namespace sigcurve {

constexpr int kThetaCount = 8;

// Ring u1..u8 of jet coordinates y', y'', ...
RingPtr jet_ring();

// Theta_i as a polynomial in u1..u8, i = 1..8.
const SparsePoly& theta_poly(int i);

// F_y exponent of the restriction T_i / F_y^{d_i}.
int theta_d(int i);
// Largest jet weight sum (2k-1) m_k over the monomials of Theta_i.
int theta_e(int i);
// Isobaric weight when u_k has weight k-1.
int theta_w(int i);
// Degree bound of T_i for a curve of degree d.
inline int theta_tau(int i, int d) { return (d - 1) * theta_d(i) - theta_w(i); }

// Evaluates p (over u1..u8 or any ring) at vals inside an algebra A providing
// one(), from_rat(Rat), add, mul.
template <class A>
typename A::Elem eval_in(const A& alg, const SparsePoly& p, const std::vector<typename A::Elem>& vals) {
    using Elem = typename A::Elem;
    int n = p.ring()->size();
    std::vector<std::vector<Elem>> powers(n);
    for (int v = 0; v < n; ++v) powers[v].push_back(alg.one());
    auto power = [&](int v, int e) -> const Elem& {
        auto& pv = powers[v];
        while (int(pv.size()) <= e) pv.push_back(alg.mul(pv.back(), vals[v]));
        return pv[e];
    };
    Elem acc = alg.zero();
    for (const auto& [m, c] : p.terms()) {
        Elem t = alg.from_rat(c);
        for (int v = 0; v < n; ++v)
            if (m.e[v]) t = alg.mul(t, power(v, m.e[v]));
        acc = alg.add(acc, t);
    }
    return acc;
}

}  // namespace sigcurve
