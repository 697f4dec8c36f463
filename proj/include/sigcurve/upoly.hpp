#pragma once

#include "sigcurve/poly.hpp"

#include <vector>

namespace sigcurve {

// Dense univariate polynomial over Q, coefficient i belongs to t^i.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
    static UPoly constant(const Rat& a) { return UPoly(std::vector<Rat>{a}); }
    static UPoly monomial(int k, const Rat& a = 1);
    static UPoly from_sparse(const SparsePoly& p, int var);  // p must only use var
    SparsePoly to_sparse(const RingPtr& r, int var) const;

    int deg() const { return int(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat operator[](int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : Rat(0); }
    const Rat& lead() const { return c_.back(); }
    int ord() const;  // multiplicity of the root 0, -1 for zero

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rat& a) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;
    UPoly derivative() const;
    UPoly monic() const;
    // Integer coefficients, gcd 1, positive lead.
    UPoly primitive() const;
    UPoly shift(const Rat& a) const;  // p(t + a)

private:
    std::vector<Rat> c_;
    void trim();
};

void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly divide_exact(const UPoly& a, const UPoly& b);  // throws on remainder
UPoly gcd(const UPoly& a, const UPoly& b);            // monic, modular with verification
UPoly square_free(const UPoly& a);                    // monic
UPoly pow(const UPoly& a, unsigned e);
// Multiplicity of every root of s inside p, summed: sum over roots r of s of ord_r(p).
int root_order_sum(const UPoly& p, const UPoly& s);
std::vector<Rat> rational_roots(const UPoly& p);
// Determinant of an n x n matrix over Q[t] (fraction-free).
UPoly det(std::vector<std::vector<UPoly>> m);

}  // namespace sigcurve
