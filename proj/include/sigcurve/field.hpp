#pragma once

#include "sigcurve/modp.hpp"
#include "sigcurve/rat.hpp"

#include <stdexcept>
#include <vector>

namespace sigcurve {

// Coefficient fields used by the dense templates below.
struct QField {
    using E = Rat;
    E zero() const { return 0; }
    E one() const { return 1; }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E neg(const E& a) const { return -a; }
    E mul(const E& a, const E& b) const { return a * b; }
    E inv(const E& a) const {
        if (sgn(a) == 0) throw std::domain_error("division by zero");
        return 1 / a;
    }
    bool is_zero(const E& a) const { return sgn(a) == 0; }
    E from_rat(const Rat& r) const { return r; }
    E from_int(long v) const { return E(v); }
};

struct FpField {
    modp::u64 p = 0;
    using E = modp::u64;
    E zero() const { return 0; }
    E one() const { return 1; }
    E add(E a, E b) const { return modp::add(a, b, p); }
    E sub(E a, E b) const { return modp::sub(a, b, p); }
    E neg(E a) const { return a ? p - a : 0; }
    E mul(E a, E b) const { return modp::mul(a, b, p); }
    E inv(E a) const {
        if (!a) throw std::domain_error("division by zero mod p");
        return modp::inv(a, p);
    }
    bool is_zero(E a) const { return a == 0; }
    E from_rat(const Rat& r) const {
        auto v = modp::reduce(r, p);
        if (!v) throw std::domain_error("denominator vanishes mod p");
        return *v;
    }
    E from_int(long v) const { return v >= 0 ? E(v) % p : neg(E(-v) % p); }
};

// Dense univariate polynomials over K, low degree first, no trailing zeros.
namespace dense {

template <class K>
using Poly = std::vector<typename K::E>;

template <class K>
void trim(const K& k, Poly<K>& a) {
    while (!a.empty() && k.is_zero(a.back())) a.pop_back();
}

template <class K>
int deg(const Poly<K>& a) {
    return int(a.size()) - 1;
}

template <class K>
Poly<K> add(const K& k, const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r(std::max(a.size(), b.size()), k.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
    trim(k, r);
    return r;
}

template <class K>
Poly<K> sub(const K& k, const Poly<K>& a, const Poly<K>& b) {
    Poly<K> r(std::max(a.size(), b.size()), k.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = k.sub(r[i], b[i]);
    trim(k, r);
    return r;
}

template <class K>
Poly<K> scale(const K& k, const Poly<K>& a, const typename K::E& c) {
    if (k.is_zero(c)) return {};
    Poly<K> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], c);
    trim(k, r);
    return r;
}

template <class K>
Poly<K> mul(const K& k, const Poly<K>& a, const Poly<K>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<K> r(a.size() + b.size() - 1, k.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (k.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    }
    trim(k, r);
    return r;
}

template <class K>
void divrem(const K& k, const Poly<K>& a, const Poly<K>& b, Poly<K>& q, Poly<K>& r) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    trim(k, r);
    int db = deg<K>(b);
    if (deg<K>(r) < db) {
        q.clear();
        return;
    }
    q.assign(r.size() - b.size() + 1, k.zero());
    auto il = k.inv(b.back());
    for (int i = deg<K>(r); i >= db; --i) {
        if (k.is_zero(r[i])) continue;
        auto c = k.mul(r[i], il);
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] = k.sub(r[i - db + j], k.mul(c, b[j]));
    }
    trim(k, r);
    trim(k, q);
}

template <class K>
Poly<K> rem(const K& k, const Poly<K>& a, const Poly<K>& b) {
    Poly<K> q, r;
    divrem(k, a, b, q, r);
    return r;
}

template <class K>
Poly<K> monic(const K& k, const Poly<K>& a) {
    if (a.empty()) return a;
    return scale(k, a, k.inv(a.back()));
}

// g = s*a + t*b with g monic.
template <class K>
Poly<K> gcdext(const K& k, Poly<K> a, Poly<K> b, Poly<K>& s, Poly<K>& t) {
    Poly<K> s0{k.one()}, s1, t0, t1{k.one()};
    trim(k, a);
    trim(k, b);
    while (!b.empty()) {
        Poly<K> q, r;
        divrem(k, a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        auto s2 = sub(k, s0, mul(k, q, s1));
        auto t2 = sub(k, t0, mul(k, q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.empty()) {
        s = s0;
        t = t0;
        return a;
    }
    auto il = k.inv(a.back());
    s = scale(k, s0, il);
    t = scale(k, t0, il);
    return scale(k, a, il);
}

template <class K>
typename K::E eval(const K& k, const Poly<K>& a, const typename K::E& x) {
    typename K::E r = k.zero();
    for (size_t i = a.size(); i-- > 0;) r = k.add(k.mul(r, x), a[i]);
    return r;
}

template <class K>
Poly<K> derivative(const K& k, const Poly<K>& a) {
    if (a.size() <= 1) return {};
    Poly<K> r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = k.mul(a[i], k.from_int(long(i)));
    trim(k, r);
    return r;
}

}  // namespace dense

// K[y]/(m) with m monic of degree >= 1.
template <class K>
class Quotient {
public:
    using E = typename K::E;
    using Elem = dense::Poly<K>;

    Quotient(K k, Elem m) : k_(std::move(k)), m_(dense::monic(k_, m)) {
        if (m_.size() < 2) throw std::invalid_argument("quotient by a constant");
    }
    const K& field() const { return k_; }
    const Elem& modulus() const { return m_; }
    int degree() const { return int(m_.size()) - 1; }

    Elem reduce(const Elem& a) const {
        if (int(a.size()) <= degree()) return a;
        return dense::rem(k_, a, m_);
    }
    Elem constant(const E& c) const {
        Elem r{c};
        dense::trim(k_, r);
        return r;
    }
    Elem zero() const { return {}; }
    Elem one() const { return constant(k_.one()); }
    Elem from_rat(const Rat& r) const { return constant(k_.from_rat(r)); }
    Elem gen() const { return reduce(Elem{k_.zero(), k_.one()}); }
    Elem add(const Elem& a, const Elem& b) const { return dense::add(k_, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return dense::sub(k_, a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(dense::mul(k_, a, b)); }
    Elem scale(const Elem& a, const E& c) const { return dense::scale(k_, a, c); }
    Elem pow(Elem a, unsigned e) const {
        Elem r = constant(k_.one());
        while (e) {
            if (e & 1) r = mul(r, a);
            e >>= 1;
            if (e) a = mul(a, a);
        }
        return r;
    }
    // Throws std::domain_error when a is a zero divisor.
    Elem inv(const Elem& a) const {
        Elem s, t;
        auto g = dense::gcdext(k_, a, m_, s, t);
        if (g.size() != 1) throw std::domain_error("not a unit in the fiber algebra");
        return reduce(s);
    }
    bool is_unit(const Elem& a) const {
        Elem s, t;
        return dense::gcdext(k_, a, m_, s, t).size() == 1;
    }
    // Determinant of multiplication by a (the norm).
    E norm(const Elem& a) const;

private:
    K k_;
    Elem m_;
};

// Determinant of an n x n matrix over K (row-major), Gaussian elimination.
template <class K>
typename K::E det(const K& k, std::vector<typename K::E> m, size_t n) {
    typename K::E d = k.one();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t r = c; r < n; ++r)
            if (!k.is_zero(m[r * n + c])) {
                piv = r;
                break;
            }
        if (piv == n) return k.zero();
        if (piv != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
            d = k.neg(d);
        }
        d = k.mul(d, m[c * n + c]);
        auto ip = k.inv(m[c * n + c]);
        for (size_t r = c + 1; r < n; ++r) {
            if (k.is_zero(m[r * n + c])) continue;
            auto f = k.mul(m[r * n + c], ip);
            for (size_t j = c; j < n; ++j) m[r * n + j] = k.sub(m[r * n + j], k.mul(f, m[c * n + j]));
        }
    }
    return d;
}

template <class K>
typename K::E Quotient<K>::norm(const Elem& a) const {
    size_t n = size_t(degree());
    std::vector<E> m(n * n, k_.zero());
    Elem col = reduce(a);
    Elem y = gen();
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < col.size(); ++i) m[i * n + j] = col[i];
        if (j + 1 < n) col = mul(col, y);
    }
    return det(k_, std::move(m), n);
}

}  // namespace sigcurve
