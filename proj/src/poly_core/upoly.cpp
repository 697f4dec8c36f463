#include "sigcurve/upoly.hpp"

#include "sigcurve/kernels.hpp"
#include "sigcurve/modp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace sigcurve {

void UPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::monomial(int k, const Rat& a) {
    std::vector<Rat> c(k + 1);
    c[k] = a;
    return UPoly(std::move(c));
}

UPoly UPoly::from_sparse(const SparsePoly& p, int var) {
    std::vector<Rat> c(std::max(0, p.degree_in(var) + 1));
    for (const auto& [m, a] : p.terms()) {
        for (int v = 0; v < p.ring()->size(); ++v)
            if (v != var && m.e[v]) throw ContractError("UPoly::from_sparse: extra variable");
        c[m.e[var]] = a;
    }
    return UPoly(std::move(c));
}

SparsePoly UPoly::to_sparse(const RingPtr& r, int var) const {
    std::vector<SparsePoly::Term> t;
    for (int i = 0; i <= deg(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        Mono m;
        m.e[var] = uint16_t(i);
        t.push_back({m, c_[i]});
    }
    return SparsePoly::from_terms(r, std::move(t));
}

int UPoly::ord() const {
    for (int i = 0; i < int(c_.size()); ++i)
        if (sgn(c_[i]) != 0) return i;
    return -1;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] += c_[i];
        if (i < o.c_.size()) c[i] += o.c_[i];
    }
    return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    return UPoly(kernels::convolve(c_, o.c_, c_.size() + o.c_.size() - 1));
}

UPoly UPoly::operator*(const Rat& a) const {
    UPoly r = *this;
    for (auto& x : r.c_) x *= a;
    r.trim();
    return r;
}

Rat UPoly::eval(const Rat& x) const {
    Rat s = 0;
    for (int i = deg(); i >= 0; --i) s = s * x + c_[i];
    return s;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * int(i);
    return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / lead());
}

UPoly UPoly::primitive() const {
    if (is_zero()) return *this;
    Int l = lcm_den(c_), g = 0;
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        c[i] = c_[i] * l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[i].get_num_mpz_t());
    }
    if (sgn(c.back()) < 0) g = -g;
    for (auto& x : c) x /= g;
    return UPoly(std::move(c));
}

UPoly UPoly::shift(const Rat& a) const {
    // Horner: p(t + a)
    UPoly r;
    UPoly lin(std::vector<Rat>{a, Rat(1)});
    for (int i = deg(); i >= 0; --i) r = r * lin + UPoly::constant(c_[i]);
    return r;
}

void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw ContractError("UPoly division by zero");
    std::vector<Rat> rc = a.coeffs();
    int db = b.deg();
    std::vector<Rat> qc(std::max(0, a.deg() - db + 1));
    Rat il = 1 / b.lead();
    for (int k = a.deg(); k >= db; --k) {
        if (sgn(rc[k]) == 0) continue;
        Rat f = rc[k] * il;
        for (int i = 0; i <= db; ++i) rc[k - db + i] -= f * b[i];
        qc[k - db] = f;
    }
    rc.resize(std::max(0, std::min<int>(int(rc.size()), db)));
    q = UPoly(std::move(qc));
    r = UPoly(std::move(rc));
}

UPoly divide_exact(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divrem(a, b, q, r);
    if (!r.is_zero()) throw ContractError("UPoly: inexact division");
    return q;
}

namespace {

UPoly gcd_euclid(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divrem(a, b, q, r);
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive();
    }
    return a.monic();
}

std::vector<Int> int_coeffs(const UPoly& p) {
    std::vector<Int> out;
    for (const auto& c : p.coeffs()) out.push_back(c.get_num());
    return out;
}

bool divides(const UPoly& g, const UPoly& a) {
    UPoly q, r;
    divrem(a, g, q, r);
    return r.is_zero();
}

// Brown-style modular gcd of primitive integer polynomials.
UPoly gcd_modular(const UPoly& a0, const UPoly& b0) {
    UPoly a = a0.primitive(), b = b0.primitive();
    std::vector<Int> ia = int_coeffs(a), ib = int_coeffs(b);
    Int glc;
    mpz_gcd(glc.get_mpz_t(), ia.back().get_mpz_t(), ib.back().get_mpz_t());
    int best = std::min(a.deg(), b.deg()) + 1;
    std::vector<Int> acc;
    Int mod = 1;
    for (size_t pi = 0; pi < 400; ++pi) {
        modp::u64 p = modp::prime(pi);
        if (modp::reduce(ia.back(), p) == 0 || modp::reduce(ib.back(), p) == 0) continue;
        modp::Poly pa(ia.size()), pb(ib.size());
        for (size_t i = 0; i < ia.size(); ++i) pa[i] = modp::reduce(ia[i], p);
        for (size_t i = 0; i < ib.size(); ++i) pb[i] = modp::reduce(ib[i], p);
        modp::Poly g = modp::gcd(pa, pb, p);
        int dg = modp::deg(g);
        if (dg == 0) return UPoly::constant(1);
        if (dg > best) continue;
        g = modp::scale(g, modp::reduce(glc, p), p);
        if (dg < best) {
            best = dg;
            acc.assign(g.size(), Int(0));
            for (size_t i = 0; i < g.size(); ++i) acc[i] = g[i];
            mod = p;
        } else {
            // CRT
            Int pz = Int(std::to_string(p));
            Int inv;
            mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), pz.get_mpz_t());
            for (size_t i = 0; i < g.size(); ++i) {
                Int ai = acc[i] % pz;
                if (ai < 0) ai += pz;
                Int diff = (Int(std::to_string(g[i])) - ai) % pz;
                if (diff < 0) diff += pz;
                Int t = (diff * inv) % pz;
                acc[i] += mod * t;
            }
            mod *= pz;
        }
        Int half = mod / 2;
        std::vector<Rat> c(acc.size());
        for (size_t i = 0; i < acc.size(); ++i) {
            Int v = acc[i] % mod;
            if (v < 0) v += mod;
            if (v > half) v -= mod;
            c[i] = v;
        }
        UPoly cand = UPoly(c).primitive();
        if (cand.deg() == best && divides(cand, a) && divides(cand, b)) return cand.monic();
    }
    return gcd_euclid(a, b);
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.deg() == 0 || b.deg() == 0) return UPoly::constant(1);
    if (std::min(a.deg(), b.deg()) <= 8) return gcd_euclid(a.primitive(), b.primitive());
    return gcd_modular(a, b);
}

UPoly square_free(const UPoly& a) {
    if (a.deg() <= 0) return UPoly::constant(1);
    UPoly g = gcd(a, a.derivative());
    return divide_exact(a, g).monic();
}

UPoly pow(const UPoly& a, unsigned e) {
    UPoly r = UPoly::constant(1), b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

int root_order_sum(const UPoly& p0, const UPoly& s) {
    if (p0.is_zero()) throw ContractError("root_order_sum of zero polynomial");
    UPoly p = p0;
    int count = 0;
    for (;;) {
        UPoly g = gcd(p, s);
        if (g.deg() <= 0) return count;
        count += g.deg();
        p = divide_exact(p, g);
    }
}

std::vector<Rat> rational_roots(const UPoly& p0) {
    std::vector<Rat> out;
    if (p0.deg() <= 0) return out;
    UPoly p = square_free(p0);
    if (p.ord() > 0) {
        out.push_back(Rat(0));
        std::vector<Rat> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = UPoly(c);
    }
    // Linear factors peeled exactly; remaining roots located numerically and verified.
    int n = p.deg();
    if (n <= 0) return out;
    UPoly ip = p.primitive();
    std::vector<std::complex<long double>> z(n);
    std::vector<long double> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = (long double)Rat(ip[i] / ip.lead()).get_d();
    for (int i = 0; i < n; ++i) z[i] = std::polar<long double>(1.0L + 0.1L * i / n, 2.0L * M_PI * i / n + 0.4L);
    for (int it = 0; it < 2000; ++it) {
        long double moved = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<long double> num = 0;
            for (int k = n; k >= 0; --k) num = num * z[i] + c[k];
            std::complex<long double> den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= (z[i] - z[j]);
            std::complex<long double> d = num / den;
            z[i] -= d;
            moved = std::max(moved, std::abs(d));
        }
        if (moved < 1e-30L) break;
    }
    Int lc = ip.lead().get_num();
    for (auto& r : z) {
        if (std::abs(r.imag()) > 1e-6L * (1 + std::abs(r.real()))) continue;
        // Try denominators that divide the leading coefficient, small ones first.
        for (long den = 1; den <= 100000; ++den) {
            if (!mpz_divisible_ui_p(lc.get_mpz_t(), den)) continue;
            long double nv = r.real() * den;
            long double rn = std::round(nv);
            if (std::abs(nv - rn) > 1e-6L * (1 + std::abs(nv))) continue;
            Rat cand(Int(std::to_string((long long)rn)), Int(den));
            cand.canonicalize();
            if (sgn(ip.eval(cand)) == 0 && std::find(out.begin(), out.end(), cand) == out.end()) {
                out.push_back(cand);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

UPoly det(std::vector<std::vector<UPoly>> m) {
    size_t n = m.size();
    if (n == 0) return UPoly::constant(1);
    UPoly prev = UPoly::constant(1);
    bool neg = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return {};
            std::swap(m[k], m[piv]);
            neg = !neg;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return neg ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace sigcurve
