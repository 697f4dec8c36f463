#include "sigcurve/modp.hpp"

#include <mutex>
#include <stdexcept>

namespace sigcurve::modp {

u64 pow(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv(u64 a, u64 p) {
    if (a % p == 0) throw std::domain_error("modular inverse of zero");
    return pow(a, p - 2, p);
}

u64 reduce(const Int& z, u64 p) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

std::optional<u64> reduce(const Rat& r, u64 p) {
    u64 d = reduce(r.get_den(), p);
    if (d == 0) return std::nullopt;
    return mul(reduce(r.get_num(), p), inv(d, p), p);
}

u64 prime(size_t i) {
    static std::vector<u64> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    Int c = cache.empty() ? Int((Int(1) << 62) - 1) : Int(cache.back() - 2);
    while (cache.size() <= i) {
        if (mpz_even_p(c.get_mpz_t())) c -= 1;
        while (!mpz_probab_prime_p(c.get_mpz_t(), 30)) c -= 2;
        cache.push_back(c.get_ui());
        c -= 2;
    }
    return cache[i];
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return int(a.size()) - 1; }

Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u128> acc(a.size() + b.size() - 1, 0);
    Poly out(a.size() + b.size() - 1);
    // Accumulate a few products before reducing to stay inside 128 bits.
    for (size_t k = 0; k < out.size(); ++k) {
        size_t lo = k >= b.size() - 1 ? k - (b.size() - 1) : 0, hi = std::min(k, a.size() - 1);
        u128 s = 0;
        int cnt = 0;
        for (size_t i = lo; i <= hi; ++i) {
            s += u128(a[i]) * b[k - i];
            if (++cnt == 8) {
                s %= p;
                cnt = 0;
            }
        }
        out[k] = u64(s % p);
    }
    trim(out);
    return out;
}

Poly add(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = modp::add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = modp::sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
    trim(r);
    return r;
}

Poly scale(const Poly& a, u64 c, u64 p) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c, p);
    trim(r);
    return r;
}

void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r, u64 p) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    u64 il = inv(b.back(), p);
    while (r.size() >= b.size()) {
        size_t s = r.size() - b.size();
        u64 f = mul(r.back(), il, p);
        q[s] = f;
        for (size_t i = 0; i < b.size(); ++i) r[s + i] = modp::sub(r[s + i], mul(f, b[i], p), p);
        trim(r);
    }
}

Poly gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly q, r;
        divrem(a, b, q, r, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = scale(a, inv(a.back(), p), p);
    return a;
}

u64 eval(const Poly& a, u64 x, u64 p) {
    u64 s = 0;
    for (size_t i = a.size(); i-- > 0;) s = modp::add(mul(s, x, p), a[i], p);
    return s;
}

Poly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
    size_t n = xs.size();
    // Newton divided differences.
    std::vector<u64> c(ys), den(n), pre(n);
    for (size_t j = 1; j < n; ++j) {
        // Batch inversion of xs[i] - xs[i-j].
        u64 acc = 1;
        for (size_t i = j; i < n; ++i) {
            den[i] = modp::sub(xs[i], xs[i - j], p);
            pre[i] = acc;
            acc = mul(acc, den[i], p);
        }
        u64 ia = inv(acc, p);
        for (size_t i = n - 1; i >= j; --i) {
            u64 di = mul(ia, pre[i], p);
            ia = mul(ia, den[i], p);
            c[i] = mul(modp::sub(c[i], c[i - 1], p), di, p);
            if (i == j) break;
        }
    }
    Poly r{c[n - 1]};
    for (size_t k = n - 1; k-- > 0;) {
        // r = r*(x - xs[k]) + c[k]
        Poly nr(r.size() + 1, 0);
        for (size_t i = 0; i < r.size(); ++i) {
            nr[i + 1] = modp::add(nr[i + 1], r[i], p);
            nr[i] = modp::sub(nr[i], mul(r[i], xs[k], p), p);
        }
        nr[0] = modp::add(nr[0], c[k], p);
        r = std::move(nr);
    }
    trim(r);
    return r;
}

u64 det(std::vector<u64> m, size_t n, u64 p) {
    u64 d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[c * n + j]);
            d = modp::sub(0, d, p);
        }
        d = mul(d, m[c * n + c], p);
        u64 iv = inv(m[c * n + c], p);
        for (size_t i = c + 1; i < n; ++i) {
            u64 f = mul(m[i * n + c], iv, p);
            if (!f) continue;
            for (size_t j = c; j < n; ++j) m[i * n + j] = modp::sub(m[i * n + j], mul(f, m[c * n + j], p), p);
        }
    }
    return d;
}

std::optional<Rat> rat_reconstruct(const Int& a, const Int& m) {
    Int bound;
    mpz_fdiv_q_ui(bound.get_mpz_t(), m.get_mpz_t(), 2);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
    Int r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    Int t0 = 0, t1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rat q(r1, t1);
    q.canonicalize();
    return q;
}

}  // namespace sigcurve::modp
