#include "sigcurve/elimination.hpp"

#include "sigcurve/fiber.hpp"
#include "sigcurve/kernels.hpp"
#include "sigcurve/modp.hpp"
#include "sigcurve/parse.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

namespace sigcurve {

RingPtr kappa_ring() {
    static RingPtr r = make_ring({"k1", "k2"});
    return r;
}

SparsePoly signature_by_groebner(const CurveInput& c, GroupId g, const Budget& budget) {
    auto cp = classifying_pair(c, g);
    RingPtr R = make_ring({"t", "x", "y", "k1", "k2"});
    auto up = [&](const SparsePoly& p) { return change_ring(p, R); };
    SparsePoly t = SparsePoly::variable(R, "t");
    SparsePoly k1 = SparsePoly::variable(R, "k1");
    SparsePoly k2 = SparsePoly::variable(R, "k2");
    SparsePoly A = up(cp.K1.num()), B = up(cp.K1.den());
    SparsePoly C = up(cp.K2.num()), D = up(cp.K2.den());
    std::vector<SparsePoly> gens{up(c.F), B * k1 - A, D * k2 - C,
                                 SparsePoly::constant(R, 1) - t * B * D};
    auto elim = groebner_eliminate_blocks(gens, {{"t"}, {"x", "y"}, {"k1", "k2"}}, budget);
    if (elim.empty()) throw std::runtime_error("elimination ideal is zero");
    SparsePoly S = change_ring(elim.front(), kappa_ring());
    for (size_t i = 1; i < elim.size(); ++i) S = gcd(S, change_ring(elim[i], kappa_ring()));
    return normalize(S);
}

namespace {

using modp::u64;

// Monomials k1^a k2^b of degree <= D, grlex descending.
std::vector<std::pair<int, int>> rel_monos(int D) {
    std::vector<std::pair<int, int>> out;
    for (int t = D; t >= 0; --t)
        for (int a = t; a >= 0; --a) out.emplace_back(a, t - a);
    return out;
}

size_t triangle_root(size_t dim) {
    for (size_t m = 0;; ++m) {
        size_t t = (m + 1) * (m + 2) / 2;
        if (t == dim) return m;
        if (t > dim) return SIZE_MAX;
    }
}

// Kernel of the degree-D relation system mod p, one vector per free column.  Fibers are
// added until several in a row leave the rank unchanged.
std::vector<std::vector<u64>> relation_kernel(const JetRestriction& j, GroupId g, int D, u64 p,
                                              std::mt19937_64& rng) {
    FpField k{p};
    FiberEvaluator<FpField> ev(k, j);
    auto monos = rel_monos(D);
    size_t N = monos.size();
    int d = j.curve.F.degree_in(1);
    std::uniform_int_distribution<u64> pick(1, p - 1);
    int misses = 0;
    auto fiber_rows = [&]() {
        for (;;) {
            auto pt = ev.at(pick(rng));
            if (!pt) {
                if (++misses > 1000) throw std::runtime_error("no etale fibers mod p");
                continue;
            }
            auto s = ev.sigma(*pt, g);
            const auto& A = pt->A;
            std::vector<dense::Poly<FpField>> p0{A.one()}, p1{A.one()}, p2{A.one()};
            for (int e = 1; e <= D; ++e) {
                p0.push_back(A.mul(p0.back(), s[0]));
                p1.push_back(A.mul(p1.back(), s[1]));
                p2.push_back(A.mul(p2.back(), s[2]));
            }
            std::vector<u64> block(size_t(d) * N, 0);
            for (size_t col = 0; col < N; ++col) {
                auto [a, b] = monos[col];
                auto v = A.mul(A.mul(p1[a], p2[b]), p0[D - a - b]);
                for (size_t r = 0; r < v.size(); ++r) block[r * N + col] = v[r];
            }
            return block;
        }
    };
    kernels::RrefMod rr(N, p);
    std::vector<u64> M;
    size_t rows = 0;
    while (rows < N + 6) {
        auto b = fiber_rows();
        M.insert(M.end(), b.begin(), b.end());
        rows += size_t(d);
    }
    rr.load(std::move(M), rows);
    for (int quiet = 0; quiet < 6 && rr.rank() < N;) {
        auto b = fiber_rows();
        bool grew = false;
        for (int r = 0; r < d; ++r)
            grew |= rr.add_row(std::vector<u64>(b.begin() + long(size_t(r) * N), b.begin() + long(size_t(r + 1) * N)));
        quiet = grew ? 0 : quiet + 1;
    }
    return rr.kernel();
}

}  // namespace

size_t relation_kernel_dim(const CurveInput& c, GroupId g, int D, uint64_t p, uint64_t seed) {
    auto j = implicit_jet(c, max_theta(g));
    std::mt19937_64 rng(seed);
    return relation_kernel(j, g, D, p, rng).size();
}

bool vanishes_on_signature_mod(const CurveInput& c, GroupId g, const SparsePoly& S, int primes, uint64_t seed) {
    auto j = implicit_jet(c, max_theta(g));
    SparsePoly Sk = change_ring(S, kappa_ring());
    int D = Sk.total_degree();
    int d = c.F.degree_in(1);
    long fibers = long(c.F.total_degree()) * D * sigma_degree(g, c.d) + 1;
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    int done = 0;
    for (size_t pi = 200; done < primes && pi < 400; ++pi) {
        u64 q = modp::prime(pi + size_t(rng() % 64));
        FpField k{q};
        std::vector<std::pair<Mono, u64>> terms;
        try {
            for (const auto& [m, co] : Sk.terms()) terms.emplace_back(m, k.from_rat(co));
        } catch (const std::domain_error&) {
            continue;
        }
        if (terms.empty() || terms.front().second == 0) continue;
        std::optional<FiberEvaluator<FpField>> ev;
        try {
            ev.emplace(k, j);
        } catch (const std::domain_error&) {
            continue;
        }
        long good = 0;
        for (u64 x0 = 0; good < fibers; ++x0) {
            auto pt = ev->at(x0);
            if (!pt) continue;
            auto s = ev->sigma(*pt, g);
            const auto& A = pt->A;
            std::vector<dense::Poly<FpField>> p0{A.one()}, p1{A.one()}, p2{A.one()};
            for (int e = 1; e <= D; ++e) {
                p0.push_back(A.mul(p0.back(), s[0]));
                p1.push_back(A.mul(p1.back(), s[1]));
                p2.push_back(A.mul(p2.back(), s[2]));
            }
            dense::Poly<FpField> acc;
            for (const auto& [m, co] : terms) {
                int a = m.e[0], b = m.e[1];
                acc = A.add(acc, A.scale(A.mul(A.mul(p1[a], p2[b]), p0[D - a - b]), co));
            }
            if (!acc.empty()) return false;
            ++good;
        }
        (void)d;
        ++done;
    }
    return done == primes;
}

FitResult signature_by_fitting(const CurveInput& c, GroupId g, int max_degree, uint64_t seed, int degree_hint) {
    auto j = implicit_jet(c, max_theta(g));
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);
    size_t pidx = 0;
    auto next_kernel = [&](int D, u64& p) {
        for (;;) {
            p = modp::prime(pidx++);
            try {
                return relation_kernel(j, g, D, p, rng);
            } catch (const std::domain_error&) {
            }
        }
    };

    std::vector<int> ladder;
    if (degree_hint > 0 && degree_hint <= max_degree) ladder.push_back(degree_hint);
    for (int D : {1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64, 96, 128, 192, 256})
        if (D <= max_degree && (ladder.empty() || D > ladder.back())) ladder.push_back(D);
    if (ladder.back() < max_degree) ladder.push_back(max_degree);

    int s = -1;
    u64 p = 0;
    for (int D : ladder) {
        size_t dim = next_kernel(D, p).size();
        if (dim == 0) continue;
        size_t m = triangle_root(dim);
        if (m == SIZE_MAX || int(m) > D)
            throw std::runtime_error("relation space of dimension " + std::to_string(dim) + " at degree " +
                                     std::to_string(D) + " is not generated by one polynomial");
        s = D - int(m);
        break;
    }
    if (s < 0)
        throw BudgetExceeded("no relation between the invariants up to degree " + std::to_string(max_degree));
    if (s == 0) throw std::runtime_error("invariants satisfy a constant relation");

    u64 pmin = 0;
    if (!next_kernel(s - 1, pmin).empty())
        throw std::runtime_error("relation of degree below " + std::to_string(s) + " after all");

    auto monos = rel_monos(s);
    size_t N = monos.size();
    size_t lead = N;
    std::vector<Int> acc(N);
    Int modulus = 1;
    std::vector<Rat> prev;
    int used = 0;
    for (int round = 0; round < 400; ++round) {
        auto ker = next_kernel(s, p);
        if (ker.size() != 1) continue;
        auto& v = ker[0];
        size_t l = 0;
        while (l < N && v[l] == 0) ++l;
        if (l > lead) continue;
        if (l < lead) {
            lead = l;
            modulus = 1;
            std::fill(acc.begin(), acc.end(), Int(0));
            prev.clear();
            used = 0;
        }
        FpField k{p};
        u64 il = k.inv(v[l]);
        Int pz(std::to_string(p));
        Int minv;
        if (modulus != 1) {
            Int mm = modulus % pz;
            mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
        }
        for (size_t i = 0; i < N; ++i) {
            u64 r = k.mul(v[i], il);
            if (modulus == 1) {
                acc[i] = Int(std::to_string(r));
            } else {
                Int diff = (Int(std::to_string(r)) - acc[i] % pz) % pz;
                if (diff < 0) diff += pz;
                Int t = (diff * minv) % pz;
                acc[i] += modulus * t;
            }
        }
        modulus *= pz;
        ++used;
        std::vector<Rat> cur(N);
        bool ok = true;
        for (size_t i = 0; i < N && ok; ++i) {
            auto r = modp::rat_reconstruct(acc[i], modulus);
            if (!r) ok = false;
            else cur[i] = *r;
        }
        if (!ok) {
            prev.clear();
            continue;
        }
        if (prev == cur) {
            std::vector<SparsePoly::Term> terms;
            for (size_t i = 0; i < N; ++i) {
                if (sgn(cur[i]) == 0) continue;
                Mono mo;
                mo.e[0] = uint16_t(monos[i].first);
                mo.e[1] = uint16_t(monos[i].second);
                terms.emplace_back(mo, cur[i]);
            }
            SparsePoly S = normalize(SparsePoly::from_terms(kappa_ring(), std::move(terms)));
            if (!vanishes_on_signature_mod(c, g, S, 2, seed)) {
                prev.clear();
                continue;
            }
            FitResult out;
            out.S = S;
            out.degree = s;
            out.primes = used;
            out.certificate = "fitting: no relation of degree " + std::to_string(s - 1) +
                              " mod p; lifted from " + std::to_string(used) +
                              " primes; vanishing checked at Bezout-many fibers mod 2 random primes";
            return out;
        }
        prev = std::move(cur);
    }
    throw std::runtime_error("rational reconstruction did not stabilize");
}

std::optional<Rat> is_constant_signature(const CurveInput& c, GroupId g, Rat* k2_out) {
    auto j = implicit_jet(c, max_theta(g));
    // Screen mod p: a non-constant fiber value rules out a constant.
    for (size_t pi = 3; pi < 6; ++pi) {
        FpField k{modp::prime(pi)};
        std::optional<FiberEvaluator<FpField>> ev;
        try {
            ev.emplace(k, j);
        } catch (const std::domain_error&) {
            continue;
        }
        int checked = 0;
        for (u64 x0 = 2; x0 < 60 && checked < 2; ++x0) {
            auto pt = ev->at(x0 * 7919);
            if (!pt) continue;
            auto s = ev->sigma(*pt, g);
            if (!pt->A.is_unit(s[0])) continue;
            auto i0 = pt->A.inv(s[0]);
            if (pt->A.mul(s[1], i0).size() > 1 || pt->A.mul(s[2], i0).size() > 1) return std::nullopt;
            ++checked;
        }
        break;
    }
    FiberEvaluator<QField> ev(QField{}, j);
    std::optional<Rat> c1, c2;
    for (int x0 = 2; x0 < 60 && !c1; ++x0) {
        auto pt = ev.at(rat(x0, 3));
        if (!pt) continue;
        auto s = ev.sigma(*pt, g);
        if (!pt->A.is_unit(s[0])) continue;
        auto i0 = pt->A.inv(s[0]);
        auto a = pt->A.mul(s[1], i0), b = pt->A.mul(s[2], i0);
        if (a.size() > 1 || b.size() > 1) return std::nullopt;
        c1 = a.empty() ? Rat(0) : a[0];
        c2 = b.empty() ? Rat(0) : b[0];
    }
    if (!c1) return std::nullopt;
    auto cp = classifying_pair(c, g);
    int yv = xy_ring()->index("y");
    if (!pseudo_remainder(cp.K1.num() - *c1 * cp.K1.den(), c.F, yv).is_zero()) return std::nullopt;
    if (!pseudo_remainder(cp.K2.num() - *c2 * cp.K2.den(), c.F, yv).is_zero()) return std::nullopt;
    if (k2_out) *k2_out = *c2;
    return c1;
}

double relative_residual(const SparsePoly& S, double k1, double k2) {
    SparsePoly Sk = change_ring(S, kappa_ring());
    long double sum = 0, mag = 0;
    for (const auto& [m, c] : Sk.terms()) {
        long double t = (long double)c.get_d() * std::pow((long double)k1, m.e[0]) * std::pow((long double)k2, m.e[1]);
        sum += t;
        mag += std::fabs(t);
    }
    return double(std::fabs(sum) / (1 + mag));
}

namespace {

constexpr unsigned kSampleBits = 256;

struct MpfAlg {
    using Elem = mpf_class;
    Elem zero() const { return Elem(0, kSampleBits); }
    Elem one() const { return Elem(1, kSampleBits); }
    Elem from_rat(const Rat& r) const { return Elem(r, kSampleBits); }
    Elem add(const Elem& a, const Elem& b) const { return Elem(a + b, kSampleBits); }
    Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b, kSampleBits); }
};

std::vector<double> real_roots(const std::vector<long double>& a) {
    int n = int(a.size()) - 1;
    std::vector<double> out;
    if (n < 1) return out;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = double(-a[size_t(i)] / a[size_t(n)]);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    for (int i = 0; i < n; ++i) {
        auto z = es.eigenvalues()[i];
        if (std::abs(z.imag()) < 1e-7 * (1 + std::abs(z.real()))) out.push_back(z.real());
    }
    return out;
}

}  // namespace

SampleResult signature_samples(const CurveInput& c, GroupId g, int count, uint64_t seed) {
    auto verdict = exceptional_check(c, g);
    if (verdict.exceptional) throw ExceptionalCurveError(verdict.reason);
    SampleResult res;
    if (count <= 0) return res;
    auto j = implicit_jet(c, max_theta(g));
    int yv = 1;
    auto cy = coefficients_in(c.F, yv);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-3, 3);
    std::cauchy_distribution<double> cau(0, 2);
    MpfAlg alg;
    const int n = int(j.P.size());
    std::vector<std::vector<Rat>> ycoef;  // ycoef[i]: coefficients of y^i as a polynomial in x
    for (const auto& q : cy) {
        std::vector<Rat> row(size_t(std::max(0, q.degree_in(0)) + 1));
        for (const auto& [m, co] : q.terms()) row[m.e[0]] += co;
        ycoef.push_back(std::move(row));
    }
    auto horner = [&](const std::vector<mpf_class>& a, const mpf_class& t) {
        mpf_class acc(0, kSampleBits);
        for (size_t i = a.size(); i-- > 0;) acc = acc * t + a[i];
        return acc;
    };
    for (long attempt = 0; attempt < 200L * count && int(res.samples.size()) < count; ++attempt) {
        double x = attempt % 2 == 0 ? uni(rng) : std::clamp(cau(rng), -1e3, 1e3);
        mpf_class X(x, kSampleBits);
        std::vector<mpf_class> a;
        std::vector<long double> al;
        long double amax = 0;
        for (const auto& row : ycoef) {
            mpf_class v(0, kSampleBits);
            for (size_t i = row.size(); i-- > 0;) v = v * X + mpf_class(row[i], kSampleBits);
            a.push_back(v);
            al.push_back((long double)v.get_d());
            amax = std::max(amax, std::fabs(al.back()));
        }
        if (a.empty() || std::fabs(al.back()) < 1e-12 * amax) continue;
        std::vector<mpf_class> da;
        for (size_t i = 1; i < a.size(); ++i) da.push_back(mpf_class(a[i] * double(i), kSampleBits));
        for (double r0 : real_roots(al)) {
            mpf_class y(r0, kSampleBits);
            for (int it = 0; it < 12; ++it) {
                mpf_class df = horner(da, y);
                if (sgn(df) == 0) break;
                y -= horner(a, y) / df;
            }
            std::vector<mpf_class> pt{X, y};
            mpf_class fy = eval_in(alg, j.Fy, pt);
            if (std::fabs(fy.get_d()) < 1e-12 * double(amax)) continue;
            std::vector<mpf_class> u(kThetaCount, mpf_class(0, kSampleBits));
            mpf_class inv(1 / fy, kSampleBits), inv2(inv * inv, kSampleBits), ip = inv;
            for (int k = 1; k <= n; ++k) {
                u[size_t(k - 1)] = eval_in(alg, j.P[size_t(k - 1)], pt) * ip;
                ip *= inv2;
            }
            std::array<mpf_class, 3> sig;
            std::vector<mpf_class> th(kThetaCount + 1);
            std::vector<bool> have(kThetaCount + 1, false);
            for (int k = 0; k < 3; ++k) {
                mpf_class acc(1, kSampleBits);
                for (const auto& f : sigma_shape(g)[k].factors) {
                    if (!have[f.theta]) {
                        th[f.theta] = eval_in(alg, theta_poly(f.theta), u);
                        have[f.theta] = true;
                    }
                    for (int e = 0; e < f.power; ++e) acc *= th[f.theta];
                }
                sig[k] = acc;
            }
            mpf_class scale = abs(sig[0]) + abs(sig[1]) + abs(sig[2]);
            if (sgn(scale) == 0 || abs(sig[0]) < scale * 1e-9) continue;
            double k1 = mpf_class(sig[1] / sig[0]).get_d(), k2 = mpf_class(sig[2] / sig[0]).get_d();
            if (!std::isfinite(k1) || !std::isfinite(k2)) continue;
            res.samples.push_back({x, y.get_d(), k1, k2});
            if (int(res.samples.size()) == count) break;
        }
    }
    if (int(res.samples.size()) < count)
        res.warning = "only " + std::to_string(res.samples.size()) + " of " + std::to_string(count) +
                      " regular real samples found";
    return res;
}

SignatureResult signature_polynomial(const CurveInput& c, GroupId g, const SignatureOptions& opt) {
    auto verdict = exceptional_check(c, g);
    if (verdict.exceptional) throw ExceptionalCurveError(verdict.reason);
    SignatureResult out;
    Rat k2;
    if (auto k1 = is_constant_signature(c, g, &k2)) {
        out.is_point = true;
        out.k1 = *k1;
        out.k2 = k2;
        return out;
    }
    SignaturePolynomial sp{SparsePoly(), g, c, "", ""};
    bool done = false;
    if (opt.try_groebner) {
        try {
            sp.S = signature_by_groebner(c, g, opt.budget);
            sp.method = "groebner";
            sp.certificate = "saturated elimination";
            done = true;
        } catch (const BudgetExceeded&) {
            if (!opt.allow_fitting) throw;
        }
    }
    if (!done) {
        if (!opt.allow_fitting) throw BudgetExceeded("elimination disabled");
        auto fit = signature_by_fitting(c, g, opt.max_fit_degree, opt.seed);
        sp.S = fit.S;
        sp.method = "fitting";
        sp.certificate = fit.certificate;
    }
    auto samples = signature_samples(c, g, 25, opt.seed);
    double worst = 0;
    for (const auto& s : samples.samples) worst = std::max(worst, relative_residual(sp.S, s.k1, s.k2));
    if (worst >= 1e-8)
        throw std::runtime_error("signature polynomial fails numeric sample check (residual " + std::to_string(worst) +
                                 ")");
    sp.certificate += "; " + std::to_string(samples.samples.size()) + " numeric samples";
    out.poly = std::move(sp);
    return out;
}

}  // namespace sigcurve
