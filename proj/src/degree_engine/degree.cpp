#include "sigcurve/degree.hpp"

#include "sigcurve/fiber.hpp"
#include "sigcurve/modp.hpp"
#include "sigcurve/parse.hpp"

#include <algorithm>
#include <random>

namespace sigcurve {

int generic_degree(GroupId g, int d) {
    switch (g) {
        case GroupId::SE2: return 6 * d * d - 6 * d;
        case GroupId::SA2:
        case GroupId::A2: return 24 * d * d - 48 * d;
        case GroupId::PGL3: return 96 * d * d - 216 * d;
    }
    return 0;
}

namespace {

using modp::u64;
using Elem = dense::Poly<FpField>;

struct RouteResult {
    int lower_bound = 0;
    BaseLocusReport locus;
    std::vector<int> sums;  // one per a-vector
};

// Part of r supported on the roots of the square-free s.
int part_degree(modp::Poly r, const modp::Poly& s, u64 p) {
    int total = 0;
    for (;;) {
        auto c = modp::gcd(r, s, p);
        if (modp::deg(c) < 1) return total;
        total += modp::deg(c);
        modp::Poly q, rem;
        modp::divrem(r, c, q, rem, p);
        r = std::move(q);
    }
}

modp::Poly square_free(const modp::Poly& g, u64 p) {
    modp::Poly dg(g.size() > 1 ? g.size() - 1 : 0);
    for (size_t i = 1; i < g.size(); ++i) dg[i - 1] = modp::mul(g[i], i % p, p);
    modp::trim(dg);
    auto c = modp::gcd(g, dg, p);
    modp::Poly q, r;
    modp::divrem(g, c, q, r, p);
    return q;
}

struct SigmaSetup {
    CurveInput curve;
    GroupId group;
    JetRestriction jet;
    SparsePoly removed;  // in proj_ring(), 1 when nothing was cancelled
    int deg_sigma = 0;   // after cancellation
};

SigmaSetup make_setup(const CurveInput& c, GroupId g, bool cancel) {
    SigmaSetup s{c, g, implicit_jet(c, max_theta(g)), SparsePoly::constant(proj_ring(), 1), sigma_degree(g, c.d)};
    if (cancel) {
        auto h = projective_extension(c, g, true);
        s.removed = h.removed;
        s.deg_sigma = h.degree;
    }
    return s;
}

Elem eval_bi(const Quotient<FpField>& B, const BiPoly<FpField>& f, const std::vector<Elem>& xpow, const Elem& y) {
    const auto& k = B.field();
    Elem acc;
    for (size_t j = f.by_y.size(); j-- > 0;) {
        Elem cj;
        const auto& row = f.by_y[j];
        for (size_t i = 0; i < row.size(); ++i)
            if (row[i]) cj = B.add(cj, B.scale(xpow[i], row[i]));
        acc = B.add(B.mul(acc, y), cj);
    }
    (void)k;
    return acc;
}

RouteResult run_route(const SigmaSetup& S, const std::vector<std::array<Rat, 3>>& avecs, std::mt19937_64& rng) {
    const CurveInput& c = S.curve;
    int d = c.d;
    RingPtr h = proj_ring();
    SparsePoly Fh = homogenize(c.F, h, d);
    for (int attempt = 0; attempt < 8; ++attempt) {
        u64 p = modp::prime(40 + size_t(rng() % 200));
        FpField k{p};
        std::uniform_int_distribution<int> ent(1, 999);
        Mat3 M;
        for (auto& row : M)
            for (auto& e : row) e = rng() % 2 ? ent(rng) : -ent(rng);
        std::vector<SparsePoly> img;
        SparsePoly X = SparsePoly::variable(xy_ring(), "x"), Y = SparsePoly::variable(xy_ring(), "y");
        for (int i = 0; i < 3; ++i) img.push_back(SparsePoly::constant(xy_ring(), M[i][0]) + M[i][1] * X + M[i][2] * Y);
        try {
            (void)inverse(M);
        } catch (const std::domain_error&) {
            continue;
        }
        SparsePoly Fm = compose(Fh, img, xy_ring());
        if (Fm.degree_in(1) != d) continue;
        if (!coefficients_in(Fm, 1).back().is_constant()) continue;

        std::optional<BiPoly<FpField>> Fmb, Fyb;
        std::vector<BiPoly<FpField>> Pb;
        std::array<std::array<u64, 3>, 3> Mp;
        std::vector<std::array<u64, 3>> ap;
        try {
            Fmb = BiPoly<FpField>::from_sparse(k, Fm);
            Fyb = BiPoly<FpField>::from_sparse(k, S.jet.Fy);
            for (const auto& q : S.jet.P) Pb.push_back(BiPoly<FpField>::from_sparse(k, q));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) Mp[i][j] = k.from_rat(M[i][j]);
            for (const auto& a : avecs) ap.push_back({k.from_rat(a[0]), k.from_rat(a[1]), k.from_rat(a[2])});
        } catch (const std::domain_error&) {
            continue;
        }
        size_t xdeg = size_t(std::max(0, S.jet.Fy.degree_in(0)));
        for (const auto& q : S.jet.P) xdeg = std::max(xdeg, size_t(std::max(0, q.degree_in(0))));

        int bez = d * S.deg_sigma;
        size_t need = size_t(bez) + 3;
        std::vector<u64> xs;
        std::vector<std::array<Elem, 3>> sig;
        std::vector<Quotient<FpField>> alg;
        std::vector<u64> nx0;
        for (u64 x0 = 1; xs.size() < need && x0 < need * 4 + 100; ++x0) {
            auto m = Fmb->at_x(k, x0);
            if (dense::deg<FpField>(m) != d) continue;
            Quotient<FpField> B(k, m);
            Elem yv = B.gen();
            std::array<Elem, 3> Xh;
            for (int i = 0; i < 3; ++i)
                Xh[i] = B.add(B.constant(k.add(Mp[i][0], k.mul(Mp[i][1], x0))), B.scale(yv, Mp[i][2]));
            if (!B.is_unit(Xh[0])) continue;
            Elem i0 = B.inv(Xh[0]);
            Elem x = B.mul(Xh[1], i0), y = B.mul(Xh[2], i0);
            std::vector<Elem> xpow{B.one()};
            for (size_t e = 1; e <= xdeg; ++e) xpow.push_back(B.mul(xpow.back(), x));
            Elem fy = eval_bi(B, *Fyb, xpow, y);
            if (!B.is_unit(fy)) continue;
            Elem fyi = B.inv(fy), fyi2 = B.mul(fyi, fyi), ip = fyi;
            std::vector<Elem> u(kThetaCount);
            for (size_t q = 0; q < Pb.size(); ++q) {
                u[q] = B.mul(eval_bi(B, Pb[q], xpow, y), ip);
                ip = B.mul(ip, fyi2);
            }
            std::vector<Elem> T(kThetaCount + 1);
            std::vector<bool> have(kThetaCount + 1, false);
            std::array<Elem, 3> s;
            for (int comp = 0; comp < 3; ++comp) {
                Elem acc = B.one();
                for (const auto& f : sigma_shape(S.group)[comp].factors) {
                    if (!have[f.theta]) {
                        T[f.theta] = B.mul(eval_in(B, theta_poly(f.theta), u), B.pow(fy, unsigned(theta_d(f.theta))));
                        have[f.theta] = true;
                    }
                    acc = B.mul(acc, B.pow(T[f.theta], unsigned(f.power)));
                }
                s[comp] = B.mul(acc, B.pow(Xh[0], unsigned(sigma_degree(S.group, d))));
            }
            if (!S.removed.is_constant()) {
                Elem r = eval_in(B, S.removed, std::vector<Elem>{Xh[0], Xh[1], Xh[2]});
                if (!B.is_unit(r)) continue;
                Elem ri = B.inv(r);
                for (auto& e : s) e = B.mul(e, ri);
            }
            xs.push_back(x0);
            sig.push_back(std::move(s));
            nx0.push_back(B.norm(Xh[0]));
            alg.push_back(std::move(B));
        }
        if (xs.size() < need) continue;

        auto interp_norm = [&](auto&& elem_at) {
            std::vector<u64> ys(xs.size());
            for (size_t i = 0; i < xs.size(); ++i) ys[i] = alg[i].norm(elem_at(i));
            return modp::interpolate(xs, ys, p);
        };
        std::array<modp::Poly, 3> R;
        for (int comp = 0; comp < 3; ++comp) R[comp] = interp_norm([&](size_t i) { return sig[i][comp]; });
        auto RX0 = modp::interpolate(xs, nx0, p);
        bool bad = false;
        for (const auto& r : R)
            if (modp::deg(r) > bez) bad = true;
        if (bad) throw std::logic_error("resultant exceeds the Bezout bound");
        auto g = modp::gcd(R[0], modp::gcd(R[1], R[2], p), p);
        if (g.empty()) continue;  // a component vanishes on the curve mod p
        auto gsf = square_free(g, p);
        RouteResult out;
        out.lower_bound = modp::deg(g);
        auto hinf = modp::gcd(gsf, RX0, p);
        out.locus.at_infinity = modp::deg(hinf);
        out.locus.affine = modp::deg(gsf) - out.locus.at_infinity;
        out.locus.mult_infinity = out.locus.at_infinity > 0 ? part_degree(g, hinf, p) : 0;
        out.locus.mult_affine = out.lower_bound - out.locus.mult_infinity;
        for (const auto& a : ap) {
            auto Ra = interp_norm([&](size_t i) {
                const auto& B = alg[i];
                return B.add(B.add(B.scale(sig[i][0], a[0]), B.scale(sig[i][1], a[1])), B.scale(sig[i][2], a[2]));
            });
            if (modp::deg(Ra) != bez) {
                bad = true;
                break;
            }
            out.sums.push_back(part_degree(Ra, gsf, p));
        }
        if (bad) continue;
        return out;
    }
    throw std::runtime_error("no admissible projective change found for the multiplicity route");
}

bool default_cancel(const CurveInput& c, const DegreeOptions& opt) { return opt.cancel_common.value_or(c.d <= 3); }

// Runs the route opt.runs times; all runs must agree, otherwise the minimum is kept and
// the disagreement noted.
RouteResult agreed_route(const SigmaSetup& S, const std::vector<std::array<Rat, 3>>& avecs, const DegreeOptions& opt,
                         std::string& note) {
    std::mt19937_64 rng(opt.seed * 0x2545F4914F6CDD1DULL + 99);
    RouteResult best = run_route(S, avecs, rng);
    for (int r = 1; r < opt.runs; ++r) {
        auto other = run_route(S, avecs, rng);
        bool same = other.lower_bound == best.lower_bound && other.sums == best.sums &&
                    other.locus.affine == best.locus.affine && other.locus.at_infinity == best.locus.at_infinity;
        if (!same) {
            note = "runs disagree; minimum kept";
            best.lower_bound = std::min(best.lower_bound, other.lower_bound);
            for (size_t i = 0; i < best.sums.size(); ++i) best.sums[i] = std::min(best.sums[i], other.sums[i]);
            // projection collisions only merge points
            best.locus.at_infinity = std::max(best.locus.at_infinity, other.locus.at_infinity);
            best.locus.affine = std::max(best.locus.affine, other.locus.affine);
        }
    }
    return best;
}

void require_regular(const CurveInput& c, GroupId g) {
    auto v = exceptional_check(c, g);
    if (v.exceptional) throw ExceptionalCurveError(v.reason);
}

}  // namespace

BaseLocusReport base_locus_on_curve(const CurveInput& c, GroupId g, const DegreeOptions& opt) {
    require_regular(c, g);
    auto S = make_setup(c, g, default_cancel(c, opt));
    std::string note;
    return agreed_route(S, {}, opt, note).locus;
}

int mult_sum_line(const CurveInput& c, GroupId g, const std::array<Rat, 3>& a, const DegreeOptions& opt) {
    require_regular(c, g);
    auto S = make_setup(c, g, default_cancel(c, opt));
    std::string note;
    return agreed_route(S, {a}, opt, note).sums.at(0);
}

namespace {

MultiplicityReport mult_min_setup(const SigmaSetup& S, const DegreeOptions& opt, RouteResult* keep) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long> ent(-10000, 10000);
    std::vector<std::array<Rat, 3>> av;
    for (int t = 0; t < std::max(1, opt.trials); ++t) av.push_back({Rat(ent(rng)), Rat(ent(rng)), Rat(ent(rng))});
    std::string note;
    auto r = agreed_route(S, av, opt, note);
    MultiplicityReport rep;
    rep.route = "resultant-order";
    if (!note.empty()) rep.route += " (" + note + ")";
    rep.min_sum = INT32_MAX;
    for (size_t i = 0; i < av.size(); ++i) {
        rep.trials.push_back({av[i], r.sums[i]});
        rep.min_sum = std::min(rep.min_sum, r.sums[i]);
    }
    rep.lower_bound = r.lower_bound;
    rep.sandwich_closed = rep.min_sum == rep.lower_bound;
    if (keep) *keep = r;
    return rep;
}

}  // namespace

MultiplicityReport mult_min(const CurveInput& c, GroupId g, const DegreeOptions& opt) {
    require_regular(c, g);
    auto S = make_setup(c, g, default_cancel(c, opt));
    return mult_min_setup(S, opt, nullptr);
}

DegreeReport predict_degree(const CurveInput& c, GroupId g, std::optional<int> n, const DegreeOptions& opt) {
    require_regular(c, g);
    bool cancel = default_cancel(c, opt);
    auto S = make_setup(c, g, cancel);
    RouteResult r;
    DegreeReport rep;
    rep.group = g;
    rep.d = c.d;
    rep.deg_sigma = S.deg_sigma;
    rep.cancelled = cancel;
    rep.mult = mult_min_setup(S, opt, &r);
    rep.mult_sum = rep.mult.min_sum;
    rep.base_locus = r.locus;
    rep.affine_base_points_excluded = r.locus.affine == 0;
    rep.product = c.d * S.deg_sigma - rep.mult_sum;
    rep.n = n;
    if (n) {
        if (*n <= 0 || rep.product % *n != 0)
            throw std::domain_error("inconsistent n: " + std::to_string(c.d) + "*" + std::to_string(S.deg_sigma) +
                                    " - " + std::to_string(rep.mult_sum) + " = " + std::to_string(rep.product) +
                                    " is not divisible by " + std::to_string(*n));
        rep.deg_S_predicted = rep.product / *n;
    }
    return rep;
}

}  // namespace sigcurve
