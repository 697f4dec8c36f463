#include "sigcurve/jets.hpp"

#include "sigcurve/fiber.hpp"
#include "sigcurve/parse.hpp"

#include <algorithm>
#include <random>

namespace sigcurve {

std::string to_string(GroupId g) {
    switch (g) {
        case GroupId::SE2: return "SE2";
        case GroupId::SA2: return "SA2";
        case GroupId::A2: return "A2";
        case GroupId::PGL3: return "PGL3";
    }
    return "?";
}

GroupId parse_group(std::string_view s) {
    for (auto g : kAllGroups)
        if (to_string(g) == s) return g;
    throw std::invalid_argument("unknown group '" + std::string(s) + "' (expected SE2, SA2, A2 or PGL3)");
}

CurveInput make_curve(const SparsePoly& F, bool irreducible_asserted) {
    for (int v = 0; v < F.ring()->size(); ++v) {
        const auto& n = F.ring()->name(v);
        if (n != "x" && n != "y" && F.degree_in(v) > 0)
            throw ContractError("curve polynomial may only use x and y, found " + n);
    }
    SparsePoly f = change_ring(F, xy_ring());
    if (f.is_zero() || f.is_constant()) throw ContractError("curve polynomial must be nonconstant");
    return CurveInput{f, f.total_degree(), irreducible_asserted};
}

JetRestriction implicit_jet(const CurveInput& c, int n_max) {
    if (n_max < 1 || n_max > kThetaCount) throw std::out_of_range("jet order must be 1..8");
    JetRestriction j;
    j.curve = c;
    j.Fx = derivative(c.F, 0);
    j.Fy = derivative(c.F, 1);
    if (j.Fy.is_zero()) throw VerticalLineError();
    auto D = [&](const SparsePoly& p) { return j.Fy * derivative(p, 0) - j.Fx * derivative(p, 1); };
    SparsePoly dfy = D(j.Fy);
    j.P.push_back(-j.Fx);
    for (int k = 1; k < n_max; ++k) {
        const SparsePoly& pk = j.P.back();
        j.P.push_back(j.Fy * D(pk) - Rat(2 * k - 1) * (pk * dfy));
    }
    return j;
}

RatFunc jet_value(const JetRestriction& j, int n) { return RatFunc(j.p(n), pow(j.Fy, unsigned(2 * n - 1))); }

namespace {

// num / F_y^e
struct Graded {
    SparsePoly num;
    int e = 0;
};

struct GradedAlg {
    using Elem = Graded;
    RingPtr ring;
    SparsePoly fy;
    mutable std::vector<SparsePoly> fy_pow;

    const SparsePoly& fpow(int k) const {
        if (fy_pow.empty()) fy_pow.push_back(SparsePoly::constant(ring, 1));
        while (int(fy_pow.size()) <= k) fy_pow.push_back(fy_pow.back() * fy);
        return fy_pow[k];
    }
    Elem zero() const { return {SparsePoly(ring), 0}; }
    Elem one() const { return {SparsePoly::constant(ring, 1), 0}; }
    Elem from_rat(const Rat& r) const { return {SparsePoly::constant(ring, r), 0}; }
    Elem mul(const Elem& a, const Elem& b) const { return {a.num * b.num, a.e + b.e}; }
    Elem add(const Elem& a, const Elem& b) const {
        if (a.num.is_zero()) return b;
        if (b.num.is_zero()) return a;
        int e = std::max(a.e, b.e);
        return {a.num * fpow(e - a.e) + b.num * fpow(e - b.e), e};
    }
};

}  // namespace

ThetaRestriction theta(const JetRestriction& j, int i) {
    if (int(j.P.size()) < i) return theta(implicit_jet(j.curve, i), i);
    GradedAlg alg{xy_ring(), j.Fy, {}};
    std::vector<Graded> u;
    for (int k = 1; k <= kThetaCount; ++k) {
        if (k <= int(j.P.size()))
            u.push_back({j.p(k), 2 * k - 1});
        else
            u.push_back(alg.zero());
    }
    Graded n = eval_in(alg, theta_poly(i), u);
    ThetaRestriction r;
    r.i = i;
    r.d_i = theta_d(i);
    r.tau = theta_tau(i, j.curve.d);
    SparsePoly full;
    if (n.num.is_zero())
        full = SparsePoly(xy_ring());
    else if (n.e >= r.d_i)
        full = divide_exact(n.num, alg.fpow(n.e - r.d_i));
    else
        full = n.num * alg.fpow(r.d_i - n.e);
    if (full.is_zero()) {
        r.T = full;
        r.content = 0;
    } else {
        auto [c, pp] = content_primitive(full);
        r.content = c;
        r.T = std::move(pp);
    }
    return r;
}

ThetaRestriction theta(const CurveInput& c, int i) { return theta(implicit_jet(c, std::max(i, 1)), i); }

const std::array<SigComponent, 3>& sigma_shape(GroupId g) {
    static const std::array<SigComponent, 3> se{
        SigComponent{0, {{1, 3}}}, SigComponent{2, {{2, 2}}}, SigComponent{2, {{3, 1}}}};
    static const std::array<SigComponent, 3> sa{
        SigComponent{0, {{2, 8}}}, SigComponent{4, {{4, 3}}}, SigComponent{2, {{2, 4}, {5, 1}}}};
    static const std::array<SigComponent, 3> af{
        SigComponent{0, {{4, 3}}}, SigComponent{0, {{5, 2}}}, SigComponent{0, {{4, 1}, {6, 1}}}};
    static const std::array<SigComponent, 3> pr{
        SigComponent{0, {{5, 8}}}, SigComponent{0, {{7, 3}}}, SigComponent{0, {{8, 1}, {5, 4}}}};
    switch (g) {
        case GroupId::SE2: return se;
        case GroupId::SA2: return sa;
        case GroupId::A2: return af;
        case GroupId::PGL3: return pr;
    }
    return se;
}

int max_theta(GroupId g) {
    int m = 0;
    for (const auto& c : sigma_shape(g))
        for (const auto& f : c.factors) m = std::max(m, f.theta);
    return m;
}

int sigma_fy_weight(GroupId g) {
    int w = 0;
    for (const auto& f : sigma_shape(g)[0].factors) w += f.power * theta_d(f.theta);
    return w;
}

int sigma_degree(GroupId g, int d) {
    const auto& c = sigma_shape(g)[0];
    int s = c.x0_power;
    for (const auto& f : c.factors) s += f.power * theta_tau(f.theta, d);
    return s;
}

const char* invariant_labels(GroupId g) {
    switch (g) {
        case GroupId::SE2: return "(kappa^2, kappa_s)";
        case GroupId::SA2: return "(mu^3, mu_alpha)";
        case GroupId::A2: return "(mu_alpha^2/mu^3, mu_alphaalpha/mu^2)";
        case GroupId::PGL3: return "(eta^3, eta_rho)";
    }
    return "";
}

RingPtr proj_ring() {
    static RingPtr r = make_ring({"x0", "x1", "x2"});
    return r;
}

namespace {

// Theta_i vanishes on the curve.  Evaluates at generic fibers; a fiber where it is nonzero
// settles the question, otherwise an exact pseudo-remainder decides.
bool vanishes_on_curve(const JetRestriction& j, int i) {
    FiberEvaluator<QField> ev(QField{}, j);
    int nonzero = 0, tried = 0;
    for (long x0 = 3; tried < 2 && x0 < 200; x0 += 7) {
        auto pt = ev.at(rat(x0));
        if (!pt) continue;
        ++tried;
        if (!ev.theta(*pt, i).empty()) ++nonzero;
        if (nonzero) return false;
    }
    auto T = theta(j, i).full();
    if (T.is_zero()) return true;
    return pseudo_remainder(T, j.curve.F, 1).is_zero();
}

}  // namespace

ExceptionalVerdict exceptional_check(const CurveInput& c, GroupId g) {
    if (c.d == 1) return {true, "line"};
    if (derivative(c.F, 1).is_zero()) return {true, "F_y vanishes identically (vertical lines)"};
    if (g != GroupId::SE2 && c.d == 2) return {true, "conic"};
    JetRestriction j = implicit_jet(c, max_theta(g));
    std::vector<int> need;
    switch (g) {
        case GroupId::SE2: need = {1, 2}; break;
        case GroupId::SA2: need = {2, 4}; break;
        case GroupId::A2: need = {4, 5}; break;
        case GroupId::PGL3: need = {5, 7}; break;
    }
    for (int i : need)
        if (vanishes_on_curve(j, i)) return {true, "Theta" + std::to_string(i) + " vanishes on the curve"};
    return {false, ""};
}

namespace {

void require_regular(const CurveInput& c, GroupId g) {
    auto v = exceptional_check(c, g);
    if (v.exceptional) throw ExceptionalCurveError(v.reason);
}

std::vector<ThetaRestriction> thetas_for(const CurveInput& c, GroupId g) {
    int m = max_theta(g);
    JetRestriction j = implicit_jet(c, m);
    std::vector<ThetaRestriction> T;
    std::vector<bool> need(size_t(m + 1), false);
    for (const auto& comp : sigma_shape(g))
        for (const auto& f : comp.factors) need[f.theta] = true;
    for (int i = 1; i <= m; ++i) {
        if (need[i])
            T.push_back(theta(j, i));
        else
            T.push_back(ThetaRestriction{i, SparsePoly(xy_ring()), 0, theta_d(i), theta_tau(i, c.d)});
    }
    return T;
}

}  // namespace

namespace {

// prod T_i^(num_i - den_i) with the bases refined to be pairwise coprime before expanding.
RatFunc theta_ratio(const std::vector<ThetaRestriction>& T, const SigComponent& num, const SigComponent& den) {
    struct Fac {
        SparsePoly p;
        int e;
    };
    std::vector<int> ex(T.size() + 1, 0);
    for (const auto& f : num.factors) ex[size_t(f.theta)] += f.power;
    for (const auto& f : den.factors) ex[size_t(f.theta)] -= f.power;
    Rat scale = 1;
    std::vector<Fac> fs;
    for (size_t i = 1; i < ex.size(); ++i) {
        if (ex[i] == 0) continue;
        const auto& t = T[i - 1];
        Rat c = 1;
        for (int k = 0; k < std::abs(ex[i]); ++k) c *= t.content;
        if (ex[i] > 0)
            scale *= c;
        else
            scale /= c;
        fs.push_back({t.T, ex[i]});
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < fs.size() && !changed; ++i)
            for (size_t j = i + 1; j < fs.size() && !changed; ++j) {
                if (fs[i].p.is_constant() || fs[j].p.is_constant()) continue;
                SparsePoly gg = gcd(fs[i].p, fs[j].p);
                if (gg.is_constant()) continue;
                fs[i].p = divide_exact(fs[i].p, gg);
                fs[j].p = divide_exact(fs[j].p, gg);
                fs.push_back({gg, fs[i].e + fs[j].e});
                changed = true;
            }
    }
    RingPtr r = xy_ring();
    SparsePoly n = SparsePoly::constant(r, scale), d = SparsePoly::constant(r, 1);
    for (const auto& f : fs) {
        if (f.e > 0) n *= pow(f.p, unsigned(f.e));
        if (f.e < 0) d *= pow(f.p, unsigned(-f.e));
    }
    return RatFunc::coprime(std::move(n), std::move(d));
}

}  // namespace

ClassifyingPair classifying_pair(const CurveInput& c, GroupId g) {
    require_regular(c, g);
    auto T = thetas_for(c, g);
    const auto& sh = sigma_shape(g);
    return ClassifyingPair{g, theta_ratio(T, sh[1], sh[0]), theta_ratio(T, sh[2], sh[0]), invariant_labels(g)};
}

namespace {

struct RatAlg {
    using Elem = Rat;
    Rat zero() const { return 0; }
    Rat one() const { return 1; }
    Rat from_rat(const Rat& r) const { return r; }
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
};

using Dense = std::vector<Rat>;  // power series in s, truncated at size

Dense mul_trunc(const Dense& a, const Dense& b, size_t n) {
    Dense r(n);
    for (size_t i = 0; i < a.size() && i < n; ++i)
        if (sgn(a[i]))
            for (size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

std::pair<Rat, Rat> invariants_at(const CurveInput& c, GroupId g, const Rat& x, const Rat& y) {
    const size_t n = kThetaCount + 1;
    RingPtr r = xy_ring();
    SparsePoly S = SparsePoly::variable(r, 0), Y = SparsePoly::variable(r, 1);
    SparsePoly G = compose(c.F, {S + SparsePoly::constant(r, x), Y + SparsePoly::constant(r, y)}, r);
    // rows[j][i]: coefficient of s^i Y^j
    std::vector<Dense> rows(size_t(c.d + 1), Dense(n));
    for (const auto& [m, co] : G.terms())
        if (m.e[0] < n) rows[m.e[1]][m.e[0]] += co;
    if (sgn(rows[0][0])) throw std::domain_error("point is not on the curve");
    Rat a = rows.size() > 1 ? rows[1][0] : Rat(0);
    if (sgn(a) == 0) throw PoleError("F_y vanishes at the point");
    Dense ys(n);
    for (size_t k = 1; k < n; ++k) {
        Dense acc = rows.back();
        for (size_t j = rows.size() - 1; j-- > 0;) {
            acc = mul_trunc(acc, ys, k + 1);
            for (size_t i = 0; i <= k; ++i) acc[i] += rows[j][i];
        }
        ys[k] = -acc[k] / a;
    }
    std::vector<Rat> u(kThetaCount);
    Rat fact = 1;
    for (int k = 1; k <= kThetaCount; ++k) {
        fact *= k;
        u[size_t(k - 1)] = fact * ys[size_t(k)];
    }
    std::array<Rat, kThetaCount + 1> th;
    for (int i = 1; i <= max_theta(g); ++i) th[size_t(i)] = eval_in(RatAlg{}, theta_poly(i), u);
    std::array<Rat, 3> comp;
    for (int k = 0; k < 3; ++k) {
        comp[size_t(k)] = 1;
        for (const auto& f : sigma_shape(g)[k].factors) {
            Rat p = 1;
            for (int e = 0; e < f.power; ++e) p *= th[size_t(f.theta)];
            comp[size_t(k)] *= p;
        }
    }
    if (sgn(comp[0]) == 0) throw PoleError("invariant denominator vanishes at the point");
    return {comp[1] / comp[0], comp[2] / comp[0]};
}

HomogeneousTriple projective_extension(const std::vector<ThetaRestriction>& T, int d, GroupId g,
                                       bool cancel_common) {
    RingPtr h = proj_ring();
    std::vector<SparsePoly> hom(T.size());
    for (size_t i = 0; i < T.size(); ++i)
        if (T[i].T.ring()) hom[i] = homogenize(T[i].full(), h, theta_tau(int(i + 1), d));
    HomogeneousTriple out{g, {}, 0, SparsePoly::constant(h, 1)};
    for (int k = 0; k < 3; ++k) {
        const auto& shape = sigma_shape(g)[k];
        Mono m0;
        m0.e[0] = uint16_t(shape.x0_power);
        SparsePoly acc = SparsePoly::monomial(h, m0, 1);
        for (const auto& f : shape.factors) {
            if (f.theta > int(hom.size()) || hom[f.theta - 1].ring() == nullptr)
                throw ContractError("missing theta restriction for projective extension");
            acc *= pow(hom[f.theta - 1], unsigned(f.power));
        }
        out.sigma[k] = std::move(acc);
    }
    if (cancel_common) {
        // Work on the affine parts, then restore powers of x0.
        std::array<SparsePoly, 3> aff;
        for (int k = 0; k < 3; ++k) aff[k] = dehomogenize(out.sigma[k], 0, xy_ring());
        SparsePoly g2 = gcd(aff[0], gcd(aff[1], aff[2]));
        int gdeg = g2.total_degree();
        SparsePoly gh = gdeg > 0 ? homogenize(primitive_part(g2), h, gdeg) : SparsePoly::constant(h, 1);
        int deg = out.sigma[0].total_degree();
        int x0min = INT_MAX;
        for (int k = 0; k < 3; ++k) {
            if (out.sigma[k].is_zero()) continue;
            SparsePoly q = gdeg > 0 ? divide_exact(out.sigma[k], gh) : out.sigma[k];
            int lo = INT_MAX;
            for (const auto& [m, c] : q.terms()) lo = std::min<int>(lo, m.e[0]);
            x0min = std::min(x0min, lo);
            out.sigma[k] = std::move(q);
        }
        if (x0min == INT_MAX) x0min = 0;
        if (x0min > 0) {
            for (auto& s : out.sigma) {
                std::vector<SparsePoly::Term> t;
                for (auto [m, c] : s.terms()) {
                    m.e[0] = uint16_t(m.e[0] - x0min);
                    t.emplace_back(m, c);
                }
                s = SparsePoly::from_terms(h, std::move(t));
            }
        }
        Mono mx;
        mx.e[0] = uint16_t(x0min);
        out.removed = gh * SparsePoly::monomial(h, mx, 1);
        (void)deg;
    }
    out.degree = kDegNegInf;
    for (const auto& s : out.sigma) out.degree = std::max(out.degree, s.total_degree());
    return out;
}

HomogeneousTriple projective_extension(const CurveInput& c, GroupId g, bool cancel_common) {
    if (c.d < 3 && g != GroupId::SE2) throw ExceptionalCurveError(c.d == 1 ? "line" : "conic");
    require_regular(c, g);
    return projective_extension(thetas_for(c, g), c.d, g, cancel_common);
}

Mat3 identity3() {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = i == j ? 1 : 0;
    return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

namespace {

Rat det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

Mat3 inverse(const Mat3& m) {
    Rat d = det3(m);
    if (sgn(d) == 0) throw std::domain_error("singular matrix");
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            r[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / d;
        }
    return r;
}

void check_group_shape(const Mat3& m, GroupId g) {
    if (sgn(det3(m)) == 0) throw std::invalid_argument("singular matrix");
    if (g == GroupId::PGL3) return;
    if (m[0][0] != 1 || sgn(m[0][1]) != 0 || sgn(m[0][2]) != 0)
        throw std::invalid_argument("first row must be [1,0,0] for an affine subgroup");
    Rat dl = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    if (g == GroupId::SA2 && dl != 1) throw std::invalid_argument("SA2 requires a unimodular linear part");
    if (g == GroupId::SE2) {
        if (m[1][1] != m[2][2] || m[1][2] != -m[2][1] || m[1][1] * m[1][1] + m[2][1] * m[2][1] != 1)
            throw std::invalid_argument("SE2 requires a rotation block with c^2+s^2=1");
    }
}

CurveInput apply_group_element(const CurveInput& c, const Mat3& m, GroupId g) {
    check_group_shape(m, g);
    Mat3 mi = inverse(m);
    RingPtr h = proj_ring();
    SparsePoly Fh = homogenize(c.F, h, c.d);
    std::vector<SparsePoly> images;
    for (int i = 0; i < 3; ++i) {
        SparsePoly l(h);
        for (int j = 0; j < 3; ++j)
            if (sgn(mi[i][j]) != 0) l += mi[i][j] * SparsePoly::variable(h, j);
        images.push_back(l);
    }
    SparsePoly G = compose(Fh, images, h);
    return make_curve(normalize(dehomogenize(G, 0, xy_ring())), c.irreducible_asserted);
}

Mat3 random_group_element(GroupId g, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    auto r = [&] { return rat(num(rng), den(rng)); };
    for (;;) {
        Mat3 m = identity3();
        switch (g) {
            case GroupId::SE2: {
                Rat s = r(), q = 1 + s * s;
                m[1][1] = m[2][2] = (1 - s * s) / q;
                m[2][1] = 2 * s / q;
                m[1][2] = -m[2][1];
                break;
            }
            case GroupId::SA2: {
                Rat a = r();
                if (sgn(a) == 0) continue;
                m[1][1] = a;
                m[1][2] = r();
                m[2][1] = r();
                m[2][2] = (1 + m[1][2] * m[2][1]) / a;
                break;
            }
            case GroupId::A2:
                m[1][1] = r(), m[1][2] = r(), m[2][1] = r(), m[2][2] = r();
                break;
            case GroupId::PGL3:
                for (auto& row : m)
                    for (auto& e : row) e = r();
                break;
        }
        if (g != GroupId::PGL3) m[1][0] = r(), m[2][0] = r();
        try {
            check_group_shape(m, g);
            return m;
        } catch (const std::invalid_argument&) {
        }
    }
}

std::pair<Rat, Rat> apply_to_point(const Mat3& m, const Rat& x, const Rat& y) {
    Rat v[3];
    for (int i = 0; i < 3; ++i) v[i] = m[i][0] + m[i][1] * x + m[i][2] * y;
    if (sgn(v[0]) == 0) throw PoleError("point is mapped to infinity");
    return {v[1] / v[0], v[2] / v[0]};
}

SparsePoly normalize(const SparsePoly& p) {
    if (p.is_zero()) return p;
    return primitive_part(p);
}

}  // namespace sigcurve
