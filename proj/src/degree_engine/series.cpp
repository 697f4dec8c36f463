#include "sigcurve/degree.hpp"

#include "sigcurve/kernels.hpp"
#include "sigcurve/parse.hpp"
#include "sigcurve/theta.hpp"

#include <algorithm>
#include <climits>

namespace sigcurve {

TruncatedSeries::TruncatedSeries(int min_exp, std::vector<Rat> coeffs, int trunc_order)
    : lo_(min_exp), trunc_(trunc_order), c_(std::move(coeffs)) {
    clip();
}

TruncatedSeries TruncatedSeries::constant(const Rat& c, int trunc_order) { return monomial(c, 0, trunc_order); }

TruncatedSeries TruncatedSeries::monomial(const Rat& c, int e, int trunc_order) {
    return TruncatedSeries(e, {c}, trunc_order);
}

void TruncatedSeries::clip() {
    if (lo_ >= trunc_) {
        c_.clear();
        lo_ = trunc_;
        return;
    }
    if (int(c_.size()) > trunc_ - lo_) c_.resize(size_t(trunc_ - lo_));
    size_t z = 0;
    while (z < c_.size() && sgn(c_[z]) == 0) ++z;
    if (z == c_.size()) {
        c_.clear();
        lo_ = trunc_;
        return;
    }
    if (z) {
        c_.erase(c_.begin(), c_.begin() + long(z));
        lo_ += int(z);
    }
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat TruncatedSeries::coeff(int e) const {
    if (e >= trunc_) throw std::out_of_range("coefficient beyond truncation");
    if (e < lo_ || e >= lo_ + int(c_.size())) return 0;
    return c_[size_t(e - lo_)];
}

std::optional<int> TruncatedSeries::valuation() const {
    if (c_.empty()) return std::nullopt;
    return lo_;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    int lo = std::min(lo_, o.lo_), tr = std::min(trunc_, o.trunc_);
    if (lo >= tr) return TruncatedSeries(tr, {}, tr);
    std::vector<Rat> c(static_cast<size_t>(tr - lo));
    for (size_t i = 0; i < c_.size(); ++i)
        if (lo_ + int(i) < tr) c[size_t(lo_ - lo) + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i)
        if (o.lo_ + int(i) < tr) c[size_t(o.lo_ - lo) + i] += o.c_[i];
    return TruncatedSeries(lo, std::move(c), tr);
}

TruncatedSeries TruncatedSeries::operator*(const Rat& k) const {
    if (sgn(k) == 0) return TruncatedSeries(trunc_, {}, trunc_);
    auto c = c_;
    for (auto& x : c) x *= k;
    return TruncatedSeries(lo_, std::move(c), trunc_);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + o * Rat(-1); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int tr = std::min(trunc_ + o.lo_, o.trunc_ + lo_);
    int lo = lo_ + o.lo_;
    if (c_.empty() || o.c_.empty() || lo >= tr) return TruncatedSeries(tr, {}, tr);
    auto c = kernels::convolve(c_, o.c_, size_t(tr - lo));
    return TruncatedSeries(lo, std::move(c), tr);
}

TruncatedSeries TruncatedSeries::derivative() const {
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * (lo_ + int(i));
    return TruncatedSeries(lo_ - 1, std::move(c), trunc_ - 1);
}

TruncatedSeries TruncatedSeries::shift(int k) const { return TruncatedSeries(lo_ + k, c_, trunc_ + k); }

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_.empty()) throw std::domain_error("inverse of a series with unknown valuation");
    int n = trunc_ - lo_;
    std::vector<Rat> b(static_cast<size_t>(n));
    Rat i0 = 1 / c_[0];
    b[0] = i0;
    for (int m = 1; m < n; ++m) {
        Rat s = 0;
        for (int i = 1; i <= m && i < int(c_.size()); ++i) s += c_[size_t(i)] * b[size_t(m - i)];
        b[size_t(m)] = -i0 * s;
    }
    return TruncatedSeries(-lo_, std::move(b), n - lo_);
}

namespace {

struct SeriesAlg {
    using Elem = TruncatedSeries;
    int trunc;
    Elem zero() const { return TruncatedSeries(trunc, {}, trunc); }
    Elem one() const { return TruncatedSeries::constant(1, trunc); }
    Elem from_rat(const Rat& r) const { return TruncatedSeries::constant(r, trunc); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

// Horner evaluation of sum_j h[j](v) w^j.
TruncatedSeries horner(const std::vector<TruncatedSeries>& h, const TruncatedSeries& w) {
    TruncatedSeries acc = h.back();
    for (size_t j = h.size() - 1; j-- > 0;) acc = acc * w + h[j];
    return acc;
}

SeriesValuations attempt(const CurveInput& c, const Rat& root, int N) {
    int d = c.d;
    RingPtr h = proj_ring();
    SparsePoly Fh = homogenize(c.F, h, d);
    // H(v, w) = Fh(v, 1, w) as coefficients of w^j, each a polynomial in v.
    std::vector<std::vector<Rat>> hc(size_t(d + 1), std::vector<Rat>(size_t(d + 1)));
    for (const auto& [m, co] : Fh.terms()) hc[m.e[2]][m.e[0]] += co;
    if (sgn(hc[size_t(d)][0]) == 0) throw std::invalid_argument("[0:0:1] lies on the curve; shear first");
    std::vector<TruncatedSeries> H, Hw;
    for (int j = 0; j <= d; ++j) H.emplace_back(0, hc[size_t(j)], N + 2);
    for (int j = 1; j <= d; ++j) Hw.push_back(H[size_t(j)] * Rat(j));

    auto at0 = [&](const std::vector<TruncatedSeries>& poly, const Rat& w) {
        Rat s = 0;
        for (size_t j = poly.size(); j-- > 0;) s = s * w + poly[j].coeff(0);
        return s;
    };
    if (sgn(at0(H, root)) != 0) throw std::invalid_argument("root_w is not a root of F(0,1,w)");
    if (sgn(at0(Hw, root)) == 0) throw std::invalid_argument("root_w is a multiple root; shear first");

    // Newton lifting of the branch w(v).
    TruncatedSeries w = TruncatedSeries::constant(root, 1);
    for (int prec = 1; prec < N + 2;) {
        prec = std::min(2 * prec, N + 2);
        std::vector<Rat> wc(static_cast<size_t>(prec));
        for (int e = 0; e < w.trunc_order(); ++e) wc[size_t(e)] = w.coeff(e);
        TruncatedSeries ww(0, wc, prec);
        std::vector<TruncatedSeries> Hp, Hwp;
        for (const auto& s : H) Hp.push_back(TruncatedSeries(0, std::vector<Rat>{}, prec) + s);
        for (const auto& s : Hw) Hwp.push_back(TruncatedSeries(0, std::vector<Rat>{}, prec) + s);
        auto hv = horner(Hp, ww);
        auto hw = horner(Hwp, ww);
        w = ww - hv * hw.inverse();
    }
    SeriesValuations out;
    for (int e = 0; e < N + 2; ++e) out.branch.push_back(w.coeff(e));

    // beta = (1/t, w/t); u_{k+1} = -t^2 du_k/dt.
    TruncatedSeries y = w.shift(-1);
    std::vector<TruncatedSeries> u(kThetaCount);
    TruncatedSeries cur = y;
    for (int k = 0; k < kThetaCount; ++k) {
        cur = cur.derivative().shift(2) * Rat(-1);
        u[size_t(k)] = cur;
    }
    SeriesAlg alg{N};
    for (int i = 1; i <= kThetaCount; ++i) {
        auto th = eval_in(alg, theta_poly(i), u);
        auto v = th.valuation();
        if (!v || *v >= N) throw SeriesTruncationError("increase truncation: Theta" + std::to_string(i) +
                                                       " vanishes to order " + std::to_string(N));
        out.val[size_t(i - 1)] = *v;
        out.lead[size_t(i - 1)] = th.coeff(*v);
        out.v[size_t(i - 1)] = theta_tau(i, d) + *v - theta_d(i) * (d - 1);
    }
    out.trunc = N;
    return out;
}

}  // namespace

SeriesValuations series_valuations(const CurveInput& c, const Rat& root_w, int trunc) {
    for (int N = std::max(trunc, 8);; N *= 2) {
        try {
            return attempt(c, root_w, N);
        } catch (const SeriesTruncationError&) {
            if (N * 2 > 320) throw;
        }
    }
}

int series_multiplicity(const SeriesValuations& s, GroupId g) {
    int best = INT_MAX;
    for (const auto& comp : sigma_shape(g)) {
        int m = comp.x0_power;
        for (const auto& f : comp.factors) m += f.power * s.v[size_t(f.theta - 1)];
        best = std::min(best, m);
    }
    return best;
}

}  // namespace sigcurve
