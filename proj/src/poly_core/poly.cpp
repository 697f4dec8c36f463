#include "sigcurve/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace sigcurve {

int grlex_cmp(const Mono& a, const Mono& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

namespace {

struct GrlexDesc {
    bool operator()(const Mono& a, const Mono& b) const { return grlex_cmp(a, b) > 0; }
};

void sort_terms(std::vector<SparsePoly::Term>& t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return grlex_cmp(a.first, b.first) > 0; });
}

void check_ring(const SparsePoly& a, const SparsePoly& b) {
    if (!same_ring(a.ring(), b.ring())) throw ContractError("ring mismatch");
}

// a = A / den with integer A.
struct Scaled {
    std::vector<Int> num;
    Int den;
};

Scaled scale(const std::vector<SparsePoly::Term>& t) {
    Scaled s;
    s.den = 1;
    for (const auto& [m, c] : t)
        if (c.get_den() != 1) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), c.get_den_mpz_t());
    s.num.resize(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        const Rat& c = t[i].second;
        if (s.den == 1) {
            s.num[i] = c.get_num();
        } else {
            mpz_divexact(s.num[i].get_mpz_t(), s.den.get_mpz_t(), c.get_den_mpz_t());
            s.num[i] *= c.get_num();
        }
    }
    return s;
}

}  // namespace

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    if (int(names_.size()) > kMaxVars) throw ContractError("too many variables");
}

int Ring::index(std::string_view n) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == n) return i;
    return -1;
}

RingPtr make_ring(std::vector<std::string> names) { return std::make_shared<const Ring>(std::move(names)); }

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

SparsePoly SparsePoly::constant(RingPtr r, const Rat& c) {
    SparsePoly p(std::move(r));
    if (sgn(c) != 0) p.terms_.push_back({Mono{}, c});
    return p;
}

SparsePoly SparsePoly::variable(RingPtr r, int i) {
    if (i < 0 || i >= r->size()) throw ContractError("unknown variable");
    SparsePoly p(std::move(r));
    Mono m;
    m.e[i] = 1;
    p.terms_.push_back({m, Rat(1)});
    return p;
}

SparsePoly SparsePoly::variable(RingPtr r, std::string_view name) {
    int i = r->index(name);
    if (i < 0) throw ContractError("unknown variable " + std::string(name));
    return variable(std::move(r), i);
}

SparsePoly SparsePoly::monomial(RingPtr r, const Mono& m, const Rat& c) {
    SparsePoly p(std::move(r));
    if (sgn(c) != 0) p.terms_.push_back({m, c});
    return p;
}

SparsePoly SparsePoly::from_terms(RingPtr r, std::vector<Term> t) {
    for (auto& x : t) x.second.canonicalize();
    sort_terms(t);
    std::vector<Term> out;
    out.reserve(t.size());
    for (auto& x : t) {
        if (!out.empty() && out.back().first == x.first)
            out.back().second += x.second;
        else {
            if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
            out.push_back(std::move(x));
        }
    }
    if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
    return from_sorted(std::move(r), std::move(out));
}

SparsePoly SparsePoly::from_sorted(RingPtr r, std::vector<Term> t) {
    SparsePoly p(std::move(r));
    p.terms_ = std::move(t);
    return p;
}

bool SparsePoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.deg() == 0); }

Rat SparsePoly::constant_term() const {
    if (terms_.empty() || terms_.back().first.deg() != 0) return Rat(0);
    return terms_.back().second;
}

int SparsePoly::total_degree() const { return terms_.empty() ? kDegNegInf : terms_.front().first.deg(); }

int SparsePoly::degree_in(int var) const {
    if (terms_.empty()) return kDegNegInf;
    int d = 0;
    for (const auto& t : terms_) d = std::max<int>(d, t.first.e[var]);
    return d;
}

Rat SparsePoly::coeff(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& k) { return grlex_cmp(t.first, k) > 0; });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rat(0);
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

namespace {

std::vector<SparsePoly::Term> merge(const std::vector<SparsePoly::Term>& a, const std::vector<SparsePoly::Term>& b,
                                    bool subtract) {
    std::vector<SparsePoly::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size())
            c = -1;
        else if (j == b.size())
            c = 1;
        else
            c = grlex_cmp(a[i].first, b[j].first);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
            if (subtract) out.back().second = -out.back().second;
        } else {
            Rat s = a[i].second;
            if (subtract) s -= b[j].second; else s += b[j].second;
            if (sgn(s) != 0) out.push_back({a[i].first, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<SparsePoly::Term> multiply_terms(const std::vector<SparsePoly::Term>& a,
                                             const std::vector<SparsePoly::Term>& b, int nvars) {
    if (a.empty() || b.empty()) return {};
    Scaled sa = scale(a), sb = scale(b);
    Int den = sa.den * sb.den;

    // Dense accumulator when the exponent box is small relative to the work.
    std::array<int, kMaxVars> maxe{};
    for (const auto& t : a)
        for (int v = 0; v < nvars; ++v) maxe[v] = std::max<int>(maxe[v], t.first.e[v]);
    std::array<int, kMaxVars> maxb{};
    for (const auto& t : b)
        for (int v = 0; v < nvars; ++v) maxb[v] = std::max<int>(maxb[v], t.first.e[v]);
    double cells = 1;
    std::array<size_t, kMaxVars> stride{};
    for (int v = nvars - 1; v >= 0; --v) {
        stride[v] = size_t(cells);
        cells *= double(maxe[v] + maxb[v] + 1);
    }
    double work = double(a.size()) * double(b.size());
    std::vector<SparsePoly::Term> out;
    if (cells <= (1 << 21) && cells <= 8 * work) {
        std::vector<Int> acc(static_cast<size_t>(cells));
        std::vector<char> used(static_cast<size_t>(cells), 0);
        std::vector<size_t> ia(a.size()), ib(b.size());
        for (size_t i = 0; i < a.size(); ++i)
            for (int v = 0; v < nvars; ++v) ia[i] += stride[v] * a[i].first.e[v];
        for (size_t j = 0; j < b.size(); ++j)
            for (int v = 0; v < nvars; ++v) ib[j] += stride[v] * b[j].first.e[v];
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) {
                size_t k = ia[i] + ib[j];
                mpz_addmul(acc[k].get_mpz_t(), sa.num[i].get_mpz_t(), sb.num[j].get_mpz_t());
                used[k] = 1;
            }
        for (size_t k = 0; k < acc.size(); ++k) {
            if (!used[k] || acc[k] == 0) continue;
            Mono m;
            size_t r = k;
            for (int v = 0; v < nvars; ++v) {
                m.e[v] = uint16_t(r / stride[v]);
                r %= stride[v];
            }
            Rat c(acc[k], den);
            c.canonicalize();
            out.push_back({m, std::move(c)});
        }
    } else {
        std::unordered_map<Mono, Int, MonoHash> acc;
        acc.reserve(size_t(std::min(work, 4e6)));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) {
                Int& slot = acc[a[i].first * b[j].first];
                mpz_addmul(slot.get_mpz_t(), sa.num[i].get_mpz_t(), sb.num[j].get_mpz_t());
            }
        out.reserve(acc.size());
        for (auto& [m, z] : acc) {
            if (z == 0) continue;
            Rat c(z, den);
            c.canonicalize();
            out.push_back({m, std::move(c)});
        }
    }
    sort_terms(out);
    return out;
}

}  // namespace

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    check_ring(*this, o);
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    check_ring(*this, o);
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
    check_ring(*this, o);
    terms_ = multiply_terms(terms_, o.terms_, ring_->size());
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rat& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second) return false;
    return true;
}

SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    check_ring(a, b);
    return SparsePoly::from_sorted(a.ring(), multiply_terms(a.terms(), b.terms(), a.ring()->size()));
}
SparsePoly operator*(SparsePoly a, const Rat& c) { return a *= c; }
SparsePoly operator*(const Rat& c, SparsePoly a) { return a *= c; }

SparsePoly pow(const SparsePoly& p, unsigned e) {
    SparsePoly r = SparsePoly::constant(p.ring(), Rat(1));
    SparsePoly b = p;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

SparsePoly derivative(const SparsePoly& p, int var) {
    if (var < 0 || var >= p.ring()->size()) throw ContractError("unknown variable");
    std::vector<SparsePoly::Term> out;
    for (const auto& [m, c] : p.terms()) {
        if (m.e[var] == 0) continue;
        Mono n = m;
        n.e[var]--;
        out.push_back({n, c * m.e[var]});
    }
    return SparsePoly::from_terms(p.ring(), std::move(out));
}

SparsePoly derivative(const SparsePoly& p, std::string_view var) {
    int i = p.ring()->index(var);
    if (i < 0) throw ContractError("unknown variable " + std::string(var));
    return derivative(p, i);
}

namespace {

template <class T>
T eval_generic(const SparsePoly& p, const std::vector<T>& pt) {
    int n = p.ring()->size();
    if (int(pt.size()) != n) throw ContractError("point dimension mismatch");
    std::vector<std::vector<T>> pw(n);
    for (int v = 0; v < n; ++v) {
        int d = std::max(0, p.degree_in(v));
        pw[v].resize(d + 1);
        pw[v][0] = T(1);
        for (int k = 1; k <= d; ++k) pw[v][k] = pw[v][k - 1] * pt[v];
    }
    T s(0);
    for (const auto& [m, c] : p.terms()) {
        T t;
        if constexpr (std::is_same_v<T, Rat>)
            t = c;
        else
            t = T(c.get_d());
        for (int v = 0; v < n; ++v)
            if (m.e[v]) t *= pw[v][m.e[v]];
        s += t;
    }
    return s;
}

}  // namespace

Rat evaluate(const SparsePoly& p, const std::vector<Rat>& point) { return eval_generic<Rat>(p, point); }
double evaluate_double(const SparsePoly& p, const std::vector<double>& point) {
    return eval_generic<double>(p, point);
}
long double evaluate_ld(const SparsePoly& p, const std::vector<long double>& point) {
    int n = p.ring()->size();
    if (int(point.size()) != n) throw ContractError("point dimension mismatch");
    long double s = 0;
    for (const auto& [m, c] : p.terms()) {
        long double t = (long double)mpq_get_d(c.get_mpq_t());
        if (c.get_den() != 1 || abs(c.get_num()) > Int("9007199254740992")) {
            mpf_class f(c, 128);
            t = (long double)f.get_d();
        }
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < m.e[v]; ++k) t *= point[v];
        s += t;
    }
    return s;
}

SparsePoly compose(const SparsePoly& p, const std::vector<SparsePoly>& images, const RingPtr& target) {
    int n = p.ring()->size();
    if (int(images.size()) != n) throw ContractError("compose arity mismatch");
    for (const auto& im : images)
        if (!same_ring(im.ring(), target)) throw ContractError("compose ring mismatch");
    // Horner in the first variable that occurs, recursing on coefficients.
    int v = -1;
    for (int i = 0; i < n && v < 0; ++i)
        if (p.degree_in(i) > 0) v = i;
    if (v < 0) return SparsePoly::constant(target, p.constant_term());
    auto cs = coefficients_in(p, v);
    SparsePoly acc(target);
    for (int k = int(cs.size()) - 1; k >= 0; --k) {
        acc = acc * images[v];
        if (!cs[k].is_zero()) acc += compose(cs[k], images, target);
    }
    return acc;
}

SparsePoly substitute(const SparsePoly& p, int var, const SparsePoly& q) {
    check_ring(p, q);
    std::vector<SparsePoly> images;
    for (int i = 0; i < p.ring()->size(); ++i)
        images.push_back(i == var ? q : SparsePoly::variable(p.ring(), i));
    auto cs = coefficients_in(p, var);
    SparsePoly acc(p.ring());
    for (int k = int(cs.size()) - 1; k >= 0; --k) {
        acc = acc * q;
        acc += cs[k];
    }
    return acc;
}

SparsePoly change_ring(const SparsePoly& p, const RingPtr& target) {
    std::vector<int> map(p.ring()->size());
    for (int i = 0; i < p.ring()->size(); ++i) {
        map[i] = target->index(p.ring()->name(i));
        if (map[i] < 0 && p.degree_in(i) > 0)
            throw ContractError("variable " + p.ring()->name(i) + " missing in target ring");
    }
    std::vector<SparsePoly::Term> out;
    for (const auto& [m, c] : p.terms()) {
        Mono n;
        for (int i = 0; i < p.ring()->size(); ++i)
            if (m.e[i]) n.e[map[i]] = m.e[i];
        out.push_back({n, c});
    }
    return SparsePoly::from_terms(target, std::move(out));
}

SparsePoly homogenize(const SparsePoly& p, const RingPtr& target, int degree) {
    int n = p.ring()->size();
    if (target->size() != n + 1) throw ContractError("homogenize: target ring must have one extra variable");
    if (!p.is_zero() && degree < p.total_degree()) throw ContractError("homogenize: degree too small");
    std::vector<SparsePoly::Term> out;
    for (const auto& [m, c] : p.terms()) {
        Mono h;
        h.e[0] = uint16_t(degree - m.deg());
        for (int i = 0; i < n; ++i) h.e[i + 1] = m.e[i];
        out.push_back({h, c});
    }
    return SparsePoly::from_terms(target, std::move(out));
}

SparsePoly dehomogenize(const SparsePoly& p, int var, const RingPtr& out, const Rat& value) {
    int n = p.ring()->size();
    if (out->size() != n - 1) throw ContractError("dehomogenize: output ring size");
    std::vector<SparsePoly::Term> t;
    for (const auto& [m, c] : p.terms()) {
        Mono d;
        int j = 0;
        for (int i = 0; i < n; ++i)
            if (i != var) d.e[j++] = m.e[i];
        t.push_back({d, c * pow(value, m.e[var])});
    }
    return SparsePoly::from_terms(out, std::move(t));
}

bool is_homogeneous(const SparsePoly& p) {
    if (p.is_zero()) return true;
    int d = p.total_degree();
    for (const auto& t : p.terms())
        if (t.first.deg() != d) return false;
    return true;
}

std::pair<Rat, SparsePoly> content_primitive(const SparsePoly& p) {
    if (p.is_zero()) return {Rat(0), p};
    Int g = 0, l = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rat cont(g, l);
    cont.canonicalize();
    if (sgn(p.lead().second) < 0) cont = -cont;
    SparsePoly q = p;
    Rat inv = 1 / cont;
    q *= inv;
    return {cont, q};
}

Rat content(const SparsePoly& p) { return content_primitive(p).first; }
SparsePoly primitive_part(const SparsePoly& p) { return content_primitive(p).second; }

namespace {

// Division with remainder under grlex; q*b + r = a, no term of r divisible by lt(b).
std::pair<SparsePoly, SparsePoly> divrem(const SparsePoly& a, const SparsePoly& b, bool need_exact) {
    if (b.is_zero()) throw ContractError("division by zero polynomial");
    check_ring(a, b);
    std::map<Mono, Rat, GrlexDesc> r;
    for (const auto& [m, c] : a.terms()) r.emplace(m, c);
    const auto& [lm, lc] = b.lead();
    std::vector<SparsePoly::Term> q, rem;
    while (!r.empty()) {
        auto it = r.begin();
        if (!lm.divides(it->first)) {
            if (need_exact) throw ContractError("inexact division");
            rem.push_back(*it);
            r.erase(it);
            continue;
        }
        Mono qm = it->first / lm;
        Rat qc = it->second / lc;
        r.erase(it);
        for (size_t k = 1; k < b.terms().size(); ++k) {
            Mono m = b.terms()[k].first * qm;
            auto [jt, inserted] = r.try_emplace(m, 0);
            jt->second -= qc * b.terms()[k].second;
            if (sgn(jt->second) == 0) r.erase(jt);
        }
        q.push_back({qm, std::move(qc)});
    }
    return {SparsePoly::from_sorted(a.ring(), std::move(q)), SparsePoly::from_sorted(a.ring(), std::move(rem))};
}

}  // namespace

SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b) { return divrem(a, b, true).first; }

bool divides(const SparsePoly& b, const SparsePoly& a) {
    if (b.is_zero()) return a.is_zero();
    return divrem(a, b, false).second.is_zero();
}

std::vector<SparsePoly> coefficients_in(const SparsePoly& p, int var) {
    int d = std::max(0, p.degree_in(var));
    std::vector<std::vector<SparsePoly::Term>> parts(d + 1);
    for (const auto& [m, c] : p.terms()) {
        Mono n = m;
        int k = n.e[var];
        n.e[var] = 0;
        parts[k].push_back({n, c});
    }
    std::vector<SparsePoly> out;
    out.reserve(d + 1);
    for (auto& t : parts) out.push_back(SparsePoly::from_terms(p.ring(), std::move(t)));
    return out;
}

SparsePoly from_coefficients(const std::vector<SparsePoly>& c, int var, const RingPtr& r) {
    std::vector<SparsePoly::Term> out;
    for (size_t k = 0; k < c.size(); ++k)
        for (const auto& [m, x] : c[k].terms()) {
            Mono n = m;
            n.e[var] = uint16_t(n.e[var] + k);
            out.push_back({n, x});
        }
    return SparsePoly::from_terms(r, std::move(out));
}

namespace {

void trim(std::vector<SparsePoly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}


}  // namespace

SparsePoly pseudo_remainder(const SparsePoly& a, const SparsePoly& b, int var) {
    check_ring(a, b);
    auto bc = coefficients_in(b, var);
    trim(bc);
    if (bc.empty()) throw ContractError("pseudo-remainder by zero");
    int db = int(bc.size()) - 1;
    const SparsePoly& lb = bc.back();
    auto rc = coefficients_in(a, var);
    trim(rc);
    while (int(rc.size()) - 1 >= db) {
        int dr = int(rc.size()) - 1;
        SparsePoly lr = rc.back();
        for (auto& x : rc) x = x * lb;
        for (int k = 0; k <= db; ++k) rc[dr - db + k] -= lr * bc[k];
        trim(rc);
    }
    return from_coefficients(rc, var, a.ring());
}

SparsePoly reduce_monic(const SparsePoly& a, const SparsePoly& b, int var) {
    auto bc = coefficients_in(b, var);
    trim(bc);
    if (bc.empty() || !bc.back().is_constant()) throw ContractError("reduce_monic: divisor not monic");
    int db = int(bc.size()) - 1;
    Rat inv = 1 / bc.back().constant_term();
    auto rc = coefficients_in(a, var);
    trim(rc);
    while (int(rc.size()) - 1 >= db) {
        int dr = int(rc.size()) - 1;
        SparsePoly lr = rc.back() * inv;
        for (int k = 0; k <= db; ++k) rc[dr - db + k] -= lr * bc[k];
        trim(rc);
    }
    return from_coefficients(rc, var, a.ring());
}

namespace {

int main_var(const SparsePoly& a, const SparsePoly& b) {
    for (int i = 0; i < a.ring()->size(); ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) return i;
    return -1;
}

SparsePoly normalize_gcd(const SparsePoly& g) {
    if (g.is_zero()) return g;
    return primitive_part(g);
}

SparsePoly content_in(const SparsePoly& p, int var);

SparsePoly primitive_in(const SparsePoly& p, int var) {
    if (p.is_zero()) return p;
    SparsePoly c = content_in(p, var);
    return divide_exact(p, c);
}

SparsePoly gcd_rec(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero()) return normalize_gcd(b);
    if (b.is_zero()) return normalize_gcd(a);
    int v = main_var(a, b);
    if (v < 0) return SparsePoly::constant(a.ring(), Rat(1));
    if (a.degree_in(v) == 0) return gcd_rec(a, content_in(b, v));
    if (b.degree_in(v) == 0) return gcd_rec(content_in(a, v), b);
    SparsePoly ca = content_in(a, v), cb = content_in(b, v);
    SparsePoly c = gcd_rec(ca, cb);
    SparsePoly p = divide_exact(a, ca), q = divide_exact(b, cb);
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    while (!q.is_zero()) {
        SparsePoly r = pseudo_remainder(p, q, v);
        p = q;
        q = r.is_zero() ? r : primitive_part(primitive_in(r, v));
        if (!q.is_zero() && q.degree_in(v) == 0) {
            p = SparsePoly::constant(a.ring(), Rat(1));
            break;
        }
    }
    SparsePoly g = p.degree_in(v) > 0 ? primitive_in(p, v) : SparsePoly::constant(a.ring(), Rat(1));
    return normalize_gcd(c * g);
}

SparsePoly content_in(const SparsePoly& p, int var) {
    auto cs = coefficients_in(p, var);
    SparsePoly g(p.ring());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = gcd_rec(g, c);
        if (g.is_constant()) return SparsePoly::constant(p.ring(), Rat(1));
    }
    return g;
}

}  // namespace

SparsePoly gcd(const SparsePoly& a, const SparsePoly& b) {
    check_ring(a, b);
    return gcd_rec(a, b);
}

SparsePoly square_free_part(const SparsePoly& p) {
    if (p.is_zero() || p.is_constant()) return primitive_part(p);
    SparsePoly g = p;
    SparsePoly q = primitive_part(p);
    for (int v = 0; v < p.ring()->size(); ++v) {
        if (q.degree_in(v) <= 0) continue;
        SparsePoly d = gcd(q, derivative(q, v));
        if (!d.is_constant()) q = divide_exact(q, d);
    }
    return primitive_part(q);
}

namespace {

SparsePoly det_bareiss(std::vector<std::vector<SparsePoly>> m, const RingPtr& r) {
    size_t n = m.size();
    if (n == 0) return SparsePoly::constant(r, Rat(1));
    SparsePoly prev = SparsePoly::constant(r, Rat(1));
    bool neg = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return SparsePoly(r);
            std::swap(m[k], m[piv]);
            neg = !neg;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                SparsePoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(t, prev);
            }
        prev = m[k][k];
    }
    return neg ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

SparsePoly resultant(const SparsePoly& p, const SparsePoly& q, int var) {
    check_ring(p, q);
    if (p.is_zero() || q.is_zero()) throw ContractError("resultant of zero polynomial");
    auto a = coefficients_in(p, var), b = coefficients_in(q, var);
    trim(a);
    trim(b);
    int m = int(a.size()) - 1, n = int(b.size()) - 1;
    if (m == 0 && n == 0) throw ContractError("resultant: both polynomials constant in variable");
    if (m == 0) return pow(a[0], unsigned(n));
    if (n == 0) return pow(b[0], unsigned(m));
    int sz = m + n;
    std::vector<std::vector<SparsePoly>> s(sz, std::vector<SparsePoly>(sz, SparsePoly(p.ring())));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
    return det_bareiss(std::move(s), p.ring());
}

std::string to_string(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool neg = sgn(c) < 0;
        Rat a = abs(c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool need_star = false;
        if (m.deg() == 0 || a != 1) {
            os << a.get_str();
            need_star = true;
        }
        for (int v = 0; v < p.ring()->size(); ++v) {
            if (!m.e[v]) continue;
            if (need_star) os << " * ";
            os << p.ring()->name(v);
            if (m.e[v] > 1) os << "^" << m.e[v];
            need_star = true;
        }
    }
    return os.str();
}

RatFunc::RatFunc(SparsePoly num) : num_(std::move(num)), den_(SparsePoly::constant(num_.ring(), Rat(1))) {}

RatFunc::RatFunc(SparsePoly num, SparsePoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PoleError("zero denominator");
    check_ring(num_, den_);
    if (num_.is_zero()) {
        den_ = SparsePoly::constant(num_.ring(), Rat(1));
        return;
    }
    SparsePoly g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    auto [c, d] = content_primitive(den_);
    den_ = d;
    num_ *= 1 / c;
}

RatFunc RatFunc::coprime(SparsePoly num, SparsePoly den) {
    if (den.is_zero()) throw PoleError("zero denominator");
    check_ring(num, den);
    RatFunc r;
    auto [c, d] = content_primitive(den);
    r.den_ = d;
    r.num_ = num.is_zero() ? num : num * (1 / c);
    if (num.is_zero()) r.den_ = SparsePoly::constant(num.ring(), Rat(1));
    return r;
}

Rat RatFunc::evaluate(const std::vector<Rat>& point) const {
    Rat d = sigcurve::evaluate(den_, point);
    if (sgn(d) == 0) throw PoleError("pole");
    return sigcurve::evaluate(num_, point) / d;
}

double RatFunc::evaluate_double(const std::vector<double>& point) const {
    return sigcurve::evaluate_double(num_, point) / sigcurve::evaluate_double(den_, point);
}

RatFunc RatFunc::operator+(const RatFunc& o) const { return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.num_.is_zero()) throw PoleError("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc substitute(const SparsePoly& p, int var, const RatFunc& expr) {
    // p(.., N/D, ..) = sum c_k N^k D^(n-k) / D^n
    auto cs = coefficients_in(p, var);
    int n = int(cs.size()) - 1;
    SparsePoly num(p.ring());
    SparsePoly npow = SparsePoly::constant(p.ring(), Rat(1));
    std::vector<SparsePoly> dpow(n + 1);
    dpow[0] = SparsePoly::constant(p.ring(), Rat(1));
    for (int k = 1; k <= n; ++k) dpow[k] = dpow[k - 1] * expr.den();
    for (int k = 0; k <= n; ++k) {
        if (!cs[k].is_zero()) num += cs[k] * npow * dpow[n - k];
        if (k < n) npow = npow * expr.num();
    }
    return RatFunc(num, dpow[n]);
}

std::string to_string(const RatFunc& f) {
    if (f.den().is_constant() && f.den().constant_term() == 1) return to_string(f.num());
    return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

}  // namespace sigcurve
