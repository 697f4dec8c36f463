#include "sigcurve/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace sigcurve {

Budget parse_budget(const std::string& s) {
    Budget b;
    std::vector<std::string> parts;
    size_t start = 0;
    for (;;) {
        size_t c = s.find(',', start);
        parts.push_back(s.substr(start, c == std::string::npos ? std::string::npos : c - start));
        if (c == std::string::npos) break;
        start = c + 1;
    }
    auto num = [&](const std::string& t) {
        size_t pos = 0;
        double v = std::stod(t, &pos);
        if (pos != t.size() || !(v > 0)) throw std::invalid_argument("");
        return v;
    };
    try {
        if (parts.size() > 3) throw std::invalid_argument("");
        auto whole = [&](const std::string& t) {
            double v = num(t);
            if (v != double(long(v))) throw std::invalid_argument("");
            return long(v);
        };
        b.max_basis = size_t(whole(parts[0]));
        if (parts.size() > 1) b.max_degree = int(whole(parts[1]));
        if (parts.size() > 2) b.max_seconds = num(parts[2]);
    } catch (const std::exception&) {
        throw std::invalid_argument("budget must look like N, N,D or N,D,SECONDS with positive numbers: " + s);
    }
    return b;
}

int BlockOrder::compare(const Mono& a, const Mono& b) const {
    int nb = 0;
    for (int x : block) nb = std::max(nb, x + 1);
    for (int k = 0; k < nb; ++k) {
        int da = 0, db = 0;
        for (size_t v = 0; v < block.size(); ++v)
            if (block[v] == k) {
                da += a.e[v];
                db += b.e[v];
            }
        if (da != db) return da > db ? 1 : -1;
        for (size_t v = block.size(); v-- > 0;)
            if (block[v] == k && a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    }
    return 0;
}

namespace {

using Term = std::pair<Mono, Rat>;

struct GPoly {
    std::vector<Term> t;  // descending in the order, monic
    int sugar = 0;
    bool active = true;
    const Mono& lm() const { return t.front().first; }
};

Mono lcm(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool coprime(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

class Engine {
public:
    Engine(const BlockOrder& o, const Budget& b, int nvars)
        : ord_(o), budget_(b), nvars_(nvars), start_(std::chrono::steady_clock::now()) {}

    void check_clock() const {
        std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
        if (el.count() > budget_.max_seconds)
            throw BudgetExceeded("elimination budget exceeded: " + std::to_string(int(el.count())) + " s");
    }

    void sort_desc(std::vector<Term>& t) const {
        std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord_.compare(a.first, b.first) > 0; });
    }

    void make_monic(std::vector<Term>& t) const {
        if (t.empty() || t.front().second == 1) return;
        Rat il = 1 / t.front().second;
        for (auto& x : t) x.second *= il;
    }

    // f - c * m * g
    std::vector<Term> sub_mul(const std::vector<Term>& f, const Rat& c, const Mono& m, const std::vector<Term>& g) const {
        std::vector<Term> out;
        out.reserve(f.size() + g.size());
        size_t i = 0, j = 0;
        while (i < f.size() || j < g.size()) {
            int cmp;
            Mono gm;
            if (j < g.size()) gm = g[j].first * m;
            if (i == f.size())
                cmp = -1;
            else if (j == g.size())
                cmp = 1;
            else
                cmp = ord_.compare(f[i].first, gm);
            if (cmp > 0) {
                out.push_back(f[i++]);
            } else if (cmp < 0) {
                out.push_back({gm, -c * g[j].second});
                ++j;
            } else {
                Rat v = f[i].second - c * g[j].second;
                if (sgn(v) != 0) out.push_back({f[i].first, std::move(v)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    int divisor(const Mono& m) const {
        for (size_t k = 0; k < G_.size(); ++k)
            if (G_[k].active && G_[k].lm().divides(m)) return int(k);
        return -1;
    }

    // Full reduction by the active basis.
    std::vector<Term> reduce(std::vector<Term> f, int& sugar) const {
        size_t pos = 0;
        while (pos < f.size()) {
            int k = divisor(f[pos].first);
            if (k < 0) {
                ++pos;
                continue;
            }
            const GPoly& g = G_[k];
            Mono m = f[pos].first / g.lm();
            sugar = std::max(sugar, m.deg() + g.sugar);
            Rat c = f[pos].second;
            std::vector<Term> head(f.begin(), f.begin() + long(pos));
            std::vector<Term> tail(f.begin() + long(pos), f.end());
            tail = sub_mul(tail, c, m, g.t);
            head.insert(head.end(), tail.begin(), tail.end());
            f = std::move(head);
            check_clock();
            if (f.size() > budget_.max_terms)
                throw BudgetExceeded("elimination budget exceeded: polynomial with " + std::to_string(f.size()) +
                                     " terms");
        }
        return f;
    }

    struct Pair {
        int i, j;
        Mono lcm;
        int sugar;
    };

    void check_poly(const std::vector<Term>& t) const {
        int deg = 0;
        for (const auto& x : t) deg = std::max(deg, x.first.deg());
        if (deg > budget_.max_degree)
            throw BudgetExceeded("elimination budget exceeded: degree " + std::to_string(deg) + " > " +
                                 std::to_string(budget_.max_degree));
    }

    void insert(std::vector<Term> h, int sugar) {
        check_clock();
        make_monic(h);
        check_poly(h);
        int hi = int(G_.size());
        G_.push_back(GPoly{std::move(h), sugar, true});
        if (int(G_.size()) > int(budget_.max_basis))
            throw BudgetExceeded("elimination budget exceeded: basis size " + std::to_string(G_.size()));
        const Mono& lh = G_[hi].lm();
        // Gebauer-Moeller update.
        std::vector<Pair> C, D;
        for (int g = 0; g < hi; ++g)
            if (G_[g].active) {
                Mono l = lcm(lh, G_[g].lm());
                int s = std::max(G_[hi].sugar + (l.deg() - lh.deg()), G_[g].sugar + (l.deg() - G_[g].lm().deg()));
                C.push_back({hi, g, l, s});
            }
        for (size_t a = 0; a < C.size(); ++a) {
            bool keep = coprime(lh, G_[C[a].j].lm());
            if (!keep) {
                keep = true;
                for (size_t b = 0; b < C.size() && keep; ++b)
                    if (b != a && C[b].lcm.divides(C[a].lcm) && !(C[b].lcm == C[a].lcm && b > a)) keep = false;
                for (const auto& p : D)
                    if (keep && p.lcm.divides(C[a].lcm)) keep = false;
            }
            if (keep) D.push_back(C[a]);
        }
        std::vector<Pair> E;
        for (const auto& p : D)
            if (!coprime(lh, G_[p.j].lm())) E.push_back(p);
        std::vector<Pair> B2;
        for (const auto& p : B_) {
            bool drop = lh.divides(p.lcm) && lcm(G_[p.i].lm(), lh) != p.lcm && lcm(lh, G_[p.j].lm()) != p.lcm;
            if (!drop) B2.push_back(p);
        }
        B2.insert(B2.end(), E.begin(), E.end());
        B_ = std::move(B2);
        for (int g = 0; g < hi; ++g)
            if (G_[g].active && lh.divides(G_[g].lm())) G_[g].active = false;
    }

    void run(const std::vector<std::vector<Term>>& gens) {
        for (auto t : gens) {
            if (t.empty()) continue;
            sort_desc(t);
            int s = 0;
            for (const auto& x : t) s = std::max(s, x.first.deg());
            int sugar = s;
            auto r = reduce(std::move(t), sugar);
            if (!r.empty()) insert(std::move(r), sugar);
        }
        while (!B_.empty()) {
            auto it = std::min_element(B_.begin(), B_.end(), [&](const Pair& a, const Pair& b) {
                if (a.sugar != b.sugar) return a.sugar < b.sugar;
                return ord_.compare(a.lcm, b.lcm) < 0;
            });
            Pair p = *it;
            B_.erase(it);
            const GPoly& a = G_[p.i];
            const GPoly& b = G_[p.j];
            auto s = sub_mul(mul_mono(a.t, p.lcm / a.lm()), 1, p.lcm / b.lm(), b.t);
            int sugar = p.sugar;
            auto r = reduce(std::move(s), sugar);
            if (!r.empty()) insert(std::move(r), sugar);
        }
    }

    std::vector<Term> mul_mono(const std::vector<Term>& t, const Mono& m) const {
        std::vector<Term> r;
        r.reserve(t.size());
        for (const auto& x : t) r.push_back({x.first * m, x.second});
        return r;
    }

    // Interreduced minimal basis.
    std::vector<std::vector<Term>> reduced() {
        std::vector<int> idx;
        for (size_t k = 0; k < G_.size(); ++k)
            if (G_[k].active) idx.push_back(int(k));
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return ord_.compare(G_[a].lm(), G_[b].lm()) < 0; });
        std::vector<std::vector<Term>> out;
        for (int k : idx) {
            // Reduce the tail by the others.
            G_[k].active = false;
            std::vector<Term> head{G_[k].t.front()};
            std::vector<Term> tail(G_[k].t.begin() + 1, G_[k].t.end());
            int s = 0;
            tail = reduce(std::move(tail), s);
            head.insert(head.end(), tail.begin(), tail.end());
            G_[k].t = head;
            G_[k].active = true;
            out.push_back(head);
        }
        return out;
    }

private:
    const BlockOrder& ord_;
    Budget budget_;
    int nvars_;
    std::chrono::steady_clock::time_point start_;
    std::vector<GPoly> G_;
    std::vector<Pair> B_;
};

}  // namespace

std::vector<SparsePoly> groebner_basis(const std::vector<SparsePoly>& gens, const BlockOrder& order,
                                       const Budget& budget) {
    if (gens.empty()) throw std::invalid_argument("groebner: empty generator list");
    RingPtr r = gens.front().ring();
    for (const auto& g : gens)
        if (!same_ring(g.ring(), r)) throw ContractError("groebner: ring mismatch");
    Engine eng(order, budget, r->size());
    std::vector<std::vector<Term>> in;
    for (const auto& g : gens) in.push_back(g.terms());
    eng.run(in);
    std::vector<SparsePoly> out;
    for (auto& t : eng.reduced()) out.push_back(SparsePoly::from_terms(r, std::move(t)));
    return out;
}

std::vector<SparsePoly> groebner_eliminate_blocks(const std::vector<SparsePoly>& gens,
                                                  const std::vector<std::vector<std::string>>& blocks,
                                                  const Budget& budget) {
    if (gens.empty()) throw std::invalid_argument("groebner: empty generator list");
    RingPtr r = gens.front().ring();
    BlockOrder ord;
    ord.block.assign(size_t(r->size()), -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (const auto& n : blocks[b]) {
            int v = r->index(n);
            if (v < 0) throw ContractError("groebner: unknown variable " + n);
            ord.block[v] = int(b);
        }
    for (auto& b : ord.block)
        if (b < 0) throw ContractError("groebner: every variable needs a block");
    auto basis = groebner_basis(gens, ord, budget);
    int keep_block = int(blocks.size()) - 1;
    std::vector<SparsePoly> out;
    for (auto& p : basis) {
        bool ok = true;
        for (int v = 0; v < r->size() && ok; ++v)
            if (ord.block[v] != keep_block && p.degree_in(v) > 0) ok = false;
        if (ok) out.push_back(std::move(p));
    }
    return out;
}

std::vector<SparsePoly> groebner_eliminate(const std::vector<SparsePoly>& gens, const std::vector<std::string>& keep,
                                           const Budget& budget) {
    if (gens.empty()) throw std::invalid_argument("groebner: empty generator list");
    RingPtr r = gens.front().ring();
    std::vector<std::string> elim;
    for (int v = 0; v < r->size(); ++v)
        if (std::find(keep.begin(), keep.end(), r->name(v)) == keep.end()) elim.push_back(r->name(v));
    if (elim.empty()) return groebner_eliminate_blocks(gens, {keep}, budget);
    return groebner_eliminate_blocks(gens, {elim, keep}, budget);
}

}  // namespace sigcurve
