#pragma once

#include "sigcurve/field.hpp"
#include "sigcurve/jets.hpp"
#include "sigcurve/theta.hpp"

#include <optional>

namespace sigcurve {

// Bivariate polynomial over K stored as coefficients of y^j, each a dense polynomial in x.
template <class K>
struct BiPoly {
    std::vector<dense::Poly<K>> by_y;

    static BiPoly from_sparse(const K& k, const SparsePoly& p) {
        BiPoly r;
        int dy = std::max(0, p.degree_in(1));
        int dx = std::max(0, p.degree_in(0));
        r.by_y.assign(size_t(dy + 1), dense::Poly<K>(size_t(dx + 1), k.zero()));
        for (const auto& [m, c] : p.terms()) {
            auto& slot = r.by_y[m.e[1]][m.e[0]];
            slot = k.add(slot, k.from_rat(c));
        }
        for (auto& q : r.by_y) dense::trim(k, q);
        return r;
    }
    dense::Poly<K> at_x(const K& k, const typename K::E& x0) const {
        dense::Poly<K> r(by_y.size(), k.zero());
        for (size_t j = 0; j < by_y.size(); ++j) r[j] = dense::eval(k, by_y[j], x0);
        dense::trim(k, r);
        return r;
    }
};

// Jets of the curve at the generic point of the fiber x = x0, i.e. inside K[y]/F(x0, y).
template <class K>
class FiberEvaluator {
public:
    using E = typename K::E;
    using Elem = dense::Poly<K>;

    struct Point {
        E x0;
        Quotient<K> A;
        Elem fy, fy_inv;
        std::vector<Elem> u;  // u[k-1] = y^(k)
    };

    // Throws std::domain_error if some coefficient does not reduce into K.
    FiberEvaluator(K k, const JetRestriction& j) : k_(std::move(k)), n_(int(j.P.size())) {
        F_ = BiPoly<K>::from_sparse(k_, j.curve.F);
        Fy_ = BiPoly<K>::from_sparse(k_, j.Fy);
        for (const auto& p : j.P) P_.push_back(BiPoly<K>::from_sparse(k_, p));
        dy_ = j.curve.F.degree_in(1);
    }

    const K& field() const { return k_; }
    int jet_order() const { return n_; }

    // nullopt when the y-degree drops or the fiber is not etale.
    std::optional<Point> at(const E& x0) const {
        auto m = F_.at_x(k_, x0);
        if (dense::deg<K>(m) != dy_ || dy_ < 1) return std::nullopt;
        Quotient<K> A(k_, m);
        auto fy = A.reduce(Fy_.at_x(k_, x0));
        if (!A.is_unit(fy)) return std::nullopt;
        Point pt{x0, A, fy, A.inv(fy), {}};
        Elem inv_pow = pt.fy_inv;  // F_y^-(2k-1)
        Elem inv2 = A.mul(pt.fy_inv, pt.fy_inv);
        for (int k = 1; k <= n_; ++k) {
            pt.u.push_back(A.mul(A.reduce(P_[k - 1].at_x(k_, x0)), inv_pow));
            inv_pow = A.mul(inv_pow, inv2);
        }
        return pt;
    }

    Elem theta(const Point& pt, int i) const {
        std::vector<Elem> vals(kThetaCount);
        for (int k = 0; k < kThetaCount && k < n_; ++k) vals[k] = pt.u[k];
        return eval_in(pt.A, theta_poly(i), vals);
    }

    // Components of the signature map with every F_y power removed, at x0 = 1.
    std::array<Elem, 3> sigma(const Point& pt, GroupId g) const {
        std::vector<Elem> th(kThetaCount + 1);
        std::vector<bool> have(kThetaCount + 1, false);
        std::array<Elem, 3> out;
        for (int c = 0; c < 3; ++c) {
            Elem acc = pt.A.one();
            for (const auto& f : sigma_shape(g)[c].factors) {
                if (!have[f.theta]) {
                    th[f.theta] = theta(pt, f.theta);
                    have[f.theta] = true;
                }
                acc = pt.A.mul(acc, pt.A.pow(th[f.theta], unsigned(f.power)));
            }
            out[c] = acc;
        }
        return out;
    }

    // Evaluation of a polynomial in x, y at the fiber point.
    Elem value(const Point& pt, const SparsePoly& p) const {
        return pt.A.reduce(BiPoly<K>::from_sparse(k_, p).at_x(k_, pt.x0));
    }

private:
    K k_;
    int n_;
    int dy_ = 0;
    BiPoly<K> F_, Fy_;
    std::vector<BiPoly<K>> P_;
};

}  // namespace sigcurve
