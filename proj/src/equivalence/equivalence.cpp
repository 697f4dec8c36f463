#include "sigcurve/equivalence.hpp"

namespace sigcurve {

std::string to_string(EquivalenceReason r) {
    switch (r) {
        case EquivalenceReason::SignaturesEqual: return "signatures-equal";
        case EquivalenceReason::SignaturesDiffer: return "signatures-differ";
        case EquivalenceReason::BothConstantEqual: return "both-constant-equal";
        case EquivalenceReason::ConstantVsCurve: return "constant-vs-curve";
        case EquivalenceReason::ExceptionalInput: return "exceptional-input";
        case EquivalenceReason::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

EquivalenceVerdict equivalent(const CurveInput& F, const CurveInput& G, GroupId g, const SignatureOptions& opt) {
    EquivalenceVerdict v;
    const CurveInput* cs[2] = {&F, &G};
    for (int i = 0; i < 2; ++i) {
        auto ex = exceptional_check(*cs[i], g);
        if (ex.exceptional) {
            v.reason = EquivalenceReason::ExceptionalInput;
            v.detail = std::string(i ? "second" : "first") + " curve: " + ex.reason;
            return v;
        }
    }
    bool over = false;
    for (int i = 0; i < 2; ++i) {
        try {
            v.signatures[size_t(i)] = signature_polynomial(*cs[i], g, opt);
        } catch (const BudgetExceeded& e) {
            over = true;
            v.detail += (v.detail.empty() ? "" : "; ") + std::string(e.what());
        }
    }
    if (over) {
        v.reason = EquivalenceReason::BudgetExceeded;
        for (int i = 0; i < 2; ++i) v.predictions[size_t(i)] = predict_degree(*cs[i], g);
        return v;
    }
    const auto &a = *v.signatures[0], &b = *v.signatures[1];
    if (a.is_point && b.is_point) {
        bool same = a.k1 == b.k1 && a.k2 == b.k2;
        v.equivalent = same;
        v.reason = same ? EquivalenceReason::BothConstantEqual : EquivalenceReason::SignaturesDiffer;
        v.necessary_condition_only = same;
    } else if (a.is_point != b.is_point) {
        v.equivalent = false;
        v.reason = EquivalenceReason::ConstantVsCurve;
    } else {
        bool same = a.poly.S == b.poly.S;
        v.equivalent = same;
        v.reason = same ? EquivalenceReason::SignaturesEqual : EquivalenceReason::SignaturesDiffer;
    }
    return v;
}

SymmetryResult symmetry_order(const CurveInput& c, GroupId g, const SignatureResult& sig, const DegreeOptions& opt) {
    SymmetryResult out;
    if (sig.is_point) {
        out.route = "constant-signature";
        out.constant = sig.k1;
        return out;
    }
    out.signature_method = sig.poly.method;
    out.deg_S = sig.poly.S.total_degree();
    auto rep = predict_degree(c, g, std::nullopt, opt);
    if (rep.product % out.deg_S != 0)
        throw std::domain_error("non-integral symmetry order: d*deg sigma = " + std::to_string(c.d * rep.deg_sigma) +
                                ", mult sum = " + std::to_string(rep.mult_sum) +
                                ", deg S = " + std::to_string(out.deg_S));
    out.n = rep.product / out.deg_S;
    rep.n = out.n;
    rep.deg_S_predicted = out.deg_S;
    out.report = rep;
    out.route = "degree-ratio";
    return out;
}

SymmetryResult symmetry_order(const CurveInput& c, GroupId g, const SymmetryOptions& opt) {
    auto ex = exceptional_check(c, g);
    if (ex.exceptional) throw ExceptionalCurveError(ex.reason);
    return symmetry_order(c, g, signature_polynomial(c, g, opt.signature), opt.degree);
}

}  // namespace sigcurve
