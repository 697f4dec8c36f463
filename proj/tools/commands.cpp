#include "commands.hpp"

#include "sigcurve/degree.hpp"
#include "sigcurve/equivalence.hpp"
#include "sigcurve/fermat.hpp"
#include "sigcurve/parse.hpp"

#include <charconv>
#include <sstream>

namespace sigcli {

using namespace sigcurve;

namespace {

std::string schema(const char* cmd) { return std::string("sigcurve.") + cmd + "/1"; }

json rat_json(const Rat& r) { return to_string(r); }

json ratfunc_json(const RatFunc& f) { return {{"num", to_string(f.num())}, {"den", to_string(f.den())}}; }

SignatureOptions sig_options(const RunConfig& cfg) {
    SignatureOptions o;
    o.budget = cfg.budget;
    o.seed = cfg.seed;
    return o;
}

DegreeOptions degree_options(const RunConfig& cfg) {
    DegreeOptions o;
    o.trials = cfg.trials;
    o.seed = cfg.seed;
    return o;
}

json signature_json(const SignatureResult& s) {
    json j;
    if (s.is_point) {
        j["kind"] = "point";
        j["S"] = nullptr;
        j["degree"] = nullptr;
        j["method"] = "constant";
        j["certificate"] = "K1 and K2 reduce to constants modulo F";
        j["point"] = {{"k1", rat_json(s.k1)}, {"k2", rat_json(s.k2)}};
    } else {
        j["kind"] = "curve";
        j["S"] = to_string(s.poly.S);
        j["degree"] = s.poly.S.total_degree();
        j["method"] = s.poly.method;
        j["certificate"] = s.poly.certificate;
        j["point"] = nullptr;
    }
    return j;
}

std::string signature_text(const SignatureResult& s) {
    if (s.is_point) return "point signature: (" + to_string(s.k1) + ", " + to_string(s.k2) + ")\n";
    return to_string(s.poly.S) + "\n";
}

json degree_json(const DegreeReport& r) {
    json trials = json::array();
    for (const auto& t : r.mult.trials)
        trials.push_back({{"a", {rat_json(t.a[0]), rat_json(t.a[1]), rat_json(t.a[2])}}, {"sum", t.sum}});
    json j;
    j["group"] = to_string(r.group);
    j["d"] = r.d;
    j["deg_sigma"] = r.deg_sigma;
    j["cancelled"] = r.cancelled;
    j["mult_sum"] = r.mult_sum;
    j["n"] = r.n ? json(*r.n) : json(nullptr);
    j["product"] = r.product;
    j["deg_S_predicted"] = r.deg_S_predicted ? json(*r.deg_S_predicted) : json(nullptr);
    j["affine_base_points_excluded"] = r.affine_base_points_excluded;
    j["base_locus"] = {{"at_infinity", r.base_locus.at_infinity},
                       {"affine", r.base_locus.affine},
                       {"mult_infinity", r.base_locus.mult_infinity},
                       {"mult_affine", r.base_locus.mult_affine}};
    j["mult"] = {{"trials", trials},
                 {"min_sum", r.mult.min_sum},
                 {"lower_bound", r.mult.lower_bound},
                 {"sandwich_closed", r.mult.sandwich_closed},
                 {"route", r.mult.route}};
    return j;
}

std::string degree_text(const DegreeReport& r) {
    std::ostringstream s;
    s << "group: " << to_string(r.group) << "\nd: " << r.d << "\ndeg sigma: " << r.deg_sigma
      << (r.cancelled ? " (common factor removed)" : "") << "\nmultiplicity sum: " << r.mult_sum
      << "\nd*deg sigma - mult sum: " << r.product << "\n";
    if (r.n) s << "n: " << *r.n << "\n";
    if (r.deg_S_predicted) s << "predicted deg S: " << *r.deg_S_predicted << "\n";
    s << "base points on the curve: " << r.base_locus.at_infinity << " at infinity, " << r.base_locus.affine
      << " affine\n";
    s << "line trials:";
    for (const auto& t : r.mult.trials)
        s << " (" << to_string(t.a[0]) << "," << to_string(t.a[1]) << "," << to_string(t.a[2]) << ")->" << t.sum;
    s << "\nlower bound: " << r.mult.lower_bound << (r.mult.sandwich_closed ? " (closed)" : "") << "\n";
    return s.str();
}

json symmetry_json(const SymmetryResult& r) {
    json j;
    j["n"] = r.n ? json(*r.n) : json(nullptr);
    j["infinite"] = !r.n.has_value();
    j["route"] = r.route;
    j["deg_S"] = r.n ? json(r.deg_S) : json(nullptr);
    j["constant"] = r.constant ? rat_json(*r.constant) : json(nullptr);
    j["signature_method"] = r.signature_method.empty() ? json(nullptr) : json(r.signature_method);
    j["report"] = r.report ? degree_json(*r.report) : json(nullptr);
    return j;
}

std::string symmetry_text(const SymmetryResult& r) {
    if (!r.n) return "symmetry group: infinite (constant signature, K1 = " + to_string(*r.constant) + ")\n";
    return "symmetry group order: " + std::to_string(*r.n) + " (deg S = " + std::to_string(r.deg_S) + ", " +
           r.signature_method + ")\n";
}

}  // namespace

std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

CurveInput read_curve(const std::string& text) { return make_curve(parse_curve(text)); }

CommandOutput cmd_theta(const std::string& curve, int index) {
    if (index < 1 || index > kThetaCount) throw std::invalid_argument("--index must be in 1..8");
    auto c = read_curve(curve);
    auto t = theta(c, index);
    CommandOutput out;
    out.doc = {{"schema", schema("theta")}, {"curve", to_string(c.F)}, {"index", index},
               {"T", to_string(t.T)},       {"content", rat_json(t.content)}, {"d_i", t.d_i},
               {"tau", t.tau},              {"degree", t.T.is_zero() ? -1 : t.degree()}};
    std::ostringstream s;
    s << "Theta" << index << " = " << to_string(t.content) << " * T / F_y^" << t.d_i << "\nT = " << to_string(t.T)
      << "\nd_i = " << t.d_i << "\ntau = " << t.tau << "\ndeg T = " << (t.T.is_zero() ? -1 : t.degree()) << "\n";
    out.text = s.str();
    return out;
}

CommandOutput cmd_invariants(const std::string& curve, const RunConfig& cfg) {
    auto c = read_curve(curve);
    auto p = classifying_pair(c, cfg.group);
    CommandOutput out;
    out.doc = {{"schema", schema("invariants")}, {"curve", to_string(c.F)}, {"group", to_string(cfg.group)},
               {"labels", p.labels},            {"K1", ratfunc_json(p.K1)},  {"K2", ratfunc_json(p.K2)}};
    out.text = "K1 = " + to_string(p.K1) + "\nK2 = " + to_string(p.K2) + "\n";
    return out;
}

CommandOutput cmd_signature(const std::string& curve, const RunConfig& cfg) {
    auto c = read_curve(curve);
    auto s = signature_polynomial(c, cfg.group, sig_options(cfg));
    CommandOutput out;
    out.doc = {{"schema", schema("signature")}, {"curve", to_string(c.F)}, {"group", to_string(cfg.group)}};
    out.doc.update(signature_json(s));
    out.text = signature_text(s);
    return out;
}

CommandOutput cmd_degree(const std::string& curve, std::optional<int> n, const RunConfig& cfg) {
    auto c = read_curve(curve);
    auto r = predict_degree(c, cfg.group, n, degree_options(cfg));
    CommandOutput out;
    out.doc = {{"schema", schema("degree")}, {"curve", to_string(c.F)}};
    out.doc.update(degree_json(r));
    out.text = degree_text(r);
    return out;
}

CommandOutput cmd_symmetry(const std::string& curve, const RunConfig& cfg) {
    auto c = read_curve(curve);
    SymmetryOptions o{sig_options(cfg), degree_options(cfg)};
    auto r = symmetry_order(c, cfg.group, o);
    CommandOutput out;
    out.doc = {{"schema", schema("symmetry")}, {"curve", to_string(c.F)}, {"group", to_string(cfg.group)}};
    out.doc.update(symmetry_json(r));
    out.text = symmetry_text(r);
    return out;
}

CommandOutput cmd_equiv(const std::string& curve, const std::string& curve2, const RunConfig& cfg) {
    auto a = read_curve(curve), b = read_curve(curve2);
    auto v = equivalent(a, b, cfg.group, sig_options(cfg));
    CommandOutput out;
    json sigs = json::array(), preds = json::array();
    for (int i = 0; i < 2; ++i) {
        sigs.push_back(v.signatures[size_t(i)] ? signature_json(*v.signatures[size_t(i)]) : json(nullptr));
        preds.push_back(v.predictions[size_t(i)] ? degree_json(*v.predictions[size_t(i)]) : json(nullptr));
    }
    out.doc = {{"schema", schema("equiv")},
               {"curves", {to_string(a.F), to_string(b.F)}},
               {"group", to_string(cfg.group)},
               {"equivalent", v.equivalent ? json(*v.equivalent) : json(nullptr)},
               {"reason", to_string(v.reason)},
               {"necessary_condition_only", v.necessary_condition_only},
               {"detail", v.detail},
               {"signatures", sigs},
               {"predictions", preds}};
    std::string verdict = !v.equivalent ? "undecided" : *v.equivalent ? "equivalent" : "not equivalent";
    out.text = verdict + " (" + to_string(v.reason) + ")" +
               (v.necessary_condition_only ? ", necessary condition only" : "") +
               (v.detail.empty() ? "" : ": " + v.detail) + "\n";
    if (v.reason == EquivalenceReason::ExceptionalInput) out.exit_code = 2;
    if (v.reason == EquivalenceReason::BudgetExceeded) out.exit_code = 3;
    return out;
}

CommandOutput cmd_samples(const std::string& curve, int count, const RunConfig& cfg) {
    if (count < 1) throw std::invalid_argument("--count must be positive");
    auto c = read_curve(curve);
    auto r = signature_samples(c, cfg.group, count, cfg.seed);
    CommandOutput out;
    json rows = json::array();
    std::string csv = "x,y,k1,k2\n";
    for (const auto& s : r.samples) {
        rows.push_back({{"x", s.x}, {"y", s.y}, {"k1", s.k1}, {"k2", s.k2}});
        csv += shortest(s.x) + "," + shortest(s.y) + "," + shortest(s.k1) + "," + shortest(s.k2) + "\n";
    }
    out.doc = {{"schema", schema("samples")},
               {"curve", to_string(c.F)},
               {"group", to_string(cfg.group)},
               {"samples", rows},
               {"warning", r.warning.empty() ? json(nullptr) : json(r.warning)}};
    out.csv = csv;
    out.text = csv;
    return out;
}

CommandOutput cmd_valuations(const std::string& curve, const std::string& root, const RunConfig& cfg) {
    auto c = read_curve(curve);
    Rat w = parse_rat(root);
    auto s = series_valuations(c, w, cfg.trunc);
    json val = json::array(), v = json::array(), lead = json::array(), mult = json::object();
    for (int i = 0; i < kThetaCount; ++i) {
        val.push_back(s.val[size_t(i)]);
        v.push_back(s.v[size_t(i)]);
        lead.push_back(rat_json(s.lead[size_t(i)]));
    }
    for (auto g : kAllGroups) mult[to_string(g)] = series_multiplicity(s, g);
    CommandOutput out;
    out.doc = {{"schema", schema("valuations")},
               {"curve", to_string(c.F)},
               {"root", to_string(w)},
               {"truncation", s.trunc},
               {"val", val},
               {"v", v},
               {"lead", lead},
               {"multiplicity", mult}};
    std::ostringstream t;
    t << "val:";
    for (auto x : s.val) t << " " << x;
    t << "\nv:";
    for (auto x : s.v) t << " " << x;
    t << "\nmultiplicity:";
    for (auto g : kAllGroups) t << " " << to_string(g) << "=" << series_multiplicity(s, g);
    t << "\n";
    out.text = t.str();
    return out;
}

CommandOutput cmd_fermat(int d, const std::string& what, const RunConfig& cfg) {
    auto c = fermat_curve(d);
    GroupId g = cfg.group;
    CommandOutput out;
    out.doc = {{"schema", schema("fermat")}, {"d", d}, {"group", to_string(g)}, {"what", what},
               {"curve", to_string(c.F)}};
    std::optional<bool> ok;
    std::ostringstream t;
    if (what == "signature") {
        auto s = signature_polynomial(c, g, sig_options(cfg));
        auto closed = fermat_signature_closed_form(g, d);
        json res = signature_json(s);
        out.doc["result"] = res;
        out.doc["expected"] = closed ? json(to_string(*closed)) : json(nullptr);
        if (closed) ok = !s.is_point && s.poly.S == *closed;
        t << signature_text(s);
    } else if (what == "symmetry") {
        SymmetryOptions o{sig_options(cfg), degree_options(cfg)};
        auto r = symmetry_order(c, g, o);
        auto expect = fermat_symmetry_order(g, d);
        out.doc["result"] = symmetry_json(r);
        out.doc["expected"] = expect ? json(*expect) : json(nullptr);
        if (expect) ok = r.n == expect;
        t << symmetry_text(r);
    } else if (what == "degree") {
        auto n = fermat_symmetry_order(g, d);
        auto r = predict_degree(c, g, n, degree_options(cfg));
        auto expect = fermat_signature_degree(g, d);
        out.doc["result"] = degree_json(r);
        out.doc["expected"] = expect ? json(*expect) : json(nullptr);
        if (expect) ok = r.deg_S_predicted == expect;
        t << degree_text(r);
    } else {
        throw std::invalid_argument("--what must be signature, symmetry or degree");
    }
    out.doc["matches"] = ok ? json(*ok) : json(nullptr);
    t << "closed form: " << (!ok ? "not available" : *ok ? "match" : "MISMATCH") << "\n";
    out.text = t.str();
    if (ok == false) out.exit_code = 1;
    return out;
}

}  // namespace sigcli
