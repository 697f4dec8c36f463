// One PASS/FAIL line per acceptance criterion.
#include "json.hpp"
#include "sigcurve/equivalence.hpp"
#include "sigcurve/fermat.hpp"
#include "sigcurve/parse.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace sigcurve;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void need(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + ("FAILED " + what);
        }
    }
    void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

CurveInput curve(const std::string& s) { return make_curve(parse_curve(s)); }

std::pair<int, std::string> cli(const std::string& args) {
    std::string cmd = "'" SIGCURVE_CLI "' " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string dense_curve(int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> co(-9, 9);
    std::ostringstream o;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            int c = co(rng);
            if (c == 0) c = 1;
            o << (c < 0 ? "" : "+") << c << "*x^" << i << "*y^" << j;
        }
    return o.str();
}

std::string s(int v) { return std::to_string(v); }

Outcome c1_ellipse() {
    Outcome o;
    auto [code, out] = cli("signature --curve 'x^2+x*y+y^2-1' --group SE2 --format json");
    o.need(code == 0, "exit code " + s(code));
    auto paper = normalize(parse_poly(
        "2916k1^6+972k1^4k2^2+108k1^2k2^4+4k2^6-13608k1^5+1944k1^3k2^2+2187k1^4", kappa_ring()));
    if (code == 0) {
        auto j = json::parse(out);
        std::string got = j["S"];
        o.need(got == to_string(paper), "S = " + got);
        o.note("S = " + got + " via " + j["method"].get<std::string>());
    }
    return o;
}

Outcome c2_cubic() {
    Outcome o;
    auto c = curve("x^2*y+y^2+y+64/121");
    auto g = GroupId::A2;
    auto rep = predict_degree(c, g, 2);
    o.need(rep.deg_sigma == 26 && rep.cancelled, "deg sigma " + s(rep.deg_sigma));
    int m511 = mult_sum_line(c, g, {5, 1, 1});
    int m161 = mult_sum_line(c, g, {1, -6, 1});
    int m116 = mult_sum_line(c, g, {1, 1, -6});
    o.need(m511 == 30, "sum(5,1,1) = " + s(m511));
    o.need(m161 == 32, "sum(1,-6,1) = " + s(m161) + " (expected 32)");
    auto mm = mult_min(c, g);
    o.need(mm.min_sum == 30, "mult_min = " + s(mm.min_sum));
    o.need(rep.deg_S_predicted == 24, "deg S predicted");
    o.note("deg sigma 26, sum(5,1,1) = " + s(m511) + ", sum(1,-6,1) = " + s(m161) +
           ", sum(1,1,-6) = " + s(m116) + " (line through [0:6:1]), mult_min = " + s(mm.min_sum) +
           ", lower bound " + s(mm.lower_bound) + ", deg S(n=2) = " + s(rep.deg_S_predicted.value_or(-1)));
    return o;
}

Outcome c3_generic() {
    Outcome o;
    std::mt19937_64 rng(2024);
    int ok = 0, total = 0;
    for (int d : {4, 5})
        for (int k = 0; k < 5; ++k) {
            auto c = curve(dense_curve(d, rng));
            for (auto g : kAllGroups) {
                ++total;
                auto rep = predict_degree(c, g, 1);
                int want = g == GroupId::SE2 ? 6 * d * d - 6 * d
                           : g == GroupId::PGL3 ? 96 * d * d - 216 * d
                                                : 24 * d * d - 48 * d;
                bool hit = rep.deg_S_predicted == want;
                ok += hit;
                o.need(hit, "d=" + s(d) + " " + to_string(g) + " got " + s(rep.deg_S_predicted.value_or(-1)));
            }
        }
    o.note(s(ok) + "/" + s(total) + " (5 curves each at d=4,5; all groups)");
    return o;
}

Outcome c4_valuations() {
    Outcome o;
    const std::array<int, 8> val{0, 3, 4, 8, 15, 19, 40, 60}, v{0, 2, 2, 4, 9, 11, 24, 36};
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> co(-9, 9), rr(-3, 3);
    auto r = xy_ring();
    auto X = SparsePoly::variable(r, 0), Y = SparsePoly::variable(r, 1);
    int done = 0;
    while (done < 6) {
        int root = rr(rng);
        // top form (y - root x) C(x, y); C(1, root) != 0 keeps the root simple
        SparsePoly C(r), low(r);
        for (int i = 0; i <= 3; ++i)
            C += SparsePoly::constant(r, rat(co(rng))) * pow(X, unsigned(i)) * pow(Y, unsigned(3 - i));
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j)
                low += SparsePoly::constant(r, rat(co(rng))) * pow(X, unsigned(i)) * pow(Y, unsigned(j));
        if (sgn(C.coeff(Mono{{0, 3}})) == 0 || sgn(evaluate(C, {rat(1), rat(root)})) == 0) continue;
        auto c = make_curve((Y - rat(root) * X) * C + low);
        auto sv = series_valuations(c, rat(root));
        o.need(sv.val == val && sv.v == v, "quartic " + to_string(c.F));
        ++done;
    }
    o.note(s(done) + " random quartics: val = (0,3,4,8,15,19,40,60), v = (0,2,2,4,9,11,24,36)");
    return o;
}

Outcome c5_fermat() {
    Outcome o;
    int matched = 0;
    std::string methods;
    for (int d : {3, 4, 5})
        for (std::string g : {"PGL3", "A2"}) {
            auto [code, out] = cli("fermat --d " + s(d) + " --group " + g + " --what signature --format json");
            bool ok = code == 0;
            if (ok) {
                auto j = json::parse(out);
                ok = j["matches"] == true;
                methods += " " + g + "/" + s(d) + ":" + j["result"]["method"].get<std::string>() + "(deg " +
                           s(j["result"]["degree"].get<int>()) + ")";
            }
            matched += ok;
            o.need(ok, "signature d=" + s(d) + " " + g);
        }
    for (int d : {3, 4})
        for (std::string g : {"PGL3", "A2"}) {
            auto [code, out] = cli("fermat --d " + s(d) + " --group " + g + " --what symmetry --format json");
            bool ok = code == 0;
            if (ok) {
                auto j = json::parse(out);
                ok = j["matches"] == true && j["result"]["route"] == "degree-ratio";
                methods += " n(" + g + "," + s(d) + ")=" + s(j["result"]["n"].get<int>());
            }
            matched += ok;
            o.need(ok, "symmetry d=" + s(d) + " " + g);
        }
    o.note(s(matched) + "/10 checks;" + methods);
    return o;
}

Outcome c6_invariance() {
    Outcome o;
    auto G = parse_curve("x^3+2*x^2*y-y^3+3*x*y-x+2*y+5");
    Rat px = rat(1, 2), py = rat(-1, 3);
    auto F = make_curve(G - SparsePoly::constant(xy_ring(), evaluate(G, {px, py})));
    for (auto g : kAllGroups) {
        auto k = invariants_at(F, g, px, py);
        int checked = 0;
        for (uint64_t seed = 0; checked < 20 && seed < 500; ++seed) {
            auto m = random_group_element(g, 1000 + seed);
            std::pair<Rat, Rat> q, k2;
            try {
                q = apply_to_point(m, px, py);
                k2 = invariants_at(apply_group_element(F, m, g), g, q.first, q.second);
            } catch (const PoleError&) {
                continue;
            }
            o.need(k2 == k, to_string(g) + " point invariants, seed " + s(int(seed)));
            ++checked;
        }
        o.need(checked == 20, to_string(g) + " only " + s(checked) + " elements");
    }
    o.note("80 group elements matched exactly");
    SignatureOptions so;
    so.budget.max_seconds = 5;
    for (auto [src, g] : {std::pair{"x^2*y+y^2+y+64/121", GroupId::A2}, std::pair{"x^3-3*x*y^2+x^2+y^2-2", GroupId::SE2}}) {
        auto c = curve(src);
        auto S = signature_polynomial(c, g, so).poly.S;
        for (uint64_t seed : {3, 17, 41}) {
            auto img = apply_group_element(c, random_group_element(g, seed), g);
            o.need(signature_polynomial(img, g, so).poly.S == S, std::string(src) + " seed " + s(int(seed)));
        }
        o.note(to_string(g) + " S (deg " + s(S.total_degree()) + ") equal for 3 transforms");
    }
    return o;
}

Outcome c7_circle() {
    Outcome o;
    auto c = curve("x^2+y^2-1");
    Rat k2;
    auto k1 = is_constant_signature(c, GroupId::SE2, &k2);
    o.need(k1 && *k1 == 1, "K1 not the constant 1");
    auto sym = symmetry_order(c, GroupId::SE2);
    o.need(!sym.n && sym.route == "constant-signature", "symmetry not reported infinite");
    if (k1) o.note("K1 = " + to_string(*k1) + ", K2 = " + to_string(k2) + ", symmetry infinite");
    return o;
}

Outcome c8_oracle() {
    Outcome o;
    struct Fixture {
        CurveInput c;
        GroupId g;
        int n;
        std::string name;
    };
    std::vector<Fixture> fx{{curve("x^2+x*y+y^2-1"), GroupId::SE2, 2, "ellipse/SE2"},
                            {curve("x^2*y+y^2+y+64/121"), GroupId::A2, 2, "cubic/A2"},
                            {curve("x^3-3*x*y^2+x^2+y^2-2"), GroupId::SE2, 3, "tricubic/SE2"}};
    for (int d : {3, 4, 5})
        for (auto g : {GroupId::PGL3, GroupId::A2, GroupId::SE2}) {
            if (g == GroupId::SE2 && d == 5) continue;
            fx.push_back({fermat_curve(d), g, *fermat_symmetry_order(g, d), "fermat" + s(d) + "/" + to_string(g)});
        }
    int agree = 0, sampled = 0;
    for (auto& f : fx) {
        auto sig = signature_polynomial(f.c, f.g);
        int deg = sig.poly.S.total_degree();
        auto rep = predict_degree(f.c, f.g, f.n);
        bool ok = rep.deg_S_predicted == deg;
        agree += ok;
        o.need(ok, f.name + " elimination " + s(deg) + " vs predicted " + s(rep.deg_S_predicted.value_or(-1)));
        auto smp = signature_samples(f.c, f.g, 25, 7);
        if (smp.samples.empty()) continue;  // no real points
        double worst = 0;
        for (const auto& p : smp.samples) worst = std::max(worst, relative_residual(sig.poly.S, p.k1, p.k2));
        o.need(smp.samples.size() == 25, f.name + " only " + s(int(smp.samples.size())) + " samples");
        o.need(worst <= 1e-8, f.name + " residual " + std::to_string(worst));
        ++sampled;
    }
    o.note(s(agree) + "/" + s(int(fx.size())) + " degrees agree; 25 samples vanish on " + s(sampled) +
           " fixtures with real points");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{{1, "ellipse signature", 30, c1_ellipse},
                               {2, "cubic affine fixture", 300, c2_cubic},
                               {3, "generic degree tightness", 600, c3_generic},
                               {4, "valuation tables", 120, c4_valuations},
                               {5, "Fermat family", 900, c5_fermat},
                               {6, "invariance suite", 300, c6_invariance},
                               {7, "constant signature", 5, c7_circle},
                               {8, "oracle consistency", 0, c8_oracle}};
    int failed = 0;
    for (auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note(std::string("exception: ") + e.what());
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit > 0 && sec > c.limit) o.need(false, "runtime over " + std::to_string(int(c.limit)) + " s");
        failed += !o.pass;
        char tbuf[32];
        std::snprintf(tbuf, sizeof tbuf, "%.1f s", sec);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ", " << tbuf
                  << "): " << o.detail << std::endl;
    }
    return failed ? 1 : 0;
}
