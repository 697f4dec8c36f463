#include "CLI11.hpp"
#include "commands.hpp"
#include "sigcurve/degree.hpp"
#include "sigcurve/parse.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace sigcli;

namespace {

enum Exit { kOk = 0, kFailure = 1, kExceptional = 2, kBudget = 3, kParse = 4 };

std::string group_list() { return "SE2, SA2, A2, PGL3"; }

int emit(const CommandOutput& out, std::string format, const std::string& default_format, const std::string& path) {
    if (format == "auto") format = default_format;
    std::string body;
    if (format == "json") {
        body = out.doc.dump(2) + "\n";
    } else if (format == "csv") {
        if (out.csv.empty()) {
            std::cerr << "error: csv output is only available for samples\n";
            return kParse;
        }
        body = out.csv;
    } else {
        body = out.text;
    }
    if (path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(path);
        if (!f) {
            std::cerr << "error: cannot write " << path << "\n";
            return kFailure;
        }
        f << body;
    }
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Differential signatures of plane algebraic curves"};
    app.require_subcommand(1);

    std::string group = "SE2", format = "auto", out_path, budget_text, curve, curve2, what = "signature", root;
    int trials = 3, trunc = 80, index = 1, count = 25, d = 3;
    uint64_t seed = 0;
    std::optional<int> n;

    auto common = [&](CLI::App* sub, bool with_group) {
        if (with_group) sub->add_option("--group,-g", group, "group: " + group_list())->capture_default_str();
        sub->add_option("--format,-f", format, "text, json or csv (auto picks per command)")
            ->check(CLI::IsMember({"auto", "text", "json", "csv"}));
        sub->add_option("--out,-o", out_path, "write output to this file");
        sub->add_option("--seed", seed, "random seed")->capture_default_str();
        sub->add_option("--trials", trials, "generic line trials")->check(CLI::PositiveNumber);
        sub->add_option("--budget", budget_text, "elimination budget N[,D[,SECONDS]]");
    };

    auto* th = app.add_subcommand("theta", "restriction of Theta_i to the curve");
    th->add_option("--curve,-c", curve, "polynomial in x, y")->required();
    th->add_option("--index,-i", index, "1..8")->required();
    common(th, false);

    auto* inv = app.add_subcommand("invariants", "classifying invariants K1, K2 on the curve");
    inv->add_option("--curve,-c", curve)->required();
    common(inv, true);

    auto* sig = app.add_subcommand("signature", "signature polynomial S(k1, k2)");
    sig->add_option("--curve,-c", curve)->required();
    common(sig, true);

    auto* deg = app.add_subcommand("degree", "predicted signature degree");
    deg->add_option("--curve,-c", curve)->required();
    deg->add_option("--n", n, "symmetry group order")->check(CLI::PositiveNumber);
    common(deg, true);

    auto* sym = app.add_subcommand("symmetry", "symmetry group cardinality");
    sym->add_option("--curve,-c", curve)->required();
    common(sym, true);

    auto* eq = app.add_subcommand("equiv", "group equivalence of two curves");
    eq->add_option("--curve,-c", curve)->required();
    eq->add_option("--curve2", curve2)->required();
    common(eq, true);

    auto* smp = app.add_subcommand("samples", "numeric signature points");
    smp->add_option("--curve,-c", curve)->required();
    smp->add_option("--count", count)->check(CLI::PositiveNumber)->capture_default_str();
    common(smp, true);

    auto* val = app.add_subcommand("valuations", "Theta valuations along the branch through [0:1:root]");
    val->add_option("--curve,-c", curve)->required();
    val->add_option("--root", root, "rational root of F(0,1,w)")->required();
    val->add_option("--trunc", trunc, "series truncation order")->check(CLI::PositiveNumber)->capture_default_str();
    common(val, false);

    auto* fer = app.add_subcommand("fermat", "Fermat curve x^d+y^d+1 against the closed forms");
    fer->add_option("--d", d)->required()->check(CLI::Range(1, 64));
    fer->add_option("--what", what)->check(CLI::IsMember({"signature", "symmetry", "degree"}))->capture_default_str();
    common(fer, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    RunConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.trunc = trunc;
    try {
        cfg.group = sigcurve::parse_group(group);
        if (const char* env = std::getenv("SIGCURVE_BUDGET"); env && *env) cfg.budget = sigcurve::parse_budget(env);
        if (!budget_text.empty()) cfg.budget = sigcurve::parse_budget(budget_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }

    try {
        CommandOutput out;
        std::string def = "text";
        if (*th) {
            out = cmd_theta(curve, index);
        } else if (*inv) {
            out = cmd_invariants(curve, cfg);
        } else if (*sig) {
            out = cmd_signature(curve, cfg);
        } else if (*deg) {
            out = cmd_degree(curve, n, cfg);
            def = "json";
        } else if (*sym) {
            out = cmd_symmetry(curve, cfg);
            def = "json";
        } else if (*eq) {
            out = cmd_equiv(curve, curve2, cfg);
            def = "json";
        } else if (*smp) {
            out = cmd_samples(curve, count, cfg);
            def = "csv";
        } else if (*val) {
            out = cmd_valuations(curve, root, cfg);
        } else {
            out = cmd_fermat(d, what, cfg);
            def = "json";
        }
        int code = emit(out, format, def, out_path);
        if (out.exit_code == 1) std::cerr << "error: result disagrees with the closed form\n";
        return code;
    } catch (const sigcurve::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const sigcurve::ContractError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kParse;
    } catch (const sigcurve::ExceptionalCurveError& e) {
        std::cerr << e.what() << "\n";
        return kExceptional;
    } catch (const sigcurve::VerticalLineError& e) {
        std::cerr << "exceptional: " << e.what() << "\n";
        return kExceptional;
    } catch (const sigcurve::BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
