#pragma once

#include "sigcurve/degree.hpp"
#include "sigcurve/elimination.hpp"

#include <optional>
#include <string>

namespace sigcurve {

enum class EquivalenceReason {
    SignaturesEqual,
    SignaturesDiffer,
    BothConstantEqual,
    ConstantVsCurve,
    ExceptionalInput,
    BudgetExceeded,
};
std::string to_string(EquivalenceReason r);

struct EquivalenceVerdict {
    std::optional<bool> equivalent;  // nullopt: undecided
    EquivalenceReason reason = EquivalenceReason::SignaturesDiffer;
    // Equal constant signatures only: the classification needs finite symmetry.
    bool necessary_condition_only = false;
    std::string detail;
    std::array<std::optional<SignatureResult>, 2> signatures;
    std::array<std::optional<DegreeReport>, 2> predictions;  // filled when undecided
};

EquivalenceVerdict equivalent(const CurveInput& F, const CurveInput& G, GroupId g, const SignatureOptions& opt = {});

struct SymmetryResult {
    std::optional<int> n;  // nullopt: infinite
    std::string route;     // "degree-ratio" or "constant-signature"
    int deg_S = 0;
    std::optional<DegreeReport> report;
    std::optional<Rat> constant;
    std::string signature_method;
};

struct SymmetryOptions {
    SignatureOptions signature;
    DegreeOptions degree;
};

// Throws std::domain_error carrying d*deg sigma, the multiplicity sum and deg S when the
// ratio is not integral.
SymmetryResult symmetry_order(const CurveInput& c, GroupId g, const SymmetryOptions& opt = {});
// Same, reusing a signature already computed for (c, g).
SymmetryResult symmetry_order(const CurveInput& c, GroupId g, const SignatureResult& sig,
                              const DegreeOptions& opt = {});

}  // namespace sigcurve
