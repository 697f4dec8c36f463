#pragma once

#include "json.hpp"
#include "sigcurve/groebner.hpp"
#include "sigcurve/jets.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace sigcli {

using json = nlohmann::ordered_json;

struct RunConfig {
    sigcurve::GroupId group = sigcurve::GroupId::SE2;
    int trials = 3;
    uint64_t seed = 0;
    sigcurve::Budget budget;
    int trunc = 80;
};

struct CommandOutput {
    json doc;
    std::string text;
    std::string csv;  // empty when the command has no CSV form
    int exit_code = 0;
};

// Curve text to CurveInput; ParseError or ContractError on bad input.
sigcurve::CurveInput read_curve(const std::string& text);

CommandOutput cmd_theta(const std::string& curve, int index);
CommandOutput cmd_invariants(const std::string& curve, const RunConfig& cfg);
CommandOutput cmd_signature(const std::string& curve, const RunConfig& cfg);
CommandOutput cmd_degree(const std::string& curve, std::optional<int> n, const RunConfig& cfg);
CommandOutput cmd_symmetry(const std::string& curve, const RunConfig& cfg);
CommandOutput cmd_equiv(const std::string& curve, const std::string& curve2, const RunConfig& cfg);
CommandOutput cmd_samples(const std::string& curve, int count, const RunConfig& cfg);
CommandOutput cmd_valuations(const std::string& curve, const std::string& root, const RunConfig& cfg);
CommandOutput cmd_fermat(int d, const std::string& what, const RunConfig& cfg);

// Shortest decimal that reads back to the same double.
std::string shortest(double v);

}  // namespace sigcli
