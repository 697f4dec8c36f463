#include "doctest.h"
#include "json.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " '" SIGCURVE_CLI "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

json load_schema(const std::string& name) {
    std::ifstream f(std::string(SIGCURVE_SOURCE_DIR) + "/docs/schema/" + name + ".schema.json");
    REQUIRE(f);
    return json::parse(f);
}

// Enough of JSON Schema for the shipped files: type, const, enum, pattern, bounds, required,
// properties, additionalProperties, items, oneOf, local $ref.
bool valid(const json& v, const json& s, const json& root, std::string& why, const std::string& at = "$") {
    if (s.contains("$ref")) {
        std::string ref = s["$ref"];
        return valid(v, root["$defs"][ref.substr(ref.rfind('/') + 1)], root, why, at);
    }
    if (s.contains("oneOf")) {
        int hits = 0;
        std::string ignore;
        for (const auto& alt : s["oneOf"]) hits += valid(v, alt, root, ignore, at);
        if (hits != 1) why = at + ": " + std::to_string(hits) + " oneOf branches match";
        return hits == 1;
    }
    if (s.contains("const") && v != s["const"]) return why = at + ": const", false;
    if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
        return why = at + ": enum", false;
    if (s.contains("type")) {
        auto is = [&](const std::string& t) {
            if (t == "object") return v.is_object();
            if (t == "array") return v.is_array();
            if (t == "string") return v.is_string();
            if (t == "integer") return v.is_number_integer();
            if (t == "number") return v.is_number();
            if (t == "boolean") return v.is_boolean();
            return t == "null" && v.is_null();
        };
        bool ok = false;
        if (s["type"].is_array())
            for (const auto& t : s["type"]) ok = ok || is(t);
        else
            ok = is(s["type"]);
        if (!ok) return why = at + ": type", false;
    }
    if (v.is_string() && s.contains("pattern") && !std::regex_search(v.get<std::string>(), std::regex(s["pattern"].get<std::string>())))
        return why = at + ": pattern", false;
    if (v.is_number()) {
        if (s.contains("minimum") && v < s["minimum"]) return why = at + ": minimum", false;
        if (s.contains("maximum") && v > s["maximum"]) return why = at + ": maximum", false;
    }
    if (v.is_array()) {
        if (s.contains("minItems") && v.size() < s["minItems"].get<size_t>()) return why = at + ": minItems", false;
        if (s.contains("maxItems") && v.size() > s["maxItems"].get<size_t>()) return why = at + ": maxItems", false;
        if (s.contains("items"))
            for (size_t i = 0; i < v.size(); ++i)
                if (!valid(v[i], s["items"], root, why, at + "[" + std::to_string(i) + "]")) return false;
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& k : s["required"])
                if (!v.contains(k)) return why = at + ": missing " + k.get<std::string>(), false;
        for (const auto& [k, x] : v.items()) {
            if (s.contains("properties") && s["properties"].contains(k)) {
                if (!valid(x, s["properties"][k], root, why, at + "." + k)) return false;
            } else if (s.value("additionalProperties", true) == false) {
                return why = at + ": unexpected " + k, false;
            }
        }
    }
    return true;
}

void check_schema(const std::string& cmd, const std::string& args) {
    auto r = run_cli(cmd + " " + args + " --format json");
    INFO(cmd << " " << args);
    auto doc = json::parse(r.out);
    auto s = load_schema(cmd);
    std::string why;
    CHECK_MESSAGE(valid(doc, s, s, why), why);
    CHECK(doc["schema"] == "sigcurve." + cmd + "/1");
}

}  // namespace

TEST_CASE("cli: ellipse signature and point signature") {
    auto r = run_cli("signature --curve 'x^2+x*y+y^2-1' --group SE2");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "2916 * k1^6 + 972 * k1^4 * k2^2 + 108 * k1^2 * k2^4 + 4 * k2^6 - 13608 * k1^5 + 1944 * k1^3 * k2^2 + "
          "2187 * k1^4\n");
    r = run_cli("signature --curve 'x^2+y^2-1'");
    CHECK(r.code == 0);
    CHECK(r.out == "point signature: (1, 0)\n");
}

TEST_CASE("cli: degree of the cubic example") {
    auto r = run_cli("degree --curve 'x^2*y+y^2+y+64/121' --group A2 --n 2");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["deg_sigma"] == 26);
    CHECK(j["mult_sum"] == 30);
    CHECK(j["deg_S_predicted"] == 24);
    CHECK(run_cli("degree --curve 'x^2*y+y^2+y+64/121' --group A2 --n 5").code == 1);
}

TEST_CASE("cli: fermat cross-checks") {
    auto j = json::parse(run_cli("fermat --d 4 --group A2 --what symmetry").out);
    CHECK(j["result"]["n"] == 32);
    CHECK(j["matches"] == true);
    j = json::parse(run_cli("fermat --d 3 --group A2").out);
    CHECK(j["result"]["degree"] == 2);
    CHECK(j["matches"] == true);
    j = json::parse(run_cli("fermat --d 4 --group PGL3 --what degree").out);
    CHECK(j["result"]["deg_S_predicted"] == 4);
    CHECK(j["matches"] == true);
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli("signature --curve 'x^2+' ").code == 4);
    CHECK(run_cli("signature --curve 'x*z'").code == 4);
    CHECK(run_cli("signature --curve 'x^2+y' --group Q").code == 4);
    CHECK(run_cli("signature --curve 'x^2+y^2-1' --group A2").code == 2);
    CHECK(run_cli("invariants --curve 'x+2*y' --group PGL3").code == 2);
    CHECK(run_cli("signature --curve 'x^2+y^2-1'", "SIGCURVE_BUDGET=abc").code == 4);
    CHECK(run_cli("signature --curve 'x^2+y^2-1' --budget 1,2,3,4").code == 4);
    CHECK(run_cli("theta --curve 'x^3+y' --index 9").code == 4);
    CHECK(run_cli("theta --curve 'x^3+y' --index 2 --format csv").code == 4);
    auto eq = run_cli("equiv --curve 'x^3+y^3+1' --curve2 'x^2+y^2-1' --group A2");
    CHECK(eq.code == 2);
    CHECK(json::parse(eq.out)["reason"] == "exceptional-input");
    CHECK(run_cli("bogus").code == 4);
}

TEST_CASE("cli: budget from the environment") {
    // Groebner gives up at once and fitting closes the computation.
    auto r = run_cli("signature --curve 'x^2+x*y+y^2-1' --format json", "SIGCURVE_BUDGET=1,1");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["method"] == "fitting");
    CHECK(j["degree"] == 6);
    r = run_cli("signature --curve 'x^2+x*y+y^2-1' --format json --budget 5000,400", "SIGCURVE_BUDGET=1,1");
    CHECK(json::parse(r.out)["method"] == "groebner");
}

TEST_CASE("cli: samples csv and --out") {
    auto r = run_cli("samples --curve 'x^2+x*y+y^2-1' --count 6 --seed 4");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "x,y,k1,k2");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 3);
        double x = std::stod(line.substr(0, line.find(',')));
        std::string rest = line.substr(line.find(',') + 1);
        double y = std::stod(rest.substr(0, rest.find(',')));
        CHECK(std::abs(x * x + x * y + y * y - 1) < 1e-12);
    }
    CHECK(rows == 6);

    auto path = std::filesystem::temp_directory_path() / "sigcurve_cli_out.json";
    std::filesystem::remove(path);
    auto w = run_cli("theta --curve 'x^3+y^3+1' --index 4 --format json --out '" + path.string() + "'");
    CHECK(w.code == 0);
    CHECK(w.out.empty());
    std::ifstream f(path);
    auto j = json::parse(f);
    CHECK(j["d_i"] == 8);
    CHECK(j["tau"] == 12);
    CHECK(j["T"] == "x^12 - 2 * x^6 * y^6 + y^12");
    std::filesystem::remove(path);
}

TEST_CASE("cli: outputs validate against the shipped schemas") {
    check_schema("theta", "--curve 'x^3+y^3+1' --index 4");
    check_schema("invariants", "--curve 'x^2+x*y+y^2-1'");
    check_schema("signature", "--curve 'x^2+x*y+y^2-1'");
    check_schema("signature", "--curve 'x^2+y^2-1'");
    check_schema("degree", "--curve 'x^2*y+y^2+y+64/121' --group A2 --n 2");
    check_schema("symmetry", "--curve 'x^2+y^2-1'");
    check_schema("symmetry", "--curve 'x^3+y^3+1' --group A2");
    check_schema("equiv", "--curve 'x^2+y^2-1' --curve2 'x^2+y^2-4'");
    check_schema("equiv", "--curve 'x^3+y^3+1' --curve2 'x^2+y^2-1' --group A2");
    check_schema("samples", "--curve 'x^3+y^3+1' --group A2 --count 4");
    check_schema("valuations", "--curve 'y*(y-x)*(y+x)*(y-2*x)+3*x^3-2*x^2*y+5*y^3+x*y-7*x+4*y-2' --root 1");
    check_schema("fermat", "--d 3 --group A2");
    check_schema("fermat", "--d 3 --group A2 --what symmetry");
    check_schema("fermat", "--d 3 --group PGL3 --what degree");
}
