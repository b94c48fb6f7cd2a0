// Command-line front end: analyze, algebra-check, cohomology, spinor, inclusions.
#include "freedist/battery.hpp"
#include "freedist/cohomology.hpp"
#include "freedist/errors.hpp"
#include "freedist/parser.hpp"
#include "freedist/report.hpp"
#include "freedist/spinorial.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace freedist;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kInputError = 1;     // unreadable or malformed input; failed checks
constexpr int kNotFree = 2;        // degenerate frame or not a free distribution
constexpr int kUnsupported = 3;    // outside the supported range or resource guard

int fail(int code, const std::string& message)
{
    std::cerr << "error: " << message << "\n";
    return code;
}

int cmd_analyze(const std::string& path, const std::string& format)
{
    std::ifstream in(path);
    if (!in) return fail(kInputError, path + ": cannot open");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        DistributionSpec spec = parse_frame_file(buffer.str());
        Analysis a = analyze(build_frame(spec.fields));
        if (format == "json")
            std::cout << report_json(a).dump(2) << "\n";
        else
            std::cout << report_text(a);
        return kOk;
    } catch (const ParseError& e) {
        return fail(kInputError, path + ": " + e.what());
    } catch (const DegenerateFrame& e) {
        return fail(kNotFree, path + ": " + e.what());
    } catch (const UnsupportedFrame& e) {
        return fail(kNotFree, path + ": " + e.what());
    } catch (const NotFreeDistribution& e) {
        return fail(kNotFree, path + ": " + e.what());
    } catch (const Unsupported& e) {
        return fail(kUnsupported, path + ": " + e.what());
    }
}

int cmd_algebra_check(int l, int min_l, int max_l)
{
    if (l < min_l || l > max_l)
        return fail(kUnsupported, "algebra-check supports " + std::to_string(min_l) + " <= l <= " + std::to_string(max_l));
    bool all = true;
    for (const CheckResult& r : algebra_battery(l)) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
    }
    return all ? kOk : kInputError;
}

int cmd_cohomology(int l, int k, const std::string& range, int max_l)
{
    if (l < 2 || l > max_l) return fail(kUnsupported, "cohomology supports 2 <= l <= " + std::to_string(max_l));
    const auto dots = range.find("..");
    int h_min = 0, h_max = 0;
    try {
        if (dots == std::string::npos) {
            h_min = h_max = std::stoi(range);
        } else {
            h_min = std::stoi(range.substr(0, dots));
            h_max = std::stoi(range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return fail(kInputError, "homogeneity range must be <a>..<b>");
    }
    if (h_min > h_max) return fail(kInputError, "empty homogeneity range");
    try {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [h, dim] : harmonic_scan(l, k, h_min, h_max)) rows.push_back({{"k", k}, {"h", h}, {"dim", dim}});
        std::cout << nlohmann::json{{"l", l}, {"rows", rows}}.dump(2) << "\n";
    } catch (const Unsupported& e) {
        return fail(kUnsupported, e.what());
    }
    return kOk;
}

int cmd_spinor(int l, const std::string& vector_json)
{
    try {
        const nlohmann::json input = nlohmann::json::parse(vector_json);
        const PairIndexer pairs(l);
        TangentVector v(tangent_dimension(l));
        for (const auto& [label, value] : input.at("v").items())
            v[slot_from_label(pairs, label)] = parse_scalar(value.get<std::string>());
        const ScalarMatrix m = tangent_to_skew(l, v);
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < m.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
            rows.push_back(row);
        }
        const ExactScalar pf = pfaffian(m);
        std::cout << nlohmann::json{{"l", l}, {"skew", rows}, {"pfaffian", pf.to_string()}, {"null_cone", pf.is_zero()}}
                         .dump(2)
                  << "\n";
        return kOk;
    } catch (const Unsupported& e) {
        return fail(kUnsupported, e.what());
    } catch (const ParseError& e) {
        return fail(kInputError, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(kInputError, std::string("vector JSON: ") + e.what());
    } catch (const Error& e) {
        return fail(kInputError, e.what());
    }
}

int cmd_inclusions(int l)
{
    try {
        nlohmann::json rows = nlohmann::json::array();
        for (const InclusionEntry& e : list_inclusions(l))
            rows.push_back({{"small_group", e.small_group},
                            {"small_parabolic", e.small_parabolic},
                            {"big_group", e.big_group},
                            {"model", e.model},
                            {"geometry", e.geometry}});
        std::cout << rows.dump(2) << "\n";
        return kOk;
    } catch (const Unsupported& e) {
        return fail(kUnsupported, e.what());
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Cartan-connection analysis of generic free distributions"};
    app.require_subcommand(1);

    std::string path, format = "json";
    auto* analyze_cmd = app.add_subcommand("analyze", "normalize a frame file and report curvature");
    analyze_cmd->add_option("file", path, "frame file")->required();
    analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    int l = 0, k = 2, min_l = 3, max_l = 6, max_cohomology_l = 5;
    auto* algebra_cmd = app.add_subcommand("algebra-check", "run the graded algebra check battery");
    algebra_cmd->add_option("--l", l)->required();
    algebra_cmd->add_option("--max-l", max_l, "resource guard");

    std::string range;
    auto* cohomology_cmd = app.add_subcommand("cohomology", "dimensions of harmonic chains");
    cohomology_cmd->set_help_flag("--help", "print this help and exit");
    cohomology_cmd->add_option("--l", l)->required();
    cohomology_cmd->add_option("--k", k)->check(CLI::IsMember({1, 2}));
    cohomology_cmd->add_option("--h", range, "<a>..<b>")->required();
    cohomology_cmd->add_option("--max-l", max_cohomology_l, "resource guard");

    std::string vector_json;
    auto* spinor_cmd = app.add_subcommand("spinor", "skew matrix, Pfaffian and cone membership of a tangent vector");
    spinor_cmd->add_option("--l", l)->required()->check(CLI::Range(1, 64));
    spinor_cmd->add_option("--vector", vector_json, R"(JSON {"v": {"1": "...", "[2,3]": "..."}})")->required();

    int inclusion_l = 3;
    auto* inclusions_cmd = app.add_subcommand("inclusions", "exceptional inclusions of parabolic geometries");
    inclusions_cmd->add_option("--l", inclusion_l);

    CLI11_PARSE(app, argc, argv);
    try {
        if (*analyze_cmd) return cmd_analyze(path, format);
        if (*algebra_cmd) return cmd_algebra_check(l, min_l, max_l);
        if (*cohomology_cmd) return cmd_cohomology(l, k, range, max_cohomology_l);
        if (*spinor_cmd) return cmd_spinor(l, vector_json);
        if (*inclusions_cmd) return cmd_inclusions(inclusion_l);
    } catch (const std::exception& e) {
        return fail(kInputError, e.what());
    }
    return kInputError;
}
