#include "freedist/report.hpp"

#include "freedist/errors.hpp"
#include "freedist/parser.hpp"

#include <sstream>

namespace freedist {

namespace {

constexpr const char* kScope = "curvature components of homogeneity <= 2";

const std::pair<const char*, Tensor ConnectionData::*> kConnection[] = {
    {"A", &ConnectionData::A}, {"C", &ConnectionData::C}, {"E", &ConnectionData::E}, {"F", &ConnectionData::F}};
const std::pair<const char*, Tensor Curvature::*> kCurvature[] = {
    {"P", &Curvature::P}, {"Q", &Curvature::Q}, {"R", &Curvature::R}, {"S", &Curvature::S}, {"T", &Curvature::T}};

nlohmann::json tensor_json(const Tensor& t)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [idx, value] : t.entries()) out.push_back({{"index", idx}, {"value", value.to_string()}});
    return out;
}

void read_tensor(const nlohmann::json& entries, const Chart& chart, Tensor& t)
{
    for (const auto& e : entries)
        t.set(e.at("index").get<Tensor::Index>(), parse_expression(e.at("value").get<std::string>(), chart));
}

ExtensionVerdict verdict_from_string(const std::string& s)
{
    for (auto v : {ExtensionVerdict::NormalAtComputedOrder, ExtensionVerdict::ObstructedByT})
        if (to_string(v) == s) return v;
    throw Error("unknown extension verdict '" + s + "'");
}

}  // namespace

std::string slot_label(const PairIndexer& pairs, std::size_t slot)
{
    const auto l = static_cast<std::size_t>(pairs.l());
    if (slot < l) return std::to_string(slot + 1);
    const auto [j, k] = pairs.pair(slot - l);
    return "[" + std::to_string(j) + "," + std::to_string(k) + "]";
}

std::size_t slot_from_label(const PairIndexer& pairs, const std::string& label)
{
    int j = 0, k = 0;
    char open = 0, comma = 0, close = 0;
    std::istringstream in(label);
    if (!label.empty() && label.front() == '[') {
        if (!(in >> open >> j >> comma >> k >> close) || comma != ',' || close != ']' || j < 1 || j >= k ||
            k > pairs.l())
            throw Error("bad pair label '" + label + "'");
        return static_cast<std::size_t>(pairs.l()) + pairs.index(j, k);
    }
    if (!(in >> j) || !in.eof() || j < 1 || j > pairs.l()) throw Error("bad slot label '" + label + "'");
    return static_cast<std::size_t>(j - 1);
}

nlohmann::json report_json(const Analysis& a)
{
    nlohmann::json j;
    j["l"] = a.l;
    j["nondegenerate"] = true;
    nlohmann::json f = nlohmann::json::array();
    for (const auto& [key, value] : a.f.entries()) {
        const auto& [x, y, z] = key;
        f.push_back({{"index", {slot_label(a.f.pairs(), x), slot_label(a.f.pairs(), y), slot_label(a.f.pairs(), z)}},
                     {"value", value.to_string()}});
    }
    j["structure_functions"] = f;
    for (const auto& [name, member] : kConnection) j[name] = tensor_json(a.connection.*member);
    for (const auto& [name, member] : kCurvature) j[name] = tensor_json(a.curvature.*member);
    j["flat"] = a.flat;
    j["kappa11_deg2_zero"] = a.kappa11_deg2_zero;
    j["extension_verdict"] = to_string(a.verdict);
    j["verdict_scope"] = kScope;
    return j;
}

Analysis parse_report(const nlohmann::json& j)
{
    Analysis a;
    a.l = j.at("l").get<int>();
    if (a.l < 1) throw Error("report has invalid l");
    const Chart chart(a.l);
    a.f = StructureFunctions(a.l);
    for (const auto& e : j.at("structure_functions")) {
        const auto labels = e.at("index").get<std::vector<std::string>>();
        if (labels.size() != 3) throw Error("structure function entry needs three slots");
        a.f.set(slot_from_label(a.f.pairs(), labels[0]), slot_from_label(a.f.pairs(), labels[1]),
                slot_from_label(a.f.pairs(), labels[2]), parse_expression(e.at("value").get<std::string>(), chart));
    }
    for (const auto& [name, member] : kConnection) read_tensor(j.at(name), chart, a.connection.*member);
    for (const auto& [name, member] : kCurvature)
        if (j.contains(name)) read_tensor(j.at(name), chart, a.curvature.*member);
    a.flat = j.at("flat").get<bool>();
    a.kappa11_deg2_zero = j.at("kappa11_deg2_zero").get<bool>();
    a.verdict = verdict_from_string(j.at("extension_verdict").get<std::string>());
    return a;
}

std::string report_text(const Analysis& a)
{
    std::ostringstream out;
    out << "l = " << a.l << "\n";
    out << "structure functions: " << a.f.entries().size() << " nonzero\n";
    for (const auto& [name, member] : kConnection)
        out << name << ": " << (a.connection.*member).entries().size() << " nonzero\n";
    for (const auto& [name, member] : kCurvature) {
        const Tensor& t = a.curvature.*member;
        out << name << ": " << t.entries().size() << " nonzero\n";
        if (name[0] != 'P') continue;
        for (const auto& [idx, value] : t.entries()) {
            out << "  P^[" << idx[0] << idx[1] << "]_" << idx[2] << "[" << idx[3] << idx[4] << "] = " << value.to_string()
                << "\n";
        }
    }
    out << "flat: " << (a.flat ? "true" : "false") << "\n";
    out << "kappa11_deg2_zero: " << (a.kappa11_deg2_zero ? "true" : "false") << "\n";
    out << "extension verdict: " << to_string(a.verdict) << " (" << kScope << ")\n";
    return out.str();
}

}  // namespace freedist
