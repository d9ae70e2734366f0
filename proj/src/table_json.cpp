#include "ivpoly/table_json.hpp"

#include <stdexcept>

namespace ivpoly {

using nlohmann::json;

GeneratorTable build_generator_table(const PrimePower& pp) {
    GeneratorTable t;
    t.p = pp.prime();
    t.n = pp.exponent();
    t.mbar = cutoff_index(pp);
    for (std::int64_t j = 0; j < pp.prime(); ++j)
        t.components.push_back(component_generators(pp, j).gens);
    t.ipn_gens = ipn_generators(pp).gens;
    t.special_case = ipn_special_case(pp);
    return t;
}

json coeffs_to_json(const IntPoly& f) {
    json arr = json::array();
    for (const auto& c : f.coeffs()) arr.push_back(c.get_str());
    return arr;
}

IntPoly coeffs_from_json(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("coefficient list must be an array");
    std::vector<mpz_class> coeffs;
    for (const auto& v : arr) coeffs.emplace_back(v.get<std::string>());
    return IntPoly(std::move(coeffs));
}

namespace {

json gens_to_json(const std::vector<IntPoly>& gens) {
    json arr = json::array();
    for (const auto& g : gens) arr.push_back(coeffs_to_json(g));
    return arr;
}

std::vector<IntPoly> gens_from_json(const json& arr) {
    std::vector<IntPoly> out;
    for (const auto& g : arr) out.push_back(coeffs_from_json(g));
    return out;
}

IpnForm form_from_name(const std::string& name) {
    for (IpnForm f : {IpnForm::n1, IpnForm::p_ge_n, IpnForm::p_plus_1, IpnForm::product})
        if (name == ipn_form_name(f)) return f;
    throw std::invalid_argument("unknown special_case '" + name + "'");
}

}  // namespace

json table_to_json(const GeneratorTable& table) {
    json components = json::array();
    for (std::size_t j = 0; j < table.components.size(); ++j)
        components.push_back({{"j", j}, {"gens", gens_to_json(table.components[j])}});
    return json{{"p", table.p},
                {"n", table.n},
                {"mbar", table.mbar},
                {"components", components},
                {"ipn_gens", gens_to_json(table.ipn_gens)},
                {"special_case", ipn_form_name(table.special_case)}};
}

GeneratorTable table_from_json(const json& obj) {
    GeneratorTable t;
    t.p = obj.at("p").get<std::int64_t>();
    t.n = obj.at("n").get<int>();
    t.mbar = obj.at("mbar").get<unsigned long>();
    t.components.resize(obj.at("components").size());
    for (const auto& comp : obj.at("components")) {
        const auto j = comp.at("j").get<std::size_t>();
        if (j >= t.components.size()) throw std::invalid_argument("component index out of range");
        t.components[j] = gens_from_json(comp.at("gens"));
    }
    t.ipn_gens = gens_from_json(obj.at("ipn_gens"));
    t.special_case = form_from_name(obj.at("special_case").get<std::string>());
    return t;
}

json entry_to_json(const TableEntry& entry) {
    json obj = table_to_json(entry.table);
    obj["tool_version"] = entry.tool_version;
    if (entry.verification)
        obj["verification"] = {{"bound", entry.verification->bound},
                               {"verdict", entry.verification->verdict},
                               {"tool_version", entry.verification->tool_version}};
    return obj;
}

TableEntry entry_from_json(const json& obj) {
    TableEntry e;
    e.table = table_from_json(obj);
    e.tool_version = obj.at("tool_version").get<std::string>();
    if (obj.contains("verification")) {
        const auto& v = obj.at("verification");
        e.verification = VerificationRecord{v.at("bound").get<int>(),
                                            v.at("verdict").get<std::string>(),
                                            v.at("tool_version").get<std::string>()};
    }
    return e;
}

}  // namespace ivpoly
