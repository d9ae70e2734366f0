#ifndef IVPOLY_TABLE_JSON_HPP
#define IVPOLY_TABLE_JSON_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ivpoly/intpoly.hpp"
#include "ivpoly/primary.hpp"

namespace ivpoly {

/// One (p, n) entry of the generator-table cache. Coefficients travel as
/// decimal strings so any JSON reader round-trips them exactly.
struct GeneratorTable {
    std::int64_t p = 2;
    int n = 1;
    unsigned long mbar = 1;
    std::vector<std::vector<IntPoly>> components;  // index j in [0, p)
    std::vector<IntPoly> ipn_gens;
    IpnForm special_case = IpnForm::n1;

    friend bool operator==(const GeneratorTable&, const GeneratorTable&) = default;
};

struct VerificationRecord {
    int bound = 0;
    std::string verdict;
    std::string tool_version;

    friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

struct TableEntry {
    GeneratorTable table;
    std::string tool_version;
    std::optional<VerificationRecord> verification;  // present iff a verify pass ran

    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

GeneratorTable build_generator_table(const PrimePower& pp);

nlohmann::json coeffs_to_json(const IntPoly& f);
IntPoly coeffs_from_json(const nlohmann::json& arr);

nlohmann::json table_to_json(const GeneratorTable& table);
GeneratorTable table_from_json(const nlohmann::json& obj);

nlohmann::json entry_to_json(const TableEntry& entry);
TableEntry entry_from_json(const nlohmann::json& obj);

}  // namespace ivpoly

#endif
