#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivpoly/fixdiv.hpp"
#include "ivpoly/lattice.hpp"
#include "ivpoly/poly_text.hpp"
#include "ivpoly/primary.hpp"
#include "ivpoly/semantic.hpp"
#include "ivpoly/table_json.hpp"
#include "ivpoly/verify.hpp"
#include "ivpoly/version.hpp"

using nlohmann::json;
using namespace ivpoly;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

std::string factor_string(const FixedDivisor& d) {
    if (d.p_parts.empty()) return d.value.get_str();
    std::string out;
    for (const auto& [p, e] : d.p_parts) {
        if (!out.empty()) out += " * ";
        out += p.get_str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

int cmd_fixdiv(const std::string& poly_text, std::optional<std::int64_t> prime, bool as_json) {
    const IntPoly f = parse_poly(poly_text);
    if (prime) {
        const auto e = fixed_divisor_p_part(f, *prime);
        if (as_json)
            std::cout << json{{"prime", std::to_string(*prime)}, {"exponent", e}}.dump() << "\n";
        else
            std::cout << e << "\n";
        return kExitTrue;
    }
    const FixedDivisor d = fixed_divisor(f);
    if (as_json) {
        json factors = json::object();
        for (const auto& [p, e] : d.p_parts) factors[p.get_str()] = e;
        std::cout << json{{"value", d.value.get_str()},
                          {"factors", factors},
                          {"image_primitive", d.value == 1}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "value: " << d.value << "\n"
                  << "factors: " << factor_string(d) << "\n"
                  << "image-primitive: " << (d.value == 1 ? "yes" : "no") << "\n";
    }
    return kExitTrue;
}

json certificate_json(const ComponentCertificate& cert, bool with_coeffs) {
    json obj{{"j", cert.j}, {"member", cert.member}};
    if (with_coeffs) {
        json coeffs = json::array();
        for (const auto& a : cert.expansion.coeffs) coeffs.push_back(a.get_str());
        obj["coeffs"] = coeffs;
        if (cert.violation)
            obj["violation"] = json{{"k", cert.violation->k},
                                    {"required_power", cert.violation->required_power.get_str()},
                                    {"actual_valuation", cert.violation->actual_valuation}};
        else
            obj["violation"] = nullptr;
    }
    return obj;
}

void print_certificate(const ComponentCertificate& cert) {
    std::cout << "component j=" << cert.j << ": " << (cert.member ? "member" : "non-member");
    std::cout << "  newton-coeffs=";
    bool first = true;
    for (const auto& a : cert.expansion.coeffs) {
        if (!first) std::cout << ",";
        std::cout << a;
        first = false;
    }
    if (cert.expansion.coeffs.empty()) std::cout << "(zero)";
    if (cert.violation)
        std::cout << "  violated: " << cert.violation->required_power << " must divide a_"
                  << cert.violation->k << " (valuation " << cert.violation->actual_valuation << ")";
    std::cout << "\n";
}

int cmd_member(const std::string& poly_text, std::int64_t p, int n,
               std::optional<std::int64_t> component, bool certificate, bool as_json) {
    const IntPoly f = parse_poly(poly_text);
    const PrimePower pp(p, n);
    std::vector<ComponentCertificate> certs;
    bool member = true;
    if (component) {
        certs.push_back(component_membership(f, pp, *component));
        member = certs.back().member;
    } else {
        IpnResult r = ipn_membership(f, pp);
        certs = std::move(r.certificates);
        member = r.member;
    }
    if (as_json) {
        json comps = json::array();
        for (const auto& c : certs) comps.push_back(certificate_json(c, certificate));
        std::cout << json{{"member", member}, {"p", p}, {"n", n}, {"components", comps}}.dump()
                  << "\n";
    } else {
        std::cout << (member ? "member" : "non-member") << "\n";
        if (certificate)
            for (const auto& c : certs) print_certificate(c);
    }
    return member ? kExitTrue : kExitFalse;
}

int cmd_decompose(const std::string& poly_text, std::int64_t p, std::int64_t component,
                  bool as_json) {
    const IntPoly f = parse_poly(poly_text);
    if (!is_prime(p)) throw std::invalid_argument("--prime must be prime");
    const NewtonExpansion e = newton_expand(f, p, component);
    if (as_json) {
        json coeffs = json::array();
        for (const auto& a : e.coeffs) coeffs.push_back(a.get_str());
        std::cout << json{{"p", p}, {"j", component}, {"coeffs", coeffs}}.dump() << "\n";
    } else {
        if (e.coeffs.empty()) {
            std::cout << "0\n";
        } else {
            for (std::size_t i = 0; i < e.coeffs.size(); ++i)
                std::cout << (i ? "," : "") << e.coeffs[i];
            std::cout << "\n";
        }
    }
    return kExitTrue;
}

int cmd_gens(std::int64_t p, int n, std::optional<std::int64_t> component,
             const std::string& out_file, bool as_json) {
    const PrimePower pp(p, n);
    if (component) {
        const GeneratorSet gens = component_generators(pp, *component);
        json obj{{"p", p}, {"n", n}, {"mbar", cutoff_index(pp)}, {"j", *component}, {"gens", json::array()}};
        for (const auto& g : gens.gens) obj["gens"].push_back(coeffs_to_json(g));
        if (!out_file.empty()) {
            std::ofstream out(out_file);
            if (!out) throw std::invalid_argument("cannot write " + out_file);
            out << obj.dump(2) << "\n";
        } else if (as_json) {
            std::cout << obj.dump() << "\n";
        } else {
            for (const auto& g : gens.gens) std::cout << emit_poly(g) << "\n";
        }
        return kExitTrue;
    }
    const GeneratorTable table = build_generator_table(pp);
    const json obj = table_to_json(table);
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        if (!out) throw std::invalid_argument("cannot write " + out_file);
        out << obj.dump(2) << "\n";
    } else if (as_json) {
        std::cout << obj.dump() << "\n";
    } else {
        std::cout << "p: " << table.p << "\nn: " << table.n << "\nmbar: " << table.mbar
                  << "\nspecial_case: " << ipn_form_name(table.special_case) << "\n";
        for (std::size_t j = 0; j < table.components.size(); ++j) {
            std::cout << "Q[" << j << "]:";
            for (const auto& g : table.components[j]) std::cout << " " << emit_poly(g) << " ;";
            std::cout << "\n";
        }
        std::cout << "I:";
        for (const auto& g : table.ipn_gens) std::cout << " " << emit_poly(g) << " ;";
        std::cout << "\n";
    }
    return kExitTrue;
}

GeneratorSet claim_candidate(const std::string& claim, const PrimePower& pp) {
    const std::int64_t p = pp.prime();
    const int n = pp.exponent();
    GeneratorSet out;
    out.ideal_label = claim;
    if (claim == "pIZ") {
        if (n != 1) throw std::invalid_argument("claim pIZ needs --power 1");
        out.add(IntPoly::constant(p), "p");
        out.add(full_residue_product(p), "prod(X-j)");
        return out;
    }
    if (claim == "pnIZ" || claim == "p_plus_1") {
        if (claim == "p_plus_1" && n != p + 1)
            throw std::invalid_argument("claim p_plus_1 needs --power p+1");
        const IntPoly b = full_residue_product(p);
        IntPoly bk = IntPoly::constant(1);
        for (int k = 0; k <= n; ++k) {
            mpz_class scale;
            const mpz_class base = p;
            mpz_pow_ui(scale.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - k));
            out.add(scale * bk, "p^" + std::to_string(n - k) + "*B^" + std::to_string(k));
            if (k < n) bk *= b;
        }
        if (claim == "p_plus_1") out.add(square_residue_product(p), "prod_{i<p^2}(X-i)");
        return out;
    }
    throw std::invalid_argument("unknown claim '" + claim + "' (pIZ|pnIZ|p_plus_1|components)");
}

json verify_result_json(const VerifyResult& r) {
    json obj{{"status", verify_status_name(r.status)}, {"bound", r.bound_used}, {"detail", r.detail}};
    if (r.bad_candidate) obj["counterexample"] = coeffs_to_json(*r.bad_candidate);
    if (r.failing_residue) obj["failing_residue"] = r.failing_residue->get_str();
    if (r.uncertified_gen) obj["uncertified_generator"] = coeffs_to_json(*r.uncertified_gen);
    return obj;
}

int verify_exit(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::certified_equal: return kExitTrue;
        case VerifyStatus::counterexample: return kExitFalse;
        case VerifyStatus::inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

int cmd_verify(std::int64_t p, int n, std::string claim, std::optional<int> degree_bound,
               bool as_json) {
    const PrimePower pp(p, n);
    if (claim.empty()) claim = ipn_form_name(ipn_special_case(pp));
    if (claim == "n1") claim = "pIZ";
    if (claim == "p_ge_n") claim = "pnIZ";
    if (claim == "product") claim = "components";

    const int default_bound = static_cast<int>(2 * static_cast<std::int64_t>(n) * p);

    if (claim == "components") {
        json per_component = json::array();
        VerifyStatus worst = VerifyStatus::certified_equal;
        int bound = 0;
        for (std::int64_t j = 0; j < p; ++j) {
            const GeneratorSet cand = component_generators(pp, j);
            int d0 = degree_bound.value_or(default_bound);
            for (const auto& g : cand.gens)
                if (degree_bound && g.degree() > *degree_bound)
                    throw std::invalid_argument(
                        "--degree-bound too small: generators reach degree " +
                        std::to_string(g.degree()));
            const VerifyResult r = verify_equal(cand, pp, j, d0);
            bound = std::max(bound, r.bound_used);
            if (r.status == VerifyStatus::counterexample) worst = r.status;
            else if (r.status == VerifyStatus::inconclusive && worst != VerifyStatus::counterexample)
                worst = r.status;
            json obj = verify_result_json(r);
            obj["j"] = j;
            per_component.push_back(obj);
            if (!as_json)
                std::cout << "component j=" << j << ": " << verify_status_name(r.status)
                          << " (degree bound " << r.bound_used << ")\n";
        }
        if (as_json)
            std::cout << json{{"claim", claim}, {"p", p}, {"n", n},
                              {"status", verify_status_name(worst)},
                              {"bound", bound},
                              {"components", per_component}}
                             .dump()
                      << "\n";
        else
            std::cout << verify_status_name(worst) << "\n";
        return verify_exit(worst);
    }

    const GeneratorSet cand = claim_candidate(claim, pp);
    for (const auto& g : cand.gens)
        if (degree_bound && g.degree() > *degree_bound)
            throw std::invalid_argument("--degree-bound too small: candidate generators reach degree " +
                                        std::to_string(g.degree()));
    const VerifyResult r = verify_equal(cand, pp, -1, degree_bound.value_or(default_bound));
    if (as_json) {
        json obj = verify_result_json(r);
        obj["claim"] = claim;
        obj["p"] = p;
        obj["n"] = n;
        std::cout << obj.dump() << "\n";
    } else {
        std::cout << verify_status_name(r.status) << " (degree bound " << r.bound_used << ")\n";
        if (!r.detail.empty()) std::cerr << r.detail << "\n";
    }
    return verify_exit(r.status);
}

int cmd_table(std::int64_t p_min, std::int64_t p_max, int n_min, int n_max,
              const std::string& out_dir, bool verify) {
    namespace fs = std::filesystem;
    std::vector<std::pair<std::int64_t, int>> wanted;
    for (std::int64_t p = std::max<std::int64_t>(2, p_min); p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        for (int n = std::max(1, n_min); n <= n_max; ++n) wanted.emplace_back(p, n);
    }
    if (verify)
        for (const auto& [p, n] : wanted)
            if (PrimePower(p, n).modulus() > 1000000)
                throw std::invalid_argument("desk-scale cap exceeded: " + std::to_string(p) + "^" +
                                            std::to_string(n) + " > 10^6 residues with --verify");

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (!fs::is_directory(out_dir))
        throw std::invalid_argument("cannot create output directory " + out_dir);

    json index{{"tool_version", kToolVersion},
               {"schema_version", kSchemaVersion},
               {"entries", json::array()}};
    for (const auto& [p, n] : wanted) {
        const std::string name = "p" + std::to_string(p) + "_n" + std::to_string(n) + ".json";
        const fs::path path = fs::path(out_dir) / name;
        index["entries"].push_back({{"p", p}, {"n", n}, {"file", name}});

        if (fs::exists(path)) {
            try {
                std::ifstream in(path);
                json existing = json::parse(in);
                const TableEntry parsed = entry_from_json(existing);
                if (parsed.tool_version == kToolVersion &&
                    parsed.verification.has_value() == verify) {
                    std::cerr << name << ": up to date, skipped\n";
                    continue;
                }
            } catch (...) {
                // fall through and rewrite anything unreadable
            }
        }

        const PrimePower pp(p, n);
        TableEntry entry;
        entry.table = build_generator_table(pp);
        entry.tool_version = kToolVersion;
        if (verify) {
            GeneratorSet cand;
            cand.ideal_label = "table";
            for (const auto& g : entry.table.ipn_gens) cand.add(g, "table");
            const VerifyResult r =
                verify_equal(cand, pp, -1, static_cast<int>(2 * static_cast<std::int64_t>(n) * p));
            entry.verification =
                VerificationRecord{r.bound_used, verify_status_name(r.status), kToolVersion};
        }
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot write " + path.string());
        out << entry_to_json(entry).dump(2) << "\n";
        std::cerr << name << ": written\n";
    }

    std::ofstream out(fs::path(out_dir) / "index.json");
    if (!out) throw std::invalid_argument("cannot write index.json");
    out << index.dump(2) << "\n";
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed divisors of integer polynomials and the primary structure of I_{p^n}"};
    app.set_version_flag("--version", std::string("ivpoly ") + kToolVersion + " (schema " +
                                          kSchemaVersion + ")");
    app.require_subcommand(1);

    std::string poly_text, out_file, out_dir, claim;
    std::int64_t prime = 0, component = 0, p_min = 0, p_max = -1;
    int power = 1, n_min = 1, n_max = 0, degree_bound = 0;
    bool as_json = false, want_cert = false, do_verify = false;

    auto* fixdiv_cmd = app.add_subcommand("fixdiv", "fixed divisor, factorization, image-primitivity");
    fixdiv_cmd->add_option("--poly", poly_text, "polynomial (comma or X^k form)")->required();
    auto* fixdiv_prime = fixdiv_cmd->add_option("--prime", prime, "emit only the exponent of this prime");
    fixdiv_cmd->add_flag("--json", as_json, "JSON output");

    auto* member_cmd = app.add_subcommand("member", "membership in I_{p^n} or a component Q_{n,j}");
    member_cmd->add_option("--poly", poly_text, "polynomial")->required();
    member_cmd->add_option("--prime", prime, "prime p")->required();
    member_cmd->add_option("--power", power, "exponent n >= 1")->required();
    auto* member_comp = member_cmd->add_option("--component", component, "restrict to residue j");
    member_cmd->add_flag("--certificate", want_cert, "print the Newton certificate");
    member_cmd->add_flag("--json", as_json, "JSON output");

    auto* decompose_cmd = app.add_subcommand("decompose", "Newton coefficients at nodes j, j+p, ...");
    decompose_cmd->add_option("--poly", poly_text, "polynomial")->required();
    decompose_cmd->add_option("--prime", prime, "prime p")->required();
    decompose_cmd->add_option("--component", component, "residue j (default 0)");
    decompose_cmd->add_flag("--json", as_json, "JSON output");

    auto* gens_cmd = app.add_subcommand("gens", "generators of I_{p^n} and its components");
    gens_cmd->add_option("--prime", prime, "prime p")->required();
    gens_cmd->add_option("--power", power, "exponent n >= 1")->required();
    auto* gens_comp = gens_cmd->add_option("--component", component, "only component j");
    gens_cmd->add_option("--out", out_file, "write JSON to this file");
    gens_cmd->add_flag("--json", as_json, "JSON output");

    auto* verify_cmd = app.add_subcommand("verify", "certify a closed form against the decomposition");
    verify_cmd->add_option("--prime", prime, "prime p")->required();
    verify_cmd->add_option("--power", power, "exponent n >= 1")->required();
    verify_cmd->add_option("--claim", claim, "pIZ|pnIZ|p_plus_1|components (default by case)");
    auto* verify_bound = verify_cmd->add_option("--degree-bound", degree_bound, "initial lattice bound");
    verify_cmd->add_flag("--json", as_json, "JSON output");

    auto* table_cmd = app.add_subcommand("table", "write the generator-table cache");
    table_cmd->add_option("--p-min", p_min, "first prime")->required();
    table_cmd->add_option("--p-max", p_max, "last prime")->required();
    table_cmd->add_option("--n-min", n_min, "first exponent")->required();
    table_cmd->add_option("--n-max", n_max, "last exponent")->required();
    table_cmd->add_option("--out", out_dir, "output directory")->required();
    table_cmd->add_flag("--verify", do_verify, "record a verification per entry");

    try {
        app.parse(argc, argv);
        if (fixdiv_cmd->parsed())
            return cmd_fixdiv(poly_text,
                              fixdiv_prime->count() ? std::optional<std::int64_t>(prime) : std::nullopt,
                              as_json);
        if (member_cmd->parsed())
            return cmd_member(poly_text, prime, power,
                              member_comp->count() ? std::optional<std::int64_t>(component) : std::nullopt,
                              want_cert, as_json);
        if (decompose_cmd->parsed()) return cmd_decompose(poly_text, prime, component, as_json);
        if (gens_cmd->parsed())
            return cmd_gens(prime, power,
                            gens_comp->count() ? std::optional<std::int64_t>(component) : std::nullopt,
                            out_file, as_json);
        if (verify_cmd->parsed())
            return cmd_verify(prime, power, claim,
                              verify_bound->count() ? std::optional<int>(degree_bound) : std::nullopt,
                              as_json);
        if (table_cmd->parsed()) return cmd_table(p_min, p_max, n_min, n_max, out_dir, do_verify);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
