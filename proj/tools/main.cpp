#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "linkhom/catalog.hpp"
#include "linkhom/errors.hpp"
#include "linkhom/homology.hpp"
#include "linkhom/oracle.hpp"
#include "linkhom/weights.hpp"

namespace {

using nlohmann::ordered_json;
using namespace linkhom;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitNotFound = 2;
constexpr int kExitConvention = 3;
constexpr int kExitMismatch = 4;

constexpr const char* kOracleCapEnv = "LINKHOM_ORACLE_CAP";

std::vector<Int> parse_int_list(const std::string& csv) {
    std::vector<Int> out;
    std::stringstream ss(csv);
    std::string field;
    while (std::getline(ss, field, ',')) {
        if (field.empty()) throw InvalidInput("empty entry in list '" + csv + "'");
        try {
            out.emplace_back(field);
        } catch (const std::exception&) {
            throw InvalidInput("malformed integer '" + field + "'");
        }
    }
    if (out.empty()) throw InvalidInput("empty list");
    return out;
}

std::string tuple_str(const std::vector<Int>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += xs[i].str();
    }
    return out + ")";
}

long long to_int64(const Int& x) {
    if (x < std::numeric_limits<long long>::min() || x > std::numeric_limits<long long>::max())
        throw InvalidInput("value " + x.str() + " does not fit a 64-bit JSON number");
    return static_cast<long long>(x);
}

ordered_json json_int_list(const std::vector<Int>& xs) {
    ordered_json arr = ordered_json::array();
    for (const Int& x : xs) arr.push_back(to_int64(x));
    return arr;
}

ordered_json homology_json(const HomologyResult& h) {
    return ordered_json{{"betti", to_int64(h.betti)},
                        {"torsion", json_int_list(h.torsion)},
                        {"label", h.group_label}};
}

// shared --weights/--degree/--fano plumbing for the single-link subcommands
struct LinkArgs {
    std::string weights_csv;
    std::string degree_str;
    bool fano = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--weights", weights_csv, "comma-separated weights, order-significant")
            ->required();
        auto* deg = cmd->add_option("--degree", degree_str, "degree of homogeneity");
        cmd->add_flag("--fano", fano, "derive the degree as sum(weights) - 1")->excludes(deg);
    }

    WeightVector weights() const { return validate_weights(parse_int_list(weights_csv)); }

    Int degree(const WeightVector& w) const {
        if (fano) return fano_degree(w);
        if (degree_str.empty())
            throw InvalidInput("either --degree or --fano is required");
        std::vector<Int> parsed = parse_int_list(degree_str);
        if (parsed.size() != 1)
            throw InvalidInput("--degree takes a single integer");
        return parsed.front();
    }
};

Int oracle_cap(const std::optional<long long>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv(kOracleCapEnv)) {
        try {
            return Int(env);
        } catch (const std::exception&) {
            throw InvalidInput(std::string(kOracleCapEnv) + " is not an integer: " + env);
        }
    }
    return kDefaultMatrixCap;
}

int run_homology(const LinkArgs& args, const std::string& format, bool betti_only,
                 bool torsion_only) {
    WeightVector w = args.weights();
    LinkDescriptor link = link_descriptor(w, args.degree(w));
    if (betti_only) {
        Int b = betti(link);
        if (format == "json")
            std::cout << ordered_json{{"betti", to_int64(b)}}.dump() << "\n";
        else
            std::cout << "b = " << b << "\n";
        return kExitOk;
    }
    if (torsion_only) {
        std::vector<Int> torsion = orlik_torsion(link);
        if (format == "json")
            std::cout << ordered_json{{"torsion", json_int_list(torsion)}}.dump() << "\n";
        else
            std::cout << "torsion = " << tuple_str(torsion) << "\n";
        return kExitOk;
    }
    HomologyResult h = homology_summary(link);
    if (format == "json") {
        std::cout << homology_json(h).dump() << "\n";
    } else {
        std::cout << "b = " << h.betti << "\n";
        std::cout << "torsion = " << tuple_str(h.torsion) << "\n";
        std::cout << "H = " << h.group_label << "\n";
    }
    return kExitOk;
}

int run_bp_check(const LinkArgs& args, const std::string& format) {
    WeightVector w = args.weights();
    std::optional<PolynomialForm> form = bp_exponents(w, args.degree(w));
    if (format == "json") {
        ordered_json j = form ? ordered_json{{"exponents", json_int_list(form->exponents)}}
                              : ordered_json(nullptr);
        std::cout << j.dump() << "\n";
    } else if (form) {
        std::cout << "exponents = " << tuple_str(form->exponents) << "\n";
    } else {
        std::cout << "no Brieskorn-Pham form\n";
    }
    return form ? kExitOk : kExitNotFound;
}

void print_chain_form(const WeightVector& w, const PolynomialForm& form) {
    std::vector<Int> order;
    for (std::size_t i : form.ordering) order.push_back(w[i]);
    std::cout << "ordering = " << tuple_str(order) << "\n";
    std::cout << "exponents = " << tuple_str(form.exponents) << "\n";
    for (std::size_t i : form.unit_exponents)
        std::cout << "warning: exponent a_" << i
                  << " = 1 (smoothness of the corresponding link is not checked)\n";
}

int run_chain_check(const LinkArgs& args, bool ordered, const std::string& format) {
    WeightVector w = args.weights();
    Int degree = args.degree(w);

    std::vector<PolynomialForm> forms;
    if (ordered) {
        if (auto form = chain_exponents(w, degree)) forms.push_back(std::move(*form));
    } else {
        forms = find_chain_orderings(w, degree);
    }

    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const PolynomialForm& form : forms) {
            std::vector<Int> order;
            for (std::size_t i : form.ordering) order.push_back(w[i]);
            ordered_json c{{"order", json_int_list(order)},
                           {"exponents", json_int_list(form.exponents)}};
            if (!form.unit_exponents.empty()) c["unit_exponents"] = form.unit_exponents;
            arr.push_back(std::move(c));
        }
        std::cout << arr.dump() << "\n";
    } else if (forms.empty()) {
        std::cout << "no chain form\n";
    } else {
        print_chain_form(w, forms.front());
        if (forms.size() > 1)
            std::cout << forms.size() - 1 << " further ordering(s); use --format json for all\n";
    }
    return forms.empty() ? kExitNotFound : kExitOk;
}

int run_scan(const std::string& input, const ScanOptions& opts, const std::string& format) {
    ParsedCatalog parsed;
    if (input == "-") {
        parsed = parse_catalog(std::cin);
    } else {
        std::ifstream in(input);
        if (!in) throw InvalidInput("cannot open '" + input + "'");
        parsed = parse_catalog(in);
    }
    for (const RowError& err : parsed.errors)
        std::cerr << "line " << err.line << ": " << err.message << "\n";
    ScanReport report = scan(parsed.entries, opts);
    std::cout << emit_report(report, format);
    if (format == "json") std::cout << "\n";
    return kExitOk;
}

int run_oracle(const std::string& bp_csv, const std::optional<long long>& cap_flag,
               const std::string& format) {
    std::vector<Int> exponents = parse_int_list(bp_csv);
    Int cap = oracle_cap(cap_flag);

    HomologyResult from_oracle = oracle_homology(exponents, cap);
    LinkDescriptor link = bp_link(exponents);
    HomologyResult from_algorithm = homology_summary(link);
    const bool match = from_oracle == from_algorithm;

    if (format == "json") {
        ordered_json j{{"exponents", json_int_list(exponents)},
                       {"weights", json_int_list(link.weights.weights())},
                       {"degree", to_int64(link.degree)},
                       {"oracle", homology_json(from_oracle)},
                       {"algorithm", homology_json(from_algorithm)},
                       {"match", match}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "weights = " << tuple_str(link.weights.weights()) << ", degree = "
                  << link.degree << "\n";
        std::cout << "oracle:    b = " << from_oracle.betti << ", torsion = "
                  << tuple_str(from_oracle.torsion) << ", H = " << from_oracle.group_label << "\n";
        std::cout << "algorithm: b = " << from_algorithm.betti << ", torsion = "
                  << tuple_str(from_algorithm.torsion) << ", H = " << from_algorithm.group_label
                  << "\n";
        std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return match ? kExitOk : kExitMismatch;
}

int run_table() {
    int failures = 0;
    for (const KnownLink& row : known_links()) {
        std::vector<Int> ascending(row.weights_ascending.begin(), row.weights_ascending.end());
        std::vector<Int> chain_order(row.chain_order.begin(), row.chain_order.end());
        std::vector<Int> exponents(row.exponents.begin(), row.exponents.end());

        bool ok = true;
        std::string note;
        try {
            WeightVector w = validate_weights(ascending);
            if (fano_degree(w) != row.degree) {
                ok = false;
                note = "degree rule";
            }

            std::vector<PolynomialForm> forms = find_chain_orderings(w, row.degree);
            bool found = false;
            for (const PolynomialForm& form : forms) {
                std::vector<Int> order;
                for (std::size_t i : form.ordering) order.push_back(w[i]);
                if (order == chain_order && form.exponents == exponents) found = true;
            }
            if (!found) {
                ok = false;
                note += std::string(note.empty() ? "" : "; ") + "chain ordering not recovered";
            }

            HomologyResult h = homology_summary(link_descriptor(w, row.degree));
            std::vector<Int> torsion(row.torsion.begin(), row.torsion.end());
            if (h.betti != row.betti || h.torsion != torsion) {
                ok = false;
                note += std::string(note.empty() ? "" : "; ") + "homology: got b = " +
                        h.betti.str() + ", " + h.group_label;
            }
        } catch (const Error& e) {
            ok = false;
            note = e.what();
        }

        std::cout << (ok ? "ok  " : "FAIL") << " " << tuple_str(chain_order) << " deg "
                  << row.degree << " b " << row.betti;
        if (!ok) std::cout << " [" << note << "]";
        std::cout << "\n";
        failures += !ok;
    }
    std::cout << (failures ? "FAILED" : "PASSED") << " " << known_links().size() - failures << "/"
              << known_links().size() << "\n";
    return failures ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integral homology of links of weighted homogeneous hypersurface singularities"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "print the version banner to stderr");

    LinkArgs homology_args, betti_args, torsion_args, bp_args, chain_args;
    std::string format_homology = "table", format_betti = "table", format_torsion = "table";
    std::string format_bp = "table", format_chain = "table", format_scan = "table";
    std::string format_oracle = "table";

    auto* cmd_homology = app.add_subcommand("homology", "Betti number, torsion and group label");
    homology_args.attach(cmd_homology);
    cmd_homology->add_option("--format", format_homology)->check(CLI::IsMember({"table", "json"}));

    auto* cmd_betti = app.add_subcommand("betti", "Betti number only");
    betti_args.attach(cmd_betti);
    cmd_betti->add_option("--format", format_betti)->check(CLI::IsMember({"table", "json"}));

    auto* cmd_torsion = app.add_subcommand("torsion", "torsion coefficients only");
    torsion_args.attach(cmd_torsion);
    cmd_torsion->add_option("--format", format_torsion)->check(CLI::IsMember({"table", "json"}));

    auto* cmd_bp = app.add_subcommand("bp-check", "Brieskorn-Pham representability");
    bp_args.attach(cmd_bp);
    cmd_bp->add_option("--format", format_bp)->check(CLI::IsMember({"table", "json"}));

    auto* cmd_chain = app.add_subcommand("chain-check", "chain polynomial representability");
    chain_args.attach(cmd_chain);
    bool chain_ordered = false;
    cmd_chain->add_flag("--ordered", chain_ordered,
                        "test only the given weight order, no permutation search");
    cmd_chain->add_option("--format", format_chain)->check(CLI::IsMember({"table", "json"}));

    auto* cmd_scan = app.add_subcommand("scan", "scan a weight catalog (CSV)");
    std::string scan_input;
    std::string scan_forms = "bp,chain";
    ScanOptions scan_opts;
    bool scan_no_homology = false;
    cmd_scan->add_option("--input", scan_input, "catalog file, or - for stdin")->required();
    cmd_scan->add_option("--forms", scan_forms, "subset of bp,chain to test");
    cmd_scan->add_flag("--ke-only", scan_opts.ke_only, "only entries with the ke flag set");
    cmd_scan->add_flag("--no-homology", scan_no_homology, "skip homology computation");
    cmd_scan->add_option("--format", format_scan)->check(CLI::IsMember({"table", "json", "csv"}));

    auto* cmd_oracle = app.add_subcommand(
        "oracle", "compare the torsion algorithm against the monodromy cokernel");
    std::string oracle_bp;
    std::optional<long long> oracle_cap_flag;
    cmd_oracle->add_option("--bp", oracle_bp, "Brieskorn-Pham exponents a0,a1,...")->required();
    cmd_oracle->add_option("--cap", oracle_cap_flag,
                           "largest admitted Milnor number (env " + std::string(kOracleCapEnv) +
                               ")");
    cmd_oracle->add_option("--format", format_oracle)->check(CLI::IsMember({"table", "json"}));

    auto* cmd_table =
        app.add_subcommand("table", "check the bundled corpus against its known homology");

    CLI11_PARSE(app, argc, argv);

    if (verbose) std::cerr << "linkhom 0.1.0\n";

    try {
        if (cmd_homology->parsed()) return run_homology(homology_args, format_homology, false, false);
        if (cmd_betti->parsed()) return run_homology(betti_args, format_betti, true, false);
        if (cmd_torsion->parsed()) return run_homology(torsion_args, format_torsion, false, true);
        if (cmd_bp->parsed()) return run_bp_check(bp_args, format_bp);
        if (cmd_chain->parsed()) return run_chain_check(chain_args, chain_ordered, format_chain);
        if (cmd_scan->parsed()) {
            scan_opts.homology = !scan_no_homology;
            scan_opts.test_bp = scan_forms.find("bp") != std::string::npos;
            scan_opts.test_chain = scan_forms.find("chain") != std::string::npos;
            if (!scan_opts.test_bp && !scan_opts.test_chain)
                throw InvalidInput("--forms must mention bp and/or chain");
            return run_scan(scan_input, scan_opts, format_scan);
        }
        if (cmd_oracle->parsed()) return run_oracle(oracle_bp, oracle_cap_flag, format_oracle);
        if (cmd_table->parsed()) return run_table();
    } catch (const ConventionViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConvention;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}
