#include "linkhom/catalog.hpp"

#include <istream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

using nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

Int parse_int(std::string_view field) {
    std::string_view t = trim(field);
    if (t.empty()) throw InvalidInput("empty field");
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) throw InvalidInput("malformed integer '" + std::string(field) + "'");
    for (std::size_t i = start; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9')
            throw InvalidInput("malformed integer '" + std::string(field) + "'");
    return Int(std::string(t));
}

CatalogEntry parse_row(std::string_view line, std::size_t line_no) {
    std::vector<Int> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) comma = line.size();
        fields.push_back(parse_int(line.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (fields.size() < 3)
        throw InvalidInput("expected at least two weights and a ke flag");

    // Last field 0/1 means `w...,ke`; anything else is a degree override
    // after the flag. A real degree is never 0 or 1 (weights are >= 1 and
    // must stay below it), so the split is unambiguous.
    bool has_degree = !(fields.back() == 0 || fields.back() == 1);
    if (has_degree && fields.size() < 4)
        throw InvalidInput("expected at least two weights, a ke flag and a degree");

    Int degree_override;
    if (has_degree) {
        degree_override = std::move(fields.back());
        fields.pop_back();
    }
    Int ke = std::move(fields.back());
    fields.pop_back();
    if (ke != 0 && ke != 1)
        throw InvalidInput("ke flag must be 0 or 1, got " + ke.str());

    for (std::size_t i = 0; i + 1 < fields.size(); ++i)
        if (fields[i] > fields[i + 1])
            throw InvalidInput("weights must be ascending");

    WeightVector weights = validate_weights(std::move(fields));
    Int degree = has_degree ? degree_override : fano_degree(weights);
    return CatalogEntry{std::move(weights), ke == 1, std::move(degree), line_no};
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

std::vector<Int> ordered_weights(const ScanEntry& se) {
    if (!se.chain.empty()) {
        std::vector<Int> out;
        for (std::size_t i : se.chain.front().ordering) out.push_back(se.entry.weights[i]);
        return out;
    }
    return se.entry.weights.weights();
}

std::string tuple_str(const std::vector<Int>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += xs[i].str();
    }
    return out + ")";
}

std::string emit_table(const ScanReport& report) {
    std::ostringstream out;
    out << "weights | exponents | deg | b | H\n";
    for (const ScanEntry& se : report.entries) {
        if (!se.errors.empty()) {
            out << tuple_str(se.entry.weights.weights()) << " | error: " << se.errors.front()
                << "\n";
            continue;
        }
        const PolynomialForm* form = nullptr;
        if (!se.chain.empty())
            form = &se.chain.front();
        else if (se.bp)
            form = &*se.bp;
        out << tuple_str(ordered_weights(se)) << " | ";
        out << (form ? tuple_str(form->exponents) : std::string("-")) << " | ";
        out << se.entry.degree << " | ";
        if (se.homology)
            out << se.homology->betti << " | " << se.homology->group_label;
        else
            out << "- | -";
        out << "\n";
    }
    out << report.total() << " entries | bp: " << report.bp_count()
        << " | chain: " << report.chain_count() << " | errors: " << report.error_count() << "\n";
    return out.str();
}

std::string emit_json(const ScanReport& report) {
    ordered_json doc;
    ordered_json entries = ordered_json::array();
    for (const ScanEntry& se : report.entries) {
        ordered_json e;
        e["weights"] = json_int_list(se.entry.weights.weights());
        e["degree"] = to_int64(se.entry.degree);
        e["ke"] = se.entry.ke_flag;
        if (se.bp) {
            e["bp"] = ordered_json{{"exponents", json_int_list(se.bp->exponents)}};
        } else {
            e["bp"] = nullptr;
        }
        ordered_json chain = ordered_json::array();
        for (const PolynomialForm& form : se.chain) {
            ordered_json c;
            std::vector<Int> order;
            for (std::size_t i : form.ordering) order.push_back(se.entry.weights[i]);
            c["order"] = json_int_list(order);
            c["exponents"] = json_int_list(form.exponents);
            if (!form.unit_exponents.empty()) c["unit_exponents"] = form.unit_exponents;
            chain.push_back(std::move(c));
        }
        e["chain"] = std::move(chain);
        if (se.homology) {
            e["homology"] = ordered_json{{"betti", to_int64(se.homology->betti)},
                                         {"torsion", json_int_list(se.homology->torsion)},
                                         {"label", se.homology->group_label}};
        } else {
            e["homology"] = nullptr;
        }
        if (!se.errors.empty()) e["errors"] = se.errors;
        entries.push_back(std::move(e));
    }
    doc["entries"] = std::move(entries);
    doc["summary"] = ordered_json{{"total", report.total()}};
    return doc.dump();
}

std::string emit_csv(const ScanReport& report) {
    std::ostringstream out;
    out << "# w0,...,wk,ke[,degree]\n";
    out << "# total=" << report.total() << " bp=" << report.bp_count()
        << " chain=" << report.chain_count() << " errors=" << report.error_count() << "\n";
    for (const ScanEntry& se : report.entries) {
        const CatalogEntry& entry = se.entry;
        for (const Int& w : entry.weights.weights()) out << w << ",";
        out << (entry.ke_flag ? 1 : 0);
        if (entry.degree != fano_degree(entry.weights)) out << "," << entry.degree;
        out << "\n";
    }
    return out.str();
}

}  // namespace

ParsedCatalog parse_catalog(std::istream& in) {
    ParsedCatalog out;
    std::string line;
    std::size_t line_no = 0;
    std::size_t data_rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        ++data_rows;
        try {
            out.entries.push_back(parse_row(body, line_no));
        } catch (const Error& e) {
            out.errors.push_back({line_no, e.what()});
        }
    }
    if (data_rows == 0) throw EmptyInput("no catalog rows in input");
    return out;
}

ParsedCatalog parse_catalog(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_catalog(in);
}

std::size_t ScanReport::bp_count() const {
    std::size_t n = 0;
    for (const ScanEntry& se : entries) n += se.bp.has_value();
    return n;
}

std::size_t ScanReport::chain_count() const {
    std::size_t n = 0;
    for (const ScanEntry& se : entries) n += !se.chain.empty();
    return n;
}

std::size_t ScanReport::error_count() const {
    std::size_t n = 0;
    for (const ScanEntry& se : entries) n += !se.errors.empty();
    return n;
}

ScanReport scan(const std::vector<CatalogEntry>& entries, const ScanOptions& opts) {
    ScanReport report;
    for (const CatalogEntry& entry : entries) {
        if (opts.ke_only && !entry.ke_flag) continue;
        ScanEntry se{entry, {}, {}, {}, {}};
        try {
            LinkDescriptor link = link_descriptor(entry.weights, entry.degree);
            if (opts.test_bp) se.bp = bp_exponents(entry.weights, entry.degree);
            if (opts.test_chain) se.chain = find_chain_orderings(entry.weights, entry.degree);
            if (opts.homology && (se.bp || !se.chain.empty()))
                se.homology = homology_summary(link, opts.homology_options);
        } catch (const Error& e) {
            se.errors.push_back(e.what());
        }
        report.entries.push_back(std::move(se));
    }
    return report;
}

std::string emit_report(const ScanReport& report, std::string_view format) {
    if (format == "table") return emit_table(report);
    if (format == "json") return emit_json(report);
    if (format == "csv") return emit_csv(report);
    throw UnknownFormat("unknown report format '" + std::string(format) +
                        "' (expected table, json or csv)");
}

const std::vector<KnownLink>& known_links() {
    static const std::vector<KnownLink> rows = {
        {{10, 75, 163, 247, 331}, {75, 10, 163, 331, 247}, {11, 75, 5, 2, 2}, 825, 10,
         {55, 5, 5, 5, 5}},
        {{9, 62, 85, 124, 155}, {62, 124, 155, 9, 85}, {7, 3, 2, 31, 5}, 434, 12, {14, 2, 2}},
        {{9, 174, 277, 467, 649}, {9, 174, 467, 277, 649}, {175, 9, 3, 4, 2}, 1575, 12,
         {525, 3, 3}},
        {{11, 87, 145, 193, 348}, {87, 348, 145, 11, 193}, {9, 2, 3, 58, 4}, 783, 12, {27, 3}},
        {{9, 100, 113, 229, 350}, {100, 350, 9, 113, 229}, {8, 2, 50, 7, 3}, 800, 14, {400}},
        {{9, 181, 291, 488, 787}, {9, 291, 488, 181, 787}, {195, 6, 3, 7, 2}, 1755, 14, {585, 3}},
        {{10, 71, 164, 253, 333}, {10, 164, 333, 71, 253}, {83, 5, 2, 7, 3}, 830, 14, {166}},
        {{10, 103, 163, 275, 540}, {10, 540, 275, 163, 103}, {109, 2, 2, 5, 9}, 1090, 16,
         {218, 2}},
        {{11, 31, 32, 103, 144}, {32, 144, 11, 103, 31}, {10, 2, 16, 3, 7}, 320, 18, {160}},
        {{11, 27, 36, 45, 107}, {45, 36, 27, 11, 107}, {5, 5, 7, 18, 2}, 225, 20, {5}},
    };
    return rows;
}

}  // namespace linkhom
