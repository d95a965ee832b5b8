#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linkhom/homology.hpp"
#include "linkhom/int_types.hpp"
#include "linkhom/weights.hpp"

namespace linkhom {

/// One weight system from a Fano hypersurface catalog. Weights are kept
/// ascending as published; the degree follows the Fano rule
/// d = sum(w) - 1 unless the row carried an explicit override.
struct CatalogEntry {
    WeightVector weights;
    bool ke_flag = false;  // source marks the hypersurface Kaehler-Einstein
    Int degree;
    std::size_t source_line = 0;  // 1-based line in the input, 0 if synthetic

    bool operator==(const CatalogEntry& other) const {
        return weights == other.weights && ke_flag == other.ke_flag && degree == other.degree;
    }
};

struct RowError {
    std::size_t line = 0;
    std::string message;
};

struct ParsedCatalog {
    std::vector<CatalogEntry> entries;
    std::vector<RowError> errors;
};

/// CSV reader for `w0,...,wk,ke[,degree]` rows; `#` lines are comments.
/// Malformed rows land in `errors` with their line number instead of
/// aborting the parse. Throws EmptyInput when the stream holds no data
/// rows at all.
ParsedCatalog parse_catalog(std::istream& in);
ParsedCatalog parse_catalog(std::string_view text);

struct ScanOptions {
    bool test_bp = true;
    bool test_chain = true;
    bool ke_only = false;
    bool homology = true;
    HomologyOptions homology_options;
};

struct ScanEntry {
    CatalogEntry entry;
    std::optional<PolynomialForm> bp;
    std::vector<PolynomialForm> chain;  // every valid ordering, canonical first
    std::optional<HomologyResult> homology;
    std::vector<std::string> errors;
};

struct ScanReport {
    std::vector<ScanEntry> entries;

    std::size_t total() const { return entries.size(); }
    std::size_t bp_count() const;
    std::size_t chain_count() const;
    std::size_t error_count() const;
};

/// Runs the representability tests (and homology, when requested and a
/// form exists) over the entries, in input order. Per-entry failures are
/// recorded in the entry's error notes, never thrown.
ScanReport scan(const std::vector<CatalogEntry>& entries, const ScanOptions& opts = {});

/// Serializes a report. `format` is one of "table", "json", "csv";
/// anything else throws UnknownFormat. Field order is stable, so equal
/// reports serialize to identical text. The csv form emits the entries in
/// the input row format (scan results as comments), so feeding it back
/// through parse_catalog reproduces the entries.
std::string emit_report(const ScanReport& report, std::string_view format);

/// A bundled corpus of links with independently known homology: ten
/// five-weight Fano hypersurface systems whose links are realized by
/// chain polynomials. Used by the verification suite and the `table`
/// subcommand; also shipped as data/sample_catalog.csv.
struct KnownLink {
    std::vector<long long> weights_ascending;
    std::vector<long long> chain_order;   // weights in chain order
    std::vector<long long> exponents;     // chain exponents for that order
    long long degree;                     // = sum(weights) - 1
    long long betti;
    std::vector<long long> torsion;
};

const std::vector<KnownLink>& known_links();

}  // namespace linkhom
