#pragma once

#include <optional>
#include <string>
#include <vector>

namespace conlab {

// One recorded claim about a catalog entry: invariant name, the claimed
// value in canonical string form, and where the claim comes from (anchor
// plus a short verbatim quote). Claims are data; computation never reads them.
struct PaperClaim {
    std::string invariant;
    std::string claimed;
    std::string citation;
};

struct CatalogEntry {
    enum class Kind { semigroup, dualizing_semigroup, preset, nodal, ribbon, quotient };

    std::string name;
    Kind kind;
    std::vector<long> semigroup_generators; // semigroup/dualizing_semigroup
    std::string preset;                     // preset
    std::string nodal_builder;              // nodal: banana | self_nodes_<k>
    long ribbon_genus = 0;                  // ribbon
    long quotient_r = 0, quotient_a = 0, quotient_b = 0; // quotient
    std::vector<PaperClaim> claims;
};

// The registry: every worked example, with its recorded claims.
const std::vector<CatalogEntry>& catalog_entries();

struct ReportRow {
    std::string entry;
    std::string invariant;
    std::string computed;
    std::string claimed;
    std::string citation;
    bool agrees = false;
};

// One row per (entry, claim), in registry order. Engine errors propagate with
// the entry name attached; disagreement is data, never an error.
std::vector<ReportRow> catalog_report_rows(std::optional<int> truncation = std::nullopt);

enum class ReportFormat { table, json };

std::string catalog_report(ReportFormat format, std::optional<int> truncation = std::nullopt);

} // namespace conlab
