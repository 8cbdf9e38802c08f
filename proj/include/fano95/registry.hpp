#pragma once
// The 95-family table, TSV load/export, per-family classification reports,
// and full cross-module validation.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano95/admissibility.hpp"
#include "fano95/family_lists.hpp"
#include "fano95/fibrations.hpp"
#include "fano95/groups.hpp"
#include "fano95/singularities.hpp"
#include "fano95/weights.hpp"

namespace fano95 {

class RegistryError : public std::runtime_error {
public:
    RegistryError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

struct FamilyRecord {
    int family;  // N, 1..95
    WeightSystem ws;
    Basket basket;
    PresentationTag presentation;
    EllipticStatus elliptic;
    K3Route k3;
    bool potentially_dense;
};

// Fields recomputed from (N, weights) alone, for diffing against the table.
struct DerivedFields {
    Rational minus_k_cubed;
    Basket basket;
    PresentationTag presentation;
    EllipticStatus elliptic;
    K3Route k3;
    bool potentially_dense;  // via the presentation identity
};

struct ClassificationReport {
    bool in_classification = false;
    int family = 0;
    AdmissibilityVerdict verdict;
    std::optional<FamilyRecord> tabulated;
    std::optional<DerivedFields> derived;
    std::vector<std::string> mismatches;  // field names

    bool clean() const { return mismatches.empty(); }
};

struct ValidationSummary {
    std::vector<ClassificationReport> reports;
    std::vector<std::string> global_mismatches;

    bool clean() const;
};

class Registry {
public:
    // Built-in copy of the table.
    static const Registry& embedded();
    // Embedded table, unless the FANO95_TABLE environment variable points to
    // an override file.
    static Registry load();
    static Registry from_file(const std::string& path);
    static Registry from_string(const std::string& text);
    // For validation tests: takes records as given, no load-time checks.
    static Registry from_records(std::vector<FamilyRecord> records);

    // Accessors returning references are disabled on temporaries; hold the
    // Registry in a variable first.
    const std::vector<FamilyRecord>& records() const& { return records_; }
    const std::vector<FamilyRecord>& records() const&& = delete;
    const FamilyRecord& record(int family) const&;
    const FamilyRecord& record(int family) const&& = delete;
    const FamilyRecord* find(const WeightSystem& ws) const&;
    const FamilyRecord* find(const WeightSystem& ws) const&& = delete;

    std::string export_tsv() const;

    // Derived-vs-tabulated diff for one weight system.
    ClassificationReport classify(const WeightSystem& ws) const;

    // classify() across all records, plus table-level checks (numbering,
    // enumeration equality). Healthy data gives 95 clean reports.
    ValidationSummary validate_all() const;

private:
    Registry() = default;
    std::vector<FamilyRecord> records_;
};

DerivedFields derive_fields(int family, const WeightSystem& ws);

// Sign pattern of one-step Kawamata blow-ups expected from the fibration
// data, checked against a basket:
//  - unique-elliptic families: exactly one zero value, all others negative;
//  - family 60: exactly one non-negative value, all others negative;
//  - families with no elliptic fibration other than 3 and 60: all negative.
// Returns an empty string when the basket complies, else a description.
std::string blowup_signature_violation(int family, const WeightSystem& ws,
                                       const Basket& basket);

// Raw TSV text of the embedded table.
const std::string& embedded_table_text();

}  // namespace fano95
