#include "fano95/registry.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fano95 {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, sep)) parts.push_back(piece);
    if (!text.empty() && text.back() == sep) parts.push_back("");
    return parts;
}

int parse_int(const std::string& text, int line, const std::string& field) {
    try {
        size_t pos = 0;
        int value = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw RegistryError("field '" + field + "': cannot parse integer from '" + text + "'",
                            line);
    }
}

bool parse_flag(const std::string& text, int line, const std::string& field) {
    if (text == "0") return false;
    if (text == "1") return true;
    throw RegistryError("field '" + field + "': expected 0 or 1, got '" + text + "'", line);
}

Basket parse_basket(const std::string& text, int line) {
    Basket basket;
    if (text == "-") return basket;
    for (const auto& piece : split(text, ';')) {
        auto parts = split(piece, ':');
        if (parts.size() != 3)
            throw RegistryError("basket entry '" + piece + "' is not r:a:count", line);
        int r = parse_int(parts[0], line, "basket r");
        int a = parse_int(parts[1], line, "basket a");
        int count = parse_int(parts[2], line, "basket count");
        if (count <= 0) throw RegistryError("basket count must be positive", line);
        try {
            basket.add(QuotientSingularity(r, a), count);
        } catch (const SingularityError& e) {
            throw RegistryError(std::string("basket entry '") + piece + "': " + e.what(), line);
        }
    }
    return basket;
}

std::string basket_to_tsv(const Basket& basket) {
    if (basket.empty()) return "-";
    std::ostringstream out;
    bool first = true;
    for (const auto& e : basket.entries()) {
        if (!first) out << ";";
        out << e.type.r() << ":" << e.type.a() << ":" << e.count;
        first = false;
    }
    return out.str();
}

constexpr const char* kHeader =
    "N\td\ta1\ta2\ta3\ta4\ta5\tbasket\tpresentation\telliptic\tomega\tunique\tk3_route\tdense";

void check_record_invariants(const FamilyRecord& rec) {
    auto invariant_error = [&](const std::string& field, const std::string& why) {
        throw RegistryError("family " + std::to_string(rec.family) + ", field '" + field +
                            "': " + why);
    };
    auto verdict = check_quasismooth(rec.ws);
    if (!verdict.admissible) invariant_error("weights", verdict.str());
    Basket computed = compute_basket(rec.ws);
    if (!(computed == rec.basket))
        invariant_error("basket", "basket mismatch: table has " + rec.basket.str() +
                                      ", computed " + computed.str());
    bool listed_dense = lists::contains(lists::kPotentiallyDense, rec.family);
    if (rec.potentially_dense != listed_dense)
        invariant_error("dense", "flag disagrees with the density list");
    bool pres_dense = generator_count(rec.presentation) >= 2 || rec.family == 1 ||
                      rec.family == 2 || rec.family == 11 || rec.family == 19;
    if (rec.potentially_dense != pres_dense)
        invariant_error("dense", "flag disagrees with the presentation identity");
    if (rec.elliptic.kind == EllipticKind::None &&
        (rec.elliptic.multiple_structures || rec.elliptic.unique_structure))
        invariant_error("elliptic", "kind none forbids structure flags");
    if (rec.elliptic.unique_structure && rec.elliptic.multiple_structures)
        invariant_error("elliptic", "unique and multiple structures are exclusive");
}

}  // namespace

bool ValidationSummary::clean() const {
    if (!global_mismatches.empty()) return false;
    return std::all_of(reports.begin(), reports.end(),
                       [](const ClassificationReport& r) { return r.clean(); });
}

Registry Registry::from_string(const std::string& text) {
    Registry registry;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    std::vector<bool> seen(96, false);
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kHeader)
                throw RegistryError("missing or malformed header row", line_no);
            header_seen = true;
            continue;
        }
        auto cols = split(line, '\t');
        if (cols.size() != 14)
            throw RegistryError("expected 14 columns, got " + std::to_string(cols.size()),
                                line_no);
        int family = parse_int(cols[0], line_no, "N");
        if (family < 1 || family > 95)
            throw RegistryError("family number " + std::to_string(family) + " out of range",
                                line_no);
        if (seen[family])
            throw RegistryError("duplicated family number " + std::to_string(family), line_no);
        seen[family] = true;
        int d = parse_int(cols[1], line_no, "d");
        std::array<int, 5> weights{};
        for (int i = 0; i < 5; ++i)
            weights[i] = parse_int(cols[2 + i], line_no, "a" + std::to_string(i + 1));
        try {
            FamilyRecord rec{
                family,
                WeightSystem(weights, d),
                parse_basket(cols[7], line_no),
                presentation_from_string(cols[8]),
                EllipticStatus{elliptic_kind_from_string(cols[9]),
                               parse_flag(cols[10], line_no, "omega"),
                               parse_flag(cols[11], line_no, "unique")},
                k3_route_from_string(cols[12]),
                parse_flag(cols[13], line_no, "dense"),
            };
            check_record_invariants(rec);
            registry.records_.push_back(std::move(rec));
        } catch (const RegistryError&) {
            throw;
        } catch (const std::exception& e) {
            throw RegistryError(e.what(), line_no);
        }
    }
    if (!header_seen) throw RegistryError("empty table");
    if (registry.records_.size() != 95)
        throw RegistryError("expected 95 records, got " +
                            std::to_string(registry.records_.size()));
    std::sort(registry.records_.begin(), registry.records_.end(),
              [](const FamilyRecord& a, const FamilyRecord& b) { return a.family < b.family; });
    return registry;
}

Registry Registry::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RegistryError("cannot open table file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_string(buffer.str());
}

Registry Registry::from_records(std::vector<FamilyRecord> records) {
    Registry registry;
    registry.records_ = std::move(records);
    return registry;
}

const Registry& Registry::embedded() {
    static const Registry instance = from_string(embedded_table_text());
    return instance;
}

Registry Registry::load() {
    if (const char* path = std::getenv("FANO95_TABLE")) return from_file(path);
    return embedded();
}

const FamilyRecord& Registry::record(int family) const& {
    for (const auto& rec : records_)
        if (rec.family == family) return rec;
    throw std::out_of_range("no family " + std::to_string(family) + " in the registry");
}

const FamilyRecord* Registry::find(const WeightSystem& ws) const& {
    for (const auto& rec : records_)
        if (rec.ws == ws) return &rec;
    return nullptr;
}

std::string Registry::export_tsv() const {
    std::ostringstream out;
    out << kHeader << "\n";
    for (const auto& rec : records_) {
        const auto& w = rec.ws.weights();
        out << rec.family << "\t" << rec.ws.degree();
        for (int a : w) out << "\t" << a;
        out << "\t" << basket_to_tsv(rec.basket) << "\t" << to_string(rec.presentation) << "\t"
            << to_string(rec.elliptic.kind) << "\t" << (rec.elliptic.multiple_structures ? 1 : 0)
            << "\t" << (rec.elliptic.unique_structure ? 1 : 0) << "\t" << to_string(rec.k3)
            << "\t" << (rec.potentially_dense ? 1 : 0) << "\n";
    }
    return out.str();
}

DerivedFields derive_fields(int family, const WeightSystem& ws) {
    DerivedFields f{
        minus_k_cubed(ws),
        compute_basket(ws),
        presentation_of(family),
        elliptic_status(family),
        k3_route(ws, family),
        false,
    };
    f.potentially_dense = generator_count(f.presentation) >= 2 || family == 1 || family == 2 ||
                          family == 11 || family == 19;
    return f;
}

std::string blowup_signature_violation(int family, const WeightSystem& ws,
                                       const Basket& basket) {
    Rational k = minus_k_cubed(ws);
    int zero = 0, negative = 0, nonnegative = 0, total = 0;
    for (const auto& e : basket.entries()) {
        Rational after = kawamata_blowup(k, e.type);
        total += e.count;
        if (after.is_zero()) zero += e.count;
        if (after.sign() < 0) negative += e.count;
        if (after.sign() >= 0) nonnegative += e.count;
    }
    bool unique_elliptic = lists::contains(lists::kUniqueEllipticFibration, family);
    if (unique_elliptic && !(zero == 1 && negative == total - 1))
        return "expected exactly one zero blow-up value and " + std::to_string(total - 1) +
               " negative ones, found " + std::to_string(zero) + " zero / " +
               std::to_string(negative) + " negative";
    if (family == 60 && !(nonnegative == 1 && negative == total - 1))
        return "expected exactly one non-negative blow-up value, found " +
               std::to_string(nonnegative);
    if (family != 60 && family != 3 && lists::contains(lists::kNoEllipticFibration, family) &&
        negative != total)
        return "expected every blow-up value negative, found " +
               std::to_string(total - negative) + " non-negative";
    return "";
}

ClassificationReport Registry::classify(const WeightSystem& ws) const {
    ClassificationReport report;
    report.verdict = check_quasismooth(ws);
    const FamilyRecord* rec = find(ws);
    if (rec == nullptr) return report;  // not in the classification

    report.in_classification = true;
    report.family = rec->family;
    report.tabulated = *rec;
    DerivedFields derived = derive_fields(rec->family, ws);
    report.derived = derived;

    auto mismatch = [&](const std::string& field) { report.mismatches.push_back(field); };
    if (!(derived.basket == rec->basket)) mismatch("basket");
    if (derived.presentation != rec->presentation) mismatch("presentation");
    if (!(derived.elliptic == rec->elliptic)) mismatch("elliptic");
    if (derived.k3 != rec->k3) mismatch("k3_route");
    if (lists::contains(lists::kPotentiallyDense, rec->family) != rec->potentially_dense)
        mismatch("dense");
    if (derived.potentially_dense != rec->potentially_dense) mismatch("density_coherence");
    std::string signature = blowup_signature_violation(rec->family, ws, rec->basket);
    if (!signature.empty()) mismatch("blowup_signature");
    return report;
}

ValidationSummary Registry::validate_all() const {
    ValidationSummary summary;
    for (const auto& rec : records_) {
        ClassificationReport report = classify(rec.ws);
        if (!report.in_classification || report.family != rec.family) {
            report.mismatches.push_back("numbering");
        }
        if (!report.verdict.admissible) report.mismatches.push_back("admissible");
        summary.reports.push_back(std::move(report));
    }

    if (records_.size() != 95) summary.global_mismatches.push_back("record_count");
    for (size_t i = 0; i < records_.size(); ++i)
        if (records_[i].family != static_cast<int>(i) + 1) {
            summary.global_mismatches.push_back("numbering");
            break;
        }

    auto enumerated = enumerate_families();
    bool enum_ok = enumerated.size() == records_.size();
    if (enum_ok)
        for (size_t i = 0; i < enumerated.size(); ++i)
            if (!(enumerated[i] == records_[i].ws)) {
                enum_ok = false;
                break;
            }
    if (!enum_ok) summary.global_mismatches.push_back("enumeration");
    return summary;
}

}  // namespace fano95
