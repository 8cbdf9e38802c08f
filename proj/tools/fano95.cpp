// Command-line surface for the classification toolkit: table queries,
// enumeration, basket and blow-up arithmetic, word-problem queries, and the
// full cross-validation run.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fano95/registry.hpp"

using json = nlohmann::json;
using namespace fano95;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitData = 3;

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, sep)) parts.push_back(piece);
    return parts;
}

WeightSystem parse_weights(const std::string& weights_csv, int degree) {
    auto parts = split_on(weights_csv, ',');
    if (parts.size() != 5)
        throw std::invalid_argument("--weights expects five comma-separated integers");
    std::array<int, 5> w{};
    for (int i = 0; i < 5; ++i) w[i] = std::stoi(parts[i]);
    return WeightSystem(w, degree);
}

Word parse_word(const std::string& text) {
    Word word;
    std::istringstream in(text);
    int letter;
    while (in >> letter) word.push_back(letter);
    if (!in.eof()) throw std::invalid_argument("word must be space-separated integers");
    return word;
}

std::vector<QuotientSingularity> parse_chain(const std::string& text) {
    std::vector<QuotientSingularity> chain;
    if (text.empty()) return chain;
    for (const auto& piece : split_on(text, ',')) {
        auto parts = split_on(piece, ':');
        if (parts.size() != 2)
            throw std::invalid_argument("chain entry '" + piece + "' is not r:a");
        chain.emplace_back(std::stoi(parts[0]), std::stoi(parts[1]));
    }
    return chain;
}

json basket_json(const Basket& basket) {
    json entries = json::array();
    for (const auto& e : basket.entries())
        entries.push_back({{"r", e.type.r()},
                           {"a", e.type.a()},
                           {"type", e.type.str()},
                           {"count", e.count}});
    return entries;
}

json elliptic_json(const EllipticStatus& status) {
    return {{"kind", to_string(status.kind)},
            {"multiple_structures", status.multiple_structures},
            {"unique_structure", status.unique_structure}};
}

json record_json(const FamilyRecord& rec) {
    return {{"N", rec.family},
            {"degree", rec.ws.degree()},
            {"weights", rec.ws.weights()},
            {"minus_k_cubed", minus_k_cubed(rec.ws).str()},
            {"basket", basket_json(rec.basket)},
            {"presentation", to_string(rec.presentation)},
            {"elliptic", elliptic_json(rec.elliptic)},
            {"k3_route", to_string(rec.k3)},
            {"potentially_dense", rec.potentially_dense}};
}

json derived_json(const DerivedFields& f) {
    return {{"minus_k_cubed", f.minus_k_cubed.str()},
            {"basket", basket_json(f.basket)},
            {"presentation", to_string(f.presentation)},
            {"elliptic", elliptic_json(f.elliptic)},
            {"k3_route", to_string(f.k3)},
            {"potentially_dense", f.potentially_dense}};
}

json verdict_json(const AdmissibilityVerdict& verdict) {
    json failures = json::array();
    for (const auto& f : verdict.failures) failures.push_back(f.str());
    return {{"admissible", verdict.admissible}, {"failures", failures}};
}

json report_json(const ClassificationReport& report) {
    json j{{"in_classification", report.in_classification},
           {"verdict", verdict_json(report.verdict)}};
    if (report.in_classification) {
        j["N"] = report.family;
        j["tabulated"] = record_json(*report.tabulated);
        j["derived"] = derived_json(*report.derived);
        j["mismatches"] = report.mismatches;
    }
    return j;
}

void print_record(const FamilyRecord& rec) {
    std::cout << "N=" << rec.family << "  X_" << rec.ws.degree() << " in P" << rec.ws.str()
              << "\n"
              << "  -K^3:          " << minus_k_cubed(rec.ws).str() << "\n"
              << "  basket:        " << rec.basket.str() << "\n"
              << "  presentation:  " << to_string(rec.presentation) << "\n"
              << "  elliptic:      " << to_string(rec.elliptic.kind)
              << (rec.elliptic.multiple_structures ? ", multiple structures" : "")
              << (rec.elliptic.unique_structure ? ", unique structure" : "") << "\n"
              << "  k3 route:      " << to_string(rec.k3) << "\n"
              << "  dense points:  " << (rec.potentially_dense ? "yes" : "no") << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"95 families of quasismooth anticanonical weighted Fano 3-fold hypersurfaces"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --json appear after the subcommand
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON on stdout");

    auto* cmd_list = app.add_subcommand("list", "one-line summary of all 95 families");

    int show_n = 0;
    auto* cmd_show = app.add_subcommand("show", "full record of one family");
    cmd_show->add_option("--n", show_n, "family number 1..95")->required();

    int max_weight = 40, max_degree = 100;
    auto* cmd_enum = app.add_subcommand("enumerate", "recompute the classification from scratch");
    cmd_enum->add_option("--max-weight", max_weight, "weight bound (default 40)");
    cmd_enum->add_option("--max-degree", max_degree, "degree bound (default 100)");

    std::string classify_weights;
    int classify_degree = 0;
    auto* cmd_classify = app.add_subcommand("classify", "derived-vs-tabulated report for weights");
    cmd_classify->add_option("--weights", classify_weights, "1,a2,a3,a4,a5")->required();
    cmd_classify->add_option("--degree", classify_degree, "hypersurface degree")->required();

    int basket_n = 0;
    auto* cmd_basket = app.add_subcommand("basket", "singularity basket of one family");
    cmd_basket->add_option("--n", basket_n, "family number 1..95")->required();

    int blowup_n = 0;
    std::string chain_text;
    auto* cmd_blowup = app.add_subcommand("blowup", "-K^3 along a Kawamata blow-up chain");
    cmd_blowup->add_option("--n", blowup_n, "family number 1..95")->required();
    cmd_blowup->add_option("--chain", chain_text, "comma-separated r:a list")->required();

    std::string group_tag, reduce_text, order_text;
    std::vector<std::string> equal_texts;
    auto* cmd_group = app.add_subcommand("group", "word problem in a presentation");
    cmd_group->add_option("--presentation", group_tag, "F0|F1|F2|F3|F3HAT|F5")->required();
    auto* opt_reduce = cmd_group->add_option("--reduce", reduce_text, "word, e.g. \"1 2 3\"");
    auto* opt_equal =
        cmd_group->add_option("--equal", equal_texts, "two words")->expected(2);
    auto* opt_order = cmd_group->add_option("--order", order_text, "word");

    auto* cmd_validate = app.add_subcommand("validate", "cross-validate the whole table");

    std::string coeffs_text;
    auto* cmd_witness =
        app.add_subcommand("witness-n19", "potential-density witness pair for family 19");
    cmd_witness->add_option("--coeffs", coeffs_text,
                            "a10012,a20021,a01021,a10030,a30030,a00130")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (cmd_list->parsed()) {
        const auto& registry = Registry::load();
        if (as_json) {
            json out = json::array();
            for (const auto& rec : registry.records()) out.push_back(record_json(rec));
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& rec : registry.records()) {
                std::cout << "N=" << rec.family << "\tX_" << rec.ws.degree() << " in P"
                          << rec.ws.str() << "\t-K^3=" << minus_k_cubed(rec.ws).str() << "\t"
                          << to_string(rec.presentation) << "\t"
                          << to_string(rec.elliptic.kind) << "\t" << to_string(rec.k3)
                          << (rec.potentially_dense ? "\tdense" : "") << "\n";
            }
        }
        return kExitOk;
    }

    if (cmd_show->parsed()) {
        const Registry registry = Registry::load();
        const auto& rec = registry.record(show_n);
        if (as_json)
            std::cout << record_json(rec).dump(2) << "\n";
        else
            print_record(rec);
        return kExitOk;
    }

    if (cmd_enum->parsed()) {
        auto families = enumerate_families(max_weight, max_degree);
        if (as_json) {
            json out = json::array();
            for (const auto& ws : families)
                out.push_back({{"degree", ws.degree()}, {"weights", ws.weights()}});
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& ws : families) std::cout << ws.str() << "\n";
            std::cout << families.size() << " weight systems\n";
        }
        return kExitOk;
    }

    if (cmd_classify->parsed()) {
        WeightSystem ws = parse_weights(classify_weights, classify_degree);
        auto report = Registry::load().classify(ws);
        if (as_json) {
            std::cout << report_json(report).dump(2) << "\n";
        } else if (!report.in_classification) {
            std::cout << "not in the classification: " << report.verdict.str() << "\n";
        } else {
            print_record(*report.tabulated);
            if (report.clean())
                std::cout << "  derived fields match the table\n";
            else {
                std::cout << "  MISMATCHES:";
                for (const auto& m : report.mismatches) std::cout << " " << m;
                std::cout << "\n";
            }
        }
        return report.in_classification && !report.clean() ? kExitMismatch : kExitOk;
    }

    if (cmd_basket->parsed()) {
        const Registry registry = Registry::load();
        const auto& rec = registry.record(basket_n);
        if (as_json)
            std::cout << json{{"N", rec.family},
                              {"basket", basket_json(rec.basket)},
                              {"minus_k_cubed", minus_k_cubed(rec.ws).str()}}
                             .dump(2)
                      << "\n";
        else
            std::cout << rec.basket.str() << "\n";
        return kExitOk;
    }

    if (cmd_blowup->parsed()) {
        const Registry registry = Registry::load();
        const auto& rec = registry.record(blowup_n);
        auto values = blowup_chain(rec.ws, parse_chain(chain_text));
        if (as_json) {
            json out = json::array();
            for (const auto& v : values) out.push_back(v.str());
            std::cout << json{{"N", rec.family}, {"values", out}}.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < values.size(); ++i)
                std::cout << (i ? " -> " : "") << values[i].str();
            std::cout << "\n";
        }
        return kExitOk;
    }

    if (cmd_group->parsed()) {
        PresentationTag tag = presentation_from_string(group_tag);
        if (static_cast<int>(opt_reduce->count()) + (opt_equal->count() ? 1 : 0) +
                static_cast<int>(opt_order->count()) !=
            1)
            throw std::invalid_argument("group: give exactly one of --reduce/--equal/--order");
        if (opt_reduce->count()) {
            auto element = reduce(tag, parse_word(reduce_text));
            if (as_json) {
                json j{{"presentation", group_tag}, {"normal_form", element.str()},
                       {"identity", element.is_identity()}};
                if (tag == PresentationTag::F3Hat)
                    j["affine"] = {{"sign", element.affine.sign},
                                   {"shift", element.affine.shift}};
                else
                    j["reduced"] = element.reduced;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << element.str() << "\n";
            }
        } else if (opt_equal->count()) {
            bool eq = equal(tag, parse_word(equal_texts[0]), parse_word(equal_texts[1]));
            if (as_json)
                std::cout << json{{"equal", eq}}.dump(2) << "\n";
            else
                std::cout << (eq ? "equal" : "distinct") << "\n";
        } else {
            auto ord = order(tag, parse_word(order_text));
            if (as_json)
                std::cout << json{{"order", ord.str()}}.dump(2) << "\n";
            else
                std::cout << ord.str() << "\n";
        }
        return kExitOk;
    }

    if (cmd_validate->parsed()) {
        auto summary = Registry::load().validate_all();
        int mismatched = 0;
        for (const auto& report : summary.reports)
            if (!report.clean()) ++mismatched;
        if (as_json) {
            json reports = json::array();
            for (const auto& report : summary.reports)
                if (!report.clean()) reports.push_back(report_json(report));
            std::cout << json{{"families", summary.reports.size()},
                              {"mismatched", mismatched},
                              {"global_mismatches", summary.global_mismatches},
                              {"clean", summary.clean()},
                              {"mismatch_reports", reports}}
                             .dump(2)
                      << "\n";
        } else {
            for (const auto& report : summary.reports)
                if (!report.clean()) {
                    std::cout << "N=" << report.family << " mismatches:";
                    for (const auto& m : report.mismatches) std::cout << " " << m;
                    std::cout << "\n";
                }
            for (const auto& m : summary.global_mismatches)
                std::cout << "global mismatch: " << m << "\n";
            std::cout << (summary.clean() ? "all 95 families validate cleanly"
                                          : "validation found mismatches")
                      << "\n";
        }
        return summary.clean() ? kExitOk : kExitMismatch;
    }

    if (cmd_witness->parsed()) {
        auto parts = split_on(coeffs_text, ',');
        if (parts.size() != 6)
            throw std::invalid_argument("--coeffs expects six comma-separated rationals");
        WitnessCoefficients c{Rational::parse(parts[0]), Rational::parse(parts[1]),
                              Rational::parse(parts[2]), Rational::parse(parts[3]),
                              Rational::parse(parts[4]), Rational::parse(parts[5])};
        auto w = density_witness_n19(c);
        if (as_json) {
            std::cout << json{{"lambda", w.lambda.str()},
                              {"mu", w.mu.str()},
                              {"cubic", {{"c2", w.c2.str()}, {"c1", w.c1.str()},
                                         {"c0", w.c0.str()}}},
                              {"roots", {"0", "-(" + w.c2.str() + ")/2 (double)"}}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "lambda = " << w.lambda.str() << ", mu = " << w.mu.str() << "\n"
                      << "cubic: x5^3 + (" << w.c2.str() << ")x5^2 + (" << w.c1.str()
                      << ")x5 + (" << w.c0.str() << ") = x5(x5 + (" << (w.c2 / Rational(2)).str()
                      << "))^2\n";
        }
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const RegistryError& e) {
        std::cerr << "table error: " << e.what() << "\n";
        return kExitData;
    } catch (const SingularityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
