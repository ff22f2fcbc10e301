#include "fo2/analysis.hpp"

#include <sstream>
#include <utility>

#include "json.hpp"

#include "fo2/version.hpp"

namespace fo2 {

AnalysisReport analyze_language(const Dfa& d, std::string input_kind,
                                std::string input_echo, int max_variables) {
    AnalysisReport r;
    r.input_kind = std::move(input_kind);
    r.input = std::move(input_echo);
    const Dfa minimal = minimize(d);
    r.alphabet = minimal.alphabet.letters();
    r.used_alphabet = language_alphabet(minimal).letters();
    r.minimal_dfa_states = minimal.num_states;
    const FiniteMonoid monoid = syntactic_monoid(minimal);
    r.monoid_size = monoid.size;
    r.variety = variety_membership(monoid);
    r.level = min_joint_level(monoid, max_variables);
    r.join_identity = join_diagnostic(monoid);
    return r;
}

std::string report_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["tool"] = {{"name", kToolName}, {"version", kVersion}};
    j["input"] = {{"kind", r.input_kind}, {"value", r.input}};
    j["language"] = {{"alphabet", r.alphabet},
                     {"used_alphabet", r.used_alphabet},
                     {"minimal_dfa_states", r.minimal_dfa_states}};
    j["monoid"] = {{"size", r.monoid_size},
                   {"aperiodic", r.variety.aperiodic},
                   {"da", r.variety.da},
                   {"j_trivial", r.variety.j_trivial},
                   {"r_trivial", r.variety.r_trivial},
                   {"l_trivial", r.variety.l_trivial},
                   {"idempotent_commutative", r.variety.j1}};
    nlohmann::ordered_json levels;
    levels["fo2_definable"] = r.level.fo2_definable;
    levels["r_level"] =
        r.level.r_level ? nlohmann::ordered_json(*r.level.r_level) : nullptr;
    levels["l_level"] =
        r.level.l_level ? nlohmann::ordered_json(*r.level.l_level) : nullptr;
    levels["joint_level"] =
        r.level.joint_level ? nlohmann::ordered_json(*r.level.joint_level) : nullptr;
    if (r.level.alternation_interval) {
        levels["alternation_interval"] = {r.level.alternation_interval->first,
                                          r.level.alternation_interval->second};
    } else {
        levels["alternation_interval"] = nullptr;
    }
    levels["inconclusive"] = r.level.inconclusive;
    levels["scanned_up_to"] = r.level.scanned_up_to;
    j["levels"] = std::move(levels);
    j["join_identity"] = r.join_identity;
    return j.dump(2);
}

namespace {

const char* yesno(bool b) { return b ? "yes" : "no"; }

}

std::string report_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << kToolName << " " << kVersion << "\n";
    out << "input (" << r.input_kind << "): " << r.input << "\n";
    out << "alphabet: " << r.alphabet << " (used: "
        << (r.used_alphabet.empty() ? "-" : r.used_alphabet) << ")\n";
    out << "minimal dfa states: " << r.minimal_dfa_states << "\n";
    out << "syntactic monoid size: " << r.monoid_size << "\n";
    out << "aperiodic: " << yesno(r.variety.aperiodic)
        << "  da: " << yesno(r.variety.da)
        << "  j-trivial: " << yesno(r.variety.j_trivial)
        << "  r-trivial: " << yesno(r.variety.r_trivial)
        << "  l-trivial: " << yesno(r.variety.l_trivial) << "\n";
    out << "fo2 definable: " << yesno(r.level.fo2_definable) << "\n";
    if (r.level.inconclusive) {
        out << "level scan inconclusive after m = " << r.level.scanned_up_to << "\n";
    } else if (r.level.joint_level) {
        out << "r level: " << *r.level.r_level << "  l level: " << *r.level.l_level
            << "  joint level: " << *r.level.joint_level << "\n";
        out << "alternation interval: (" << r.level.alternation_interval->first
            << ", " << r.level.alternation_interval->second << ")\n";
    }
    out << "join identity: " << yesno(r.join_identity) << "\n";
    return out.str();
}

}
