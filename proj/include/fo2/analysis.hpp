#pragma once

#include <string>

#include "fo2/automata.hpp"
#include "fo2/hierarchy.hpp"
#include "fo2/monoid.hpp"

namespace fo2 {

struct AnalysisReport {
    std::string input_kind;      // "regex" or "dfa"
    std::string input;           // pattern text or file path
    std::string alphabet;        // working alphabet
    std::string used_alphabet;   // letters on accepting paths
    int minimal_dfa_states = 0;
    int monoid_size = 0;
    VarietyFlags variety;
    LevelReport level;
    bool join_identity = false;
};

// Minimize, build the syntactic monoid, and run the level scan.
AnalysisReport analyze_language(const Dfa& d, std::string input_kind,
                                std::string input_echo, int max_variables = 4);

std::string report_json(const AnalysisReport& r);
std::string report_text(const AnalysisReport& r);

}
