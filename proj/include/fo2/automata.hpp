#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fo2/alphabet.hpp"

namespace fo2 {

// Complete deterministic automaton over a declared alphabet.
struct Dfa {
    Alphabet alphabet;
    int num_states = 0;
    int initial = 0;
    std::vector<bool> accepting;           // indexed by state
    std::vector<std::vector<int>> next;    // [state][letter index]

    int step(int state, char a) const { return next[state][alphabet.index_of(a)]; }
    bool accepts(std::string_view word) const;

    bool operator==(const Dfa&) const = default;
};

// Throws std::invalid_argument on structural defects (missing transitions,
// out-of-range targets, bad initial state).
void validate_dfa(const Dfa& d);

// Regex subset: letters, character classes [abc] (possibly empty), concatenation,
// '|', '*', '+', parentheses.  Result is the minimal complete DFA; the alphabet
// defaults to the letters occurring in the pattern.
Dfa compile_regex(std::string_view pattern, std::optional<Alphabet> alphabet = {});

// File format, line by line:
//   alphabet: a b c
//   states: 0 1 2
//   initial: 0
//   final: 2
//   trans: 0 a 1        (one line per state/letter pair)
Dfa parse_dfa_file(std::istream& in);
Dfa parse_dfa_text(const std::string& text);
std::string format_dfa_file(const Dfa& d);

// Minimal complete DFA with canonical state numbering (breadth-first from the
// initial state, letters in alphabet order).
Dfa minimize(const Dfa& d);

// Letters that occur on some path from the initial to an accepting state.
Alphabet language_alphabet(const Dfa& d);

}
