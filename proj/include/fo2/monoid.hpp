#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fo2/automata.hpp"

namespace fo2 {

// Finite monoid as an explicit multiplication table.  Elements are numbered
// with the identity first; monoids built from automata or quotients continue
// in shortlex order of the first word reaching each element.
struct FiniteMonoid {
    int size = 0;
    std::vector<int> table;    // row-major: table[a*size + b] = a*b
    int identity = 0;
    // Optional labelled generating set (letters for transition monoids).
    std::vector<std::pair<char, int>> generators;

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a * size + b)]; }
    bool is_idempotent(int a) const { return mul(a, a) == a; }
};

// Validates associativity, neutrality and index ranges.
FiniteMonoid monoid_from_table(const std::vector<std::vector<int>>& rows, int identity);

// Same carrier with reversed multiplication.
FiniteMonoid reverse_monoid(const FiniteMonoid& m);

// The unique idempotent power of s.
int omega_power(const FiniteMonoid& m, int s);
std::vector<int> omega_table(const FiniteMonoid& m);

// Product of generator images along the word; throws if a letter lacks a
// generator label.
int evaluate_word(const FiniteMonoid& m, std::string_view word);

struct TransitionMonoid {
    FiniteMonoid monoid;
    std::vector<std::vector<int>> state_maps;   // element -> full state map
    std::vector<int> accepting_elements;        // maps sending initial into final
};

TransitionMonoid transition_monoid(const Dfa& d, int max_size = 1 << 20);

// Transition monoid of the minimal automaton.
FiniteMonoid syntactic_monoid(const Dfa& d);

struct GreenSummary {
    std::vector<int> r_class_of, l_class_of, j_class_of;
    std::vector<std::vector<int>> r_classes, l_classes, j_classes;
    bool r_trivial = false, l_trivial = false, j_trivial = false;
};

GreenSummary green_summary(const FiniteMonoid& m);

bool is_aperiodic(const FiniteMonoid& m);
// (xy)^w x (xy)^w = (xy)^w for all x, y.
bool is_da(const FiniteMonoid& m);

struct VarietyFlags {
    bool aperiodic = false;
    bool da = false;
    bool j1 = false;         // idempotent and commutative
    bool j_trivial = false;
    bool r_trivial = false;
    bool l_trivial = false;
};

VarietyFlags variety_membership(const FiniteMonoid& m);

// Table file format:
//   elements: n
//   identity: i
//   <n rows of n indices>
//   gen: a 1          (optional, one per labelled generator)
FiniteMonoid parse_monoid_table(std::istream& in);
FiniteMonoid parse_monoid_table_text(const std::string& text);
std::string format_monoid_table(const FiniteMonoid& m);

}
