#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fo2/monoid.hpp"
#include "fo2/omega_term.hpp"
#include "fo2/side.hpp"

namespace fo2 {

// Word over the variables x1, x2, ...; entries are the indices.
using VariableWord = std::vector<int>;

inline VariableWord mirrored(VariableWord w) {
    std::reverse(w.begin(), w.end());
    return w;
}

struct GISequences {
    VariableWord g;
    VariableWord i;
};

// Defining words for level m >= 2; level 1 is decided by J-triviality.
GISequences build_sequences(int m);

OmegaTerm phi_of_variable(int index);

// Letterwise substitution of phi into a variable word.
OmegaTerm phi_expand(const VariableWord& w);

struct VariableBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Side::Right selects the R hierarchy, Side::Left the L hierarchy.
// Throws VariableBoundError when the level needs more variables than allowed.
bool level_membership(const FiniteMonoid& monoid, int m, Side side,
                      int max_variables = 4);

struct LevelReport {
    bool in_da = false;
    bool fo2_definable = false;
    std::optional<int> r_level;
    std::optional<int> l_level;
    std::optional<int> joint_level;
    // (lo, hi): definable with hi alternation blocks, not with lo - 1.
    std::optional<std::pair<int, int>> alternation_interval;
    bool inconclusive = false;
    int scanned_up_to = 0;
};

// Scans levels 1, 2, ... up to the generator bound; sets inconclusive when
// the variable bound stops the scan first.
LevelReport min_joint_level(const FiniteMonoid& monoid, int max_variables = 4);

// Whether (x2 x3)^w (x1 x2)^w = (x2 x3)^w x2 (x1 x2)^w holds; advisory only.
bool join_diagnostic(const FiniteMonoid& monoid);

}
