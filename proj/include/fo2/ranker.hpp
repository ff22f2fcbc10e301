#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fo2/alphabet.hpp"

namespace fo2 {

// Step direction: X seeks the next occurrence to the right, Y to the left.
enum class Dir : unsigned char { X, Y };

constexpr Dir opposite(Dir d) { return d == Dir::X ? Dir::Y : Dir::X; }

struct RankerStep {
    Dir dir;
    char letter;
    auto operator<=>(const RankerStep&) const = default;
};

// A ranker is a non-empty instruction sequence over steps {Xa, Ya}; evaluated
// on a word it either designates a unique position or is undefined.
class Ranker {
public:
    explicit Ranker(std::vector<RankerStep> steps);

    int depth() const { return static_cast<int>(steps_.size()); }
    // Number of maximal runs of equally directed steps.
    int blocks() const;
    Dir first_dir() const { return steps_.front().dir; }
    Dir last_dir() const { return steps_.back().dir; }
    const std::vector<RankerStep>& steps() const { return steps_; }

    // Reverse the step sequence and flip every direction.
    Ranker mirrored() const;

    std::string to_string() const;

    bool operator==(const Ranker&) const = default;
    // Orders by depth first, then lexicographically on steps.
    bool operator<(const Ranker& other) const;

private:
    std::vector<RankerStep> steps_;
};

// Accepts "Xa.Yb" style text: two-character tokens separated by '.' or
// whitespace, letters drawn from the given alphabet.
Ranker parse_ranker(std::string_view text, const Alphabet& alphabet);

struct EvalOutcome {
    bool defined = false;
    int position = 0;     // 1-based; meaningful only when defined
    bool condensed = false;
    // Open intervals (i_0,j_0) ... (i_{n-1},j_{n-1}) visited by the condensed
    // evaluation; recorded whenever the ranker is defined.
    std::vector<std::pair<int, int>> chain;
};

EvalOutcome eval_ranker(const Word& u, const Ranker& r);

}
