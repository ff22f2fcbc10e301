#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "fo2/alphabet.hpp"
#include "fo2/ranker.hpp"

namespace fo2 {

// Families of rankers indexed by block count m and depth n.
//
//   R_mn    exactly m blocks, depth exactly n (RX_mn / RY_mn fix the start)
//   URX_mn  every X-started m-block ranker of depth <= n, plus every ranker
//           with fewer than m blocks and depth < n (URY_mn dually, UR_mn both)
//   URX_m   union of URX_mn over all n; enumeration bounded by a depth cap
enum class ClassShape { R_mn, RX_mn, RY_mn, UR_mn, URX_mn, URY_mn, UR_m, URX_m, URY_m };

constexpr bool shape_is_depth_capped(ClassShape s) {
    return s == ClassShape::UR_m || s == ClassShape::URX_m || s == ClassShape::URY_m;
}

struct RankerClassSpec {
    ClassShape shape = ClassShape::R_mn;
    int m = 1;
    int n = 1;   // depth bound; acts as the enumeration cap for the *_m shapes
    Alphabet alphabet;
};

struct EnumLimits {
    int max_depth = 8;
    int max_alphabet = 4;
};

struct EnumerationLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic order: by depth, then lexicographically on steps.
std::vector<Ranker> enumerate_rankers(const RankerClassSpec& spec, const EnumLimits& limits = {});

// Text syntax: "R:1,2", "RX:1,2", "uR:2,3", "uRX:2,3", or depth-unbounded
// "uR:2" / "uRX:2" / "uRY:2" which require an explicit depth cap.
RankerClassSpec parse_class_spec(std::string_view text, Alphabet alphabet,
                                 std::optional<int> depth_cap = {});

enum class AgreeMode { Defined, Condensed };

bool agree_on_rankers(const Word& u, const Word& v, const RankerClassSpec& spec, AgreeMode mode,
                      const EnumLimits& limits = {});

enum class WiMode { Plain, Condensed };

// Logical indistinguishability of u and v at alternation depth m within
// quantifier depth n, tested through ranker agreement and relative order of
// designated positions.  The ambient alphabet defaults to alph(u) + alph(v).
bool wi_equivalent(const Word& u, const Word& v, int m, int n, WiMode mode,
                   std::optional<Alphabet> alphabet = {}, const EnumLimits& limits = {});

}
