#include "fo2/ranker_class.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <string>

namespace fo2 {

namespace {

// All rankers of depth n with exactly m blocks whose first block runs in
// direction `first`, emitted in lexicographic step order.
void gen_exact(std::vector<Ranker>& out, const Alphabet& a, Dir first, int m, int n) {
    if (m < 1 || n < m || a.empty()) return;
    std::vector<RankerStep> steps;
    auto rec = [&](auto&& self, int blocks, Dir last) -> void {
        int filled = static_cast<int>(steps.size());
        if (blocks > m || blocks + (n - filled) < m) return;
        if (filled == n) {
            if (blocks == m) out.push_back(Ranker(steps));
            return;
        }
        for (Dir d : {Dir::X, Dir::Y}) {
            if (filled == 0 && d != first) continue;
            int nb = filled == 0 ? 1 : blocks + (d != last ? 1 : 0);
            for (char c : a.letters()) {
                steps.push_back({d, c});
                self(self, nb, d);
                steps.pop_back();
            }
        }
    };
    rec(rec, 0, first);
}

void gen_exact_both(std::vector<Ranker>& out, const Alphabet& a, int m, int n) {
    gen_exact(out, a, Dir::X, m, n);
    gen_exact(out, a, Dir::Y, m, n);
}

// Downward closure with a fixed start direction: m-block rankers of depth
// <= n starting with `first`, plus everything of fewer blocks and depth < n.
void gen_closed(std::vector<Ranker>& out, const Alphabet& a, Dir first, int m, int n) {
    for (int d = m; d <= n; ++d) gen_exact(out, a, first, m, d);
    for (int mm = 1; mm < m; ++mm)
        for (int d = mm; d <= n - 1; ++d) gen_exact_both(out, a, mm, d);
}

}

std::vector<Ranker> enumerate_rankers(const RankerClassSpec& spec, const EnumLimits& limits) {
    if (spec.n > limits.max_depth)
        throw EnumerationLimitError("ranker enumeration depth " + std::to_string(spec.n) +
                                    " exceeds cap " + std::to_string(limits.max_depth));
    if (static_cast<int>(spec.alphabet.size()) > limits.max_alphabet)
        throw EnumerationLimitError("ranker enumeration alphabet size " +
                                    std::to_string(spec.alphabet.size()) + " exceeds cap " +
                                    std::to_string(limits.max_alphabet));

    std::vector<Ranker> out;
    const Alphabet& a = spec.alphabet;
    switch (spec.shape) {
    case ClassShape::R_mn: gen_exact_both(out, a, spec.m, spec.n); break;
    case ClassShape::RX_mn: gen_exact(out, a, Dir::X, spec.m, spec.n); break;
    case ClassShape::RY_mn: gen_exact(out, a, Dir::Y, spec.m, spec.n); break;
    case ClassShape::URX_mn:
    case ClassShape::URX_m: gen_closed(out, a, Dir::X, spec.m, spec.n); break;
    case ClassShape::URY_mn:
    case ClassShape::URY_m: gen_closed(out, a, Dir::Y, spec.m, spec.n); break;
    case ClassShape::UR_mn:
    case ClassShape::UR_m:
        gen_closed(out, a, Dir::X, spec.m, spec.n);
        gen_closed(out, a, Dir::Y, spec.m, spec.n);
        break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RankerClassSpec parse_class_spec(std::string_view text, Alphabet alphabet,
                                 std::optional<int> depth_cap) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("class spec must look like NAME:m,n or NAME:m");
    std::string name(text.substr(0, colon));
    std::string_view rest = text.substr(colon + 1);

    auto parse_int = [&](std::string_view s) {
        int value = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || p != s.data() + s.size())
            throw std::invalid_argument("bad number in class spec: \"" + std::string(s) + "\"");
        return value;
    };

    RankerClassSpec spec;
    spec.alphabet = std::move(alphabet);
    auto comma = rest.find(',');
    bool has_n = comma != std::string_view::npos;
    spec.m = parse_int(has_n ? rest.substr(0, comma) : rest);
    if (has_n) spec.n = parse_int(rest.substr(comma + 1));

    if (has_n) {
        if (name == "R") spec.shape = ClassShape::R_mn;
        else if (name == "RX") spec.shape = ClassShape::RX_mn;
        else if (name == "RY") spec.shape = ClassShape::RY_mn;
        else if (name == "uR") spec.shape = ClassShape::UR_mn;
        else if (name == "uRX") spec.shape = ClassShape::URX_mn;
        else if (name == "uRY") spec.shape = ClassShape::URY_mn;
        else throw std::invalid_argument("unknown ranker class \"" + name + "\"");
    } else {
        if (name == "uR") spec.shape = ClassShape::UR_m;
        else if (name == "uRX") spec.shape = ClassShape::URX_m;
        else if (name == "uRY") spec.shape = ClassShape::URY_m;
        else throw std::invalid_argument("class \"" + name + "\" needs both m and n");
        if (!depth_cap)
            throw std::invalid_argument("depth-unbounded class \"" + name + "\" needs a depth cap");
        spec.n = *depth_cap;
    }
    if (spec.m < 1 || spec.n < 1)
        throw std::invalid_argument("class spec requires m >= 1 and n >= 1");
    return spec;
}

namespace {

bool outcome_ok(const EvalOutcome& o, AgreeMode mode) {
    return mode == AgreeMode::Defined ? o.defined : o.condensed;
}

int ord(int a, int b) { return a < b ? -1 : (a == b ? 0 : 1); }

struct ClassOutcomes {
    std::vector<Ranker> rankers;
    std::vector<EvalOutcome> on_u, on_v;
};

ClassOutcomes evaluate_class(const Word& u, const Word& v, ClassShape shape, int m, int n,
                             const Alphabet& a, const EnumLimits& limits) {
    ClassOutcomes c;
    if (m < 1 || n < 1) return c;
    c.rankers = enumerate_rankers({shape, m, n, a}, limits);
    c.on_u.reserve(c.rankers.size());
    c.on_v.reserve(c.rankers.size());
    for (const Ranker& r : c.rankers) {
        c.on_u.push_back(eval_ranker(u, r));
        c.on_v.push_back(eval_ranker(v, r));
    }
    return c;
}

}

bool agree_on_rankers(const Word& u, const Word& v, const RankerClassSpec& spec, AgreeMode mode,
                      const EnumLimits& limits) {
    for (const Ranker& r : enumerate_rankers(spec, limits))
        if (outcome_ok(eval_ranker(u, r), mode) != outcome_ok(eval_ranker(v, r), mode))
            return false;
    return true;
}

bool wi_equivalent(const Word& u, const Word& v, int m, int n, WiMode mode,
                   std::optional<Alphabet> alphabet, const EnumLimits& limits) {
    if (m < 1 || n < m)
        throw std::invalid_argument("wi_equivalent requires 1 <= m <= n");
    Alphabet a = alphabet ? *alphabet : alph(u).unioned(alph(v));
    AgreeMode am = mode == WiMode::Plain ? AgreeMode::Defined : AgreeMode::Condensed;

    // Agreement on every ranker with at most m blocks and depth at most n.
    for (int mm = 1; mm <= m; ++mm)
        for (int d = mm; d <= n; ++d)
            if (!agree_on_rankers(u, v, {ClassShape::R_mn, mm, d, a}, am, limits)) return false;

    ClassOutcomes main = evaluate_class(u, v, ClassShape::UR_mn, m, n, a, limits);
    ClassOutcomes prev = evaluate_class(u, v, ClassShape::UR_mn, m - 1, n - 1, a, limits);
    ClassOutcomes side = evaluate_class(u, v, ClassShape::UR_mn, m, n - 1, a, limits);

    // Relative order against the class one unit down in both parameters.
    for (std::size_t i = 0; i < main.rankers.size(); ++i) {
        if (!outcome_ok(main.on_u[i], am) || !outcome_ok(main.on_v[i], am)) continue;
        for (std::size_t j = 0; j < prev.rankers.size(); ++j) {
            if (!outcome_ok(prev.on_u[j], am) || !outcome_ok(prev.on_v[j], am)) continue;
            if (ord(main.on_u[i].position, prev.on_u[j].position) !=
                ord(main.on_v[i].position, prev.on_v[j].position))
                return false;
        }
    }

    // Relative order against the class one unit shallower, restricted to
    // pairs whose final steps walk in opposite directions.
    for (std::size_t i = 0; i < main.rankers.size(); ++i) {
        if (!outcome_ok(main.on_u[i], am) || !outcome_ok(main.on_v[i], am)) continue;
        for (std::size_t j = 0; j < side.rankers.size(); ++j) {
            if (main.rankers[i].last_dir() == side.rankers[j].last_dir()) continue;
            if (!outcome_ok(side.on_u[j], am) || !outcome_ok(side.on_v[j], am)) continue;
            if (ord(main.on_u[i].position, side.on_u[j].position) !=
                ord(main.on_v[i].position, side.on_v[j].position))
                return false;
        }
    }
    return true;
}

}
