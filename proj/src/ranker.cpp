#include "fo2/ranker.hpp"

#include <algorithm>
#include <stdexcept>

namespace fo2 {

namespace {

using Interval = std::pair<int, int>;

// Open integer intervals; (a,b) holds the integers strictly between a and b.
bool iv_empty(Interval p) { return p.second - p.first <= 1; }

bool iv_subset(Interval a, Interval b) {
    return iv_empty(a) || (b.first <= a.first && a.second <= b.second);
}

bool iv_equal(Interval a, Interval b) {
    if (iv_empty(a) || iv_empty(b)) return iv_empty(a) && iv_empty(b);
    return a == b;
}

bool iv_proper_subset(Interval a, Interval b) {
    return iv_subset(a, b) && !iv_equal(a, b);
}

bool iv_inside(int p, Interval a) { return a.first < p && p < a.second; }

// Least a-position strictly right of q, or 0 when there is none.
int next_right(std::string_view u, char a, int q) {
    for (int i = std::max(q, 0) + 1; i <= static_cast<int>(u.size()); ++i)
        if (u[static_cast<std::size_t>(i - 1)] == a) return i;
    return 0;
}

// Greatest a-position strictly left of q, or 0 when there is none.
int next_left(std::string_view u, char a, int q) {
    for (int i = std::min(q, static_cast<int>(u.size()) + 1) - 1; i >= 1; --i)
        if (u[static_cast<std::size_t>(i - 1)] == a) return i;
    return 0;
}

}

Ranker::Ranker(std::vector<RankerStep> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw std::invalid_argument("ranker must be non-empty");
}

int Ranker::blocks() const {
    int b = 1;
    for (std::size_t i = 1; i < steps_.size(); ++i)
        if (steps_[i].dir != steps_[i - 1].dir) ++b;
    return b;
}

Ranker Ranker::mirrored() const {
    std::vector<RankerStep> flipped(steps_);
    for (auto& s : flipped) s.dir = opposite(s.dir);
    return Ranker(std::move(flipped));
}

std::string Ranker::to_string() const {
    std::string out;
    for (const auto& s : steps_) {
        if (!out.empty()) out += '.';
        out += (s.dir == Dir::X ? 'X' : 'Y');
        out += s.letter;
    }
    return out;
}

bool Ranker::operator<(const Ranker& other) const {
    if (steps_.size() != other.steps_.size()) return steps_.size() < other.steps_.size();
    return steps_ < other.steps_;
}

Ranker parse_ranker(std::string_view text, const Alphabet& alphabet) {
    std::vector<RankerStep> steps;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '.' || c == ' ' || c == '\t') { ++i; continue; }
        if (c != 'X' && c != 'Y')
            throw std::invalid_argument(std::string("ranker step must start with X or Y, got '") + c + "'");
        if (i + 1 >= text.size())
            throw std::invalid_argument("ranker step missing its letter");
        char letter = text[i + 1];
        if (!alphabet.contains(letter))
            throw std::invalid_argument(std::string("ranker letter '") + letter + "' not in alphabet \"" +
                                        alphabet.letters() + "\"");
        steps.push_back({c == 'X' ? Dir::X : Dir::Y, letter});
        i += 2;
    }
    if (steps.empty()) throw std::invalid_argument("ranker must be non-empty");
    return Ranker(std::move(steps));
}

EvalOutcome eval_ranker(const Word& u, const Ranker& r) {
    EvalOutcome out;
    const int n = r.depth();
    const int len = static_cast<int>(u.size());

    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    int q = r.first_dir() == Dir::X ? 0 : len + 1;
    for (int i = 0; i < n; ++i) {
        const RankerStep& s = r.steps()[static_cast<std::size_t>(i)];
        q = s.dir == Dir::X ? next_right(u, s.letter, q) : next_left(u, s.letter, q);
        if (q == 0) return out;
        pos[static_cast<std::size_t>(i)] = q;
    }
    out.defined = true;
    out.position = pos[static_cast<std::size_t>(n - 1)];

    // The interval endpoints coincide with the step positions: step l lands on
    // the left end when step l+1 walks right, on the right end otherwise.
    out.chain.push_back({0, len + 1});
    for (int l = 1; l <= n - 1; ++l) {
        Interval prev = out.chain.back();
        int p = pos[static_cast<std::size_t>(l - 1)];
        if (r.steps()[static_cast<std::size_t>(l)].dir == Dir::X)
            out.chain.push_back({p, prev.second});
        else
            out.chain.push_back({prev.first, p});
    }

    bool ok = true;
    for (std::size_t l = 1; l < out.chain.size(); ++l)
        if (!iv_proper_subset(out.chain[l], out.chain[l - 1])) { ok = false; break; }
    out.condensed = ok && iv_inside(out.position, out.chain.back());
    return out;
}

}
