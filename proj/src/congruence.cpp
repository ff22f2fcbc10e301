#include "fo2/congruence.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace fo2 {

bool subword_equivalent(const Word& u, const Word& v, int n) {
    if (n < 1) {
        throw std::invalid_argument("subword_equivalent: n must be at least 1");
    }
    const Alphabet joint = alph(u).unioned(alph(v));
    Word pattern;
    // Depth-first over candidate patterns; a pattern absent from both words
    // cannot have a distinguishing extension.
    std::function<bool()> dfs = [&]() -> bool {
        const bool in_u = is_subword(pattern, u);
        const bool in_v = is_subword(pattern, v);
        if (in_u != in_v) {
            return false;
        }
        if (!in_u || static_cast<int>(pattern.size()) == n) {
            return true;
        }
        for (char a : joint.letters()) {
            pattern.push_back(a);
            const bool ok = dfs();
            pattern.pop_back();
            if (!ok) {
                return false;
            }
        }
        return true;
    };
    return dfs();
}

namespace {

std::string memo_key(const Word& u, const Word& v, int m, int n, Side side) {
    const Word* a = &u;
    const Word* b = &v;
    if (*b < *a) {
        std::swap(a, b);
    }
    std::string key;
    key.reserve(a->size() + b->size() + 12);
    key += side == Side::Right ? 'R' : 'L';
    key += std::to_string(m);
    key += ',';
    key += std::to_string(n);
    key += '|';
    key += *a;
    key += '|';
    key += *b;
    return key;
}

}

bool CongruenceEvaluator::equivalent(const Word& u, const Word& v, int m, int n,
                                     Side side) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("congruence parameters must be positive");
    }
    if (u == v) {
        return true;
    }
    std::string key = memo_key(u, v, m, n, side);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
        return it->second;
    }
    const bool result = compute(u, v, m, n, side);
    memo_.emplace(std::move(key), result);
    return result;
}

bool CongruenceEvaluator::compute(const Word& u, const Word& v, int m, int n,
                                  Side side) {
    if (m == 1) {
        return subword_equivalent(u, v, n);
    }
    if (m > n) {
        // With more blocks than depth the class collapses to every ranker of
        // depth below n, regardless of starting direction.
        for (int mm = 1; mm < n; ++mm) {
            if (!equivalent(u, v, mm, n - 1, Side::Right)) {
                return false;
            }
            if (!equivalent(u, v, mm, n - 1, Side::Left)) {
                return false;
            }
        }
        return true;
    }
    if (alph(u) != alph(v)) {
        return false;
    }
    if (!equivalent(u, v, m - 1, n - 1, flipped(side))) {
        return false;
    }
    for (char a : alph(u).letters()) {
        const size_t iu = side == Side::Right ? u.find(a) : u.rfind(a);
        const size_t iv = side == Side::Right ? v.find(a) : v.rfind(a);
        const Word u_pre = u.substr(0, iu);
        const Word u_post = u.substr(iu + 1);
        const Word v_pre = v.substr(0, iv);
        const Word v_post = v.substr(iv + 1);
        if (side == Side::Right) {
            if (!equivalent(u_pre, v_pre, m - 1, n - 1, Side::Left)) {
                return false;
            }
            if (!equivalent(u_post, v_post, m, n - 1, Side::Right)) {
                return false;
            }
        } else {
            if (!equivalent(u_post, v_post, m - 1, n - 1, Side::Right)) {
                return false;
            }
            if (!equivalent(u_pre, v_pre, m, n - 1, Side::Left)) {
                return false;
            }
        }
    }
    return true;
}

bool cong_equivalent(const Word& u, const Word& v, const CongruenceQuery& q) {
    if (q.m < 1 || q.n < q.m) {
        throw std::invalid_argument("congruence query requires n >= m >= 1");
    }
    CongruenceEvaluator eval;
    return eval.equivalent(u, v, q.m, q.n, q.side);
}

int QuotientMonoid::project(const Word& u) const {
    require_over(alphabet, u);
    int e = monoid.identity;
    for (char a : u) {
        int g = -1;
        for (const auto& [letter, elem] : monoid.generators) {
            if (letter == a) {
                g = elem;
                break;
            }
        }
        if (g < 0) {
            throw std::invalid_argument("no generator for letter in projection");
        }
        e = monoid.mul(e, g);
    }
    return e;
}

QuotientMonoid quotient_monoid(const Alphabet& alphabet, const CongruenceQuery& q,
                               int length_cap) {
    if (q.m < 1 || q.n < q.m) {
        throw std::invalid_argument("congruence query requires n >= m >= 1");
    }
    if (length_cap < 1) {
        throw std::invalid_argument("length cap must be positive");
    }
    CongruenceEvaluator eval;
    std::vector<Word> reps{Word{}};
    std::vector<std::vector<int>> action;
    const std::string& letters = alphabet.letters();
    size_t next = 0;
    while (next < reps.size()) {
        const Word w = reps[next];
        std::vector<int> row(letters.size(), -1);
        for (size_t li = 0; li < letters.size(); ++li) {
            const Word child = w + letters[li];
            int found = -1;
            for (size_t k = 0; k < reps.size(); ++k) {
                if (eval.equivalent(child, reps[k], q.m, q.n, q.side)) {
                    found = static_cast<int>(k);
                    break;
                }
            }
            if (found < 0) {
                if (static_cast<int>(child.size()) > length_cap) {
                    throw StabilizationError(
                        "quotient did not stabilize within length cap " +
                        std::to_string(length_cap));
                }
                reps.push_back(child);
                found = static_cast<int>(reps.size()) - 1;
            }
            row[li] = found;
        }
        action.push_back(std::move(row));
        ++next;
    }

    const int size = static_cast<int>(reps.size());
    FiniteMonoid mono;
    mono.size = size;
    mono.identity = 0;
    mono.table.assign(static_cast<size_t>(size) * size, 0);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            int e = i;
            for (char a : reps[j]) {
                e = action[e][static_cast<size_t>(alphabet.index_of(a))];
            }
            mono.table[static_cast<size_t>(i) * size + j] = e;
        }
    }
    for (size_t li = 0; li < letters.size(); ++li) {
        mono.generators.emplace_back(letters[li], action[0][li]);
    }

    QuotientMonoid out;
    out.monoid = std::move(mono);
    out.representatives = std::move(reps);
    out.alphabet = alphabet;
    return out;
}

}
