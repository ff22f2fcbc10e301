#include "fo2/monomial.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace fo2 {

void validate_monomial(const Monomial& m) {
    if (m.sets.empty()) {
        throw std::invalid_argument("monomial needs at least one factor set");
    }
    if (m.sets.size() != m.letters.size() + 1) {
        throw std::invalid_argument("monomial needs one more set than markers");
    }
}

Monomial reversed_monomial(const Monomial& m) {
    Monomial out;
    out.sets.assign(m.sets.rbegin(), m.sets.rend());
    out.letters.assign(m.letters.rbegin(), m.letters.rend());
    return out;
}

Alphabet monomial_alphabet(const Monomial& m) {
    std::string symbols = m.letters;
    for (const Alphabet& b : m.sets) {
        symbols += b.letters();
    }
    return Alphabet(symbols);
}

namespace {

// Successors in the layered acceptor: layer i loops on B_i and advances to
// i + 1 on the marker a_{i+1}.
void layer_moves(const Monomial& m, int state, char c, std::vector<int>& out) {
    out.clear();
    if (m.sets[static_cast<size_t>(state)].contains(c)) {
        out.push_back(state);
    }
    if (state < static_cast<int>(m.letters.size()) &&
        m.letters[static_cast<size_t>(state)] == c) {
        out.push_back(state + 1);
    }
}

bool layered_unambiguous(const Monomial& m) {
    const int k = static_cast<int>(m.letters.size());
    const int n = k + 1;
    const Alphabet sigma = monomial_alphabet(m);
    const auto id = [n](int p, int q) { return p * n + q; };

    std::vector<bool> reach(static_cast<size_t>(n) * n, false);
    std::vector<std::pair<int, int>> queue;
    reach[static_cast<size_t>(id(0, 0))] = true;
    queue.emplace_back(0, 0);
    std::vector<int> mp;
    std::vector<int> mq;
    for (size_t head = 0; head < queue.size(); ++head) {
        const auto [p, q] = queue[head];
        for (char c : sigma.letters()) {
            layer_moves(m, p, c, mp);
            layer_moves(m, q, c, mq);
            for (int p2 : mp) {
                for (int q2 : mq) {
                    if (!reach[static_cast<size_t>(id(p2, q2))]) {
                        reach[static_cast<size_t>(id(p2, q2))] = true;
                        queue.emplace_back(p2, q2);
                    }
                }
            }
        }
    }

    std::vector<bool> coreach(static_cast<size_t>(n) * n, false);
    std::vector<std::pair<int, int>> back;
    coreach[static_cast<size_t>(id(k, k))] = true;
    back.emplace_back(k, k);
    for (size_t head = 0; head < back.size(); ++head) {
        const auto [p2, q2] = back[head];
        for (int p = 0; p < n; ++p) {
            for (int q = 0; q < n; ++q) {
                if (coreach[static_cast<size_t>(id(p, q))]) {
                    continue;
                }
                bool edge = false;
                for (char c : sigma.letters()) {
                    layer_moves(m, p, c, mp);
                    layer_moves(m, q, c, mq);
                    bool hit_p = false;
                    for (int x : mp) {
                        hit_p = hit_p || x == p2;
                    }
                    bool hit_q = false;
                    for (int x : mq) {
                        hit_q = hit_q || x == q2;
                    }
                    if (hit_p && hit_q) {
                        edge = true;
                        break;
                    }
                }
                if (edge) {
                    coreach[static_cast<size_t>(id(p, q))] = true;
                    back.emplace_back(p, q);
                }
            }
        }
    }

    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p != q && reach[static_cast<size_t>(id(p, q))] &&
                coreach[static_cast<size_t>(id(p, q))]) {
                return false;
            }
        }
    }
    return true;
}

// Emptiness of P_i over P_i Sigma+ over Pref(L), where P_i is the prefix
// product through the i-th marker.  Nonempty means two distinct prefixes of
// one accepted word land in P_i.
bool prefix_ambiguity_at(const Monomial& m, int i) {
    const int k = static_cast<int>(m.letters.size());
    const Alphabet sigma = monomial_alphabet(m);
    const int post = i + 1;
    const int n1 = i + 1;
    const int n2 = i + 2;
    const int n3 = k + 1;
    const auto id = [&](int s1, int s2, int s3) { return (s1 * n2 + s2) * n3 + s3; };

    // First coordinate: P_i acceptor, layers 0..i, stops at i.
    const auto moves1 = [&](int s, char c, std::vector<int>& out) {
        out.clear();
        if (s >= i) {
            return;
        }
        if (m.sets[static_cast<size_t>(s)].contains(c)) {
            out.push_back(s);
        }
        if (m.letters[static_cast<size_t>(s)] == c) {
            out.push_back(s + 1);
        }
    };
    // Second coordinate: P_i followed by at least one more letter.
    const auto moves2 = [&](int s, char c, std::vector<int>& out) {
        if (s >= i) {
            out.clear();
            out.push_back(post);
            return;
        }
        moves1(s, c, out);
    };

    std::vector<bool> seen(static_cast<size_t>(n1) * n2 * n3, false);
    std::vector<std::array<int, 3>> queue;
    seen[static_cast<size_t>(id(0, 0, 0))] = true;
    queue.push_back({0, 0, 0});
    std::vector<int> m1;
    std::vector<int> m2;
    std::vector<int> m3;
    for (size_t head = 0; head < queue.size(); ++head) {
        const auto [s1, s2, s3] = queue[head];
        if (s1 == i && s2 == post) {
            return true;
        }
        for (char c : sigma.letters()) {
            moves1(s1, c, m1);
            moves2(s2, c, m2);
            layer_moves(m, s3, c, m3);
            for (int t1 : m1) {
                for (int t2 : m2) {
                    for (int t3 : m3) {
                        const size_t key = static_cast<size_t>(id(t1, t2, t3));
                        if (!seen[key]) {
                            seen[key] = true;
                            queue.push_back({t1, t2, t3});
                        }
                    }
                }
            }
        }
    }
    return false;
}

bool layered_deterministic(const Monomial& m) {
    for (int i = 1; i <= static_cast<int>(m.letters.size()); ++i) {
        if (prefix_ambiguity_at(m, i)) {
            return false;
        }
    }
    return true;
}

}

MonomialFlags monomial_analysis(const Monomial& m) {
    validate_monomial(m);
    MonomialFlags flags;
    flags.visibly_det = true;
    flags.visibly_codet = true;
    for (size_t i = 0; i < m.letters.size(); ++i) {
        if (m.sets[i].contains(m.letters[i])) {
            flags.visibly_det = false;
        }
        if (m.sets[i + 1].contains(m.letters[i])) {
            flags.visibly_codet = false;
        }
    }
    flags.det = layered_deterministic(m);
    flags.codet = layered_deterministic(reversed_monomial(m));
    flags.unambiguous = layered_unambiguous(m);
    return flags;
}

}
