#include "fo2/monoid.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fo2 {

FiniteMonoid monoid_from_table(const std::vector<std::vector<int>>& rows, int identity) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("monoid needs at least one element");
    if (identity < 0 || identity >= n) throw std::invalid_argument("identity index out of range");

    FiniteMonoid m;
    m.size = n;
    m.identity = identity;
    m.table.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("multiplication table must be square");
        for (int v : row) {
            if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
            m.table.push_back(v);
        }
    }
    for (int a = 0; a < n; ++a)
        if (m.mul(identity, a) != a || m.mul(a, identity) != a)
            throw std::invalid_argument("identity element is not neutral");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)))
                    throw std::invalid_argument("multiplication table is not associative");
    return m;
}

FiniteMonoid reverse_monoid(const FiniteMonoid& m) {
    FiniteMonoid r = m;
    for (int a = 0; a < m.size; ++a)
        for (int b = 0; b < m.size; ++b)
            r.table[static_cast<std::size_t>(a * m.size + b)] = m.mul(b, a);
    return r;
}

int omega_power(const FiniteMonoid& m, int s) {
    int p = s;
    for (int k = 0; k <= 2 * m.size + 1; ++k) {
        if (m.mul(p, p) == p) return p;
        p = m.mul(p, s);
    }
    throw std::logic_error("no idempotent power found; table is not a finite monoid");
}

std::vector<int> omega_table(const FiniteMonoid& m) {
    std::vector<int> t(static_cast<std::size_t>(m.size));
    for (int s = 0; s < m.size; ++s) t[static_cast<std::size_t>(s)] = omega_power(m, s);
    return t;
}

int evaluate_word(const FiniteMonoid& m, std::string_view word) {
    int e = m.identity;
    for (char c : word) {
        int g = -1;
        for (const auto& [label, elem] : m.generators)
            if (label == c) { g = elem; break; }
        if (g < 0)
            throw std::invalid_argument(std::string("no generator labelled '") + c + "'");
        e = m.mul(e, g);
    }
    return e;
}

TransitionMonoid transition_monoid(const Dfa& d, int max_size) {
    validate_dfa(d);
    const int ns = d.num_states;

    std::vector<int> ident(static_cast<std::size_t>(ns));
    for (int q = 0; q < ns; ++q) ident[static_cast<std::size_t>(q)] = q;

    std::vector<std::vector<int>> letter_map;
    for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
        std::vector<int> f(static_cast<std::size_t>(ns));
        for (int q = 0; q < ns; ++q) f[static_cast<std::size_t>(q)] = d.next[static_cast<std::size_t>(q)][l];
        letter_map.push_back(std::move(f));
    }

    TransitionMonoid tm;
    std::map<std::vector<int>, int> index;
    auto intern = [&](std::vector<int> f) -> int {
        auto [it, fresh] = index.try_emplace(std::move(f), static_cast<int>(tm.state_maps.size()));
        if (fresh) {
            tm.state_maps.push_back(it->first);
            if (static_cast<int>(tm.state_maps.size()) > max_size)
                throw std::runtime_error("transition monoid exceeds size cap");
        }
        return it->second;
    };

    intern(ident);
    // Breadth-first over words in shortlex order; element numbering follows
    // the first word that realizes each map.
    for (std::size_t e = 0; e < tm.state_maps.size(); ++e) {
        for (std::size_t l = 0; l < d.alphabet.size(); ++l) {
            std::vector<int> f(static_cast<std::size_t>(ns));
            for (int q = 0; q < ns; ++q)
                f[static_cast<std::size_t>(q)] =
                    letter_map[l][static_cast<std::size_t>(tm.state_maps[e][static_cast<std::size_t>(q)])];
            intern(std::move(f));
        }
    }

    FiniteMonoid& m = tm.monoid;
    m.size = static_cast<int>(tm.state_maps.size());
    m.identity = 0;
    m.table.assign(static_cast<std::size_t>(m.size) * static_cast<std::size_t>(m.size), 0);
    for (int a = 0; a < m.size; ++a)
        for (int b = 0; b < m.size; ++b) {
            std::vector<int> f(static_cast<std::size_t>(ns));
            for (int q = 0; q < ns; ++q)
                f[static_cast<std::size_t>(q)] = tm.state_maps[static_cast<std::size_t>(b)]
                    [static_cast<std::size_t>(tm.state_maps[static_cast<std::size_t>(a)][static_cast<std::size_t>(q)])];
            auto it = index.find(f);
            if (it == index.end()) throw std::logic_error("transition monoid closure is incomplete");
            m.table[static_cast<std::size_t>(a * m.size + b)] = it->second;
        }
    for (std::size_t l = 0; l < d.alphabet.size(); ++l)
        m.generators.push_back({d.alphabet.letters()[l], index.at(letter_map[l])});

    for (int e = 0; e < m.size; ++e)
        if (d.accepting[static_cast<std::size_t>(tm.state_maps[static_cast<std::size_t>(e)][static_cast<std::size_t>(d.initial)])])
            tm.accepting_elements.push_back(e);
    return tm;
}

FiniteMonoid syntactic_monoid(const Dfa& d) {
    return transition_monoid(minimize(d)).monoid;
}

namespace {

// Principal (one- or two-sided) ideal membership via closure over generator
// multiplications; uses the labelled generators when present, otherwise every
// element acts as a generator.
std::vector<std::vector<bool>> ideal_reach(const FiniteMonoid& m, bool right, bool left) {
    std::vector<int> gens;
    for (const auto& [label, e] : m.generators) gens.push_back(e);
    if (gens.empty())
        for (int e = 0; e < m.size; ++e) gens.push_back(e);

    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(m.size),
                                         std::vector<bool>(static_cast<std::size_t>(m.size), false));
    std::vector<int> work;
    for (int s = 0; s < m.size; ++s) {
        auto& row = reach[static_cast<std::size_t>(s)];
        row[static_cast<std::size_t>(s)] = true;
        work.assign(1, s);
        while (!work.empty()) {
            int x = work.back();
            work.pop_back();
            for (int g : gens) {
                if (right) {
                    int y = m.mul(x, g);
                    if (!row[static_cast<std::size_t>(y)]) { row[static_cast<std::size_t>(y)] = true; work.push_back(y); }
                }
                if (left) {
                    int y = m.mul(g, x);
                    if (!row[static_cast<std::size_t>(y)]) { row[static_cast<std::size_t>(y)] = true; work.push_back(y); }
                }
            }
        }
    }
    return reach;
}

void classes_from_reach(const std::vector<std::vector<bool>>& reach, std::vector<int>& class_of,
                        std::vector<std::vector<int>>& classes) {
    const int n = static_cast<int>(reach.size());
    class_of.assign(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (class_of[static_cast<std::size_t>(s)] >= 0) continue;
        int id = static_cast<int>(classes.size());
        classes.emplace_back();
        for (int t = s; t < n; ++t)
            if (class_of[static_cast<std::size_t>(t)] < 0 && reach[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] &&
                reach[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)]) {
                class_of[static_cast<std::size_t>(t)] = id;
                classes.back().push_back(t);
            }
    }
}

}

GreenSummary green_summary(const FiniteMonoid& m) {
    GreenSummary g;
    classes_from_reach(ideal_reach(m, true, false), g.r_class_of, g.r_classes);
    classes_from_reach(ideal_reach(m, false, true), g.l_class_of, g.l_classes);
    classes_from_reach(ideal_reach(m, true, true), g.j_class_of, g.j_classes);
    auto trivial = [](const std::vector<std::vector<int>>& cs) {
        for (const auto& c : cs)
            if (c.size() != 1) return false;
        return true;
    };
    g.r_trivial = trivial(g.r_classes);
    g.l_trivial = trivial(g.l_classes);
    g.j_trivial = trivial(g.j_classes);
    return g;
}

bool is_aperiodic(const FiniteMonoid& m) {
    for (int s = 0; s < m.size; ++s) {
        int w = omega_power(m, s);
        if (m.mul(w, s) != w) return false;
    }
    return true;
}

bool is_da(const FiniteMonoid& m) {
    std::vector<int> om = omega_table(m);
    for (int x = 0; x < m.size; ++x)
        for (int y = 0; y < m.size; ++y) {
            int e = om[static_cast<std::size_t>(m.mul(x, y))];
            if (m.mul(m.mul(e, x), e) != e) return false;
        }
    return true;
}

VarietyFlags variety_membership(const FiniteMonoid& m) {
    VarietyFlags f;
    f.aperiodic = is_aperiodic(m);
    f.da = is_da(m);
    f.j1 = true;
    for (int x = 0; x < m.size && f.j1; ++x) {
        if (!m.is_idempotent(x)) f.j1 = false;
        for (int y = x + 1; y < m.size && f.j1; ++y)
            if (m.mul(x, y) != m.mul(y, x)) f.j1 = false;
    }
    GreenSummary g = green_summary(m);
    f.j_trivial = g.j_trivial;
    f.r_trivial = g.r_trivial;
    f.l_trivial = g.l_trivial;
    return f;
}

FiniteMonoid parse_monoid_table(std::istream& in) {
    std::string line;
    int n = -1, identity = -1;
    std::vector<std::vector<int>> rows;
    std::vector<std::pair<char, int>> gens;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "elements:") {
            if (!(ls >> n) || n <= 0) throw std::invalid_argument("bad elements count");
        } else if (head == "identity:") {
            if (!(ls >> identity)) throw std::invalid_argument("bad identity index");
        } else if (head == "gen:") {
            std::string label;
            int e = -1;
            if (!(ls >> label >> e) || label.size() != 1)
                throw std::invalid_argument("gen lines look like: gen <letter> <index>");
            gens.push_back({label[0], e});
        } else {
            if (n < 0) throw std::invalid_argument("table rows must follow the elements line");
            std::vector<int> row;
            std::istringstream rs(line);
            int v;
            while (rs >> v) row.push_back(v);
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("table row has wrong width");
            rows.push_back(std::move(row));
        }
    }
    if (n < 0 || identity < 0) throw std::invalid_argument("monoid file needs elements and identity lines");
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("wrong number of table rows");
    FiniteMonoid m = monoid_from_table(rows, identity);
    for (auto [label, e] : gens) {
        if (e < 0 || e >= n) throw std::invalid_argument("generator index out of range");
        m.generators.push_back({label, e});
    }
    return m;
}

FiniteMonoid parse_monoid_table_text(const std::string& text) {
    std::istringstream in(text);
    return parse_monoid_table(in);
}

std::string format_monoid_table(const FiniteMonoid& m) {
    std::ostringstream out;
    out << "elements: " << m.size << "\nidentity: " << m.identity << '\n';
    for (int a = 0; a < m.size; ++a) {
        for (int b = 0; b < m.size; ++b) {
            if (b) out << ' ';
            out << m.mul(a, b);
        }
        out << '\n';
    }
    for (const auto& [label, e] : m.generators) out << "gen: " << label << ' ' << e << '\n';
    return out.str();
}

}
