#include "fo2/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fo2 {

bool Dfa::accepts(std::string_view word) const {
    int q = initial;
    for (char c : word) q = step(q, c);
    return accepting[static_cast<std::size_t>(q)];
}

void validate_dfa(const Dfa& d) {
    if (d.num_states <= 0) throw std::invalid_argument("dfa needs at least one state");
    if (d.initial < 0 || d.initial >= d.num_states)
        throw std::invalid_argument("dfa initial state out of range");
    if (static_cast<int>(d.accepting.size()) != d.num_states)
        throw std::invalid_argument("dfa accepting vector size mismatch");
    if (static_cast<int>(d.next.size()) != d.num_states)
        throw std::invalid_argument("dfa transition table size mismatch");
    for (const auto& row : d.next) {
        if (row.size() != d.alphabet.size())
            throw std::invalid_argument("dfa transition row incomplete");
        for (int t : row)
            if (t < 0 || t >= d.num_states)
                throw std::invalid_argument("dfa transition target out of range");
    }
}

// ---------------------------------------------------------------------------
// Regex parsing and compilation.

namespace {

struct RegexNode {
    enum Kind { Letter, Class, Concat, Alt, Star, Plus, Epsilon } kind;
    char letter = 0;
    std::string cls;           // Class
    int left = -1, right = -1; // children
};

struct RegexAst {
    std::vector<RegexNode> nodes;
    int root = -1;

    int add(RegexNode n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }
};

bool is_meta(char c) {
    return c == '(' || c == ')' || c == '[' || c == ']' || c == '|' || c == '*' || c == '+';
}

class RegexParser {
public:
    explicit RegexParser(std::string_view text) : text_(text) {}

    RegexAst parse() {
        ast_.root = parse_alt();
        if (pos_ != text_.size())
            throw std::invalid_argument("unexpected '" + std::string(1, text_[pos_]) +
                                        "' at offset " + std::to_string(pos_) + " in regex");
        return std::move(ast_);
    }

private:
    int parse_alt() {
        int node = parse_concat();
        while (peek() == '|') {
            ++pos_;
            int rhs = parse_concat();
            node = ast_.add({RegexNode::Alt, 0, {}, node, rhs});
        }
        return node;
    }

    int parse_concat() {
        int node = -1;
        while (pos_ < text_.size() && peek() != '|' && peek() != ')') {
            int factor = parse_postfix();
            node = node < 0 ? factor : ast_.add({RegexNode::Concat, 0, {}, node, factor});
        }
        return node < 0 ? ast_.add({RegexNode::Epsilon, 0, {}, -1, -1}) : node;
    }

    int parse_postfix() {
        int node = parse_atom();
        while (peek() == '*' || peek() == '+') {
            node = ast_.add({peek() == '*' ? RegexNode::Star : RegexNode::Plus, 0, {}, node, -1});
            ++pos_;
        }
        return node;
    }

    int parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            int node = parse_alt();
            if (peek() != ')') throw std::invalid_argument("unbalanced '(' in regex");
            ++pos_;
            return node;
        }
        if (c == '[') {
            ++pos_;
            std::string letters;
            while (pos_ < text_.size() && text_[pos_] != ']') {
                if (is_meta(text_[pos_]))
                    throw std::invalid_argument("character class may only hold plain letters");
                letters += text_[pos_++];
            }
            if (pos_ == text_.size()) throw std::invalid_argument("unbalanced '[' in regex");
            ++pos_;
            return ast_.add({RegexNode::Class, 0, std::move(letters), -1, -1});
        }
        if (c == 0 || is_meta(c))
            throw std::invalid_argument("regex atom expected" +
                                        (c ? std::string(" before '") + c + "'" : std::string()));
        ++pos_;
        return ast_.add({RegexNode::Letter, c, {}, -1, -1});
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : 0; }

    std::string_view text_;
    std::size_t pos_ = 0;
    RegexAst ast_;
};

void collect_letters(const RegexAst& ast, int node, std::string& out) {
    const RegexNode& n = ast.nodes[static_cast<std::size_t>(node)];
    switch (n.kind) {
    case RegexNode::Letter: out += n.letter; break;
    case RegexNode::Class: out += n.cls; break;
    case RegexNode::Epsilon: break;
    case RegexNode::Star:
    case RegexNode::Plus: collect_letters(ast, n.left, out); break;
    case RegexNode::Concat:
    case RegexNode::Alt:
        collect_letters(ast, n.left, out);
        collect_letters(ast, n.right, out);
        break;
    }
}

struct Nfa {
    // state -> list of (letter, target); epsilon edges kept separately
    std::vector<std::vector<std::pair<char, int>>> edges;
    std::vector<std::vector<int>> eps;
    int start = 0, accept = 0;

    int add_state() {
        edges.emplace_back();
        eps.emplace_back();
        return static_cast<int>(edges.size()) - 1;
    }
};

struct Fragment { int start, accept; };

Fragment build_nfa(Nfa& nfa, const RegexAst& ast, int node) {
    const RegexNode& n = ast.nodes[static_cast<std::size_t>(node)];
    switch (n.kind) {
    case RegexNode::Letter: {
        int s = nfa.add_state(), t = nfa.add_state();
        nfa.edges[static_cast<std::size_t>(s)].push_back({n.letter, t});
        return {s, t};
    }
    case RegexNode::Class: {
        int s = nfa.add_state(), t = nfa.add_state();
        for (char c : n.cls) nfa.edges[static_cast<std::size_t>(s)].push_back({c, t});
        return {s, t};
    }
    case RegexNode::Epsilon: {
        int s = nfa.add_state();
        return {s, s};
    }
    case RegexNode::Concat: {
        Fragment a = build_nfa(nfa, ast, n.left);
        Fragment b = build_nfa(nfa, ast, n.right);
        nfa.eps[static_cast<std::size_t>(a.accept)].push_back(b.start);
        return {a.start, b.accept};
    }
    case RegexNode::Alt: {
        Fragment a = build_nfa(nfa, ast, n.left);
        Fragment b = build_nfa(nfa, ast, n.right);
        int s = nfa.add_state(), t = nfa.add_state();
        nfa.eps[static_cast<std::size_t>(s)].push_back(a.start);
        nfa.eps[static_cast<std::size_t>(s)].push_back(b.start);
        nfa.eps[static_cast<std::size_t>(a.accept)].push_back(t);
        nfa.eps[static_cast<std::size_t>(b.accept)].push_back(t);
        return {s, t};
    }
    case RegexNode::Star: {
        Fragment a = build_nfa(nfa, ast, n.left);
        int s = nfa.add_state();
        nfa.eps[static_cast<std::size_t>(s)].push_back(a.start);
        nfa.eps[static_cast<std::size_t>(a.accept)].push_back(s);
        return {s, s};
    }
    case RegexNode::Plus: {
        Fragment a = build_nfa(nfa, ast, n.left);
        nfa.eps[static_cast<std::size_t>(a.accept)].push_back(a.start);
        return {a.start, a.accept};
    }
    }
    throw std::logic_error("unreachable regex node kind");
}

std::set<int> eps_closure(const Nfa& nfa, std::set<int> states) {
    std::vector<int> work(states.begin(), states.end());
    while (!work.empty()) {
        int s = work.back();
        work.pop_back();
        for (int t : nfa.eps[static_cast<std::size_t>(s)])
            if (states.insert(t).second) work.push_back(t);
    }
    return states;
}

Dfa determinize(const Nfa& nfa, const Alphabet& alphabet) {
    Dfa d;
    d.alphabet = alphabet;
    std::map<std::set<int>, int> index;
    std::vector<std::set<int>> subsets;
    auto intern = [&](std::set<int> s) {
        auto [it, fresh] = index.try_emplace(std::move(s), static_cast<int>(subsets.size()));
        if (fresh) subsets.push_back(it->first);
        return it->second;
    };
    intern(eps_closure(nfa, {nfa.start}));
    for (std::size_t q = 0; q < subsets.size(); ++q) {
        d.next.emplace_back();
        for (char c : alphabet.letters()) {
            std::set<int> target;
            for (int s : subsets[q])
                for (auto [letter, t] : nfa.edges[static_cast<std::size_t>(s)])
                    if (letter == c) target.insert(t);
            d.next.back().push_back(intern(eps_closure(nfa, std::move(target))));
        }
    }
    d.num_states = static_cast<int>(subsets.size());
    d.initial = 0;
    d.accepting.resize(static_cast<std::size_t>(d.num_states));
    for (int q = 0; q < d.num_states; ++q)
        d.accepting[static_cast<std::size_t>(q)] =
            subsets[static_cast<std::size_t>(q)].count(nfa.accept) > 0;
    return d;
}

}

Dfa compile_regex(std::string_view pattern, std::optional<Alphabet> alphabet) {
    RegexAst ast = RegexParser(pattern).parse();
    std::string seen;
    collect_letters(ast, ast.root, seen);
    Alphabet a = alphabet ? *alphabet : Alphabet(seen);
    for (char c : seen)
        if (!a.contains(c))
            throw std::invalid_argument(std::string("regex letter '") + c +
                                        "' not in declared alphabet \"" + a.letters() + "\"");
    Nfa nfa;
    Fragment f = build_nfa(nfa, ast, ast.root);
    nfa.start = f.start;
    nfa.accept = f.accept;
    return minimize(determinize(nfa, a));
}

// ---------------------------------------------------------------------------
// Minimization: reachable restriction, then Moore partition refinement, then
// canonical renumbering.

Dfa minimize(const Dfa& d) {
    validate_dfa(d);
    const int letters = static_cast<int>(d.alphabet.size());

    std::vector<int> reach;
    std::vector<int> index(static_cast<std::size_t>(d.num_states), -1);
    reach.push_back(d.initial);
    index[static_cast<std::size_t>(d.initial)] = 0;
    for (std::size_t i = 0; i < reach.size(); ++i)
        for (int l = 0; l < letters; ++l) {
            int t = d.next[static_cast<std::size_t>(reach[i])][static_cast<std::size_t>(l)];
            if (index[static_cast<std::size_t>(t)] < 0) {
                index[static_cast<std::size_t>(t)] = static_cast<int>(reach.size());
                reach.push_back(t);
            }
        }

    const int n = static_cast<int>(reach.size());
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
        cls[static_cast<std::size_t>(q)] = d.accepting[static_cast<std::size_t>(reach[static_cast<std::size_t>(q)])] ? 1 : 0;

    for (;;) {
        std::map<std::vector<int>, int> sig_index;
        std::vector<int> next_cls(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            std::vector<int> sig;
            sig.push_back(cls[static_cast<std::size_t>(q)]);
            for (int l = 0; l < letters; ++l) {
                int t = d.next[static_cast<std::size_t>(reach[static_cast<std::size_t>(q)])][static_cast<std::size_t>(l)];
                sig.push_back(cls[static_cast<std::size_t>(index[static_cast<std::size_t>(t)])]);
            }
            auto [it, fresh] = sig_index.try_emplace(std::move(sig), static_cast<int>(sig_index.size()));
            (void)fresh;
            next_cls[static_cast<std::size_t>(q)] = it->second;
        }
        bool stable = true;
        for (int q = 0; q < n && stable; ++q)
            for (int p = q + 1; p < n && stable; ++p)
                if ((cls[static_cast<std::size_t>(q)] == cls[static_cast<std::size_t>(p)]) !=
                    (next_cls[static_cast<std::size_t>(q)] == next_cls[static_cast<std::size_t>(p)]))
                    stable = false;
        cls = std::move(next_cls);
        if (stable) break;
    }

    int classes = *std::max_element(cls.begin(), cls.end()) + 1;

    // Quotient transitions on class representatives.
    std::vector<std::vector<int>> qnext(static_cast<std::size_t>(classes),
                                        std::vector<int>(static_cast<std::size_t>(letters), -1));
    std::vector<bool> qacc(static_cast<std::size_t>(classes), false);
    for (int q = 0; q < n; ++q) {
        int c = cls[static_cast<std::size_t>(q)];
        qacc[static_cast<std::size_t>(c)] =
            d.accepting[static_cast<std::size_t>(reach[static_cast<std::size_t>(q)])];
        for (int l = 0; l < letters; ++l) {
            int t = d.next[static_cast<std::size_t>(reach[static_cast<std::size_t>(q)])][static_cast<std::size_t>(l)];
            qnext[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)] =
                cls[static_cast<std::size_t>(index[static_cast<std::size_t>(t)])];
        }
    }

    // Canonical numbering by breadth-first discovery from the initial class.
    std::vector<int> order(static_cast<std::size_t>(classes), -1);
    std::vector<int> bfs;
    int start = cls[static_cast<std::size_t>(index[static_cast<std::size_t>(d.initial)])];
    order[static_cast<std::size_t>(start)] = 0;
    bfs.push_back(start);
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (int l = 0; l < letters; ++l) {
            int t = qnext[static_cast<std::size_t>(bfs[i])][static_cast<std::size_t>(l)];
            if (order[static_cast<std::size_t>(t)] < 0) {
                order[static_cast<std::size_t>(t)] = static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }

    Dfa out;
    out.alphabet = d.alphabet;
    out.num_states = classes;
    out.initial = 0;
    out.accepting.resize(static_cast<std::size_t>(classes));
    out.next.assign(static_cast<std::size_t>(classes),
                    std::vector<int>(static_cast<std::size_t>(letters), 0));
    for (int c = 0; c < classes; ++c) {
        int nc = order[static_cast<std::size_t>(c)];
        out.accepting[static_cast<std::size_t>(nc)] = qacc[static_cast<std::size_t>(c)];
        for (int l = 0; l < letters; ++l)
            out.next[static_cast<std::size_t>(nc)][static_cast<std::size_t>(l)] =
                order[static_cast<std::size_t>(qnext[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)])];
    }
    return out;
}

Alphabet language_alphabet(const Dfa& d) {
    validate_dfa(d);
    const int letters = static_cast<int>(d.alphabet.size());

    std::vector<bool> fwd(static_cast<std::size_t>(d.num_states), false);
    std::vector<int> work{d.initial};
    fwd[static_cast<std::size_t>(d.initial)] = true;
    while (!work.empty()) {
        int q = work.back();
        work.pop_back();
        for (int l = 0; l < letters; ++l) {
            int t = d.next[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)];
            if (!fwd[static_cast<std::size_t>(t)]) {
                fwd[static_cast<std::size_t>(t)] = true;
                work.push_back(t);
            }
        }
    }

    std::vector<bool> bwd(static_cast<std::size_t>(d.num_states), false);
    for (int q = 0; q < d.num_states; ++q)
        if (d.accepting[static_cast<std::size_t>(q)]) {
            bwd[static_cast<std::size_t>(q)] = true;
            work.push_back(q);
        }
    while (!work.empty()) {
        int q = work.back();
        work.pop_back();
        for (int s = 0; s < d.num_states; ++s) {
            if (bwd[static_cast<std::size_t>(s)]) continue;
            for (int l = 0; l < letters; ++l)
                if (d.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)] == q) {
                    bwd[static_cast<std::size_t>(s)] = true;
                    work.push_back(s);
                    break;
                }
        }
    }

    std::string used;
    for (int q = 0; q < d.num_states; ++q) {
        if (!fwd[static_cast<std::size_t>(q)]) continue;
        for (int l = 0; l < letters; ++l)
            if (bwd[static_cast<std::size_t>(d.next[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)])])
                used += d.alphabet.letters()[static_cast<std::size_t>(l)];
    }
    return Alphabet(used);
}

// ---------------------------------------------------------------------------
// File format.

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_state(const std::string& tok, int limit) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0 || (limit >= 0 && v >= limit))
        throw std::invalid_argument("bad state \"" + tok + "\" in dfa file");
    return v;
}

}

Dfa parse_dfa_file(std::istream& in) {
    Dfa d;
    bool saw_alphabet = false, saw_states = false, saw_initial = false, saw_final = false;
    std::vector<std::vector<bool>> filled;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("dfa file line lacks a keyword: \"" + line + "\"");
        std::string key = line.substr(0, colon);
        std::vector<std::string> args = split_ws(line.substr(colon + 1));
        if (key == "alphabet") {
            std::string letters;
            for (const auto& t : args) {
                if (t.size() != 1)
                    throw std::invalid_argument("alphabet entries must be single letters");
                letters += t;
            }
            d.alphabet = Alphabet(letters);
            if (d.alphabet.size() != letters.size())
                throw std::invalid_argument("alphabet entries must be distinct");
            saw_alphabet = true;
        } else if (key == "states") {
            std::vector<int> ids;
            for (const auto& t : args) ids.push_back(parse_state(t, -1));
            std::sort(ids.begin(), ids.end());
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (ids[i] != static_cast<int>(i))
                    throw std::invalid_argument("states must be 0..n-1 without repetition");
            d.num_states = static_cast<int>(ids.size());
            saw_states = true;
        } else if (key == "initial") {
            if (!saw_states) throw std::invalid_argument("initial line must follow states line");
            if (args.size() != 1) throw std::invalid_argument("initial takes exactly one state");
            d.initial = parse_state(args[0], d.num_states);
            saw_initial = true;
        } else if (key == "final") {
            if (!saw_states) throw std::invalid_argument("final line must follow states line");
            d.accepting.assign(static_cast<std::size_t>(d.num_states), false);
            for (const auto& t : args)
                d.accepting[static_cast<std::size_t>(parse_state(t, d.num_states))] = true;
            saw_final = true;
        } else if (key == "trans") {
            if (!saw_states || !saw_alphabet)
                throw std::invalid_argument("trans lines must follow states and alphabet lines");
            if (d.next.empty()) {
                d.next.assign(static_cast<std::size_t>(d.num_states),
                              std::vector<int>(d.alphabet.size(), -1));
                filled.assign(static_cast<std::size_t>(d.num_states),
                              std::vector<bool>(d.alphabet.size(), false));
            }
            if (args.size() != 3 || args[1].size() != 1)
                throw std::invalid_argument("trans lines look like: trans <state> <letter> <state>");
            int from = parse_state(args[0], d.num_states);
            std::size_t l = d.alphabet.index_of(args[1][0]);
            int to = parse_state(args[2], d.num_states);
            if (filled[static_cast<std::size_t>(from)][l])
                throw std::invalid_argument("duplicate transition for state " + args[0] +
                                            " letter " + args[1]);
            filled[static_cast<std::size_t>(from)][l] = true;
            d.next[static_cast<std::size_t>(from)][l] = to;
        } else {
            throw std::invalid_argument("unknown dfa file keyword \"" + key + "\"");
        }
    }
    if (!saw_alphabet || !saw_states || !saw_initial || !saw_final)
        throw std::invalid_argument("dfa file needs alphabet, states, initial and final lines");
    for (const auto& row : filled)
        for (bool f : row)
            if (!f) throw std::invalid_argument("dfa file transitions are incomplete");
    if (d.next.empty() && d.num_states > 0 && !d.alphabet.empty())
        throw std::invalid_argument("dfa file transitions are incomplete");
    if (d.next.empty()) d.next.assign(static_cast<std::size_t>(d.num_states), {});
    validate_dfa(d);
    return d;
}

Dfa parse_dfa_text(const std::string& text) {
    std::istringstream in(text);
    return parse_dfa_file(in);
}

std::string format_dfa_file(const Dfa& d) {
    std::ostringstream out;
    out << "alphabet:";
    for (char c : d.alphabet.letters()) out << ' ' << c;
    out << "\nstates:";
    for (int q = 0; q < d.num_states; ++q) out << ' ' << q;
    out << "\ninitial: " << d.initial << "\nfinal:";
    for (int q = 0; q < d.num_states; ++q)
        if (d.accepting[static_cast<std::size_t>(q)]) out << ' ' << q;
    out << '\n';
    for (int q = 0; q < d.num_states; ++q)
        for (std::size_t l = 0; l < d.alphabet.size(); ++l)
            out << "trans: " << q << ' ' << d.alphabet.letters()[l] << ' '
                << d.next[static_cast<std::size_t>(q)][l] << '\n';
    return out.str();
}

}
