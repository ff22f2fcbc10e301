// Acceptance gate: twelve end-to-end checks, one verdict line each.
// Budgets are wall-clock upper bounds; a criterion fails on any mismatch
// or on blowing its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fo2/analysis.hpp"
#include "fo2/automata.hpp"
#include "fo2/congruence.hpp"
#include "fo2/hierarchy.hpp"
#include "fo2/monoid.hpp"
#include "fo2/monomial.hpp"
#include "fo2/ranker.hpp"
#include "fo2/ranker_class.hpp"

using namespace fo2;

namespace {

std::vector<Word> words_up_to(const std::string& letters, int max_len) {
    std::vector<Word> out{Word{}};
    size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        const size_t end = out.size();
        for (size_t i = begin; i < end; ++i) {
            for (char c : letters) {
                out.push_back(out[i] + c);
            }
        }
        begin = end;
    }
    return out;
}

Dfa random_dfa(std::mt19937& rng) {
    std::uniform_int_distribution<int> nstates(1, 4);
    std::uniform_int_distribution<int> nletters(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    Dfa d;
    d.num_states = nstates(rng);
    d.alphabet = Alphabet(std::string("abc").substr(
        0, static_cast<size_t>(nletters(rng))));
    d.initial = 0;
    std::uniform_int_distribution<int> target(0, d.num_states - 1);
    for (int q = 0; q < d.num_states; ++q) {
        d.next.emplace_back();
        for (size_t l = 0; l < d.alphabet.size(); ++l) {
            d.next.back().push_back(target(rng));
        }
        d.accepting.push_back(coin(rng) == 1);
    }
    return d;
}

// Monoids shared between the two random-automata criteria.
std::vector<FiniteMonoid> g_random_monoids;

bool criterion1(std::string& detail) {
    const Alphabet abc("abc");
    const Ranker r = parse_ranker("Xa.Yb.Xc", abc);
    const EvalOutcome tight = eval_ranker("bca", r);
    const EvalOutcome loose = eval_ranker("bac", r);
    const bool ok = tight.defined && tight.condensed && tight.position == 2 &&
                    loose.defined && !loose.condensed && loose.position == 3;
    detail = "Xa.Yb.Xc on bca/bac";
    return ok;
}

bool criterion2(std::string& detail) {
    std::mt19937 rng(160901);
    const int total = 220;
    int checked = 0;
    for (int i = 0; i < total; ++i) {
        const Dfa d = random_dfa(rng);
        const FiniteMonoid m = transition_monoid(d).monoid;
        g_random_monoids.push_back(m);
        const GreenSummary g = green_summary(m);
        if (level_membership(m, 2, Side::Right) != g.r_trivial) {
            detail = "right-side mismatch on sample " + std::to_string(i);
            return false;
        }
        if (level_membership(m, 2, Side::Left) != g.l_trivial) {
            detail = "left-side mismatch on sample " + std::to_string(i);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " random transition monoids";
    return true;
}

bool criterion3(std::string& detail) {
    const Alphabet ab("ab");
    const auto words = words_up_to("ab", 5);
    CongruenceEvaluator eval;
    long long agreements = 0;
    for (int m = 1; m <= 3; ++m) {
        for (int n = m; n <= 3; ++n) {
            for (Side side : {Side::Right, Side::Left}) {
                const ClassShape shape =
                    side == Side::Right ? ClassShape::URX_mn : ClassShape::URY_mn;
                const std::vector<Ranker> rankers =
                    enumerate_rankers({shape, m, n, ab});
                std::vector<std::vector<bool>> mask(words.size());
                for (size_t w = 0; w < words.size(); ++w) {
                    for (const Ranker& r : rankers) {
                        mask[w].push_back(eval_ranker(words[w], r).condensed);
                    }
                }
                for (size_t i = 0; i < words.size(); ++i) {
                    for (size_t k = i; k < words.size(); ++k) {
                        const bool brute = mask[i] == mask[k];
                        const bool fast =
                            eval.equivalent(words[i], words[k], m, n, side);
                        if (brute != fast) {
                            detail = "mismatch at m=" + std::to_string(m) +
                                     " n=" + std::to_string(n) + " u=" +
                                     words[i] + " v=" + words[k];
                            return false;
                        }
                        ++agreements;
                    }
                }
            }
        }
    }
    detail = std::to_string(agreements) + " pair checks";
    return true;
}

bool criterion4(std::string& detail) {
    const Alphabet ab("ab");
    const auto words = words_up_to("ab", 5);
    long long agreements = 0;
    for (int m = 1; m <= 3; ++m) {
        for (int n = m; n <= 3; ++n) {
            for (size_t i = 0; i < words.size(); ++i) {
                for (size_t k = i; k < words.size(); ++k) {
                    const bool plain =
                        wi_equivalent(words[i], words[k], m, n, WiMode::Plain, ab);
                    const bool condensed = wi_equivalent(
                        words[i], words[k], m, n, WiMode::Condensed, ab);
                    if (plain != condensed) {
                        detail = "mode mismatch at m=" + std::to_string(m) +
                                 " n=" + std::to_string(n) + " u=" + words[i] +
                                 " v=" + words[k];
                        return false;
                    }
                    ++agreements;
                }
            }
        }
    }
    detail = std::to_string(agreements) + " pair checks";
    return true;
}

bool criterion5(std::string& detail) {
    const FiniteMonoid m = syntactic_monoid(compile_regex("[bc]*ca[ab]*"));
    const AnalysisReport report =
        analyze_language(compile_regex("[bc]*ca[ab]*"), "regex", "[bc]*ca[ab]*");
    const bool ok = report.variety.da &&
                    !level_membership(m, 2, Side::Right) &&
                    !level_membership(m, 2, Side::Left) &&
                    level_membership(m, 3, Side::Right) &&
                    level_membership(m, 3, Side::Left) &&
                    report.level.alternation_interval.has_value() &&
                    *report.level.alternation_interval == std::pair{2, 3};
    detail = "joint level 3, interval (2,3)";
    return ok;
}

bool criterion6(std::string& detail) {
    const AnalysisReport report =
        analyze_language(compile_regex("(ab)*"), "regex", "(ab)*");
    detail = "aperiodic outside the two-variable class";
    return report.variety.aperiodic && !report.variety.da &&
           !report.level.fo2_definable;
}

bool criterion7(std::string& detail) {
    // Word shape: some b, then only c up to the first a, then anything.
    Dfa d;
    d.alphabet = Alphabet("abc");
    d.num_states = 5;
    d.initial = 0;
    d.accepting = {false, false, false, true, false};
    // letter order a, b, c
    d.next = {{4, 1, 0},
              {4, 1, 2},
              {3, 1, 2},
              {3, 3, 3},
              {4, 4, 4}};
    validate_dfa(d);

    const Ranker r = parse_ranker("Xa.Yb.Xc", Alphabet("abc"));
    for (const Word& u : words_up_to("abc", 6)) {
        if (d.accepts(u) != eval_ranker(u, r).condensed) {
            detail = "language mismatch on \"" + u + "\"";
            return false;
        }
    }
    if (!level_membership(syntactic_monoid(d), 3, Side::Right)) {
        detail = "syntactic monoid misses level 3";
        return false;
    }
    detail = "condensed-evaluation language matches";
    return true;
}

bool criterion8(std::string& detail) {
    const auto words = words_up_to("ab", 6);
    CongruenceEvaluator eval;
    std::vector<std::vector<std::set<std::string>>> sets(4);
    for (int n = 1; n <= 3; ++n) {
        sets[static_cast<size_t>(n)].resize(words.size());
        for (size_t i = 0; i < words.size(); ++i) {
            std::set<std::string>& out = sets[static_cast<size_t>(n)][i];
            // subsequences up to length n, gathered positionally
            std::vector<std::pair<std::string, size_t>> frontier{{"", 0}};
            out.insert("");
            for (int len = 1; len <= n; ++len) {
                std::vector<std::pair<std::string, size_t>> next;
                for (const auto& [s, from] : frontier) {
                    for (size_t p = from; p < words[i].size(); ++p) {
                        next.push_back({s + words[i][p], p + 1});
                        out.insert(s + words[i][p]);
                    }
                }
                frontier = std::move(next);
            }
        }
    }
    long long agreements = 0;
    for (int n = 1; n <= 3; ++n) {
        const auto& table = sets[static_cast<size_t>(n)];
        for (size_t i = 0; i < words.size(); ++i) {
            for (size_t k = i; k < words.size(); ++k) {
                const bool brute = table[i] == table[k];
                if (eval.equivalent(words[i], words[k], 1, n, Side::Right) !=
                    brute) {
                    detail = "mismatch at n=" + std::to_string(n) + " u=" +
                             words[i] + " v=" + words[k];
                    return false;
                }
                ++agreements;
            }
        }
    }
    detail = std::to_string(agreements) + " pair checks";
    return true;
}

bool criterion9(std::string& detail) {
    int da_count = 0;
    for (const FiniteMonoid& m : g_random_monoids) {
        if (!is_da(m)) {
            continue;
        }
        ++da_count;
        const int g = static_cast<int>(m.generators.size());
        std::vector<bool> right, left;
        for (int lvl = 1; lvl <= g + 1; ++lvl) {
            right.push_back(level_membership(m, lvl, Side::Right));
            left.push_back(level_membership(m, lvl, Side::Left));
        }
        for (int lvl = 0; lvl + 1 <= g; ++lvl) {
            if (right[static_cast<size_t>(lvl)] &&
                !right[static_cast<size_t>(lvl) + 1]) {
                detail = "right membership not monotone";
                return false;
            }
            if (left[static_cast<size_t>(lvl)] &&
                !left[static_cast<size_t>(lvl) + 1]) {
                detail = "left membership not monotone";
                return false;
            }
            if (right[static_cast<size_t>(lvl)] &&
                !left[static_cast<size_t>(lvl) + 1]) {
                detail = "right level fails to imply next left level";
                return false;
            }
            if (left[static_cast<size_t>(lvl)] &&
                !right[static_cast<size_t>(lvl) + 1]) {
                detail = "left level fails to imply next right level";
                return false;
            }
        }
        if (!right.back() || !left.back()) {
            detail = "membership missing at generator count plus one";
            return false;
        }
    }
    detail = std::to_string(da_count) + " monoids inside the class";
    return da_count > 0;
}

bool criterion10(std::string& detail) {
    const Alphabet ab("ab");
    const auto words = words_up_to("ab", 5);
    CongruenceEvaluator eval;
    long long implications = 0;
    const std::vector<std::pair<int, int>> params{{1, 1}, {1, 2}, {2, 2}};
    for (const auto& [m, n] : params) {
        for (size_t i = 0; i < words.size(); ++i) {
            for (size_t k = i; k < words.size(); ++k) {
                if (!eval.equivalent(words[i], words[k], m + 1, 2 * n,
                                     Side::Right) ||
                    !eval.equivalent(words[i], words[k], m + 1, 2 * n,
                                     Side::Left)) {
                    continue;
                }
                ++implications;
                if (!wi_equivalent(words[i], words[k], m, n, WiMode::Condensed,
                                   ab)) {
                    detail = "failed implication at m=" + std::to_string(m) +
                             " n=" + std::to_string(n) + " u=" + words[i] +
                             " v=" + words[k];
                    return false;
                }
            }
        }
    }
    detail = std::to_string(implications) + " satisfied antecedents";
    return implications > 0;
}

bool criterion11(std::string& detail) {
    const QuotientMonoid q = quotient_monoid(Alphabet("ab"), {1, 1, Side::Right});
    if (q.monoid.size != 4) {
        detail = "binary quotient has size " + std::to_string(q.monoid.size);
        return false;
    }
    for (int s = 0; s < q.monoid.size; ++s) {
        if (q.monoid.mul(s, s) != s) {
            detail = "quotient element is not idempotent";
            return false;
        }
        for (int t = 0; t < q.monoid.size; ++t) {
            if (q.monoid.mul(s, t) != q.monoid.mul(t, s)) {
                detail = "quotient multiplication is not commutative";
                return false;
            }
        }
    }
    for (int n = 1; n <= 4; ++n) {
        const QuotientMonoid u = quotient_monoid(Alphabet("a"), {1, n, Side::Right});
        if (u.monoid.size != n + 1) {
            detail = "unary quotient at depth " + std::to_string(n) +
                     " has size " + std::to_string(u.monoid.size);
            return false;
        }
    }
    detail = "binary (1,1) and unary (1,n) quotients";
    return true;
}

bool criterion12(std::string& detail) {
    const MonomialFlags f1 =
        monomial_analysis({{Alphabet("b"), Alphabet("ab")}, "a"});
    if (!f1.visibly_det) {
        detail = "first example lost visible determinism";
        return false;
    }
    const MonomialFlags f2 =
        monomial_analysis({{Alphabet("ab"), Alphabet("b")}, "a"});
    if (f2.visibly_det || f2.det || !f2.visibly_codet || !f2.codet) {
        detail = "second example flags are off";
        return false;
    }
    const MonomialFlags f3 =
        monomial_analysis({{Alphabet("a"), Alphabet("a")}, "a"});
    if (f3.unambiguous) {
        detail = "third example should be ambiguous";
        return false;
    }
    const MonomialFlags f4 = monomial_analysis(
        {{Alphabet("bc"), Alphabet(""), Alphabet("ab")}, "ca"});
    if (!f4.unambiguous) {
        detail = "fourth example should be unambiguous";
        return false;
    }

    std::mt19937 rng(55221100);
    std::uniform_int_distribution<int> klen(0, 3);
    std::uniform_int_distribution<int> asize(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 100; ++i) {
        const std::string letters = std::string("abc").substr(
            0, static_cast<size_t>(asize(rng)));
        std::uniform_int_distribution<size_t> lpos(0, letters.size() - 1);
        Monomial m;
        const int k = klen(rng);
        for (int s = 0; s <= k; ++s) {
            std::string subset;
            for (char c : letters) {
                if (coin(rng)) {
                    subset += c;
                }
            }
            m.sets.push_back(Alphabet(subset));
        }
        for (int s = 0; s < k; ++s) {
            m.letters += letters[lpos(rng)];
        }
        const MonomialFlags f = monomial_analysis(m);
        if ((f.visibly_det && !f.det) || (f.det && !f.unambiguous) ||
            (f.visibly_codet && !f.codet) || (f.codet && !f.unambiguous)) {
            detail = "implication chain broke on a random monomial";
            return false;
        }
    }
    detail = "pinned examples and 100 random monomials";
    return true;
}

struct Criterion {
    int number;
    const char* name;
    double budget_ms;
    std::function<bool(std::string&)> run;
};

}

int main() {
    const std::vector<Criterion> criteria = {
        {1, "ranker example reproduction", 1.0, criterion1},
        {2, "level two equals the right/left trivial varieties", 60000.0,
         criterion2},
        {3, "congruence matches condensed-ranker agreement", 120000.0,
         criterion3},
        {4, "plain and condensed logical equivalence coincide", 120000.0,
         criterion4},
        {5, "worked language sits strictly at joint level three", 30000.0,
         criterion5},
        {6, "negative control stays outside the two-variable class", 5000.0,
         criterion6},
        {7, "condensed-evaluation language and its level", 60000.0, criterion7},
        {8, "depth-one congruence equals subword sets", 60000.0, criterion8},
        {9, "hierarchy monotonicity and crossover inclusions", 60000.0,
         criterion9},
        {10, "doubled congruence parameters force logical equivalence",
         120000.0, criterion10},
        {11, "quotient sizes on binary and unary alphabets", 5000.0,
         criterion11},
        {12, "monomial flags and implication chain", 30000.0, criterion12},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const auto stop = std::chrono::steady_clock::now();
        const double ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        if (ms > c.budget_ms) {
            ok = false;
            detail += detail.empty() ? "" : "; ";
            detail += "budget exceeded";
        }
        std::printf("[%s] criterion %d: %s (%s; %.1f ms of %.0f ms)\n",
                    ok ? "PASS" : "FAIL", c.number, c.name, detail.c_str(), ms,
                    c.budget_ms);
        if (!ok) {
            ++failures;
        }
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
