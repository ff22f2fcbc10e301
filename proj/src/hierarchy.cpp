#include "fo2/hierarchy.hpp"

#include <string>

namespace fo2 {

GISequences build_sequences(int m) {
    if (m < 2) {
        throw std::invalid_argument("defining sequences start at level 2");
    }
    GISequences s;
    s.g = {2, 1};
    s.i = {2, 1, 2};
    for (int k = 3; k <= m; ++k) {
        VariableWord g{k};
        const VariableWord rg = mirrored(s.g);
        g.insert(g.end(), rg.begin(), rg.end());
        VariableWord i = g;
        i.push_back(k);
        const VariableWord ri = mirrored(s.i);
        i.insert(i.end(), ri.begin(), ri.end());
        s.g = std::move(g);
        s.i = std::move(i);
    }
    return s;
}

OmegaTerm phi_of_variable(int index) {
    if (index < 1) {
        throw std::invalid_argument("variable indices start at 1");
    }
    if (index == 1) {
        return OmegaTerm::omega(OmegaTerm::product(
            {OmegaTerm::omega(OmegaTerm::var(1)), OmegaTerm::omega(OmegaTerm::var(2)),
             OmegaTerm::omega(OmegaTerm::var(1))}));
    }
    if (index == 2) {
        return OmegaTerm::omega(OmegaTerm::var(2));
    }
    const GISequences below = build_sequences(index - 1);
    VariableWord inner = mirrored(below.g);
    inner.insert(inner.end(), below.g.begin(), below.g.end());
    return OmegaTerm::omega(OmegaTerm::product(
        {OmegaTerm::omega(OmegaTerm::var(index)), OmegaTerm::omega(phi_expand(inner)),
         OmegaTerm::omega(OmegaTerm::var(index))}));
}

OmegaTerm phi_expand(const VariableWord& w) {
    if (w.empty()) {
        throw std::invalid_argument("variable words are non-empty");
    }
    std::vector<OmegaTerm> factors;
    factors.reserve(w.size());
    for (int x : w) {
        factors.push_back(phi_of_variable(x));
    }
    return OmegaTerm::product(factors);
}

namespace {

int fold_images(const FiniteMonoid& mono, const VariableWord& w,
                const std::vector<int>& img) {
    int e = mono.identity;
    for (int x : w) {
        e = mono.mul(e, img[static_cast<size_t>(x)]);
    }
    return e;
}

// Every variable of the phi terms occurs under an omega power, so the
// identity holds for all substitutions exactly when it holds for all
// substitutions by idempotents.
bool level_identity_holds(const FiniteMonoid& mono, int m, Side side) {
    const std::vector<int> omega = omega_table(mono);
    std::vector<int> idem;
    for (int s = 0; s < mono.size; ++s) {
        if (mono.is_idempotent(s)) {
            idem.push_back(s);
        }
    }

    std::vector<GISequences> seqs(static_cast<size_t>(m) + 1);
    for (int k = 2; k <= m; ++k) {
        seqs[static_cast<size_t>(k)] = build_sequences(k);
    }
    std::vector<VariableWord> inner(static_cast<size_t>(m) + 1);
    for (int k = 3; k <= m; ++k) {
        VariableWord w = mirrored(seqs[static_cast<size_t>(k) - 1].g);
        const VariableWord& g = seqs[static_cast<size_t>(k) - 1].g;
        w.insert(w.end(), g.begin(), g.end());
        inner[static_cast<size_t>(k)] = std::move(w);
    }

    VariableWord lhs = seqs[static_cast<size_t>(m)].g;
    VariableWord rhs = seqs[static_cast<size_t>(m)].i;
    if (side == Side::Left) {
        lhs = mirrored(lhs);
        rhs = mirrored(rhs);
    }

    std::vector<size_t> pick(static_cast<size_t>(m) + 1, 0);
    std::vector<int> assigned(static_cast<size_t>(m) + 1, mono.identity);
    std::vector<int> img(static_cast<size_t>(m) + 1, mono.identity);
    for (;;) {
        for (int i = 1; i <= m; ++i) {
            assigned[static_cast<size_t>(i)] = idem[pick[static_cast<size_t>(i)]];
        }
        img[2] = assigned[2];
        img[1] = omega[static_cast<size_t>(
            mono.mul(mono.mul(assigned[1], assigned[2]), assigned[1]))];
        for (int k = 3; k <= m; ++k) {
            const int body = omega[static_cast<size_t>(
                fold_images(mono, inner[static_cast<size_t>(k)], img))];
            img[static_cast<size_t>(k)] = omega[static_cast<size_t>(
                mono.mul(mono.mul(assigned[static_cast<size_t>(k)], body),
                         assigned[static_cast<size_t>(k)]))];
        }
        if (fold_images(mono, lhs, img) != fold_images(mono, rhs, img)) {
            return false;
        }
        int i = m;
        while (i >= 1) {
            if (++pick[static_cast<size_t>(i)] < idem.size()) {
                break;
            }
            pick[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 1) {
            break;
        }
    }
    return true;
}

// Number of generators when the listed ones reach every element, otherwise
// the trivial bound using all non-identity elements.
int generator_count_bound(const FiniteMonoid& mono) {
    if (!mono.generators.empty()) {
        std::vector<bool> seen(static_cast<size_t>(mono.size), false);
        seen[static_cast<size_t>(mono.identity)] = true;
        std::vector<int> queue{mono.identity};
        size_t head = 0;
        while (head < queue.size()) {
            const int s = queue[head++];
            for (const auto& [letter, g] : mono.generators) {
                (void)letter;
                const int t = mono.mul(s, g);
                if (!seen[static_cast<size_t>(t)]) {
                    seen[static_cast<size_t>(t)] = true;
                    queue.push_back(t);
                }
            }
        }
        if (queue.size() == static_cast<size_t>(mono.size)) {
            return static_cast<int>(mono.generators.size());
        }
    }
    return mono.size > 1 ? mono.size - 1 : 0;
}

}

bool level_membership(const FiniteMonoid& monoid, int m, Side side,
                      int max_variables) {
    if (m < 1) {
        throw std::invalid_argument("level must be at least 1");
    }
    if (m == 1) {
        return green_summary(monoid).j_trivial;
    }
    if (m > max_variables) {
        throw VariableBoundError("level " + std::to_string(m) +
                                 " exceeds the variable bound " +
                                 std::to_string(max_variables));
    }
    if (!is_da(monoid)) {
        return false;
    }
    return level_identity_holds(monoid, m, side);
}

LevelReport min_joint_level(const FiniteMonoid& monoid, int max_variables) {
    LevelReport report;
    report.in_da = is_da(monoid);
    report.fo2_definable = report.in_da;
    if (!report.in_da) {
        return report;
    }
    const int bound = generator_count_bound(monoid) + 1;
    for (int m = 1; m <= bound; ++m) {
        bool r = false;
        bool l = false;
        try {
            r = level_membership(monoid, m, Side::Right, max_variables);
            l = level_membership(monoid, m, Side::Left, max_variables);
        } catch (const VariableBoundError&) {
            report.inconclusive = true;
            return report;
        }
        report.scanned_up_to = m;
        if (r && !report.r_level) {
            report.r_level = m;
        }
        if (l && !report.l_level) {
            report.l_level = m;
        }
        if (report.r_level && report.l_level) {
            const int m0 = std::max(*report.r_level, *report.l_level);
            report.joint_level = m0;
            report.alternation_interval =
                m0 == 1 ? std::make_pair(1, 1) : std::make_pair(m0 - 1, m0);
            return report;
        }
    }
    throw std::logic_error(
        "no joint level within the generator bound; the level scan is inconsistent");
}

bool join_diagnostic(const FiniteMonoid& monoid) {
    const OmegaTerm x1 = OmegaTerm::var(1);
    const OmegaTerm x2 = OmegaTerm::var(2);
    const OmegaTerm x3 = OmegaTerm::var(3);
    const OmegaTerm left_block = OmegaTerm::omega(OmegaTerm::product({x2, x3}));
    const OmegaTerm right_block = OmegaTerm::omega(OmegaTerm::product({x1, x2}));
    const OmegaTerm lhs = OmegaTerm::product({left_block, right_block});
    const OmegaTerm rhs = OmegaTerm::product({left_block, x2, right_block});
    return satisfies_identity(monoid, lhs, rhs, 3).holds;
}

}
