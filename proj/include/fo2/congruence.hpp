#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fo2/alphabet.hpp"
#include "fo2/monoid.hpp"
#include "fo2/side.hpp"

namespace fo2 {

struct CongruenceQuery {
    int m = 1;
    int n = 1;
    Side side = Side::Right;
};

// Equality of scattered-subword sets up to length n, decided by enumerating
// candidate patterns over alph(u) + alph(v) with the greedy embedding test.
bool subword_equivalent(const Word& u, const Word& v, int n);

// Memoizing evaluator for the two-sided congruence family.  The recursion
// peels the unique leftmost (Right) or rightmost (Left) occurrence of each
// letter; the m = 1 base coincides with subword equality.
class CongruenceEvaluator {
public:
    bool equivalent(const Word& u, const Word& v, int m, int n, Side side);

private:
    bool compute(const Word& u, const Word& v, int m, int n, Side side);
    std::unordered_map<std::string, bool> memo_;
};

bool cong_equivalent(const Word& u, const Word& v, const CongruenceQuery& q);

struct StabilizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite quotient reached by breadth-first closure over shortlex words; each
// class is represented by its shortlex-least member.
struct QuotientMonoid {
    FiniteMonoid monoid;
    std::vector<Word> representatives;
    Alphabet alphabet;

    int project(const Word& u) const;
};

// Throws StabilizationError when new classes still appear past the cap.
QuotientMonoid quotient_monoid(const Alphabet& alphabet, const CongruenceQuery& q,
                               int length_cap = 12);

}
