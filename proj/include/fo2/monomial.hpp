#pragma once

#include <vector>

#include "fo2/alphabet.hpp"

namespace fo2 {

// Product shape B_0* a_1 B_1* ... a_k B_k*; sets holds k+1 entries and
// letters the k markers.  k = 0 is a plain B_0*.
struct Monomial {
    std::vector<Alphabet> sets;
    Word letters;
};

void validate_monomial(const Monomial& m);

Monomial reversed_monomial(const Monomial& m);

// Union of all factor sets and markers.
Alphabet monomial_alphabet(const Monomial& m);

struct MonomialFlags {
    bool visibly_det = false;
    bool det = false;
    bool visibly_codet = false;
    bool codet = false;
    bool unambiguous = false;
};

MonomialFlags monomial_analysis(const Monomial& m);

}
