#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fo2/monoid.hpp"

namespace fo2 {

// Term over variables x1, x2, ... built from products and the omega power.
// Immutable; copies share structure.
class OmegaTerm {
public:
    enum class Kind { Var, Product, Omega };

    static OmegaTerm var(int index);
    static OmegaTerm product(std::vector<OmegaTerm> factors);   // flattens nested products
    static OmegaTerm omega(OmegaTerm body);

    Kind kind() const;
    int var_index() const;                        // Var only
    const std::vector<OmegaTerm>& factors() const; // Product only
    const OmegaTerm& body() const;                 // Omega only

    int max_variable() const;
    std::string to_string() const;

private:
    struct Node;
    explicit OmegaTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Syntax: variables x1..x9, juxtaposition for products, parentheses, and the
// postfix power ^w, e.g. "(x1^w x2^w x1^w)^w".
OmegaTerm parse_omega_term(std::string_view text);

// assignment[i] is the element assigned to x_{i+1}; throws when the term uses
// a variable beyond the assignment.
int eval_term(const FiniteMonoid& m, const OmegaTerm& t, const std::vector<int>& assignment);

struct IdentityResult {
    bool holds = true;
    std::vector<int> counterexample;   // assignment for x1..xk when it fails
};

// Checks lhs = rhs under every assignment, scanning in row-major order so a
// failure reports the lexicographically first counterexample.
IdentityResult satisfies_identity(const FiniteMonoid& m, const OmegaTerm& lhs, const OmegaTerm& rhs,
                                  int max_variables = 4);

}
