#include "fo2/omega_term.hpp"

#include <algorithm>
#include <stdexcept>

namespace fo2 {

struct OmegaTerm::Node {
    Kind kind;
    int var = 0;
    std::vector<OmegaTerm> children;
};

OmegaTerm OmegaTerm::var(int index) {
    if (index < 1) throw std::invalid_argument("variable indices start at 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->var = index;
    return OmegaTerm(std::move(n));
}

OmegaTerm OmegaTerm::product(std::vector<OmegaTerm> factors) {
    if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
    if (factors.size() == 1) return factors.front();
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    for (auto& f : factors) {
        if (f.kind() == Kind::Product)
            for (const auto& g : f.factors()) n->children.push_back(g);
        else
            n->children.push_back(std::move(f));
    }
    return OmegaTerm(std::move(n));
}

OmegaTerm OmegaTerm::omega(OmegaTerm body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Omega;
    n->children.push_back(std::move(body));
    return OmegaTerm(std::move(n));
}

OmegaTerm::Kind OmegaTerm::kind() const { return node_->kind; }

int OmegaTerm::var_index() const { return node_->var; }

const std::vector<OmegaTerm>& OmegaTerm::factors() const { return node_->children; }

const OmegaTerm& OmegaTerm::body() const { return node_->children.front(); }

int OmegaTerm::max_variable() const {
    switch (kind()) {
    case Kind::Var: return var_index();
    case Kind::Omega: return body().max_variable();
    case Kind::Product: {
        int m = 0;
        for (const auto& f : factors()) m = std::max(m, f.max_variable());
        return m;
    }
    }
    return 0;
}

std::string OmegaTerm::to_string() const {
    switch (kind()) {
    case Kind::Var: return "x" + std::to_string(var_index());
    case Kind::Omega: {
        const OmegaTerm& b = body();
        if (b.kind() == Kind::Var) return b.to_string() + "^w";
        return "(" + b.to_string() + ")^w";
    }
    case Kind::Product: {
        std::string out;
        for (const auto& f : factors()) {
            if (!out.empty()) out += ' ';
            out += f.to_string();
        }
        return out;
    }
    }
    return {};
}

namespace {

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    OmegaTerm parse() {
        OmegaTerm t = parse_product();
        skip_ws();
        if (pos_ != text_.size())
            throw std::invalid_argument("unexpected '" + std::string(1, text_[pos_]) +
                                        "' in term at offset " + std::to_string(pos_));
        return t;
    }

private:
    OmegaTerm parse_product() {
        std::vector<OmegaTerm> factors;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] == ')') break;
            factors.push_back(parse_factor());
        }
        if (factors.empty()) throw std::invalid_argument("empty term");
        return OmegaTerm::product(std::move(factors));
    }

    OmegaTerm parse_factor() {
        OmegaTerm t = parse_primary();
        for (;;) {
            skip_ws();
            if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == 'w') {
                pos_ += 2;
                t = OmegaTerm::omega(std::move(t));
            } else {
                break;
            }
        }
        return t;
    }

    OmegaTerm parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw std::invalid_argument("term ends unexpectedly");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            OmegaTerm t = parse_product();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw std::invalid_argument("unbalanced '(' in term");
            ++pos_;
            return t;
        }
        if (c == 'x') {
            ++pos_;
            int v = 0;
            bool any = false;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
                any = true;
            }
            if (!any || v < 1) throw std::invalid_argument("variable index expected after 'x'");
            return OmegaTerm::var(v);
        }
        throw std::invalid_argument("term atom expected before '" + std::string(1, c) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

int eval_with(const FiniteMonoid& m, const std::vector<int>& omega_tbl, const OmegaTerm& t,
              const std::vector<int>& asg) {
    switch (t.kind()) {
    case OmegaTerm::Kind::Var: {
        int v = t.var_index();
        if (v > static_cast<int>(asg.size()))
            throw std::invalid_argument("variable x" + std::to_string(v) + " is unassigned");
        return asg[static_cast<std::size_t>(v - 1)];
    }
    case OmegaTerm::Kind::Omega:
        return omega_tbl[static_cast<std::size_t>(eval_with(m, omega_tbl, t.body(), asg))];
    case OmegaTerm::Kind::Product: {
        int e = m.identity;
        for (const auto& f : t.factors()) e = m.mul(e, eval_with(m, omega_tbl, f, asg));
        return e;
    }
    }
    throw std::logic_error("unreachable term kind");
}

}

OmegaTerm parse_omega_term(std::string_view text) { return TermParser(text).parse(); }

int eval_term(const FiniteMonoid& m, const OmegaTerm& t, const std::vector<int>& assignment) {
    return eval_with(m, omega_table(m), t, assignment);
}

IdentityResult satisfies_identity(const FiniteMonoid& m, const OmegaTerm& lhs, const OmegaTerm& rhs,
                                  int max_variables) {
    const int k = std::max(lhs.max_variable(), rhs.max_variable());
    if (k > max_variables)
        throw std::invalid_argument("identity uses " + std::to_string(k) +
                                    " variables, bound is " + std::to_string(max_variables));
    std::vector<int> om = omega_table(m);
    std::vector<int> asg(static_cast<std::size_t>(k), 0);
    for (;;) {
        if (eval_with(m, om, lhs, asg) != eval_with(m, om, rhs, asg))
            return {false, asg};
        int i = k - 1;
        while (i >= 0 && asg[static_cast<std::size_t>(i)] == m.size - 1) {
            asg[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++asg[static_cast<std::size_t>(i)];
    }
    return {true, {}};
}

}
