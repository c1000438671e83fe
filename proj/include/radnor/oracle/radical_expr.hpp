#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radnor/heights/radical.hpp"

namespace radnor {

/// coefficient * radical, or a bare rational when radical is empty.
struct Term {
    Rational coefficient{1};
    std::optional<RadicalRational> radical;

    bool is_zero() const { return coefficient == 0; }

    /// The positive value as a single canonical radical: (c^D b)^(1/D). Empty for 0.
    std::optional<RadicalRational> as_radical() const {
        if (is_zero()) {
            return std::nullopt;
        }
        if (!radical) {
            return RadicalRational(coefficient, 1);
        }
        unsigned long d = radical->root_degree();
        return RadicalRational(pow(coefficient, d) * radical->base(), d);
    }

    std::string to_string() const {
        if (!radical) {
            return radnor::to_string(coefficient);
        }
        std::string r = radical->root_degree() == 1 ? radical->to_string()
                                                    : "(" + radnor::to_string(radical->base()) + ")^(1/" +
                                                          std::to_string(radical->root_degree()) + ")";
        return coefficient == 1 ? r : radnor::to_string(coefficient) + "*" + r;
    }

    friend bool operator==(const Term&, const Term&) = default;
};

enum class ExprOp { Sum, Product };

/// term, term + term, or term * term.
struct RadicalExpr {
    Term lhs;
    std::optional<ExprOp> op;
    Term rhs;

    static RadicalExpr single(Term t) { return {std::move(t), std::nullopt, Term{}}; }
    static RadicalExpr sum(Term a, Term b) { return {std::move(a), ExprOp::Sum, std::move(b)}; }
    static RadicalExpr product(Term a, Term b) { return {std::move(a), ExprOp::Product, std::move(b)}; }

    /// Upper bound on the number of conjugates: product of the leaf root degrees.
    unsigned long conjugate_bound() const {
        auto deg = [](const Term& t) { return t.radical ? t.radical->root_degree() : 1UL; };
        return op ? deg(lhs) * deg(rhs) : deg(lhs);
    }

    std::string to_string() const {
        if (!op) {
            return lhs.to_string();
        }
        return lhs.to_string() + (*op == ExprOp::Sum ? " + " : " * ") + rhs.to_string();
    }

    friend bool operator==(const RadicalExpr&, const RadicalExpr&) = default;
};

namespace detail {

struct ExprAtom {
    std::string_view text;
    bool radical = false;
};

inline Term parse_atom_term(const ExprAtom& atom) {
    if (atom.radical) {
        return Term{Rational(1), parse_radical(atom.text)};
    }
    if (atom.text.find('.') != std::string_view::npos) {
        throw ParseError("expression rationals are m or m/n: '" + std::string(atom.text) + "'");
    }
    Rational q = parse_rational(atom.text);
    if (q < 0) {
        throw ParseError("expression rationals are non-negative: '" + std::string(atom.text) + "'");
    }
    return Term{q, std::nullopt};
}

} // namespace detail

/// expr ::= term (("+" | "*") term)?
/// term ::= rational | radical | rational "*" radical
inline RadicalExpr parse_expr(std::string_view text) {
    std::vector<detail::ExprAtom> atoms;
    std::vector<char> ops;
    int depth = 0;
    std::size_t start = 0;
    auto push = [&](std::size_t end) {
        auto piece = detail::trim(text.substr(start, end - start));
        if (piece.empty()) {
            throw ParseError("empty operand in '" + std::string(text) + "'");
        }
        atoms.push_back({piece, piece.find('^') != std::string_view::npos});
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') {
            ++depth;
        } else if (ch == ')') {
            if (--depth < 0) {
                throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
            }
        } else if (depth == 0 && (ch == '+' || ch == '*')) {
            push(i);
            ops.push_back(ch);
            start = i + 1;
        }
    }
    if (depth != 0) {
        throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    }
    push(text.size());

    std::vector<Term> terms;
    std::vector<char> term_ops;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        Term t = detail::parse_atom_term(atoms[i]);
        if (!atoms[i].radical && i + 1 < atoms.size() && ops[i] == '*' && atoms[i + 1].radical) {
            Term r = detail::parse_atom_term(atoms[i + 1]);
            t.radical = r.radical;
            ++i;
        }
        terms.push_back(std::move(t));
        if (i + 1 < atoms.size()) {
            term_ops.push_back(ops[i]);
        }
    }
    if (terms.size() > 2) {
        throw ParseError("at most two terms: '" + std::string(text) + "'");
    }
    if (terms.size() == 1) {
        return RadicalExpr::single(std::move(terms[0]));
    }
    return term_ops[0] == '+' ? RadicalExpr::sum(std::move(terms[0]), std::move(terms[1]))
                              : RadicalExpr::product(std::move(terms[0]), std::move(terms[1]));
}

} // namespace radnor
