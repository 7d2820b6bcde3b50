#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvl {

// Core AST of the BL propositional language: bot, variables, -> and &.
// Every surface connective (!, /\, \/, <->, (+), n*phi, phi^n, top) is
// desugared to these four node kinds at construction time.
class Formula {
public:
    enum class Kind { Bot, Var, Imp, Conj };

    static Formula bot();
    static Formula var(int index); // index >= 1
    static Formula imp(Formula lhs, Formula rhs);
    static Formula conj(Formula lhs, Formula rhs);

    // Derived connectives, expanded on the spot.
    static Formula top();                       // bot -> bot
    static Formula neg(Formula f);              // f -> bot
    static Formula wedge(Formula a, Formula b); // a & (a -> b)
    static Formula vee(Formula a, Formula b);   // ((a->b)->b) /\ ((b->a)->a)
    static Formula iff(Formula a, Formula b);   // (a->b) & (b->a)
    static Formula oplus(Formula a, Formula b); // !(!a & !b)
    static Formula multiple(int n, Formula f);  // f (+) ... (+) f, n copies
    static Formula power(int n, Formula f);     // f & ... & f, n copies

    Kind kind() const { return node_->kind; }
    int var_index() const { return node_->var; }
    Formula left() const { return Formula(node_->lhs); }
    Formula right() const { return Formula(node_->rhs); }

    int depth() const;
    std::set<int> free_variables() const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
    // Structural order, usable as a map key.
    friend bool operator<(const Formula& a, const Formula& b);

private:
    struct Node {
        Kind kind;
        int var = 0;
        std::shared_ptr<const Node> lhs, rhs;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(position) +
                             ": " + what),
          pos(position) {}
    std::size_t pos;
};

// Parses the ASCII surface grammar. Precedence, tight to loose:
//   ^  !  *  &  (+)  /\  \/  ->  <->
// with -> right-associative and the rest left-associative.
Formula parse_formula(const std::string& text);

// Fully parenthesized rendering of the core AST; re-parses to the same tree.
std::string render_formula(const Formula& f);

// One-variable terms built from a variable by alternately taking
// (+)-multiples and &-powers; their term functions on [0,1] are the
// piecewise-linear maps handled by the mcnaughton module.
struct BasicLiteral {
    enum class StepKind { Mult, Pow };
    struct Step {
        StepKind kind;
        int count; // Mult: >= 1, Pow: > 1 (Pow 1 is accepted and is a no-op)
    };

    int var_index = 1;
    std::vector<Step> steps; // applied innermost-first

    // Merges adjacent same-kind steps and drops count-1 no-ops.
    BasicLiteral canonical() const;

    // Paper-style notation (n1,n2,...,nu)Xi, alternating Mult/Pow with a
    // Mult in first position (a leading 1 is inserted when needed).
    std::string str() const;
};

Formula expand_basic_literal(const BasicLiteral& lit);

} // namespace mvl
