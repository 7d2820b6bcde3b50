#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "mvlogic/algebra.hpp"
#include "mvlogic/formula.hpp"

namespace mvl {

// Finite-support assignment of truth values to variables.
class Valuation {
public:
    Valuation() = default;
    Valuation(const Algebra& alg, std::vector<std::pair<int, TruthValue>> assignment);

    const TruthValue& operator()(int var) const; // throws on unsupported variable
    bool supports(int var) const { return assign_.count(var) != 0; }
    const std::map<int, TruthValue>& assignment() const { return assign_; }

    std::string str() const; // CLI literal syntax: X1=1/2, X2=top

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.assign_ == b.assign_;
    }

private:
    std::map<int, TruthValue> assign_;
};

// Parses the CLI literal syntax `X1=1/2, X2=top`.
Valuation parse_valuation(const Algebra& alg, const std::string& text);

TruthValue eval(const Algebra& alg, const Valuation& v, const Formula& f);

// All |alg|^|vars| valuations over a finite chain, lexicographic in
// (variable, element order); the first variable varies slowest.
std::vector<Valuation> all_valuations(const Algebra& alg, const std::vector<int>& vars);

struct JudgmentResult {
    bool holds = false;
    std::optional<Valuation> witness; // counter-valuation when !holds
};

JudgmentResult is_tautology(const Algebra& alg, const Formula& f,
                            const std::vector<int>& vars);
JudgmentResult are_equivalent(const Algebra& alg, const Formula& f, const Formula& g,
                              const std::vector<int>& vars);
JudgmentResult semantic_consequence(const Algebra& alg,
                                    const std::vector<Formula>& premises,
                                    const Formula& f, const std::vector<int>& vars);

// Grid valuations where the formula takes the top value, as assignment
// tuples in grid order.
struct OneSet {
    std::vector<int> vars;
    std::set<std::vector<TruthValue>> tuples;

    friend bool operator==(const OneSet& a, const OneSet& b) {
        return a.vars == b.vars && a.tuples == b.tuples;
    }
};

OneSet one_set(const Algebra& alg, const Formula& f, const std::vector<int>& vars);

// Every core formula over the given variables with depth <= max_depth, each
// once, in a deterministic order. With a dedup algebra, only the first
// representative of each semantic equivalence class on that algebra's full
// grid is kept.
struct FormulaEnumOptions {
    bool use_imp = true;
    bool use_conj = true;
    std::optional<Algebra> dedup;
};

std::vector<Formula> enumerate_formulas(const std::vector<int>& vars, int max_depth,
                                        const FormulaEnumOptions& opts = {});

// Semantic equivalence classes over a finite chain: one representative
// formula per distinct grid value vector, built level by level up to the
// depth bound. Used as the search substrate of the principles module.
struct SemClass {
    Formula rep = Formula::bot();
    std::vector<TruthValue> values; // one entry per grid valuation
    int depth = 0;
};

std::vector<SemClass> semantic_classes(const Algebra& alg, const std::vector<int>& vars,
                                       int max_depth,
                                       const FormulaEnumOptions& opts = {});

} // namespace mvl
