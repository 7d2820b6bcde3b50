#include "mvlogic/semantics.hpp"

#include <algorithm>
#include <unordered_map>

namespace mvl {

Valuation::Valuation(const Algebra& alg,
                     std::vector<std::pair<int, TruthValue>> assignment) {
    for (auto& [var, val] : assignment) {
        if (var < 1) throw std::invalid_argument("variable index must be >= 1");
        alg.require_element(val);
        assign_.emplace(var, std::move(val));
    }
}

const TruthValue& Valuation::operator()(int var) const {
    const auto it = assign_.find(var);
    if (it == assign_.end())
        throw std::domain_error("variable X" + std::to_string(var) +
                                " outside valuation support");
    return it->second;
}

std::string Valuation::str() const {
    std::string s;
    for (const auto& [var, val] : assign_) {
        if (!s.empty()) s += ", ";
        s += "X" + std::to_string(var) + "=" + val.str();
    }
    return s;
}

Valuation parse_valuation(const Algebra& alg, const std::string& text) {
    std::vector<std::pair<int, TruthValue>> pairs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        const auto a = item.find_first_not_of(" \t");
        if (a != std::string::npos) {
            item = item.substr(a, item.find_last_not_of(" \t") - a + 1);
            const auto eq = item.find('=');
            if (eq == std::string::npos || item[0] != 'X')
                throw std::invalid_argument("bad valuation item '" + item +
                                            "'; expected X<i>=<value>");
            const int var = std::stoi(item.substr(1, eq - 1));
            pairs.emplace_back(var, alg.parse_value(item.substr(eq + 1)));
        }
        pos = comma + 1;
    }
    return Valuation(alg, std::move(pairs));
}

TruthValue eval(const Algebra& alg, const Valuation& v, const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::Bot: return alg.bottom();
    case Formula::Kind::Var: return v(f.var_index());
    case Formula::Kind::Imp:
        return alg.residuum_apply(eval(alg, v, f.left()), eval(alg, v, f.right()));
    case Formula::Kind::Conj:
        return alg.tnorm_apply(eval(alg, v, f.left()), eval(alg, v, f.right()));
    }
    throw std::logic_error("unreachable");
}

std::vector<Valuation> all_valuations(const Algebra& alg, const std::vector<int>& vars) {
    const std::vector<TruthValue> elems = alg.elements(); // throws if infinite
    std::vector<int> sorted_vars = vars;
    std::sort(sorted_vars.begin(), sorted_vars.end());
    std::vector<Valuation> out;
    std::vector<std::size_t> odo(sorted_vars.size(), 0);
    while (true) {
        std::vector<std::pair<int, TruthValue>> pairs;
        for (std::size_t i = 0; i < sorted_vars.size(); ++i)
            pairs.emplace_back(sorted_vars[i], elems[odo[i]]);
        out.push_back(Valuation(alg, std::move(pairs)));
        std::size_t i = sorted_vars.size();
        while (i > 0) {
            if (++odo[i - 1] < elems.size()) break;
            odo[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        if (sorted_vars.empty()) break;
    }
    return out;
}

JudgmentResult is_tautology(const Algebra& alg, const Formula& f,
                            const std::vector<int>& vars) {
    for (const Valuation& v : all_valuations(alg, vars))
        if (!eval(alg, v, f).is_top) return {false, v};
    return {true, std::nullopt};
}

JudgmentResult are_equivalent(const Algebra& alg, const Formula& f, const Formula& g,
                              const std::vector<int>& vars) {
    for (const Valuation& v : all_valuations(alg, vars))
        if (eval(alg, v, f) != eval(alg, v, g)) return {false, v};
    return {true, std::nullopt};
}

JudgmentResult semantic_consequence(const Algebra& alg,
                                    const std::vector<Formula>& premises,
                                    const Formula& f, const std::vector<int>& vars) {
    for (const Valuation& v : all_valuations(alg, vars)) {
        const bool all_top = std::all_of(premises.begin(), premises.end(),
                                         [&](const Formula& p) {
                                             return eval(alg, v, p).is_top;
                                         });
        if (all_top && !eval(alg, v, f).is_top) return {false, v};
    }
    return {true, std::nullopt};
}

OneSet one_set(const Algebra& alg, const Formula& f, const std::vector<int>& vars) {
    OneSet out;
    out.vars = vars;
    std::sort(out.vars.begin(), out.vars.end());
    for (const Valuation& v : all_valuations(alg, vars)) {
        if (!eval(alg, v, f).is_top) continue;
        std::vector<TruthValue> tuple;
        for (int var : out.vars) tuple.push_back(v(var));
        out.tuples.insert(std::move(tuple));
    }
    return out;
}

namespace {

std::size_t hash_values(const std::vector<TruthValue>& vs) {
    std::size_t h = 14695981039346656037ull;
    for (const TruthValue& v : vs) {
        h = (h ^ (v.is_top ? 1 : std::hash<Rational>{}(v.local) + v.summand * 2654435761u)) *
            1099511628211ull;
    }
    return h;
}

} // namespace

std::vector<SemClass> semantic_classes(const Algebra& alg, const std::vector<int>& vars,
                                       int max_depth, const FormulaEnumOptions& opts) {
    const std::vector<Valuation> grid = all_valuations(alg, vars);

    std::vector<SemClass> classes;
    std::unordered_map<std::size_t, std::vector<std::size_t>> seen; // hash -> indices
    auto add = [&](Formula f, std::vector<TruthValue> values, int depth) {
        const std::size_t h = hash_values(values);
        for (std::size_t i : seen[h])
            if (classes[i].values == values) return;
        seen[h].push_back(classes.size());
        classes.push_back({std::move(f), std::move(values), depth});
    };

    auto values_of = [&](const Formula& f) {
        std::vector<TruthValue> vs;
        vs.reserve(grid.size());
        for (const Valuation& v : grid) vs.push_back(eval(alg, v, f));
        return vs;
    };

    std::vector<int> sorted_vars = vars;
    std::sort(sorted_vars.begin(), sorted_vars.end());
    add(Formula::bot(), values_of(Formula::bot()), 0);
    for (int var : sorted_vars) add(Formula::var(var), values_of(Formula::var(var)), 0);

    for (int level = 1; level <= max_depth; ++level) {
        const std::size_t frozen = classes.size();
        for (std::size_t i = 0; i < frozen; ++i)
            for (std::size_t j = 0; j < frozen; ++j) {
                if (std::max(classes[i].depth, classes[j].depth) != level - 1) continue;
                // copies: add() may reallocate the class vector
                const SemClass a = classes[i];
                const SemClass b = classes[j];
                if (opts.use_imp) {
                    std::vector<TruthValue> vs(grid.size(), TruthValue::top());
                    for (std::size_t g = 0; g < grid.size(); ++g)
                        vs[g] = alg.residuum_apply(a.values[g], b.values[g]);
                    add(Formula::imp(a.rep, b.rep), std::move(vs), level);
                }
                if (opts.use_conj) {
                    std::vector<TruthValue> vs(grid.size(), TruthValue::top());
                    for (std::size_t g = 0; g < grid.size(); ++g)
                        vs[g] = alg.tnorm_apply(a.values[g], b.values[g]);
                    add(Formula::conj(a.rep, b.rep), std::move(vs), level);
                }
            }
    }
    return classes;
}

std::vector<Formula> enumerate_formulas(const std::vector<int>& vars, int max_depth,
                                        const FormulaEnumOptions& opts) {
    if (max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
    if (opts.dedup) {
        std::vector<Formula> out;
        for (const SemClass& c : semantic_classes(*opts.dedup, vars, max_depth, opts))
            out.push_back(c.rep);
        return out;
    }

    std::vector<int> sorted_vars = vars;
    std::sort(sorted_vars.begin(), sorted_vars.end());
    std::vector<Formula> out{Formula::bot()};
    std::vector<int> depths{0};
    for (int var : sorted_vars) {
        out.push_back(Formula::var(var));
        depths.push_back(0);
    }
    for (int level = 1; level <= max_depth; ++level) {
        const std::size_t frozen = out.size();
        for (std::size_t i = 0; i < frozen; ++i)
            for (std::size_t j = 0; j < frozen; ++j) {
                if (std::max(depths[i], depths[j]) != level - 1) continue;
                if (opts.use_imp) {
                    out.push_back(Formula::imp(out[i], out[j]));
                    depths.push_back(level);
                }
                if (opts.use_conj) {
                    out.push_back(Formula::conj(out[i], out[j]));
                    depths.push_back(level);
                }
            }
    }
    return out;
}

} // namespace mvl
