#include "mvlogic/principles.hpp"

#include <algorithm>
#include <random>

namespace mvl {

namespace {

const Rational kZero(0);
const Rational kOne(1);

std::vector<int> var_list(int n) {
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i + 1;
    return vars;
}

Valuation constant_valuation(const Algebra& alg, int n, const TruthValue& v) {
    std::vector<std::pair<int, TruthValue>> pairs;
    for (int i = 1; i <= n; ++i) pairs.emplace_back(i, v);
    return Valuation(alg, std::move(pairs));
}

// Some non-idempotent element, or nullopt on a Godel chain. Works for
// infinite chains by probing each summand's interior.
std::optional<TruthValue> find_nonidempotent(const Algebra& alg) {
    for (int k = 0; k < static_cast<int>(alg.summands().size()); ++k) {
        const Summand& s = alg.summands()[k];
        if (s.idempotent()) continue;
        const Rational probe = s.kind == Summand::Kind::FiniteMV
                                   ? Rational(1, s.m)
                                   : Rational(1, 2);
        return TruthValue::in_summand(k, probe);
    }
    return std::nullopt;
}

Rational coord_of(const TruthValue& v) {
    if (v.is_top) return kOne;
    return v.local; // single-summand MV chain: locals are the global values
}

bool is_mv_descriptor(const Algebra& alg) {
    if (alg.summands().size() != 1) return false;
    const auto k = alg.summands().front().kind;
    return k == Summand::Kind::FiniteMV || k == Summand::Kind::RationalMV;
}

// Semantic classes of (mu-value, nu-value) pairs for two constant
// valuations: since every variable carries the same pair, closing the seed
// pairs under the pointwise operations enumerates all formulas' behaviour.
struct PairClass {
    Formula rep = Formula::bot();
    TruthValue at_mu, at_nu;
    int depth = 0;
};

std::vector<PairClass> pair_closure(const Algebra& alg, const TruthValue& mu_val,
                                    const TruthValue& nu_val, int max_depth) {
    std::vector<PairClass> classes;
    auto add = [&](Formula f, TruthValue a, TruthValue b, int depth) {
        for (const PairClass& c : classes)
            if (c.at_mu == a && c.at_nu == b) return;
        classes.push_back({std::move(f), std::move(a), std::move(b), depth});
    };
    add(Formula::bot(), alg.bottom(), alg.bottom(), 0);
    add(Formula::var(1), mu_val, nu_val, 0);
    for (int level = 1; level <= max_depth; ++level) {
        const std::size_t frozen = classes.size();
        for (std::size_t i = 0; i < frozen; ++i)
            for (std::size_t j = 0; j < frozen; ++j) {
                if (std::max(classes[i].depth, classes[j].depth) != level - 1) continue;
                const PairClass a = classes[i];
                const PairClass b = classes[j];
                add(Formula::imp(a.rep, b.rep),
                    alg.residuum_apply(a.at_mu, b.at_mu),
                    alg.residuum_apply(a.at_nu, b.at_nu), level);
                add(Formula::conj(a.rep, b.rep),
                    alg.tnorm_apply(a.at_mu, b.at_mu),
                    alg.tnorm_apply(a.at_nu, b.at_nu), level);
            }
    }
    return classes;
}

// Separation condition of each P2 variant at a value pair.
bool separates(Principle variant, const TruthValue& at_mu, const TruthValue& at_nu,
               const TruthValue& bottom) {
    switch (variant) {
    case Principle::P2: return at_mu != bottom && at_nu == bottom;
    case Principle::P2Prime: return !at_mu.is_top && at_nu.is_top;
    case Principle::P2DoublePrime: return at_mu == bottom && at_nu.is_top;
    default: throw std::invalid_argument("not a P2 variant");
    }
}

} // namespace

std::string principle_name(Principle p) {
    switch (p) {
    case Principle::P1: return "P1";
    case Principle::P2: return "P2";
    case Principle::P2Prime: return "P2'";
    case Principle::P2DoublePrime: return "P2''";
    }
    return "?";
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::HoldsExhaustively: return "HoldsExhaustively";
    case Verdict::HoldsConstructively: return "HoldsConstructively";
    case Verdict::FailsWithWitness: return "FailsWithWitness";
    case Verdict::UndecidedAtDepth: return "UndecidedAtDepth";
    }
    return "?";
}

std::string classification_name(Classification::Kind k) {
    switch (k) {
    case Classification::Kind::Classical: return "Classical";
    case Classification::Kind::GodelExtension: return "GodelExtension";
    case Classification::Kind::LukasiewiczExtension: return "LukasiewiczExtension";
    case Classification::Kind::ProductLike: return "ProductLike";
    case Classification::Kind::Other: return "Other";
    }
    return "?";
}

PrincipleReport check_p1(const Algebra& alg, int n_vars, int depth) {
    if (n_vars < 1 || depth < 1)
        throw std::invalid_argument("check_p1 requires n_vars, depth >= 1");
    PrincipleReport r;
    r.principle = Principle::P1;
    r.algebra = alg.str();
    r.n_vars = n_vars;
    r.depth = depth;

    const Formula x1 = Formula::var(1);
    const Formula x1x1 = Formula::conj(x1, x1);

    if (const auto bad = find_nonidempotent(alg)) {
        // Universal counterexample pair: the one-sets of X1 and X1&X1 agree
        // on every chain, but a non-idempotent element tells them apart.
        const Valuation v = constant_valuation(alg, n_vars, *bad);
        if (eval(alg, v, x1) == eval(alg, v, x1x1))
            throw std::logic_error("non-idempotent witness failed to distinguish");
        r.verdict = Verdict::FailsWithWitness;
        r.alpha = x1;
        r.beta = x1x1;
        r.valuation = v;
        r.notes.push_back("one-sets of X1 and X1&X1 coincide on every chain");
        return r;
    }

    if (!alg.finite()) {
        r.verdict = Verdict::HoldsConstructively;
        r.notes.push_back("every element idempotent: subalgebra of the standard "
                          "Godel chain, no grid search needed");
        return r;
    }

    const std::vector<int> vars = var_list(n_vars);
    const std::vector<Valuation> grid = all_valuations(alg, vars);
    const std::vector<SemClass> classes = semantic_classes(alg, vars, depth);
    r.pairs_checked = classes.size() * (classes.size() - 1) / 2;
    // Distinct classes are inequivalent by construction, so a repeated
    // one-set mask is exactly a counterexample pair.
    std::map<std::vector<bool>, std::size_t> by_one_set;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::vector<bool> mask(grid.size());
        for (std::size_t g = 0; g < grid.size(); ++g)
            mask[g] = classes[i].values[g].is_top;
        const auto [it, fresh] = by_one_set.emplace(std::move(mask), i);
        if (!fresh) {
            const SemClass& a = classes[it->second];
            const SemClass& b = classes[i];
            std::size_t diff = 0;
            while (a.values[diff] == b.values[diff]) ++diff;
            r.verdict = Verdict::FailsWithWitness;
            r.alpha = a.rep;
            r.beta = b.rep;
            r.valuation = grid[diff];
            return r;
        }
    }
    // Bounded search clean; the idempotency criterion upgrades it to a
    // theorem-backed verdict.
    r.verdict = Verdict::HoldsExhaustively;
    return r;
}

std::pair<Valuation, Valuation> indiscernible_pair(const Algebra& alg, int n_vars) {
    if (alg.summands().size() < 2)
        throw std::invalid_argument(
            "indiscernible_pair: single-summand MV-chain has no such pair");
    const int k = static_cast<int>(alg.summands().size()) - 1;
    const Summand& s = alg.summands()[k];
    TruthValue v, w;
    if (s.bounded() || s.kind == Summand::Kind::FiniteMV) {
        v = TruthValue::in_summand(k, kZero);
        w = TruthValue::top();
    } else {
        v = TruthValue::in_summand(k, Rational(1, 2));
        w = TruthValue::in_summand(k, Rational(1, 3));
    }
    return {constant_valuation(alg, n_vars, v), constant_valuation(alg, n_vars, w)};
}

namespace {

// Constructive side of check_p2 on an MV-chain: for one ordered valuation
// pair, the separator per variant, verified by exact evaluation.
Formula variant_separator(const Algebra& alg, Principle variant, const Valuation& mu,
                          const Valuation& nu, const std::vector<int>& vars) {
    std::vector<Rational> p, q;
    for (int var : vars) {
        p.push_back(coord_of(mu(var)));
        q.push_back(coord_of(nu(var)));
    }
    const Formula sep = separate_points(p, q).formula;
    Formula out = Formula::bot();
    switch (variant) {
    case Principle::P2: out = sep; break;
    case Principle::P2Prime: out = Formula::neg(sep); break;
    case Principle::P2DoublePrime: {
        // saturate !sep with &-powers until mu's value drops to 0
        const Formula base = Formula::neg(sep);
        Formula acc = base;
        for (int k = 1; k <= 64; ++k) {
            if (eval(alg, mu, acc) == alg.bottom() && eval(alg, nu, acc).is_top) {
                out = acc;
                break;
            }
            acc = Formula::conj(acc, base);
        }
        if (out == Formula::bot())
            throw std::logic_error("power saturation failed to reach 0");
        break;
    }
    default: throw std::invalid_argument("not a P2 variant");
    }
    if (!separates(variant, eval(alg, mu, out), eval(alg, nu, out), alg.bottom()))
        throw std::logic_error("constructed separator failed verification");
    return out;
}

} // namespace

PrincipleReport check_p2(const Algebra& alg, int n_vars, int depth, Principle variant,
                         std::uint64_t seed) {
    if (n_vars < 1)
        throw std::invalid_argument("check_p2 requires n_vars >= 1");
    if (variant == Principle::P1)
        throw std::invalid_argument("check_p2 expects a P2 variant");
    PrincipleReport r;
    r.principle = variant;
    r.algebra = alg.str();
    r.n_vars = n_vars;
    r.depth = depth;
    const std::vector<int> vars = var_list(n_vars);

    if (is_mv_descriptor(alg)) {
        std::vector<std::pair<Valuation, Valuation>> pairs;
        if (alg.finite()) {
            const std::vector<Valuation> grid = all_valuations(alg, vars);
            for (const Valuation& a : grid)
                for (const Valuation& b : grid)
                    if (!(a == b)) pairs.emplace_back(a, b);
        } else {
            // Infinite MV chain: spot-check a deterministic sample of
            // distinct rational valuation pairs.
            std::mt19937_64 rng(seed);
            while (pairs.size() < 20) {
                std::vector<std::pair<int, TruthValue>> pa, pb;
                for (int var : vars) {
                    const int da = 2 + static_cast<int>(rng() % 39);
                    const int db = 2 + static_cast<int>(rng() % 39);
                    pa.emplace_back(var, alg.parse_value(
                        Rational(static_cast<int>(rng() % da), da).str()));
                    pb.emplace_back(var, alg.parse_value(
                        Rational(static_cast<int>(rng() % db), db).str()));
                }
                Valuation a(alg, pa), b(alg, pb);
                if (!(a == b)) pairs.emplace_back(std::move(a), std::move(b));
            }
            r.notes.push_back("infinite MV chain: separators built for a sampled "
                              "pair set; existence for all pairs is constructive");
        }
        for (const auto& [mu, nu] : pairs) {
            const Formula sep = variant_separator(alg, variant, mu, nu, vars);
            if (!r.separator) {
                r.separator = sep;
                r.mu = mu;
                r.nu = nu;
            }
            ++r.pairs_checked;
        }
        r.verdict = Verdict::HoldsConstructively;
        return r;
    }

    // Non-MV chain: a zero-indiscernible valuation pair exists; exhibit it
    // and confirm by exhausting all depth-d behaviours at the pair.
    TruthValue mu_val, nu_val;
    if (alg.summands().size() >= 2) {
        const auto [m, n] = indiscernible_pair(alg, 1);
        mu_val = m(1);
        nu_val = n(1);
        r.notes.push_back("constant valuations into a non-first summand are "
                          "zero-indiscernible");
    } else {
        // Standard Godel chain: interior points are indiscernible.
        mu_val = TruthValue::in_summand(0, Rational(1, 2));
        nu_val = TruthValue::in_summand(0, Rational(1, 3));
        r.notes.push_back("interior points of the standard Godel chain are "
                          "zero-indiscernible");
    }
    if (variant == Principle::P2Prime) {
        // The all-top valuation only reaches {0, top}, and top lies in the
        // support of every summand, so the zero-indiscernibility argument
        // covers the pair (all-top, nu): nu(a) = top forces mu(a) = top.
        nu_val = mu_val;
        mu_val = TruthValue::top();
    }

    r.mu = constant_valuation(alg, n_vars, mu_val);
    r.nu = constant_valuation(alg, n_vars, nu_val);

    std::size_t examined = 0;
    for (const PairClass& c : pair_closure(alg, mu_val, nu_val, depth)) {
        ++examined;
        if (separates(variant, c.at_mu, c.at_nu, alg.bottom()))
            throw std::logic_error("separator found for a proof-backed "
                                   "indiscernible pair: " + render_formula(c.rep));
    }
    r.pairs_checked = examined;
    r.verdict = Verdict::FailsWithWitness;
    r.notes.push_back("no separator among " + std::to_string(examined) +
                      " semantic behaviours to depth " + std::to_string(depth));
    return r;
}

Classification classify_chain(const Algebra& alg) {
    Classification c;
    c.non_idempotent = find_nonidempotent(alg);

    if (alg.finite()) {
        c.decomposition = decompose_finite_chain(alg);
        for (const TruthValue& v : alg.elements())
            if (alg.negate(alg.negate(v)) != v) {
                c.negneg_witness = v;
                break;
            }
        if (alg.size() == 2) c.verdict = Classification::Kind::Classical;
        else if (!c.non_idempotent) c.verdict = Classification::Kind::GodelExtension;
        else if (!c.negneg_witness) c.verdict = Classification::Kind::LukasiewiczExtension;
        else c.verdict = Classification::Kind::Other;
    } else {
        const auto& sums = alg.summands();
        const bool product_like =
            sums.size() == 2 && sums[0] == Summand{Summand::Kind::FiniteMV, 1} &&
            sums[1].kind == Summand::Kind::CancellativeHoop;
        if (product_like) c.verdict = Classification::Kind::ProductLike;
        else if (!c.non_idempotent) c.verdict = Classification::Kind::GodelExtension;
        else if (sums.size() == 1 && sums[0].kind == Summand::Kind::RationalMV)
            c.verdict = Classification::Kind::LukasiewiczExtension;
        else c.verdict = Classification::Kind::Other;
        if (sums.size() >= 2)
            c.negneg_witness = TruthValue::in_summand(
                static_cast<int>(sums.size()) - 1,
                sums.back().finite() ? kZero : Rational(1, 2));
    }

    // Cross-validate against the principle checkers.
    const PrincipleReport p1 = check_p1(alg, 1, 3);
    const PrincipleReport p2 = check_p2(alg, 1, 3, Principle::P2);
    const bool p1_holds = p1.verdict == Verdict::HoldsExhaustively ||
                          p1.verdict == Verdict::HoldsConstructively;
    const bool p2_holds = p2.verdict == Verdict::HoldsConstructively;
    bool consistent = true;
    switch (c.verdict) {
    case Classification::Kind::Classical: consistent = p1_holds && p2_holds; break;
    case Classification::Kind::GodelExtension: consistent = p1_holds && !p2_holds; break;
    case Classification::Kind::LukasiewiczExtension:
        consistent = !p1_holds && p2_holds;
        break;
    case Classification::Kind::ProductLike:
    case Classification::Kind::Other: consistent = !p1_holds && !p2_holds; break;
    }
    if (!consistent)
        throw std::logic_error("classification of " + alg.str() +
                               " disagrees with principle checks");
    return c;
}

std::vector<CensusRow> census(int n_max, int n_vars, int depth) {
    if (n_max < 2) throw std::invalid_argument("census requires n_max >= 2");
    std::vector<CensusRow> rows;
    for (int n = 2; n <= n_max; ++n)
        for (const Algebra& alg : enumerate_finite_chains(n))
            rows.push_back({alg, classify_chain(alg), check_p1(alg, n_vars, depth),
                            check_p2(alg, n_vars, depth, Principle::P2)});
    return rows;
}

} // namespace mvl
