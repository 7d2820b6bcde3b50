#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvlogic/mcnaughton.hpp"
#include "mvlogic/semantics.hpp"

namespace mvl {

enum class Principle { P1, P2, P2Prime, P2DoublePrime };
enum class Verdict { HoldsExhaustively, HoldsConstructively, FailsWithWitness,
                     UndecidedAtDepth };

std::string principle_name(Principle p);
std::string verdict_name(Verdict v);

// Outcome of a principle check on one algebra. The witness payload depends
// on the principle: a formula pair plus a distinguishing valuation for P1,
// a zero-indiscernible valuation pair for the P2 family. For constructive
// P2 verdicts `separator` holds the separating formula of the first pair.
struct PrincipleReport {
    Principle principle = Principle::P1;
    std::string algebra;
    int n_vars = 1;
    int depth = 3;
    Verdict verdict = Verdict::UndecidedAtDepth;

    std::optional<Formula> alpha, beta;   // P1 failure pair
    std::optional<Valuation> valuation;   // P1: distinguishing valuation
    std::optional<Valuation> mu, nu;      // P2 family: valuation pair
    std::optional<Formula> separator;
    std::size_t pairs_checked = 0;
    std::vector<std::string> notes;
};

// Structural classification of a chain, with the witnesses backing it.
struct Classification {
    enum class Kind { Classical, GodelExtension, LukasiewiczExtension, ProductLike,
                      Other };
    Kind verdict = Kind::Other;
    std::optional<TruthValue> non_idempotent;   // refutes the Godel criterion
    std::optional<TruthValue> negneg_witness;   // a with !!a != a
    std::vector<int> decomposition;             // finite chains
};

std::string classification_name(Classification::Kind k);

// Equal one-sets imply equivalence. Finite chains: semantic search over n
// variables to depth d, with the universal pair (X1, X1&X1) tried first on
// non-idempotent chains. Infinite chains take the fixed-pair path.
PrincipleReport check_p1(const Algebra& alg, int n_vars, int depth);

// Distinct valuations admit a separating formula. MV-chains get a
// constructed separator per valuation pair; everything else fails with a
// zero-indiscernible pair, confirmed by an exhaustive depth-d search.
PrincipleReport check_p2(const Algebra& alg, int n_vars, int depth,
                         Principle variant = Principle::P2,
                         std::uint64_t seed = 12345);

// Constant valuation pair into a non-first summand; zero-indiscernible on
// any multi-summand chain.
std::pair<Valuation, Valuation> indiscernible_pair(const Algebra& alg, int n_vars);

Classification classify_chain(const Algebra& alg);

struct CensusRow {
    Algebra alg;
    Classification classification;
    PrincipleReport p1;
    PrincipleReport p2;
};

// Classification and both principle reports for every chain of size
// 2..n_max, with the classify/check cross-validation asserted.
std::vector<CensusRow> census(int n_max, int n_vars, int depth);

} // namespace mvl
