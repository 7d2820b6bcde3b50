#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvlogic/rational.hpp"

namespace mvl {

// Ordinal-sum summand kinds. Each summand is a totally ordered basic hoop
// whose top is the shared top of the whole chain; the listed locals are its
// non-top elements.
//   FiniteMV(m)       Wajsberg hoop on {0/m,...,m/m}; locals j/m, 0 <= j < m
//   RationalMV        rationals of [0,1] under the Lukasiewicz operations
//   RationalGodel     rationals of [0,1] under min (the bounded GQ algebra)
//   RationalGodelHoop rationals of (0,1] under min, as a hoop
//   CancellativeHoop  rationals of (0,1] under multiplication
struct Summand {
    enum class Kind { FiniteMV, RationalMV, RationalGodel, RationalGodelHoop,
                      CancellativeHoop };
    Kind kind;
    int m = 0; // FiniteMV only

    bool bounded() const {
        return kind == Kind::FiniteMV || kind == Kind::RationalMV ||
               kind == Kind::RationalGodel;
    }
    bool finite() const { return kind == Kind::FiniteMV; }
    bool idempotent() const {
        return (kind == Kind::FiniteMV && m == 1) || kind == Kind::RationalGodel ||
               kind == Kind::RationalGodelHoop;
    }
    bool contains_local(const Rational& v) const;
    std::string str() const;

    friend bool operator==(const Summand& a, const Summand& b) {
        return a.kind == b.kind && a.m == b.m;
    }
};

// Element of a chain: the shared top, or a summand-local value.
struct TruthValue {
    bool is_top = false;
    int summand = 0;
    Rational local;

    static TruthValue top() { TruthValue t; t.is_top = true; return t; }
    static TruthValue in_summand(int k, Rational v) {
        TruthValue t; t.summand = k; t.local = std::move(v); return t;
    }

    friend bool operator==(const TruthValue& a, const TruthValue& b) {
        if (a.is_top || b.is_top) return a.is_top == b.is_top;
        return a.summand == b.summand && a.local == b.local;
    }
    friend bool operator!=(const TruthValue& a, const TruthValue& b) { return !(a == b); }
    friend bool operator<(const TruthValue& a, const TruthValue& b) {
        if (a.is_top) return false;
        if (b.is_top) return true;
        if (a.summand != b.summand) return a.summand < b.summand;
        return a.local < b.local;
    }
    friend bool operator<=(const TruthValue& a, const TruthValue& b) { return !(b < a); }

    std::string str() const;
};

// Raised when a grid/enumeration operation is asked of an infinite chain.
struct InfiniteAlgebraError : std::domain_error {
    using std::domain_error::domain_error;
};

// Cayley-style presentation of a finite chain: elements are 0..n-1 in
// increasing order, with 0 the bottom and n-1 the top.
struct OperationTable {
    int n = 0;
    std::vector<int> conj; // n*n, row-major
    std::vector<int> imp;

    int tnorm(int a, int b) const { return conj[a * n + b]; }
    int residuum(int a, int b) const { return imp[a * n + b]; }
};

// A descriptor-built BL-chain: a non-empty ordinal sum of summands, the
// first of which is bounded. All operations are exact.
class Algebra {
public:
    explicit Algebra(std::vector<Summand> summands);

    // Descriptor grammar: `MV[m]`, `MVQ`, `GQ`, `GHQ`, `PQ`, `2`, `C`,
    // joined bottom-to-top with `(+)`. `PQ` expands to `2 (+) C`.
    static Algebra parse(const std::string& descriptor);

    const std::vector<Summand>& summands() const { return summands_; }
    std::string str() const;

    bool finite() const;
    // Carrier size of a finite chain: 1 + sum of summand sizes.
    int size() const;

    TruthValue bottom() const;
    bool contains(const TruthValue& v) const;
    void require_element(const TruthValue& v) const; // throws std::domain_error

    TruthValue tnorm_apply(const TruthValue& a, const TruthValue& b) const;
    TruthValue residuum_apply(const TruthValue& a, const TruthValue& b) const;
    TruthValue negate(const TruthValue& a) const; // a -> bot

    // Finite chains only.
    std::vector<TruthValue> elements() const;
    std::vector<TruthValue> idempotents() const;
    bool is_mv_chain() const;
    bool is_godel_chain() const;
    OperationTable to_table() const;

    // Parses `bot`, `top`, `p/q`, or `k:p/q`. An unqualified p/q in (0,1)
    // is accepted when exactly one summand admits it as a local value.
    TruthValue parse_value(const std::string& text) const;

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.summands_ == b.summands_;
    }

private:
    std::vector<Summand> summands_;
};

// All ordinal sums of finite MV summands with carrier size n; 2^(n-2) chains.
std::vector<Algebra> enumerate_finite_chains(int n);

// MV-chain sizes [m1,...,mr] with alg isomorphic to MV[m1] (+) ... (+) MV[mr].
std::vector<int> decompose_finite_chain(const Algebra& alg);

// Reconstructs the summand sizes of a raw table by cutting the chain at its
// nontrivial idempotents; rejects tables violating the BL-chain axioms with
// the failed law and a witness triple in the message.
std::vector<int> decompose_finite_chain(const OperationTable& table);

// Smallest subset containing seed plus bottom and top, closed under * and ->.
std::vector<TruthValue> subalgebra_generated(const Algebra& alg,
                                             const std::vector<TruthValue>& seed);

} // namespace mvl
