#pragma once

#include <vector>

#include "mvlogic/formula.hpp"
#include "mvlogic/rational.hpp"

namespace mvl {

// Exact piecewise-linear function [0,1] -> [0,1], the continuous
// interpolant of its breakpoints. Canonical form: x strictly increasing,
// first x = 0, last x = 1, no collinear interior breakpoints.
class PWLFunction {
public:
    struct Point { Rational x, y; };

    static PWLFunction identity();
    explicit PWLFunction(std::vector<Point> breakpoints);

    const std::vector<Point>& breakpoints() const { return pts_; }

    Rational operator()(const Rational& x) const;
    bool nondecreasing() const;

    // f |-> min(1, n f)
    PWLFunction truncated_multiple(int n) const;
    // f |-> max(0, n f - (n-1))
    PWLFunction truncated_power(int n) const;

    friend bool operator==(const PWLFunction& a, const PWLFunction& b) {
        return a.pts_.size() == b.pts_.size() &&
               std::equal(a.pts_.begin(), a.pts_.end(), b.pts_.begin(),
                          [](const Point& p, const Point& q) {
                              return p.x == q.x && p.y == q.y;
                          });
    }

    std::string str() const; // JSON array of [x_num, x_den, y_num, y_den]

private:
    PWLFunction() = default;
    void canonicalize();
    std::vector<Point> pts_;
};

// Exact PWL of the literal's one-variable term function over the standard
// MV-algebra, steps applied innermost-first.
PWLFunction literal_to_pwl(const BasicLiteral& lit);

// Preimage of 0 of a nondecreasing PWL: empty, the origin, or [0, t].
struct ZeroSet {
    enum class Kind { Empty, Origin, Interval };
    Kind kind = Kind::Empty;
    Rational t; // Interval only

    friend bool operator==(const ZeroSet& a, const ZeroSet& b) {
        return a.kind == b.kind && (a.kind != Kind::Interval || a.t == b.t);
    }
};

ZeroSet pwl_zero_set(const PWLFunction& f); // throws on non-monotone input

// A basic literal whose term function is nondecreasing, maps 1 to 1, and
// vanishes exactly on [0, h/k]. Requires 0 < h < k coprime.
BasicLiteral threshold_literal(int h, int k, int step_bound = 16);

// Separating formula for two distinct rational points of [0,1]^n: value 0
// at q and > 0 at p over the standard MV-algebra. Built by a doubling
// descent out of Mult(2)/Pow(2) steps; ascending literal when some
// coordinate has q(i) < p(i), negated literal otherwise.
struct SeparationResult {
    Formula formula = Formula::bot();
    BasicLiteral literal;  // the underlying basic literal (pre-negation)
    bool negated = false;
    int var_index = 1;
    std::size_t raw_steps = 0;    // doubling steps before canonical merging
    Rational initial_gap;         // |image interval| at descent start
    Rational b_at_straddle;       // upper image when the straddle is reached
};

SeparationResult separate_points(const std::vector<Rational>& p,
                                 const std::vector<Rational>& q);

} // namespace mvl
