#include "mvlogic/mcnaughton.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace mvl {

namespace {
const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);
}

PWLFunction PWLFunction::identity() {
    return PWLFunction({{kZero, kZero}, {kOne, kOne}});
}

PWLFunction::PWLFunction(std::vector<Point> breakpoints) : pts_(std::move(breakpoints)) {
    if (pts_.size() < 2 || pts_.front().x != kZero || pts_.back().x != kOne)
        throw std::invalid_argument("PWL breakpoints must span [0,1]");
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (i > 0 && !(pts_[i - 1].x < pts_[i].x))
            throw std::invalid_argument("PWL breakpoints must be strictly increasing in x");
        if (pts_[i].y < kZero || kOne < pts_[i].y)
            throw std::invalid_argument("PWL values must lie in [0,1]");
    }
    canonicalize();
}

void PWLFunction::canonicalize() {
    std::vector<Point> out;
    for (const Point& p : pts_) {
        while (out.size() >= 2) {
            const Point& a = out[out.size() - 2];
            const Point& b = out.back();
            // drop b if a,b,p are collinear
            if ((b.y - a.y) * (p.x - b.x) == (p.y - b.y) * (b.x - a.x))
                out.pop_back();
            else
                break;
        }
        out.push_back(p);
    }
    pts_ = std::move(out);
}

Rational PWLFunction::operator()(const Rational& x) const {
    if (x < kZero || kOne < x)
        throw std::domain_error("PWL argument outside [0,1]");
    std::size_t i = 1;
    while (pts_[i].x < x) ++i;
    const Point &a = pts_[i - 1], &b = pts_[i];
    if (x == b.x) return b.y;
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

bool PWLFunction::nondecreasing() const {
    for (std::size_t i = 1; i < pts_.size(); ++i)
        if (pts_[i].y < pts_[i - 1].y) return false;
    return true;
}

namespace {

// Applies y |-> clamp(n*y + shift) with the given clamp bound, inserting a
// breakpoint wherever a segment crosses the clamp level.
PWLFunction transform(const std::vector<PWLFunction::Point>& pts, int n,
                      const Rational& shift, bool clamp_above) {
    const Rational scale(n);
    // pre-image level at which the affine map hits the clamp bound
    const Rational level = ((clamp_above ? kOne : kZero) - shift) / scale;
    auto mapped = [&](const Rational& y) {
        const Rational z = scale * y + shift;
        if (clamp_above) return min(kOne, z);
        return max(kZero, z);
    };

    std::vector<PWLFunction::Point> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) {
            const auto &a = pts[i - 1], &b = pts[i];
            const bool crosses = (a.y < level && level < b.y) ||
                                 (b.y < level && level < a.y);
            if (crosses) {
                const Rational xc = a.x + (b.x - a.x) * (level - a.y) / (b.y - a.y);
                out.push_back({xc, mapped(level)});
            }
        }
        out.push_back({pts[i].x, mapped(pts[i].y)});
    }
    return PWLFunction(std::move(out));
}

} // namespace

PWLFunction PWLFunction::truncated_multiple(int n) const {
    if (n < 1) throw std::invalid_argument("multiple count must be >= 1");
    return transform(pts_, n, kZero, /*clamp_above=*/true);
}

PWLFunction PWLFunction::truncated_power(int n) const {
    if (n < 1) throw std::invalid_argument("power count must be >= 1");
    return transform(pts_, n, Rational(1 - n), /*clamp_above=*/false);
}

std::string PWLFunction::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        if (i) os << ",";
        os << "[" << pts_[i].x.num() << "," << pts_[i].x.den() << ","
           << pts_[i].y.num() << "," << pts_[i].y.den() << "]";
    }
    os << "]";
    return os.str();
}

PWLFunction literal_to_pwl(const BasicLiteral& lit) {
    PWLFunction f = PWLFunction::identity();
    for (const BasicLiteral::Step& s : lit.steps)
        f = s.kind == BasicLiteral::StepKind::Mult ? f.truncated_multiple(s.count)
                                                   : f.truncated_power(s.count);
    return f;
}

ZeroSet pwl_zero_set(const PWLFunction& f) {
    if (!f.nondecreasing())
        throw std::domain_error("pwl_zero_set requires a nondecreasing function");
    const auto& pts = f.breakpoints();
    if (pts.front().y > kZero) return {ZeroSet::Kind::Empty, kZero};
    Rational t = kZero;
    for (const auto& p : pts)
        if (p.y == kZero) t = p.x;
    if (t == kZero) return {ZeroSet::Kind::Origin, kZero};
    return {ZeroSet::Kind::Interval, t};
}

BasicLiteral threshold_literal(int h, int k, int step_bound) {
    if (!(0 < h && h < k))
        throw std::invalid_argument("threshold h/k must lie in (0,1)");
    if (std::gcd(h, k) != 1)
        throw std::invalid_argument("threshold h/k must be in lowest terms");
    if (step_bound < std::max(2, k))
        throw std::invalid_argument("step bound too small for denominator");

    // Search over the image a/k of the target point under the literal built
    // so far. Mult(n) sends a to n*a when n*a < k; Pow(n) to n*a-(n-1)*k when
    // that is positive. The literal is closed by Pow(m) once a/k = (m-1)/m.
    auto closing_power = [&](int a) -> int {
        for (int m = 2; m <= step_bound; ++m)
            if (static_cast<long long>(a) * m == static_cast<long long>(m - 1) * k)
                return m;
        return 0;
    };

    std::vector<int> prev(k, -1);
    std::vector<BasicLiteral::Step> via(k);
    std::vector<bool> seen(k, false);
    std::deque<int> queue{h};
    seen[h] = true;
    int goal = closing_power(h) ? h : -1;
    while (!queue.empty() && goal < 0) {
        const int a = queue.front();
        queue.pop_front();
        for (int n = 2; n <= step_bound && goal < 0; ++n) {
            const long long mult = static_cast<long long>(n) * a;
            const long long pow = mult - static_cast<long long>(n - 1) * k;
            for (const auto& [next, kind] :
                 {std::pair(mult, BasicLiteral::StepKind::Mult),
                  std::pair(pow, BasicLiteral::StepKind::Pow)}) {
                if (next <= 0 || next >= k || seen[next]) continue;
                const int s = static_cast<int>(next);
                seen[s] = true;
                prev[s] = a;
                via[s] = {kind, n};
                queue.push_back(s);
                if (closing_power(s)) { goal = s; break; }
            }
        }
    }
    if (goal < 0)
        throw std::runtime_error("no literal found for threshold " + std::to_string(h) +
                                 "/" + std::to_string(k) + " within step bound");

    BasicLiteral lit;
    std::vector<BasicLiteral::Step> steps;
    for (int a = goal; a != h; a = prev[a]) steps.push_back(via[a]);
    std::reverse(steps.begin(), steps.end());
    steps.push_back({BasicLiteral::StepKind::Pow, closing_power(goal)});
    lit.steps = std::move(steps);
    lit = lit.canonical();

    const ZeroSet z = pwl_zero_set(literal_to_pwl(lit));
    if (!(z == ZeroSet{ZeroSet::Kind::Interval, Rational(h, k)}))
        throw std::logic_error("threshold literal failed post-hoc verification");
    return lit;
}

namespace {

struct Descent {
    std::vector<BasicLiteral::Step> steps;
    Rational initial_gap;
    Rational b_at_straddle;
};

// Doubling descent: images (a,b) of two points with a < b; terminates with
// a mapped to 0 and b to a positive value. Every step is Mult(2) or Pow(2).
Descent descend(Rational a, Rational b) {
    Descent d;
    d.initial_gap = b - a;
    while (true) {
        if (kHalf < b && a <= kHalf) {
            d.b_at_straddle = b;
            d.steps.push_back({BasicLiteral::StepKind::Pow, 2});
            return d;
        }
        if (b <= kHalf) {
            d.steps.push_back({BasicLiteral::StepKind::Mult, 2});
            a = a + a;
            b = b + b;
        } else { // a > 1/2
            d.steps.push_back({BasicLiteral::StepKind::Pow, 2});
            a = a + a - kOne;
            b = b + b - kOne;
        }
    }
}

} // namespace

SeparationResult separate_points(const std::vector<Rational>& p,
                                 const std::vector<Rational>& q) {
    if (p.size() != q.size() || p.empty())
        throw std::invalid_argument("points must have equal positive dimension");
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < kZero || kOne < p[i] || q[i] < kZero || kOne < q[i])
            throw std::domain_error("coordinates must lie in [0,1]");
    if (p == q) throw std::invalid_argument("points must be distinct");

    SeparationResult r;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (q[i] < p[i]) {
            const Descent d = descend(q[i], p[i]);
            r.literal.var_index = static_cast<int>(i) + 1;
            r.literal.steps = d.steps;
            r.literal = r.literal.canonical();
            r.negated = false;
            r.var_index = r.literal.var_index;
            r.raw_steps = d.steps.size();
            r.initial_gap = d.initial_gap;
            r.b_at_straddle = d.b_at_straddle;
            r.formula = expand_basic_literal(r.literal);
            return r;
        }
    }
    // p <= q coordinatewise; use the reflected descent and negate. Under
    // y = 1-x the two doubling maps swap roles.
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] < q[j]) {
            Descent d = descend(kOne - q[j], kOne - p[j]);
            for (auto& s : d.steps)
                s.kind = s.kind == BasicLiteral::StepKind::Mult
                             ? BasicLiteral::StepKind::Pow
                             : BasicLiteral::StepKind::Mult;
            r.literal.var_index = static_cast<int>(j) + 1;
            r.literal.steps = d.steps;
            r.literal = r.literal.canonical();
            r.negated = true;
            r.var_index = r.literal.var_index;
            r.raw_steps = d.steps.size();
            r.initial_gap = d.initial_gap;
            r.b_at_straddle = d.b_at_straddle;
            r.formula = Formula::neg(expand_basic_literal(r.literal));
            return r;
        }
    }
    throw std::logic_error("unreachable: distinct points must differ somewhere");
}

} // namespace mvl
