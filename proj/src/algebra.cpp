#include "mvlogic/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mvl {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}

bool Summand::contains_local(const Rational& v) const {
    switch (kind) {
    case Kind::FiniteMV:
        return kZero <= v && v < kOne && (v.num() * static_cast<std::int64_t>(m)) % v.den() == 0;
    case Kind::RationalMV:
    case Kind::RationalGodel:
        return kZero <= v && v < kOne;
    case Kind::RationalGodelHoop:
    case Kind::CancellativeHoop:
        return kZero < v && v < kOne;
    }
    return false;
}

std::string Summand::str() const {
    switch (kind) {
    case Kind::FiniteMV: return "MV[" + std::to_string(m) + "]";
    case Kind::RationalMV: return "MVQ";
    case Kind::RationalGodel: return "GQ";
    case Kind::RationalGodelHoop: return "GHQ";
    case Kind::CancellativeHoop: return "C";
    }
    return "?";
}

std::string TruthValue::str() const {
    if (is_top) return "top";
    if (summand == 0) return local.str();
    return std::to_string(summand) + ":" + local.str();
}

Algebra::Algebra(std::vector<Summand> summands) : summands_(std::move(summands)) {
    if (summands_.empty())
        throw std::invalid_argument("algebra needs at least one summand");
    if (!summands_.front().bounded())
        throw std::invalid_argument("first summand must be bounded below");
    for (const Summand& s : summands_)
        if (s.kind == Summand::Kind::FiniteMV && s.m < 1)
            throw std::invalid_argument("MV[m] requires m >= 1");
}

Algebra Algebra::parse(const std::string& descriptor) {
    std::vector<Summand> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = descriptor.find("(+)", pos);
        std::string tok = descriptor.substr(pos, next == std::string::npos
                                                     ? std::string::npos
                                                     : next - pos);
        const auto a = tok.find_first_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("empty summand in descriptor '" + descriptor + "'");
        tok = tok.substr(a, tok.find_last_not_of(" \t") - a + 1);

        if (tok == "MVQ") out.push_back({Summand::Kind::RationalMV});
        else if (tok == "GQ") out.push_back({Summand::Kind::RationalGodel});
        else if (tok == "GHQ") out.push_back({Summand::Kind::RationalGodelHoop});
        else if (tok == "C") out.push_back({Summand::Kind::CancellativeHoop});
        else if (tok == "2") out.push_back({Summand::Kind::FiniteMV, 1});
        else if (tok == "PQ") {
            out.push_back({Summand::Kind::FiniteMV, 1});
            out.push_back({Summand::Kind::CancellativeHoop});
        } else if (tok.rfind("MV[", 0) == 0 && tok.back() == ']') {
            const std::string digits = tok.substr(3, tok.size() - 4);
            if (digits.empty() ||
                digits.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad summand '" + tok + "'");
            out.push_back({Summand::Kind::FiniteMV, std::stoi(digits)});
        } else {
            throw std::invalid_argument("unknown summand '" + tok + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return Algebra(std::move(out));
}

std::string Algebra::str() const {
    std::string s;
    for (const Summand& sm : summands_) {
        if (!s.empty()) s += " (+) ";
        s += sm.str();
    }
    return s;
}

bool Algebra::finite() const {
    return std::all_of(summands_.begin(), summands_.end(),
                       [](const Summand& s) { return s.finite(); });
}

int Algebra::size() const {
    if (!finite()) throw InfiniteAlgebraError("size of infinite chain");
    int n = 1;
    for (const Summand& s : summands_) n += s.m;
    return n;
}

TruthValue Algebra::bottom() const { return TruthValue::in_summand(0, kZero); }

bool Algebra::contains(const TruthValue& v) const {
    if (v.is_top) return true;
    if (v.summand < 0 || v.summand >= static_cast<int>(summands_.size())) return false;
    return summands_[v.summand].contains_local(v.local);
}

void Algebra::require_element(const TruthValue& v) const {
    if (!contains(v))
        throw std::domain_error("value " + v.str() + " not in carrier of " + str());
}

TruthValue Algebra::tnorm_apply(const TruthValue& a, const TruthValue& b) const {
    require_element(a);
    require_element(b);
    if (a.is_top) return b;
    if (b.is_top) return a;
    if (a.summand != b.summand) return std::min(a, b); // lower-summand absorption
    const Rational &x = a.local, &y = b.local;
    switch (summands_[a.summand].kind) {
    case Summand::Kind::FiniteMV:
    case Summand::Kind::RationalMV:
        return TruthValue::in_summand(a.summand, max(kZero, x + y - kOne));
    case Summand::Kind::RationalGodel:
    case Summand::Kind::RationalGodelHoop:
        return TruthValue::in_summand(a.summand, min(x, y));
    case Summand::Kind::CancellativeHoop:
        return TruthValue::in_summand(a.summand, x * y);
    }
    throw std::logic_error("unreachable");
}

TruthValue Algebra::residuum_apply(const TruthValue& a, const TruthValue& b) const {
    require_element(a);
    require_element(b);
    if (a <= b) return TruthValue::top();
    if (a.is_top) return b;
    if (a.summand != b.summand) return b; // a strictly above b's summand
    const Rational &x = a.local, &y = b.local;
    switch (summands_[a.summand].kind) {
    case Summand::Kind::FiniteMV:
    case Summand::Kind::RationalMV:
        return TruthValue::in_summand(a.summand, kOne - x + y);
    case Summand::Kind::RationalGodel:
    case Summand::Kind::RationalGodelHoop:
        return b;
    case Summand::Kind::CancellativeHoop:
        return TruthValue::in_summand(a.summand, y / x);
    }
    throw std::logic_error("unreachable");
}

TruthValue Algebra::negate(const TruthValue& a) const {
    return residuum_apply(a, bottom());
}

std::vector<TruthValue> Algebra::elements() const {
    if (!finite()) throw InfiniteAlgebraError("elements() of infinite chain");
    std::vector<TruthValue> out;
    for (int k = 0; k < static_cast<int>(summands_.size()); ++k)
        for (int j = 0; j < summands_[k].m; ++j)
            out.push_back(TruthValue::in_summand(k, Rational(j, summands_[k].m)));
    out.push_back(TruthValue::top());
    return out;
}

std::vector<TruthValue> Algebra::idempotents() const {
    std::vector<TruthValue> out;
    for (const TruthValue& v : elements())
        if (tnorm_apply(v, v) == v) out.push_back(v);
    return out;
}

bool Algebra::is_mv_chain() const {
    for (const TruthValue& v : elements())
        if (negate(negate(v)) != v) return false;
    return true;
}

bool Algebra::is_godel_chain() const {
    for (const TruthValue& v : elements())
        if (tnorm_apply(v, v) != v) return false;
    return true;
}

OperationTable Algebra::to_table() const {
    const std::vector<TruthValue> elems = elements();
    const int n = static_cast<int>(elems.size());
    std::map<TruthValue, int> index;
    for (int i = 0; i < n; ++i) index[elems[i]] = i;
    OperationTable t;
    t.n = n;
    t.conj.resize(n * n);
    t.imp.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t.conj[i * n + j] = index.at(tnorm_apply(elems[i], elems[j]));
            t.imp[i * n + j] = index.at(residuum_apply(elems[i], elems[j]));
        }
    return t;
}

TruthValue Algebra::parse_value(const std::string& text) const {
    if (text == "top") return TruthValue::top();
    if (text == "bot") return bottom();

    std::string body = text;
    int summand = -1;
    if (const auto colon = text.find(':'); colon != std::string::npos) {
        summand = std::stoi(text.substr(0, colon));
        body = text.substr(colon + 1);
    }
    std::int64_t num = 0, den = 1;
    if (const auto slash = body.find('/'); slash != std::string::npos) {
        num = std::stoll(body.substr(0, slash));
        den = std::stoll(body.substr(slash + 1));
    } else {
        num = std::stoll(body);
    }
    const Rational v(num, den);

    if (summand >= 0) {
        if (summand >= static_cast<int>(summands_.size()))
            throw std::domain_error("summand index out of range in '" + text + "'");
        TruthValue tv = TruthValue::in_summand(summand, v);
        require_element(tv);
        return tv;
    }
    if (v == kZero) return bottom();
    if (v == kOne) return TruthValue::top();
    // Unqualified interior value: must fit exactly one summand.
    std::optional<int> hit;
    for (int k = 0; k < static_cast<int>(summands_.size()); ++k)
        if (summands_[k].contains_local(v)) {
            if (hit)
                throw std::domain_error("ambiguous value '" + text +
                                        "' in " + str() + "; qualify as k:p/q");
            hit = k;
        }
    if (!hit)
        throw std::domain_error("value '" + text + "' not in carrier of " + str());
    return TruthValue::in_summand(*hit, v);
}

std::vector<Algebra> enumerate_finite_chains(int n) {
    if (n < 2) throw std::invalid_argument("enumerate_finite_chains requires n >= 2");
    std::vector<Algebra> out;
    std::vector<Summand> current;
    // Compositions of n-1, largest first part first.
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(Algebra(current));
            return;
        }
        for (int first = remaining; first >= 1; --first) {
            current.push_back({Summand::Kind::FiniteMV, first});
            self(self, remaining - first);
            current.pop_back();
        }
    };
    rec(rec, n - 1);
    return out;
}

std::vector<int> decompose_finite_chain(const Algebra& alg) {
    if (!alg.finite())
        throw InfiniteAlgebraError("decompose of infinite chain");
    std::vector<int> sizes;
    for (const Summand& s : alg.summands()) sizes.push_back(s.m);
    return sizes;
}

namespace {

[[noreturn]] void table_fail(const std::string& law, int a, int b, int c = -1) {
    std::ostringstream os;
    os << "not a BL-chain: " << law << " fails at (" << a << "," << b;
    if (c >= 0) os << "," << c;
    os << ")";
    throw std::invalid_argument(os.str());
}

void check_bl_chain(const OperationTable& t) {
    const int n = t.n;
    if (n < 2 || static_cast<int>(t.conj.size()) != n * n ||
        static_cast<int>(t.imp.size()) != n * n)
        throw std::invalid_argument("malformed operation table");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (t.tnorm(a, b) != t.tnorm(b, a)) table_fail("commutativity", a, b);
            if (t.residuum(a, b) == n - 1 ? a > b : a <= b)
                table_fail("residuum/order", a, b);
            for (int c = 0; c < n; ++c) {
                if (t.tnorm(t.tnorm(a, b), c) != t.tnorm(a, t.tnorm(b, c)))
                    table_fail("associativity", a, b, c);
                if (b <= c && t.tnorm(a, b) > t.tnorm(a, c))
                    table_fail("monotonicity", a, b, c);
                if ((t.tnorm(a, c) <= b) != (c <= t.residuum(a, b)))
                    table_fail("adjunction", a, b, c);
            }
        }
    for (int a = 0; a < n; ++a) {
        if (t.tnorm(a, n - 1) != a) table_fail("top neutrality", a, n - 1);
        if (t.tnorm(a, 0) != 0) table_fail("bottom absorption", a, 0);
    }
}

} // namespace

std::vector<int> decompose_finite_chain(const OperationTable& t) {
    check_bl_chain(t);
    const int n = t.n;
    std::vector<int> cuts{0};
    for (int e = 1; e < n - 1; ++e)
        if (t.tnorm(e, e) == e) cuts.push_back(e);
    cuts.push_back(n - 1);

    std::vector<int> sizes;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const int lo = cuts[i], hi = cuts[i + 1];
        // Double negation relative to the segment's bottom certifies an
        // MV-chain segment.
        for (int x = lo; x < hi; ++x) {
            const int nx = t.residuum(x, lo);
            if (t.residuum(nx, lo) != x)
                table_fail("segment double negation", x, lo);
        }
        sizes.push_back(hi - lo);
    }
    return sizes;
}

std::vector<TruthValue> subalgebra_generated(const Algebra& alg,
                                             const std::vector<TruthValue>& seed) {
    if (!alg.finite())
        throw InfiniteAlgebraError("subalgebra closure of infinite chain");
    std::set<TruthValue> closed;
    for (const TruthValue& v : seed) {
        alg.require_element(v);
        closed.insert(v);
    }
    closed.insert(alg.bottom());
    closed.insert(TruthValue::top());
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<TruthValue> snapshot(closed.begin(), closed.end());
        for (const TruthValue& a : snapshot)
            for (const TruthValue& b : snapshot) {
                grew |= closed.insert(alg.tnorm_apply(a, b)).second;
                grew |= closed.insert(alg.residuum_apply(a, b)).second;
            }
    }
    return {closed.begin(), closed.end()};
}

} // namespace mvl
