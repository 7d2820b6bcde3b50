#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mvlogic/algebra.hpp"

using namespace mvl;

namespace {

TruthValue mvq(std::int64_t n, std::int64_t d) {
    const Rational r(n, d);
    return r.is_one() ? TruthValue::top() : TruthValue::in_summand(0, r);
}

Rational as_rational(const Algebra&, const TruthValue& v) {
    return v.is_top ? Rational(1) : v.local;
}

} // namespace

TEST_CASE("descriptor parsing") {
    CHECK(Algebra::parse("MV[2]").summands() ==
          std::vector<Summand>{{Summand::Kind::FiniteMV, 2}});
    CHECK(Algebra::parse("2") == Algebra::parse("MV[1]"));
    CHECK(Algebra::parse("PQ") == Algebra::parse("2 (+) C"));
    CHECK(Algebra::parse("MV[1] (+) MV[1]").size() == 3);
    CHECK(Algebra::parse("MVQ").str() == "MVQ");
    CHECK(Algebra::parse("2 (+) C (+) C").summands().size() == 3);
    CHECK_FALSE(Algebra::parse("GQ").finite());
    CHECK_THROWS_AS(Algebra::parse("C"), std::invalid_argument);  // unbounded first
    CHECK_THROWS_AS(Algebra::parse("GHQ (+) 2"), std::invalid_argument);
    CHECK_THROWS_AS(Algebra::parse("MV[0]"), std::invalid_argument);
    CHECK_THROWS_AS(Algebra::parse(""), std::invalid_argument);
}

TEST_CASE("Lukasiewicz operations on MVQ") {
    const Algebra alg = Algebra::parse("MVQ");
    // max{0, x+y-1}
    CHECK(alg.tnorm_apply(mvq(7, 10), mvq(1, 2)) == mvq(1, 5));
    CHECK(alg.tnorm_apply(mvq(1, 4), mvq(1, 2)) == alg.bottom());
    // min{1, 1-x+y}
    CHECK(alg.residuum_apply(mvq(7, 10), mvq(1, 2)) == mvq(4, 5));
    CHECK(alg.residuum_apply(mvq(1, 2), mvq(7, 10)) == TruthValue::top());
    // top is neutral
    CHECK(alg.tnorm_apply(TruthValue::top(), mvq(3, 7)) == mvq(3, 7));
    CHECK(alg.negate(mvq(7, 10)) == mvq(3, 10));
}

TEST_CASE("Godel operations on GQ") {
    const Algebra alg = Algebra::parse("GQ");
    CHECK(alg.tnorm_apply(mvq(4, 5), mvq(3, 10)) == mvq(3, 10)); // min
    CHECK(alg.residuum_apply(mvq(4, 5), mvq(3, 10)) == mvq(3, 10)); // x->y = y
    CHECK(alg.residuum_apply(mvq(3, 10), mvq(4, 5)) == TruthValue::top());
    CHECK(alg.negate(mvq(3, 10)) == alg.bottom());
    CHECK(alg.negate(alg.bottom()) == TruthValue::top());
}

TEST_CASE("Product operations on PQ = 2 (+) C") {
    const Algebra alg = Algebra::parse("PQ");
    const auto c = [](std::int64_t n, std::int64_t d) {
        return TruthValue::in_summand(1, Rational(n, d));
    };
    CHECK(alg.tnorm_apply(c(2, 3), c(1, 2)) == c(1, 3)); // xy
    CHECK(alg.residuum_apply(c(2, 3), c(1, 3)) == c(1, 2)); // y/x
    CHECK(alg.residuum_apply(c(1, 3), c(2, 3)) == TruthValue::top());
    CHECK(alg.tnorm_apply(alg.bottom(), c(1, 2)) == alg.bottom());
    CHECK(alg.negate(c(1, 2)) == alg.bottom()); // cross-summand residuum
    CHECK(alg.negate(alg.bottom()) == TruthValue::top());
}

TEST_CASE("closed-form product identities on PQ") {
    // tnorm = a*b, residuum = min(1, b/a), for a, b in (0,1]
    const Algebra alg = Algebra::parse("PQ");
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> den(1, 30);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t da = den(rng), db = den(rng);
        std::uniform_int_distribution<std::int64_t> na(1, da), nb(1, db);
        const Rational a(na(rng), da), b(nb(rng), db);
        const auto wrap = [](const Rational& r) {
            return r.is_one() ? TruthValue::top() : TruthValue::in_summand(1, r);
        };
        CHECK(as_rational(alg, alg.tnorm_apply(wrap(a), wrap(b))) == a * b);
        CHECK(as_rational(alg, alg.residuum_apply(wrap(a), wrap(b))) ==
              min(Rational(1), b / a));
    }
}

TEST_CASE("ordinal-sum cross-summand table") {
    // 3-chain bot < e < top as MV[1] (+) MV[1]
    const Algebra alg = Algebra::parse("MV[1] (+) MV[1]");
    const TruthValue e = TruthValue::in_summand(1, Rational(0));
    CHECK(alg.tnorm_apply(e, e) == e); // both in second summand, idempotent
    CHECK(alg.tnorm_apply(alg.bottom(), e) == alg.bottom()); // lower element
    CHECK(alg.residuum_apply(e, alg.bottom()) == alg.bottom()); // a > b: lower elt
    CHECK(alg.residuum_apply(alg.bottom(), e) == TruthValue::top()); // a <= b
    CHECK(alg.negate(alg.negate(e)) == TruthValue::top()); // !!e = top != e
}

TEST_CASE("elements of finite chains") {
    const Algebra t2 = Algebra::parse("MV[2]");
    const auto els = t2.elements();
    REQUIRE(els.size() == 3);
    CHECK(els[0] == t2.bottom());
    CHECK(els[1] == TruthValue::in_summand(0, Rational(1, 2)));
    CHECK(els[2] == TruthValue::top());

    CHECK(Algebra::parse("MV[1] (+) MV[1]").elements().size() == 3);
    CHECK(Algebra::parse("MV[2] (+) MV[1]").elements().size() == 4);
    CHECK_THROWS_AS(Algebra::parse("MVQ").elements(), InfiniteAlgebraError);
}

TEST_CASE("idempotents") {
    const Algebra t2 = Algebra::parse("MV[2]");
    CHECK(t2.idempotents() == std::vector<TruthValue>{t2.bottom(), TruthValue::top()});
    const Algebra g3 = Algebra::parse("MV[1] (+) MV[1]");
    CHECK(g3.idempotents() == g3.elements()); // all three idempotent
    const Algebra two = Algebra::parse("2");
    CHECK(two.idempotents().size() == 2);
}

TEST_CASE("is_mv_chain and is_godel_chain") {
    CHECK(Algebra::parse("MV[4]").is_mv_chain());
    CHECK(Algebra::parse("2").is_mv_chain());
    CHECK_FALSE(Algebra::parse("MV[1] (+) MV[1]").is_mv_chain());
    CHECK(Algebra::parse("MV[1] (+) MV[1]").is_godel_chain());
    CHECK_FALSE(Algebra::parse("MV[2]").is_godel_chain());
    CHECK(Algebra::parse("2").is_godel_chain());
}

TEST_CASE("decompose_finite_chain on descriptors and tables") {
    CHECK(decompose_finite_chain(Algebra::parse("MV[2]")) == std::vector<int>{2});
    CHECK(decompose_finite_chain(Algebra::parse("MV[1] (+) MV[1]")) ==
          std::vector<int>{1, 1});
    CHECK(decompose_finite_chain(Algebra::parse("MV[2] (+) MV[1]").to_table()) ==
          std::vector<int>{2, 1});
}

TEST_CASE("decompose round-trips every chain of size <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (const Algebra& alg : enumerate_finite_chains(n)) {
            std::vector<int> sizes;
            for (const Summand& s : alg.summands()) sizes.push_back(s.m);
            CHECK(decompose_finite_chain(alg) == sizes);
            CHECK(decompose_finite_chain(alg.to_table()) == sizes);
        }
    }
}

TEST_CASE("decompose rejects non-BL tables with a witness") {
    // break commutativity of a valid 3-element table
    OperationTable t = Algebra::parse("MV[2]").to_table();
    t.conj[1 * t.n + 2] = 0; // 1*2 = 0 but 2*1 = 1
    CHECK_THROWS_WITH_AS(decompose_finite_chain(t),
                         doctest::Contains("not a BL-chain"), std::invalid_argument);
}

TEST_CASE("enumerate_finite_chains counts 2^(n-2)") {
    CHECK(enumerate_finite_chains(2).size() == 1);
    CHECK(enumerate_finite_chains(3).size() == 2);
    CHECK(enumerate_finite_chains(5).size() == 8);
    CHECK(enumerate_finite_chains(6).size() == 16);
    CHECK_THROWS_AS(enumerate_finite_chains(1), std::invalid_argument);
    // no duplicates
    const auto chains = enumerate_finite_chains(5);
    for (std::size_t i = 0; i < chains.size(); ++i)
        for (std::size_t j = i + 1; j < chains.size(); ++j)
            CHECK_FALSE(chains[i] == chains[j]);
}

TEST_CASE("subalgebra_generated") {
    const Algebra g3 = Algebra::parse("MV[1] (+) MV[1]");
    const TruthValue e = TruthValue::in_summand(1, Rational(0));
    CHECK(subalgebra_generated(g3, {e}) ==
          std::vector<TruthValue>{g3.bottom(), e, TruthValue::top()});

    const Algebra t4 = Algebra::parse("MV[4]");
    const TruthValue half = TruthValue::in_summand(0, Rational(1, 2));
    CHECK(subalgebra_generated(t4, {half}) ==
          std::vector<TruthValue>{t4.bottom(), half, TruthValue::top()});

    CHECK(subalgebra_generated(t4, {}) ==
          std::vector<TruthValue>{t4.bottom(), TruthValue::top()});
    CHECK_THROWS_AS(subalgebra_generated(t4, {TruthValue::in_summand(0, Rational(1, 3))}),
                    std::domain_error);
}

TEST_CASE("BL-chain axioms hold exhaustively on every chain of size <= 5") {
    for (int n = 2; n <= 5; ++n) {
        for (const Algebra& alg : enumerate_finite_chains(n)) {
            const auto els = alg.elements();
            for (const TruthValue& a : els) {
                CHECK(alg.tnorm_apply(TruthValue::top(), a) == a);
                CHECK(alg.tnorm_apply(alg.bottom(), a) == alg.bottom());
                for (const TruthValue& b : els) {
                    CHECK(alg.tnorm_apply(a, b) == alg.tnorm_apply(b, a));
                    CHECK((alg.residuum_apply(a, b) == TruthValue::top()) == (a <= b));
                    for (const TruthValue& c : els) {
                        CHECK(alg.tnorm_apply(alg.tnorm_apply(a, b), c) ==
                              alg.tnorm_apply(a, alg.tnorm_apply(b, c)));
                        // adjunction: a*c <= b  <=>  c <= a->b
                        CHECK((alg.tnorm_apply(a, c) <= b) ==
                              (c <= alg.residuum_apply(a, b)));
                        // monotonicity
                        if (b <= c)
                            CHECK(alg.tnorm_apply(a, b) <= alg.tnorm_apply(a, c));
                    }
                }
            }
        }
    }
}

TEST_CASE("truth value parsing") {
    const Algebra t2 = Algebra::parse("MV[2]");
    CHECK(t2.parse_value("bot") == t2.bottom());
    CHECK(t2.parse_value("top") == TruthValue::top());
    CHECK(t2.parse_value("1/2") == TruthValue::in_summand(0, Rational(1, 2)));
    CHECK(t2.parse_value("0") == t2.bottom());
    CHECK(t2.parse_value("1") == TruthValue::top());
    CHECK_THROWS_AS(t2.parse_value("1/3"), std::domain_error);

    const Algebra pq = Algebra::parse("PQ");
    // 2/3 only fits the cancellative summand, so no qualifier is needed
    CHECK(pq.parse_value("2/3") == TruthValue::in_summand(1, Rational(2, 3)));
    CHECK(pq.parse_value("1:2/3") == TruthValue::in_summand(1, Rational(2, 3)));

    // ambiguous without a qualifier: 1/2 fits both MV[2] summands
    const Algebra amb = Algebra::parse("MV[2] (+) MV[2]");
    CHECK_THROWS_AS(amb.parse_value("1/2"), std::domain_error);
    CHECK(amb.parse_value("0:1/2") == TruthValue::in_summand(0, Rational(1, 2)));
    CHECK(amb.parse_value("1:1/2") == TruthValue::in_summand(1, Rational(1, 2)));
}

TEST_CASE("membership checks") {
    const Algebra t2 = Algebra::parse("MV[2]");
    CHECK(t2.contains(TruthValue::in_summand(0, Rational(1, 2))));
    CHECK_FALSE(t2.contains(TruthValue::in_summand(0, Rational(1, 3))));
    CHECK_THROWS_AS(t2.require_element(TruthValue::in_summand(0, Rational(1, 3))),
                    std::domain_error);
    const Algebra pq = Algebra::parse("PQ");
    CHECK_FALSE(pq.contains(TruthValue::in_summand(1, Rational(0)))); // C has no 0
}
