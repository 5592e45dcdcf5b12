#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "lensball/cfrac.hpp"

using namespace lensball;
using namespace lensball::cfrac;

namespace {

NegString ns(std::vector<i64> t) { return NegString(std::move(t)); }
PlusString ps(std::vector<i64> t) { return PlusString(std::move(t)); }

}  // namespace

TEST_CASE("Fraction validation and parsing") {
    CHECK(Fraction(4, 3).p == 4);
    CHECK_THROWS_AS(Fraction(6, 4), std::invalid_argument);   // not reduced
    CHECK_THROWS_AS(Fraction(3, 3), std::invalid_argument);   // q >= p
    CHECK_THROWS_AS(Fraction(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Fraction(-4, 3), std::invalid_argument);
    CHECK(Fraction::parse("25/11") == Fraction(25, 11));
    CHECK_THROWS(Fraction::parse("25"));
    CHECK_THROWS(Fraction::parse("banana/3"));
}

TEST_CASE("NegString validation and parsing") {
    CHECK_THROWS_AS(ns({}), std::invalid_argument);
    CHECK_THROWS_AS(ns({2, 1}), std::invalid_argument);
    CHECK(NegString::parse("[3,2,2,3,2]") == ns({3, 2, 2, 3, 2}));
    CHECK(NegString::parse("[2^[3],5]") == ns({2, 2, 2, 5}));
    CHECK(NegString::parse("[3,2^[0],4]") == ns({3, 4}));
}

TEST_CASE("neg_expand examples") {
    CHECK(neg_expand(Fraction(4, 3)) == ns({2, 2, 2}));
    CHECK(neg_expand(Fraction(2, 1)) == ns({2}));
    CHECK(neg_expand(Fraction(25, 11)) == ns({3, 2, 2, 3, 2}));
    CHECK(neg_expand(Fraction(5, 1)) == ns({5}));          // q = 1 -> [p]
    CHECK(neg_expand(Fraction(5, 4)) == ns({2, 2, 2, 2})); // q = p-1 -> [2^[p-1]]
}

TEST_CASE("neg_eval examples") {
    CHECK(neg_eval(ns({2, 2, 2})) == Fraction(4, 3));
    CHECK(neg_eval(ns({5})) == Fraction(5, 1));
    CHECK(neg_eval(ns({3, 2, 2, 3})) == Fraction(16, 7));
}

TEST_CASE("round trip p <= 500 and negsum duality identity p <= 5000") {
    for (i64 p = 2; p <= 500; ++p)
        for (i64 q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Fraction fr(p, q);
            CHECK(neg_eval(neg_expand(fr)) == fr);
        }
    // negsum(p/q) + negsum(p/(p-q)) = -2, including q = 1 and q = p-1.
    for (i64 p = 2; p <= 5000; ++p)
        for (i64 q = 1; 2 * q <= p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            i64 total = negsum_of(Fraction(p, q)) +
                        (q == p - q ? negsum_of(Fraction(p, q))
                                    : negsum_of(Fraction(p, p - q)));
            if (total != -2) {
                CAPTURE(p);
                CAPTURE(q);
                REQUIRE(total == -2);
            }
        }
}

TEST_CASE("negsum examples") {
    CHECK(negsum(ns({2, 2, 2})) == -3);
    CHECK(negsum(ns({3, 2, 2, 3, 2})) == -3);
    CHECK(negsum(ns({2, 5, 3})) == 1);
}

TEST_CASE("plus_eval examples, zero terms allowed") {
    CHECK(plus_eval(ps({1, 3})) == Rational(4, 3));
    CHECK(plus_eval(ps({1, 1})) == Rational(2, 1));
    CHECK(plus_eval(ps({2, 2})) == Rational(5, 2));
    // A zero term splices its neighbours: [1,0,2]^+ = [3]^+.
    CHECK(plus_eval(ps({1, 0, 2})) == Rational(3, 1));
    CHECK_THROWS_AS(ps({1, -1}), std::invalid_argument);
}

TEST_CASE("plus_to_minus: reconciled examples and the evaluation oracle") {
    // The conversion must preserve the value; [1,3]^+ = 4/3 = [2,2,2]^-
    // (not [2,2,2,2]^- = 5/4), and [1,2]^+ = 3/2 = [2,2]^-.
    CHECK(plus_to_minus(ps({1, 3})) == ns({2, 2, 2}));
    CHECK(plus_to_minus(ps({1, 2})) == ns({2, 2}));
    CHECK(plus_to_minus(ps({2, 4})) == ns({3, 2, 2, 2}));  // 9/4
    CHECK_THROWS_AS(plus_to_minus(ps({1, 2, 3})), std::invalid_argument);  // odd
    CHECK_THROWS_AS(plus_to_minus(ps({1, 0, 1, 2})), std::invalid_argument);  // zero term

    // Exhaustive oracle: plus_eval(s) = neg_eval(plus_to_minus(s)) for all
    // even-length strings with terms in 1..6, length <= 8.
    for (int len = 2; len <= 8; len += 2) {
        std::vector<i64> terms(static_cast<std::size_t>(len), 1);
        for (;;) {
            PlusString plus(terms);
            Rational lhs = plus_eval(plus);
            Fraction rhs = neg_eval(plus_to_minus(plus));
            if (!(lhs.num == rhs.p && lhs.den == rhs.q)) {
                CAPTURE(plus.str());
                REQUIRE(false);
            }
            int i = len - 1;
            while (i >= 0 && terms[static_cast<std::size_t>(i)] == 6) {
                terms[static_cast<std::size_t>(i)] = 1;
                --i;
            }
            if (i < 0) break;
            ++terms[static_cast<std::size_t>(i)];
        }
    }
}

TEST_CASE("riemenschneider_dual examples") {
    CHECK(riemenschneider_dual(ns({3, 2, 2, 3, 2})) == ns({2, 5, 3}));
    CHECK(neg_eval(ns({2, 5, 3})) == Fraction(25, 14));
    CHECK(riemenschneider_dual(ns({4})) == ns({2, 2, 2}));
    CHECK(riemenschneider_dual(ns({2})) == ns({2}));
}

TEST_CASE("duality is an involution and matches direct expansion, p <= 2000") {
    for (i64 p = 2; p <= 2000; ++p)
        for (i64 q : {i64{1}, p - 1, p / 2, p / 3 + 1}) {
            if (q < 1 || q >= p || std::gcd(p, q) != 1) continue;
            NegString s = neg_expand(Fraction(p, q));
            NegString dual = riemenschneider_dual(s);
            CHECK(neg_eval(dual) == (q == p - 1 ? Fraction(p, 1) : Fraction(p, p - q)));
            CHECK(riemenschneider_dual(dual) == s);
            // Cross-check the point rule against direct expansion when the
            // rule applies (first term >= 3).
            if (s.terms.front() >= 3) CHECK(point_rule_dual(s) == dual);
        }
    // Denser involution sweep at moderate scale.
    for (i64 p = 2; p <= 300; ++p)
        for (i64 q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            NegString s = neg_expand(Fraction(p, q));
            CHECK(riemenschneider_dual(riemenschneider_dual(s)) == s);
        }
}

TEST_CASE("reverse_string gives the mod-p inverse denominator") {
    CHECK(reverse_string(ns({3, 2, 2, 3, 2})) == ns({2, 3, 2, 2, 3}));
    CHECK(neg_eval(ns({2, 3, 2, 2, 3})) == Fraction(25, 16));
    CHECK(reverse_string(ns({2, 2, 2})) == ns({2, 2, 2}));
    CHECK(reverse_string(ns({4})) == ns({4}));
    for (i64 p = 2; p <= 2000; ++p)
        for (i64 q : {i64{1}, p - 1, p / 2, (2 * p) / 3 + 1}) {
            if (q < 1 || q >= p || std::gcd(p, q) != 1) continue;
            Fraction rev = neg_eval(reverse_string(neg_expand(Fraction(p, q))));
            CHECK(rev.p == p);
            CHECK((q * rev.q) % p == 1 % p);
        }
}

TEST_CASE("two_pow_eval closed form equals the direct fold") {
    CHECK(two_pow_eval(0, Rational(5, 1)) == Rational(5, 1));
    CHECK(two_pow_eval(2, Rational(3, 1)) == Rational(7, 5));
    CHECK(two_pow_eval(1, Rational(4, 1)) == Rational(7, 4));
    for (i64 t = 0; t <= 20; ++t)
        for (i64 x = 2; x <= 9; ++x) {
            Rational direct(x, 1);
            for (i64 i = 0; i < t; ++i)
                direct = Rational(2, 1) - Rational(1, 1) / direct;
            CHECK(two_pow_eval(t, Rational(x, 1)) == direct);
        }
}
