#pragma once

// Exact continued-fraction arithmetic for lens-space parameters:
// negative (Hirzebruch-Jung) expansions, ascending expansions, the
// Riemenschneider point rule, string reversal and the bridge identities
// between plus- and minus-expansions.

#include <string>
#include <vector>

#include "lensball/util.hpp"

namespace lensball::cfrac {

// A reduced fraction p/q with p > q >= 1. Inputs that are not reduced or
// not in range are rejected outright rather than normalized; silent
// normalization would hide caller bugs.
struct Fraction {
    i64 p;
    i64 q;

    Fraction(i64 p_, i64 q_);
    bool operator==(const Fraction&) const = default;
    bool operator<(const Fraction& o) const { return p != o.p ? p < o.p : q < o.q; }

    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
    static Fraction parse(const std::string& text);
};

// Coefficients of a negative continued fraction [a_1,...,a_n]^-, all >= 2.
// These double as the weights of the linear plumbing bounded by L(p,q).
struct NegString {
    std::vector<i64> terms;

    explicit NegString(std::vector<i64> t);
    bool operator==(const NegString&) const = default;
    bool operator<(const NegString& o) const { return terms < o.terms; }
    std::size_t size() const { return terms.size(); }

    std::string str() const;
    // Parses "[a1,a2,...]" with the run shorthand "2^[t]" allowed as a term.
    static NegString parse(const std::string& text);
};

// Coefficients of an ascending continued fraction [a_1,...,a_n]^+, all >= 0.
// Zero terms are legitimate (they splice neighbouring terms together) and
// show up in the bridge identities at boundary parameter values.
struct PlusString {
    std::vector<i64> terms;

    explicit PlusString(std::vector<i64> t);
    bool operator==(const PlusString&) const = default;
    std::size_t size() const { return terms.size(); }

    std::string str() const;
};

// Hirzebruch-Jung expansion of p/q by the ceiling-division recurrence.
NegString neg_expand(const Fraction& fr);

// Value of [a_1,...,a_n]^- as a reduced fraction (right-to-left fold).
Fraction neg_eval(const NegString& s);

// Sum of (a_i - 3) without materializing the expansion of p/q.
i64 negsum_of(const Fraction& fr);

// Value of [a_1,...,a_n]^+ = a_1 + 1/(a_2 + 1/(...)).
Rational plus_eval(const PlusString& s);

// Converts an even-length ascending expansion to the negative expansion of
// the same value. Odd lengths are rejected.
NegString plus_to_minus(const PlusString& s);

// The negative expansion of p/(p-q), where p/q = neg_eval(s). Uses the
// explicit point rule when the string starts with a term >= 3 and falls
// back to direct expansion otherwise; both routes agree wherever the
// point rule applies.
NegString riemenschneider_dual(const NegString& s);

// Point-rule-only dual; requires first term >= 3. Exposed so the two
// routes can be cross-checked independently.
NegString point_rule_dual(const NegString& s);

// Reversed string; its value is p/q' with q q' = 1 (mod p).
NegString reverse_string(const NegString& s);

// Closed form for [2^[t], x]^- = ((t+1)x - t) / (tx - (t-1)).
Rational two_pow_eval(i64 t, const Rational& x);

// Sum of (a_i - 3) over the string.
i64 negsum(const NegString& s);

}  // namespace lensball::cfrac
