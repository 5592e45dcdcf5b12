#pragma once

// Closed-form string families with negsum -3, -2, -1, their fraction
// formulas, the append/prepend fraction step, and the ascending/negative
// expansion identities behind the ribbon constructions.

#include <string>
#include <vector>

#include "lensball/cfrac.hpp"

namespace lensball::families {

using cfrac::Fraction;
using cfrac::NegString;

inline constexpr i64 kMaxParam = 64;  // guards 64-bit arithmetic

enum class FamilyKind {
    Iminus3,     // c-parameter family, negsum -3
    Iminus2_t1,  // (2^[t],3,s+2,t+2,3,2^[s])
    Iminus2_t2,  // (2^[t],s+3,2,t+2,3,2^[s])
    Iminus1_t1,  // (t+2,s+2,3,2^[t],4,2^[s])
    Iminus1_t2,  // (t+2,2,s+3,2^[t],4,2^[s])
    Iminus1_t3,  // (t+3,2,s+3,3,2^[t],3,2^[s])
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<i64> c;  // Iminus3 only: c_1..c_k, k >= 1, c_i >= 1
    i64 s = 0;
    i64 t = 0;

    static FamilySpec c_params(std::vector<i64> c);
    static FamilySpec st_params(FamilyKind kind, i64 s, i64 t);
};

std::string kind_name(FamilyKind kind);
i64 family_invariant(FamilyKind kind);  // -3, -2 or -1

// The literal string pattern of the family. The Iminus3 strings are
// built from (2,2,2) by alternating blocks of the two moves
//   append:  (a_1,...,a_n) -> (a_1+1, a_2,...,a_n, 2)
//   prepend: (a_1,...,a_n) -> (2, a_1,...,a_{n-1}, a_n+1)
// with block lengths c_1, ..., c_{k-1}, c_k - 1, starting with appends.
NegString gen_string(const FamilySpec& spec);

// The closed-form fraction m^2/q of the family, computed from the
// parameters without touching the string; equals neg_eval(gen_string).
Fraction gen_fraction(const FamilySpec& spec);

enum class StepDir { Prepend, Append };

// Step on fractions of the form m^2/(mk + sign), 0 < k < m coprime,
// sign in {+1,-1}:
//   append:  -> (m+k)^2  / ((m+k)k + sign)   (string gains +1 front, 2 back)
//   prepend: -> (2m-k)^2 / ((2m-k)m + sign)  (string gains 2 front, +1 back)
Fraction fraction_step(i64 m, i64 k, int sign, StepDir dir);

struct IdentityReport {
    std::string name;
    bool pass;
};

// Verifies the five ascending/negative expansion identities used by the
// ribbon constructions, over all parameters 0 <= s,t <= 10 (and the
// one-parameter identity for 1 <= c <= 10), by exact evaluation of both
// sides. One report entry per identity.
std::vector<IdentityReport> ribbon_identity_suite();

struct FamilyRow {
    FamilyKind kind;
    std::string params;
    NegString string;
    Fraction fraction;
};

// All family members for the given invariant (-1, -2 or -3) with
// parameters bounded by max_param; Iminus3 uses k <= max_k blocks.
// Degenerate overlaps between patterns are kept as-is.
std::vector<FamilyRow> enumerate_family(i64 invariant, i64 max_param, int max_k = 4);

}  // namespace lensball::families
