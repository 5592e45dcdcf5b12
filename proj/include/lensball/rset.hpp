#pragma once

// Membership in the set R: the closure under p/q -> p/(p-q) and
// q -> q^{-1} (mod p) of the three base families of fractions m^2/q.

#include <optional>
#include <string>
#include <vector>

#include "lensball/cfrac.hpp"

namespace lensball::rset {

using cfrac::Fraction;

enum class Family { Type1 = 1, Type2 = 2, Type3 = 3 };
enum class Sign { Plus, Minus };

// Parameters exhibiting q as one of the three base types for p = m^2:
//   Type1: q = mk +/- 1,  m > k > 0, gcd(m,k) = 1
//   Type2: q = d(m +/- 1), d > 1,     d divides 2m -/+ 1
//   Type3: q = d(m +/- 1), d > 1 odd, d divides m +/- 1
struct FamilyWitness {
    Family family;
    i64 m;
    i64 k_or_d;
    Sign sign;

    bool operator==(const FamilyWitness&) const = default;
};

struct RMembership {
    bool in_R = false;
    std::optional<Fraction> orbit_element;
    std::optional<FamilyWitness> witness;

    std::string to_json() const;
};

// p/q -> p/(p-q); an involution.
Fraction f_map(const Fraction& fr);

// p/q -> p/q' with q q' = 1 (mod p), 0 < q' < p; an involution.
Fraction g_map(const Fraction& fr);

// Closure of {fr} under f_map and g_map; at most 4 elements, sorted.
std::vector<Fraction> orbit(const Fraction& fr);

// Smallest witness (by family, then parameter, plus before minus) if fr
// itself matches a base family; absent otherwise.
std::optional<FamilyWitness> base_family_check(const Fraction& fr);

// fr is in R iff some orbit element matches a base family.
RMembership is_in_R(const Fraction& fr);

// The fractions m^2/(mk +/- 1) with gcd(m,k) = 2 and 4 <= k <= m-4.
// They are not in R, yet the chain lattices of both p/q and p/(p-q)
// embed into the diagonal lattice, so the embedding search alone cannot
// separate them from R. Orbit-invariant.
bool embedding_exception(const Fraction& fr);

// Ribbonness of the 2-bridge knot K(p,q); requires p odd.
bool is_ribbon_2bridge(const Fraction& fr);

std::string family_name(Family f);
std::string sign_name(Sign s);

}  // namespace lensball::rset
