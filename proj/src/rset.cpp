#include "lensball/rset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lensball::rset {

Fraction f_map(const Fraction& fr) {
    return Fraction(fr.p, fr.p - fr.q);
}

Fraction g_map(const Fraction& fr) {
    // Extended Euclid for q^{-1} mod p; gcd(p,q) = 1 guarantees existence.
    i64 r0 = fr.p, r1 = fr.q;
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 quot = r0 / r1;
        i64 r2 = r0 - quot * r1;
        i64 t2 = t0 - quot * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    i64 qinv = t0 % fr.p;
    if (qinv < 0) qinv += fr.p;
    return Fraction(fr.p, qinv);
}

std::vector<Fraction> orbit(const Fraction& fr) {
    std::vector<Fraction> out{fr};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const Fraction& next : {f_map(out[i]), g_map(out[i])}) {
            if (std::find(out.begin(), out.end(), next) == out.end())
                out.push_back(next);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<FamilyWitness> base_family_check(const Fraction& fr) {
    i64 m = isqrt(fr.p);
    if (m * m != fr.p) return std::nullopt;
    i64 q = fr.q;

    // Type1: q = mk +/- 1 with m > k > 0, gcd(m,k) = 1.
    for (i64 k = 1; k < m; ++k) {
        if (std::gcd(m, k) != 1) continue;
        if (q == m * k + 1) return FamilyWitness{Family::Type1, m, k, Sign::Plus};
        if (q == m * k - 1) return FamilyWitness{Family::Type1, m, k, Sign::Minus};
    }
    // Type2: q = d(m+1) with d | 2m-1, or q = d(m-1) with d | 2m+1; d > 1.
    for (i64 d = 2; d <= 2 * m + 1; ++d) {
        if ((2 * m - 1) % d == 0 && q == d * (m + 1))
            return FamilyWitness{Family::Type2, m, d, Sign::Plus};
        if ((2 * m + 1) % d == 0 && q == d * (m - 1))
            return FamilyWitness{Family::Type2, m, d, Sign::Minus};
    }
    // Type3: q = d(m +/- 1) with d > 1 odd dividing m +/- 1.
    for (i64 d = 3; d <= m + 1; d += 2) {
        if ((m + 1) % d == 0 && q == d * (m + 1))
            return FamilyWitness{Family::Type3, m, d, Sign::Plus};
        if (m > 1 && (m - 1) % d == 0 && q == d * (m - 1))
            return FamilyWitness{Family::Type3, m, d, Sign::Minus};
    }
    return std::nullopt;
}

RMembership is_in_R(const Fraction& fr) {
    RMembership result;
    for (const Fraction& elem : orbit(fr)) {
        if (auto w = base_family_check(elem)) {
            result.in_R = true;
            result.orbit_element = elem;
            result.witness = w;
            return result;
        }
    }
    return result;
}

bool embedding_exception(const Fraction& fr) {
    i64 m = isqrt(fr.p);
    if (m * m != fr.p) return false;
    for (i64 k = 4; k <= m - 4; ++k) {
        if (std::gcd(m, k) != 2) continue;
        if (fr.q == m * k + 1 || fr.q == m * k - 1) return true;
    }
    return false;
}

bool is_ribbon_2bridge(const Fraction& fr) {
    if (fr.p % 2 == 0)
        throw std::invalid_argument(
            "K(p,q) with p even is a 2-component link, not a knot");
    return is_in_R(fr).in_R;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Type1: return "Type1";
        case Family::Type2: return "Type2";
        case Family::Type3: return "Type3";
    }
    return "?";
}

std::string sign_name(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::string RMembership::to_json() const {
    std::ostringstream os;
    os << "{\"in_R\": " << (in_R ? "true" : "false");
    if (in_R) {
        os << ", \"orbit_element\": \"" << orbit_element->str() << "\""
           << ", \"family\": \"" << family_name(witness->family) << "\""
           << ", \"m\": " << witness->m
           << ", \"k_or_d\": " << witness->k_or_d
           << ", \"sign\": \"" << sign_name(witness->sign) << "\"";
    }
    os << "}";
    return os.str();
}

}  // namespace lensball::rset
