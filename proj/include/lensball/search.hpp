#pragma once

// Exhaustive machinery: backtracking realization of a string as a
// standard subset of D^n (the lattice-embedding obstruction), full
// enumeration of good/standard subsets at small rank, and the
// Casson-Gordon cotangent-sum test.

#include <optional>
#include <string>
#include <vector>

#include "lensball/cfrac.hpp"
#include "lensball/lattice.hpp"

namespace lensball::search {

using cfrac::Fraction;
using cfrac::NegString;
using lattice::LatticeSubset;

inline constexpr i64 kDefaultMaxNodes = 100'000'000;

enum class EmbedStatus { Found, NotFound, ResourceExceeded };

struct EmbeddingResult {
    EmbedStatus status = EmbedStatus::NotFound;
    std::optional<LatticeSubset> subset;  // present iff Found
    i64 nodes_explored = 0;

    bool found() const { return status == EmbedStatus::Found; }
};

// Searches D^n, n = length of s, for n integer vectors v_i with
// v_i.v_i = -a_i, v_i.v_{i+1} = 1 and all other products 0. Exhaustive
// up to signed permutations of the coordinates; the first solution in
// the fixed enumeration order is returned. Deterministic: identical
// inputs give identical matrices and node counts. When the node budget
// runs out the status is ResourceExceeded, never a silent NotFound.
EmbeddingResult embed_string(const NegString& s, i64 max_nodes = kDefaultMaxNodes);

// True iff the strings of both p/q and p/(p-q) embed. Throws if either
// search exhausts its node budget, so a true/false answer is always an
// exhaustiveness claim.
bool donaldson_obstruction(const Fraction& fr, i64 max_nodes = kDefaultMaxNodes);

// All standard subsets of D^n with I(S) <= I_max, one representative
// per class under signed coordinate permutations, sorted. 3 <= n <= 7.
std::vector<LatticeSubset> enumerate_standard(int n, i64 I_max);

// All good subsets of D^3 with I(S) <= I_max (< 0), one representative
// per class under signed coordinate permutations and reversal of the
// vector order, sorted.
std::vector<LatticeSubset> enumerate_good_rank3(i64 I_max);

struct CGReport {
    i64 m = 0;
    i64 q = 0;
    std::vector<double> values;  // indexed by r = 1..m-1
    bool all_pm_one = false;
    double tolerance = 1e-6;

    std::string to_json() const;
};

// Evaluates (2/m^2) * sum_{s=1}^{m^2-1} cot(pi s/m^2) cot(pi q s/m^2)
// sin^2(pi r s/m) for r = 1..m-1 in double precision. A ribbon K(m^2,q)
// forces every value to be +/-1. Requires 2 <= m <= 31, gcd(q,m^2) = 1.
CGReport casson_gordon_check(i64 m, i64 q, double tolerance = 1e-6);

}  // namespace lensball::search
