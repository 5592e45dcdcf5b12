#pragma once

// Subsets of the diagonal lattice D^n (e_i . e_j = -delta_ij): Gram data,
// coordinate-incidence sets, the deficiency invariant I(S), the
// good/standard predicates, contraction/expansion moves and the
// bad-component recognizer.

#include <string>
#include <vector>

#include "lensball/util.hpp"

namespace lensball::lattice {

// Rows are vectors, columns are the basis coordinates e_1..e_dim.
// Entry rows[i][j] is the coefficient of e_j in v_{i+1}.
using Matrix = std::vector<std::vector<i64>>;

struct LatticeSubset {
    int dim = 0;      // ambient rank of D^dim
    Matrix rows;      // |rows| vectors; usually |rows| == dim

    static LatticeSubset make(int dim, Matrix rows);
    int count() const { return static_cast<int>(rows.size()); }

    std::string to_json() const;
};

struct SubsetStats {
    i64 I = 0;                          // sum of (-v_i.v_i - 3)
    std::vector<int> p_counts;          // p_counts[i-1] = p_i(S)
    int c = 0;                          // intersection-graph components
    int b = 0;                          // bad components
    std::vector<std::vector<int>> E_sets;  // E_j = rows using coordinate j (1-based)
    std::vector<std::vector<int>> V_sets;  // V_i = coordinates used by row i (1-based)
};

// Gram matrix Q = -M M^t.
Matrix gram(const LatticeSubset& S);

// v_i . v_j in D^dim.
i64 dot(const LatticeSubset& S, int i, int j);

// True iff the Gram matrix is tridiagonal with diagonal <= -2 and
// off-diagonal neighbours in {0,1}.
bool satisfies_conds(const LatticeSubset& S);

// True iff the linkedness relation (sharing a coordinate with nonzero
// coefficient) connects all vectors.
bool is_irreducible(const LatticeSubset& S);

bool is_good(const LatticeSubset& S);      // conds + irreducible
bool is_standard(const LatticeSubset& S);  // conds with all neighbour products 1

// Counts and index sets; requires a conds-compliant subset.
SubsetStats stats(const LatticeSubset& S);

// The string (a_1,...,a_n) with a_i = -v_i.v_i.
std::vector<i64> diagonal_string(const LatticeSubset& S);

// Contraction of Definition: requires E_h = {s,t}, a_t > 2 and all matrix
// entries of absolute value <= 1. Removes v_s, replaces v_t by its
// projection orthogonal to e_h and deletes coordinate h. Indices are
// 1-based.
LatticeSubset contract(const LatticeSubset& S, int h, int s, int t);

enum class Side { Left, Right };

// Expansion by a final (-2)-vector in a fresh coordinate; the square of
// the opposite end is incremented by one. Requires a standard subset.
// `amount` repeats the move.
LatticeSubset expand(const LatticeSubset& S, Side side, int amount = 1);

// Number of intersection-graph components recognized as bad by reverse
// search over peeling sequences. Requires a good subset.
int bad_component_count(const LatticeSubset& S);

// Canonical form under Aut(D^dim) (signed permutations of coordinates):
// each column sign-normalized so its first nonzero entry is positive,
// columns then sorted. Orbit-invariant, used for deduplication.
LatticeSubset canonical_form(const LatticeSubset& S);

// CSV rendering of the Gram matrix.
std::string gram_csv(const LatticeSubset& S);

}  // namespace lensball::lattice
