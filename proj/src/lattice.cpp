#include "lensball/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lensball::lattice {

LatticeSubset LatticeSubset::make(int dim, Matrix rows) {
    if (dim < 1) throw std::invalid_argument("ambient rank must be positive");
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != dim)
            throw std::invalid_argument("row length does not match ambient rank");
        i64 norm = 0;
        for (i64 x : r) norm += x * x;
        if (norm < 1) throw std::invalid_argument("zero vector in subset");
    }
    return LatticeSubset{dim, std::move(rows)};
}

i64 dot(const LatticeSubset& S, int i, int j) {
    i64 s = 0;
    for (int c = 0; c < S.dim; ++c) s += S.rows[i][c] * S.rows[j][c];
    return -s;
}

Matrix gram(const LatticeSubset& S) {
    int n = S.count();
    Matrix Q(n, std::vector<i64>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Q[i][j] = dot(S, i, j);
    return Q;
}

bool satisfies_conds(const LatticeSubset& S) {
    int n = S.count();
    for (int i = 0; i < n; ++i) {
        if (dot(S, i, i) > -2) return false;
        for (int j = i + 1; j < n; ++j) {
            i64 d = dot(S, i, j);
            if (j == i + 1) {
                if (d != 0 && d != 1) return false;
            } else if (d != 0) {
                return false;
            }
        }
    }
    return true;
}

bool is_irreducible(const LatticeSubset& S) {
    int n = S.count();
    if (n == 0) return true;
    // Union-find over vectors, merging through shared coordinates.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int c = 0; c < S.dim; ++c) {
        int first = -1;
        for (int i = 0; i < n; ++i) {
            if (S.rows[i][c] == 0) continue;
            if (first < 0) first = i;
            else parent[find(i)] = find(first);
        }
    }
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

bool is_good(const LatticeSubset& S) {
    return satisfies_conds(S) && is_irreducible(S);
}

bool is_standard(const LatticeSubset& S) {
    if (!satisfies_conds(S)) return false;
    for (int i = 0; i + 1 < S.count(); ++i)
        if (dot(S, i, i + 1) != 1) return false;
    return true;
}

std::vector<i64> diagonal_string(const LatticeSubset& S) {
    std::vector<i64> a;
    a.reserve(S.count());
    for (int i = 0; i < S.count(); ++i) a.push_back(-dot(S, i, i));
    return a;
}

namespace {

// Intersection-graph components of a conds-compliant subset are maximal
// runs of consecutive indices joined by Gram entry 1.
std::vector<std::pair<int, int>> chain_components(const LatticeSubset& S) {
    std::vector<std::pair<int, int>> comps;
    int n = S.count();
    int start = 0;
    for (int i = 0; i + 1 <= n - 1; ++i) {
        if (dot(S, i, i + 1) != 1) {
            comps.emplace_back(start, i);
            start = i + 1;
        }
    }
    if (n > 0) comps.emplace_back(start, n - 1);
    return comps;
}

std::vector<int> column_users(const LatticeSubset& S, int c) {
    std::vector<int> users;
    for (int i = 0; i < S.count(); ++i)
        if (S.rows[i][c] != 0) users.push_back(i);
    return users;
}

LatticeSubset contract_unchecked(const LatticeSubset& S, int h, int s, int t) {
    // 0-based internal variant; assumes preconditions hold.
    Matrix rows;
    rows.reserve(S.rows.size() - 1);
    for (int i = 0; i < S.count(); ++i) {
        if (i == s) continue;
        std::vector<i64> r = S.rows[i];
        if (i == t) r[h] = 0;  // projection orthogonal to e_h
        r.erase(r.begin() + h);
        rows.push_back(std::move(r));
    }
    return LatticeSubset::make(S.dim - 1, std::move(rows));
}

bool component_entries_unit(const LatticeSubset& S, int lo, int hi) {
    for (int i = lo; i <= hi; ++i)
        for (i64 x : S.rows[i])
            if (x < -1 || x > 1) return false;
    return true;
}

// Reverse search for the construction history of Definition of bad
// components: peel final (-2)-vectors off the chain [lo,hi] until the
// base triple (-2, < -2, -2) sharing a single coordinate remains.
bool component_is_bad(const LatticeSubset& S, int lo, int hi) {
    int len = hi - lo + 1;
    if (len < 3) return false;
    std::vector<i64> a;
    for (int i = lo; i <= hi; ++i) a.push_back(-dot(S, i, i));
    if (len == 3) {
        if (!(a[0] == 2 && a[1] > 2 && a[2] == 2)) return false;
        for (int c = 0; c < S.dim; ++c) {
            auto users = column_users(S, c);
            if (users == std::vector<int>{lo, lo + 1, lo + 2}) return true;
        }
        return false;
    }
    if (!component_entries_unit(S, lo, hi)) return false;
    for (int end : {lo, hi}) {
        if (a[end - lo] != 2) continue;
        for (int c = 0; c < S.dim; ++c) {
            auto users = column_users(S, c);
            if (users.size() != 2) continue;
            int other = users[0] == end ? users[1] : (users[1] == end ? users[0] : -1);
            if (other < lo || other > hi || other == end) continue;
            if (-dot(S, other, other) <= 2) continue;
            LatticeSubset peeled = contract_unchecked(S, c, end, other);
            int nlo = lo, nhi = hi - 1;
            if (component_is_bad(peeled, nlo, nhi)) return true;
        }
    }
    return false;
}

}  // namespace

SubsetStats stats(const LatticeSubset& S) {
    if (!satisfies_conds(S))
        throw std::invalid_argument("subset violates the Gram conditions");
    int n = S.count();
    SubsetStats st;
    st.E_sets.resize(S.dim);
    st.V_sets.resize(n);
    for (int c = 0; c < S.dim; ++c) {
        for (int i = 0; i < n; ++i) {
            if (S.rows[i][c] != 0) {
                st.E_sets[c].push_back(i + 1);
                st.V_sets[i].push_back(c + 1);
            }
        }
    }
    st.p_counts.assign(n, 0);
    for (int c = 0; c < S.dim; ++c) {
        int sz = static_cast<int>(st.E_sets[c].size());
        if (sz >= 1 && sz <= n) ++st.p_counts[sz - 1];
    }
    st.I = 0;
    for (int i = 0; i < n; ++i) st.I += -dot(S, i, i) - 3;
    st.c = static_cast<int>(chain_components(S).size());
    st.b = is_good(S) ? bad_component_count(S) : 0;
    return st;
}

LatticeSubset contract(const LatticeSubset& S, int h, int s, int t) {
    int n = S.count();
    if (h < 1 || h > S.dim) throw std::invalid_argument("coordinate index out of range");
    if (s < 1 || s > n || t < 1 || t > n || s == t)
        throw std::invalid_argument("vector indices out of range");
    for (const auto& r : S.rows)
        for (i64 x : r)
            if (x < -1 || x > 1)
                throw std::invalid_argument("contraction requires all entries in {-1,0,1}");
    auto users = column_users(S, h - 1);
    std::vector<int> expected{std::min(s, t) - 1, std::max(s, t) - 1};
    if (users != expected)
        throw std::invalid_argument("coordinate is not shared by exactly {v_s, v_t}");
    if (-dot(S, t - 1, t - 1) <= 2)
        throw std::invalid_argument("contraction requires a_t > 2");
    return contract_unchecked(S, h - 1, s - 1, t - 1);
}

LatticeSubset expand(const LatticeSubset& S, Side side, int amount) {
    if (amount < 0) throw std::invalid_argument("negative expansion count");
    LatticeSubset cur = S;
    for (int step = 0; step < amount; ++step) {
        if (!is_standard(cur))
            throw std::invalid_argument("expansion requires a standard subset");
        int n = cur.count();
        if (n != cur.dim) throw std::invalid_argument("expansion requires full cardinality");
        // Structural coordinate: shared by the two end vectors only, with
        // unit coefficients.
        int j = -1;
        for (int c = 0; c < cur.dim; ++c) {
            auto users = column_users(cur, c);
            if (users == std::vector<int>{0, n - 1} &&
                std::abs(cur.rows[0][c]) == 1 && std::abs(cur.rows[n - 1][c]) == 1) {
                j = c;
                break;
            }
        }
        if (j < 0)
            throw std::invalid_argument("no coordinate joins the two ends; cannot expand");

        Matrix rows = cur.rows;
        for (auto& r : rows) r.push_back(0);
        int fresh = cur.dim;
        std::vector<i64> w(cur.dim + 1, 0);
        if (side == Side::Right) {
            i64 sigma = -rows[n - 1][j];
            w[j] = sigma;
            w[fresh] = 1;
            rows[0][fresh] = -sigma * rows[0][j];
            rows.push_back(std::move(w));
        } else {
            i64 sigma = -rows[0][j];
            w[j] = sigma;
            w[fresh] = 1;
            rows[n - 1][fresh] = -sigma * rows[n - 1][j];
            rows.insert(rows.begin(), std::move(w));
        }
        cur = LatticeSubset::make(cur.dim + 1, std::move(rows));
    }
    return cur;
}

int bad_component_count(const LatticeSubset& S) {
    if (!is_good(S)) throw std::invalid_argument("bad components are defined for good subsets");
    int count = 0;
    for (auto [lo, hi] : chain_components(S))
        if (component_is_bad(S, lo, hi)) ++count;
    return count;
}

LatticeSubset canonical_form(const LatticeSubset& S) {
    int n = S.count();
    // Extract columns, sign-normalize, sort descending.
    std::vector<std::vector<i64>> cols(S.dim, std::vector<i64>(n));
    for (int c = 0; c < S.dim; ++c) {
        for (int i = 0; i < n; ++i) cols[c][i] = S.rows[i][c];
        for (int i = 0; i < n; ++i) {
            if (cols[c][i] != 0) {
                if (cols[c][i] < 0)
                    for (auto& x : cols[c]) x = -x;
                break;
            }
        }
    }
    std::sort(cols.begin(), cols.end(), std::greater<>());
    Matrix rows(n, std::vector<i64>(S.dim));
    for (int c = 0; c < S.dim; ++c)
        for (int i = 0; i < n; ++i) rows[i][c] = cols[c][i];
    return LatticeSubset{S.dim, std::move(rows)};
}

std::string LatticeSubset::to_json() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (int c = 0; c < dim; ++c) {
            if (c) os << ", ";
            os << rows[i][c];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string gram_csv(const LatticeSubset& S) {
    Matrix Q = gram(S);
    std::ostringstream os;
    for (const auto& row : Q) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << row[c];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace lensball::lattice
