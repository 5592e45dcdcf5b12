#include "lensball/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lensball::search {

namespace {

using lattice::Matrix;

struct NodeBudgetExceeded {};

// Backtracking realization of a string in D^n. Rows are generated
// coordinate by coordinate under a canonical-order discipline that
// breaks the signed-permutation symmetry without losing solutions:
//   - coordinates are introduced in increasing index order,
//   - the first entry of every coordinate is positive,
//   - as long as two adjacent columns agree on all rows seen so far,
//     the left one must stay lexicographically >= the right one.
// The third rule is what keeps long runs of (-2)-rows from spawning
// mirror-image branches.
class Embedder {
public:
    Embedder(std::vector<i64> a, i64 max_nodes, bool stop_at_first)
        : a_(std::move(a)),
          n_(static_cast<int>(a_.size())),
          max_nodes_(max_nodes),
          stop_at_first_(stop_at_first),
          rows_(n_, std::vector<i64>(n_, 0)),
          suffix_(n_, std::vector<i64>(n_ + 1, 0)),
          users_(n_),
          tied_(n_, 1) {}

    void run() {
        try {
            place_row(0, 0);
        } catch (const NodeBudgetExceeded&) {
            exceeded_ = true;
        }
    }

    bool exceeded() const { return exceeded_; }
    i64 nodes() const { return nodes_; }
    const std::vector<Matrix>& solutions() const { return solutions_; }

private:
    // Required coefficient product sum(m_r[c] m_i[c]) = -(v_r . v_i).
    i64 coeff_target(int r, int i) const { return r == i - 1 ? -1 : 0; }

    void tick() {
        if (++nodes_ > max_nodes_) throw NodeBudgetExceeded{};
    }

    // Returns true once enough solutions are collected to stop.
    bool place_row(int i, int u) {
        if (i == n_) {
            solutions_.push_back(rows_);
            return stop_at_first_;
        }
        std::vector<i64> pd(i, 0);
        return fill(i, 0, a_[i], u, pd);
    }

    bool row_done(int i, int u, const std::vector<i64>& pd) {
        for (int r = 0; r < i; ++r)
            if (pd[r] != coeff_target(r, i)) return false;

        i64 run = 0;
        for (int c = n_ - 1; c >= 0; --c) {
            run += rows_[i][c] * rows_[i][c];
            suffix_[i][c] = run;
        }
        std::vector<char> tied_before = tied_;
        for (int c = 1; c < n_; ++c)
            if (tied_[c] && rows_[i][c] != rows_[i][c - 1]) tied_[c] = 0;
        for (int c = 0; c < n_; ++c)
            if (rows_[i][c] != 0) users_[c].push_back(i);

        bool stop = place_row(i + 1, u);

        for (int c = 0; c < n_; ++c)
            if (rows_[i][c] != 0) users_[c].pop_back();
        tied_ = std::move(tied_before);
        return stop;
    }

    bool fill(int i, int c, i64 rem, int u, std::vector<i64>& pd) {
        if (c == n_) return rem == 0 && row_done(i, u, pd);
        if (c == u) {
            // Either close the row here (remaining coordinates zero) ...
            if (rem == 0) return row_done(i, u, pd);
            // ... or introduce coordinate c with a positive entry.
            i64 vmax = isqrt(rem);
            if (c > 0 && tied_[c]) vmax = std::min(vmax, rows_[i][c - 1]);
            for (i64 val = vmax; val >= 1; --val) {
                tick();
                rows_[i][c] = val;
                if (fill(i, c + 1, rem - val * val, u + 1, pd)) return true;
            }
            rows_[i][c] = 0;
            return false;
        }
        i64 vmax = isqrt(rem);
        i64 hi = vmax;
        if (c > 0 && tied_[c]) hi = std::min(hi, rows_[i][c - 1]);
        for (i64 val = hi; val >= -vmax; --val) {
            tick();
            rows_[i][c] = val;
            i64 rem2 = rem - val * val;
            bool ok = true;
            for (int r : users_[c]) {
                pd[r] += val * rows_[r][c];
                // Cauchy-Schwarz: the remaining coordinates can change
                // the product by at most sqrt(rem2 * suffix).
                i64 diff = coeff_target(r, i) - pd[r];
                if (diff * diff > rem2 * suffix_[r][c + 1]) ok = false;
            }
            if (ok && fill(i, c + 1, rem2, u, pd)) return true;
            for (int r : users_[c]) pd[r] -= val * rows_[r][c];
        }
        rows_[i][c] = 0;
        return false;
    }

    std::vector<i64> a_;
    int n_;
    i64 max_nodes_;
    bool stop_at_first_;
    Matrix rows_;
    std::vector<std::vector<i64>> suffix_;   // suffix norms of completed rows
    std::vector<std::vector<int>> users_;    // completed rows using a column
    std::vector<char> tied_;                 // column c-1 == column c so far
    i64 nodes_ = 0;
    bool exceeded_ = false;
    std::vector<Matrix> solutions_;
};

std::string flat_key(const LatticeSubset& S) {
    std::ostringstream os;
    for (const auto& r : S.rows)
        for (i64 x : r) os << x << ',';
    return os.str();
}

}  // namespace

EmbeddingResult embed_string(const NegString& s, i64 max_nodes) {
    Embedder e(s.terms, max_nodes, /*stop_at_first=*/true);
    e.run();
    EmbeddingResult res;
    res.nodes_explored = e.nodes();
    if (!e.solutions().empty()) {
        res.status = EmbedStatus::Found;
        int n = static_cast<int>(s.size());
        res.subset = LatticeSubset::make(n, e.solutions().front());
    } else {
        res.status = e.exceeded() ? EmbedStatus::ResourceExceeded : EmbedStatus::NotFound;
    }
    return res;
}

bool donaldson_obstruction(const Fraction& fr, i64 max_nodes) {
    EmbeddingResult direct = embed_string(cfrac::neg_expand(fr), max_nodes);
    if (direct.status == EmbedStatus::ResourceExceeded)
        throw std::runtime_error("node budget exhausted on " + fr.str());
    if (!direct.found()) return false;
    Fraction dual(fr.p, fr.p - fr.q);
    EmbeddingResult other = embed_string(cfrac::neg_expand(dual), max_nodes);
    if (other.status == EmbedStatus::ResourceExceeded)
        throw std::runtime_error("node budget exhausted on " + dual.str());
    return other.found();
}

std::vector<LatticeSubset> enumerate_standard(int n, i64 I_max) {
    if (n < 3 || n > 7) throw std::invalid_argument("rank out of the supported range 3..7");
    std::vector<LatticeSubset> out;
    std::vector<std::string> seen;
    std::vector<i64> a(n, 2);

    // All strings with a_i >= 2 and sum(a_i - 3) <= I_max.
    i64 budget = 3 * static_cast<i64>(n) + I_max;
    auto all_strings = [&](auto&& self, int pos, i64 left) -> void {
        if (pos == n) {
            Embedder e(a, kDefaultMaxNodes, /*stop_at_first=*/false);
            e.run();
            if (e.exceeded()) throw std::runtime_error("node budget exhausted in enumeration");
            for (const Matrix& m : e.solutions()) {
                LatticeSubset canon = lattice::canonical_form(LatticeSubset::make(n, m));
                std::string key = flat_key(canon);
                if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                    seen.push_back(key);
                    out.push_back(std::move(canon));
                }
            }
            return;
        }
        for (i64 v = 2; v <= left - 2 * (n - 1 - pos); ++v) {
            a[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    all_strings(all_strings, 0, budget);

    std::sort(out.begin(), out.end(), [](const LatticeSubset& x, const LatticeSubset& y) {
        auto sx = lattice::diagonal_string(x), sy = lattice::diagonal_string(y);
        if (sx != sy) return sx < sy;
        return x.rows < y.rows;
    });
    return out;
}

std::vector<LatticeSubset> enumerate_good_rank3(i64 I_max) {
    if (I_max >= 0) throw std::invalid_argument("enumerate_good_rank3 requires I_max < 0");
    // I <= I_max and three norms >= 2 bound each norm by 9 + I_max - 4.
    i64 amax = 9 + I_max - 4;
    if (amax < 2) return {};
    i64 b = isqrt(amax);
    std::vector<std::vector<i64>> vecs;
    for (i64 x = -b; x <= b; ++x)
        for (i64 y = -b; y <= b; ++y)
            for (i64 z = -b; z <= b; ++z) {
                i64 norm = x * x + y * y + z * z;
                if (norm >= 2 && norm <= amax) vecs.push_back({x, y, z});
            }

    // Classes are taken up to signed coordinate permutations, reversal of
    // the vector order, and negation of whole intersection-graph
    // components (which leaves every Gram entry unchanged).
    auto class_key = [](const LatticeSubset& S) {
        // Component id per vector: consecutive runs joined by Gram 1.
        std::vector<int> comp(3, 0);
        for (int i = 1; i < 3; ++i)
            comp[i] = comp[i - 1] + (lattice::dot(S, i - 1, i) == 1 ? 0 : 1);
        int ncomp = comp[2] + 1;
        std::string best;
        LatticeSubset repr = S;
        for (int flips = 0; flips < (1 << ncomp); ++flips) {
            Matrix m = S.rows;
            for (int i = 0; i < 3; ++i)
                if ((flips >> comp[i]) & 1)
                    for (i64& x : m[i]) x = -x;
            for (int order = 0; order < 2; ++order) {
                if (order) std::reverse(m.begin(), m.end());
                LatticeSubset canon = lattice::canonical_form(LatticeSubset{3, m});
                std::string key = flat_key(canon);
                if (best.empty() || key < best) {
                    best = key;
                    repr = canon;
                }
            }
        }
        return std::make_pair(best, repr);
    };

    std::vector<LatticeSubset> out;
    std::vector<std::string> seen;
    for (const auto& v1 : vecs)
        for (const auto& v2 : vecs)
            for (const auto& v3 : vecs) {
                LatticeSubset S{3, {v1, v2, v3}};
                if (!lattice::is_good(S)) continue;
                i64 I = 0;
                for (int i = 0; i < 3; ++i) I += -lattice::dot(S, i, i) - 3;
                if (I > I_max) continue;
                auto [key, repr] = class_key(S);
                if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                    seen.push_back(key);
                    out.push_back(repr);
                }
            }

    std::sort(out.begin(), out.end(),
              [](const LatticeSubset& x, const LatticeSubset& y) { return x.rows < y.rows; });
    return out;
}

CGReport casson_gordon_check(i64 m, i64 q, double tolerance) {
    if (m < 2 || m > 31)
        throw std::invalid_argument("m out of the supported range 2..31");
    i64 p = m * m;
    i64 qq = ((q % p) + p) % p;
    if (std::gcd(qq, p) != 1)
        throw std::invalid_argument("q must be coprime to m^2");

    CGReport rep;
    rep.m = m;
    rep.q = q;
    rep.tolerance = tolerance;
    const double pi = std::acos(-1.0);
    rep.all_pm_one = true;
    for (i64 r = 1; r < m; ++r) {
        double sum = 0.0;
        for (i64 s = 1; s < p; ++s) {
            double c1 = 1.0 / std::tan(pi * s / p);
            double c2 = 1.0 / std::tan(pi * ((qq * s) % p) / p);
            double sn = std::sin(pi * ((r * s) % m) / m);
            sum += c1 * c2 * sn * sn;
        }
        double val = 2.0 * sum / p;
        rep.values.push_back(val);
        if (std::abs(std::abs(val) - 1.0) > tolerance) rep.all_pm_one = false;
    }
    return rep;
}

std::string CGReport::to_json() const {
    std::ostringstream os;
    os << "{\"m\": " << m << ", \"q\": " << q
       << ", \"tolerance\": " << tolerance
       << ", \"all_pm_one\": " << (all_pm_one ? "true" : "false")
       << ", \"values\": [";
    os.precision(12);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ", ";
        os << values[i];
    }
    os << "]}";
    return os.str();
}

}  // namespace lensball::search
