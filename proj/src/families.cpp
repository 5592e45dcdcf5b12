#include "lensball/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lensball::families {

using cfrac::PlusString;

FamilySpec FamilySpec::c_params(std::vector<i64> c) {
    if (c.empty()) throw std::invalid_argument("Iminus3 needs at least one c parameter");
    for (i64 x : c)
        if (x < 1 || x > kMaxParam)
            throw std::invalid_argument("c parameters must lie in 1.." +
                                        std::to_string(kMaxParam));
    return FamilySpec{FamilyKind::Iminus3, std::move(c), 0, 0};
}

FamilySpec FamilySpec::st_params(FamilyKind kind, i64 s, i64 t) {
    if (kind == FamilyKind::Iminus3)
        throw std::invalid_argument("Iminus3 takes c parameters, not (s,t)");
    if (s < 0 || t < 0 || s > kMaxParam || t > kMaxParam)
        throw std::invalid_argument("(s,t) must lie in 0.." + std::to_string(kMaxParam));
    return FamilySpec{kind, {}, s, t};
}

std::string kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Iminus3: return "Iminus3";
        case FamilyKind::Iminus2_t1: return "Iminus2_t1";
        case FamilyKind::Iminus2_t2: return "Iminus2_t2";
        case FamilyKind::Iminus1_t1: return "Iminus1_t1";
        case FamilyKind::Iminus1_t2: return "Iminus1_t2";
        case FamilyKind::Iminus1_t3: return "Iminus1_t3";
    }
    return "?";
}

i64 family_invariant(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Iminus3: return -3;
        case FamilyKind::Iminus2_t1:
        case FamilyKind::Iminus2_t2: return -2;
        default: return -1;
    }
}

namespace {

void validate(const FamilySpec& spec) {
    if (spec.kind == FamilyKind::Iminus3) {
        if (spec.c.empty())
            throw std::invalid_argument("Iminus3 needs at least one c parameter");
        for (i64 x : spec.c)
            if (x < 1 || x > kMaxParam) throw std::invalid_argument("c parameter out of range");
    } else {
        if (spec.s < 0 || spec.t < 0 || spec.s > kMaxParam || spec.t > kMaxParam)
            throw std::invalid_argument("(s,t) parameter out of range");
    }
}

// Block lengths of the two alternating moves for the Iminus3 family.
std::vector<i64> move_blocks(const std::vector<i64>& c) {
    std::vector<i64> blocks(c);
    blocks.back() -= 1;
    return blocks;
}

std::vector<i64> with_runs(std::initializer_list<std::pair<i64, i64>> parts) {
    // Each pair is (value, count) with count -1 meaning a single entry.
    std::vector<i64> out;
    for (auto [v, cnt] : parts) {
        if (cnt < 0) out.push_back(v);
        else out.insert(out.end(), static_cast<std::size_t>(cnt), v);
    }
    return out;
}

}  // namespace

NegString gen_string(const FamilySpec& spec) {
    validate(spec);
    const i64 s = spec.s, t = spec.t;
    switch (spec.kind) {
        case FamilyKind::Iminus3: {
            std::vector<i64> a{2, 2, 2};
            bool append = true;
            for (i64 block : move_blocks(spec.c)) {
                for (i64 j = 0; j < block; ++j) {
                    if (append) {
                        a.front() += 1;
                        a.push_back(2);
                    } else {
                        a.back() += 1;
                        a.insert(a.begin(), 2);
                    }
                }
                append = !append;
            }
            return NegString(std::move(a));
        }
        case FamilyKind::Iminus2_t1:
            return NegString(with_runs({{2, t}, {3, -1}, {s + 2, -1}, {t + 2, -1}, {3, -1}, {2, s}}));
        case FamilyKind::Iminus2_t2:
            return NegString(with_runs({{2, t}, {s + 3, -1}, {2, -1}, {t + 2, -1}, {3, -1}, {2, s}}));
        case FamilyKind::Iminus1_t1:
            return NegString(with_runs({{t + 2, -1}, {s + 2, -1}, {3, -1}, {2, t}, {4, -1}, {2, s}}));
        case FamilyKind::Iminus1_t2:
            return NegString(with_runs({{t + 2, -1}, {2, -1}, {s + 3, -1}, {2, t}, {4, -1}, {2, s}}));
        case FamilyKind::Iminus1_t3:
            return NegString(with_runs(
                {{t + 3, -1}, {2, -1}, {s + 3, -1}, {3, -1}, {2, t}, {3, -1}, {2, s}}));
    }
    throw std::logic_error("unreachable");
}

Fraction gen_fraction(const FamilySpec& spec) {
    validate(spec);
    const i64 s = spec.s, t = spec.t;
    switch (spec.kind) {
        case FamilyKind::Iminus3: {
            // Walk the same move blocks on (m,k), starting from 4/3.
            i64 m = 2, k = 1;
            bool append = true;
            for (i64 block : move_blocks(spec.c)) {
                for (i64 j = 0; j < block; ++j) {
                    if (append) {
                        m = checked_add(m, k);
                    } else {
                        i64 nm = checked_sub(checked_mul(2, m), k);
                        k = m;
                        m = nm;
                    }
                }
                append = !append;
            }
            return Fraction(checked_mul(m, m), checked_add(checked_mul(m, k), 1));
        }
        case FamilyKind::Iminus2_t1: {
            i64 m = 2 * s * t + 3 * s + 3 * t + 4, d = 2 * s + 3;
            return Fraction(m * m, m * m - d * (m - 1));
        }
        case FamilyKind::Iminus2_t2: {
            i64 m = 2 * s * t + 2 * s + 3 * t + 4, d = 2 * s + 3;
            return Fraction(m * m, m * m - d * (m - 1));
        }
        case FamilyKind::Iminus1_t1: {
            i64 m = 2 * s * t + 4 * s + 3 * t + 5, d = 2 * s + 3;
            return Fraction(m * m, d * (m + 1));
        }
        case FamilyKind::Iminus1_t2: {
            i64 m = 2 * s * t + 3 * s + 3 * t + 5, d = 2 * s + 3;
            return Fraction(m * m, d * (m + 1));
        }
        case FamilyKind::Iminus1_t3: {
            i64 m = 2 * s * t + 5 * s + 4 * t + 9, d = 2 * t + 5;
            return Fraction(m * m, (2 * m - 1) * (m + 1) / d);
        }
    }
    throw std::logic_error("unreachable");
}

Fraction fraction_step(i64 m, i64 k, int sign, StepDir dir) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (!(0 < k && k < m) || std::gcd(m, k) != 1)
        throw std::invalid_argument("need 0 < k < m with gcd(m,k) = 1");
    i64 nm, nk;
    if (dir == StepDir::Append) {
        nm = checked_add(m, k);
        nk = k;
    } else {
        nm = checked_sub(checked_mul(2, m), k);
        nk = m;
    }
    return Fraction(checked_mul(nm, nm), checked_add(checked_mul(nm, nk), sign));
}

std::vector<IdentityReport> ribbon_identity_suite() {
    std::vector<IdentityReport> out;
    auto matches = [](const PlusString& plus, const NegString& minus) {
        Rational lhs = cfrac::plus_eval(plus);
        Fraction rhs = cfrac::neg_eval(minus);
        return lhs.num == rhs.p && lhs.den == rhs.q;
    };

    {
        bool pass = true;
        for (i64 c = 1; c <= 10; ++c) {
            std::vector<i64> neg{c + 1};
            neg.insert(neg.end(), static_cast<std::size_t>(c + 1), 2);
            pass = pass && matches(PlusString({c, c + 2}), NegString(neg));
        }
        out.push_back({"one-block", pass});
    }

    struct StIdentity {
        std::string name;
        std::vector<i64> (*plus)(i64 s, i64 t);
        FamilyKind minus;
    };
    const StIdentity idents[] = {
        {"negsum2-type1",
         [](i64 s, i64 t) { return std::vector<i64>{1, t, 1, 1, s, 1, t, 1, 1, s + 1}; },
         FamilyKind::Iminus2_t1},
        {"negsum2-type2",
         [](i64 s, i64 t) { return std::vector<i64>{1, t, s + 1, 2, t, 1, 1, s + 1}; },
         FamilyKind::Iminus2_t2},
        {"negsum1-type1",
         [](i64 s, i64 t) { return std::vector<i64>{t + 1, 1, s, 1, 1, t + 1, 2, s + 1}; },
         FamilyKind::Iminus1_t1},
        {"negsum1-type2",
         [](i64 s, i64 t) { return std::vector<i64>{t + 1, 2, s + 1, t + 1, 2, s + 1}; },
         FamilyKind::Iminus1_t2},
    };
    for (const auto& id : idents) {
        bool pass = true;
        for (i64 s = 0; s <= 10; ++s)
            for (i64 t = 0; t <= 10; ++t)
                pass = pass && matches(PlusString(id.plus(s, t)),
                                       gen_string(FamilySpec::st_params(id.minus, s, t)));
        out.push_back({id.name, pass});
    }
    return out;
}

std::vector<FamilyRow> enumerate_family(i64 invariant, i64 max_param, int max_k) {
    if (invariant != -1 && invariant != -2 && invariant != -3)
        throw std::invalid_argument("invariant must be -1, -2 or -3");
    if (max_param < 0 || max_param > kMaxParam)
        throw std::invalid_argument("max_param out of range");
    std::vector<FamilyRow> out;

    auto add = [&](const FamilySpec& spec, std::string params) {
        out.push_back(FamilyRow{spec.kind, std::move(params), gen_string(spec),
                                gen_fraction(spec)});
    };

    if (invariant == -3) {
        std::vector<i64> c;
        auto rec = [&](auto&& self) -> void {
            if (!c.empty()) {
                std::ostringstream ps;
                for (std::size_t i = 0; i < c.size(); ++i)
                    ps << (i ? " " : "") << "c" << i + 1 << "=" << c[i];
                add(FamilySpec::c_params(c), ps.str());
            }
            if (static_cast<int>(c.size()) == max_k) return;
            for (i64 v = 1; v <= max_param; ++v) {
                c.push_back(v);
                self(self);
                c.pop_back();
            }
        };
        if (max_param >= 1) rec(rec);
    } else {
        FamilyKind kinds2[] = {FamilyKind::Iminus2_t1, FamilyKind::Iminus2_t2};
        FamilyKind kinds1[] = {FamilyKind::Iminus1_t1, FamilyKind::Iminus1_t2,
                               FamilyKind::Iminus1_t3};
        auto kinds = invariant == -2 ? std::vector<FamilyKind>(kinds2, kinds2 + 2)
                                     : std::vector<FamilyKind>(kinds1, kinds1 + 3);
        for (FamilyKind kind : kinds)
            for (i64 s = 0; s <= max_param; ++s)
                for (i64 t = 0; t <= max_param; ++t) {
                    std::ostringstream ps;
                    ps << "s=" << s << " t=" << t;
                    add(FamilySpec::st_params(kind, s, t), ps.str());
                }
    }
    return out;
}

}  // namespace lensball::families
