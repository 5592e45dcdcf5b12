#include "lensball/cfrac.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace lensball::cfrac {

Fraction::Fraction(i64 p_, i64 q_) : p(p_), q(q_) {
    if (q < 1) throw std::invalid_argument("fraction requires q >= 1");
    if (p <= q) throw std::invalid_argument("fraction requires p > q");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("fraction " + std::to_string(p) + "/" +
                                    std::to_string(q) + " is not reduced");
}

Fraction Fraction::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("expected \"p/q\", got \"" + text + "\"");
    std::size_t pos_p = 0, pos_q = 0;
    i64 p = std::stoll(text.substr(0, slash), &pos_p);
    i64 q = std::stoll(text.substr(slash + 1), &pos_q);
    if (pos_p != slash || pos_q != text.size() - slash - 1)
        throw std::invalid_argument("trailing characters in fraction \"" + text + "\"");
    return Fraction(p, q);
}

NegString::NegString(std::vector<i64> t) : terms(std::move(t)) {
    if (terms.empty()) throw std::invalid_argument("empty negative string");
    for (i64 a : terms)
        if (a < 2) throw std::invalid_argument("negative-string term < 2");
}

std::string NegString::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << ',';
        os << terms[i];
    }
    os << ']';
    return os.str();
}

NegString NegString::parse(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw std::invalid_argument("malformed string literal \"" + text + "\"");
        ++i;
    };
    auto read_int = [&]() -> i64 {
        skip_ws();
        std::size_t used = 0;
        i64 v = std::stoll(text.substr(i), &used);
        i += used;
        return v;
    };

    std::vector<i64> terms;
    expect('[');
    skip_ws();
    if (i < text.size() && text[i] == ']') { ++i; }
    else {
        for (;;) {
            i64 v = read_int();
            skip_ws();
            if (i + 1 < text.size() && text[i] == '^' && text[i + 1] == '[') {
                // run shorthand v^[t]
                i += 2;
                i64 t = read_int();
                expect(']');
                if (t < 0) throw std::invalid_argument("negative run length");
                for (i64 k = 0; k < t; ++k) terms.push_back(v);
            } else {
                terms.push_back(v);
            }
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            expect(']');
            break;
        }
    }
    skip_ws();
    if (i != text.size())
        throw std::invalid_argument("trailing characters in string \"" + text + "\"");
    return NegString(std::move(terms));
}

PlusString::PlusString(std::vector<i64> t) : terms(std::move(t)) {
    if (terms.empty()) throw std::invalid_argument("empty plus string");
    for (i64 a : terms)
        if (a < 0) throw std::invalid_argument("plus-string term < 0");
}

std::string PlusString::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << ',';
        os << terms[i];
    }
    os << ']';
    return os.str();
}

NegString neg_expand(const Fraction& fr) {
    std::vector<i64> terms;
    i64 p = fr.p, q = fr.q;
    while (q > 0) {
        i64 a = (p + q - 1) / q;  // ceil(p/q)
        terms.push_back(a);
        i64 next_q = checked_sub(checked_mul(a, q), p);
        p = q;
        q = next_q;
    }
    return NegString(std::move(terms));
}

Fraction neg_eval(const NegString& s) {
    // Right-to-left fold x <- a - 1/x keeping x = num/den exact.
    i64 num = 1, den = 0;
    for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it) {
        i64 new_num = checked_sub(checked_mul(*it, num), den);
        den = num;
        num = new_num;
        if (num <= den)
            throw std::logic_error("negative continued fraction fold left (1, infinity)");
    }
    return Fraction(num, den);
}

i64 negsum_of(const Fraction& fr) {
    i64 sum = 0;
    i64 p = fr.p, q = fr.q;
    while (q > 0) {
        i64 a = (p + q - 1) / q;
        sum += a - 3;
        i64 next_q = a * q - p;
        p = q;
        q = next_q;
    }
    return sum;
}

Rational plus_eval(const PlusString& s) {
    i64 num = 1, den = 0;
    for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it) {
        // x <- a + 1/x
        i64 new_num = checked_add(checked_mul(*it, num), den);
        den = num;
        num = new_num;
    }
    return Rational(num, den);
}

NegString plus_to_minus(const PlusString& s) {
    if (s.size() % 2 != 0)
        throw std::invalid_argument("plus_to_minus requires an even-length string");
    const auto& a = s.terms;
    for (i64 x : a)
        if (x < 1) throw std::invalid_argument("plus_to_minus requires terms >= 1");
    std::vector<i64> out;
    out.push_back(a[0] + 1);
    for (i64 k = 0; k < a[1] - 1; ++k) out.push_back(2);
    for (std::size_t i = 2; i < a.size(); i += 2) {
        out.push_back(a[i] + 2);
        for (i64 k = 0; k < a[i + 1] - 1; ++k) out.push_back(2);
    }
    return NegString(std::move(out));
}

NegString point_rule_dual(const NegString& s) {
    if (s.terms.front() < 3)
        throw std::invalid_argument("point rule requires a leading term >= 3");
    // Decompose as [m1, 2^[m2], m3, 2^[m4], ...] with odd-slot entries >= 3.
    std::vector<i64> m;
    std::size_t i = 0;
    const auto& t = s.terms;
    while (i < t.size()) {
        m.push_back(t[i]);  // entry >= 3
        ++i;
        i64 run = 0;
        while (i < t.size() && t[i] == 2) { ++run; ++i; }
        m.push_back(run);
    }
    std::vector<i64> out;
    for (std::size_t j = 0; j < m.size(); j += 2) {
        i64 twos = m[j] - (j == 0 ? 2 : 3);
        for (i64 k = 0; k < twos; ++k) out.push_back(2);
        out.push_back(m[j + 1] + (j + 2 == m.size() ? 2 : 3));
    }
    return NegString(std::move(out));
}

NegString riemenschneider_dual(const NegString& s) {
    if (s.terms.front() >= 3) return point_rule_dual(s);
    Fraction pq = neg_eval(s);
    if (pq.p - pq.q == 0) throw std::logic_error("dual of p/p");
    return neg_expand(Fraction(pq.p, pq.p - pq.q));
}

NegString reverse_string(const NegString& s) {
    return NegString(std::vector<i64>(s.terms.rbegin(), s.terms.rend()));
}

Rational two_pow_eval(i64 t, const Rational& x) {
    if (t < 0) throw std::invalid_argument("two_pow_eval requires t >= 0");
    Rational tt(t, 1), one(1, 1);
    return ((tt + one) * x - tt) / (tt * x - (tt - one));
}

i64 negsum(const NegString& s) {
    i64 sum = 0;
    for (i64 a : s.terms) sum += a - 3;
    return sum;
}

}  // namespace lensball::cfrac
