#pragma once

#include <algorithm>
#include <climits>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"

namespace catpoly {

/// The three markers carried by generating functions: p (semiperimeter),
/// q (area or interior points, depending on the constructor), v (last letter).
enum class var { p, q, v };

struct monomial {
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::uint32_t v = 0;

    std::uint32_t &operator[](var x) { return x == var::p ? p : x == var::q ? q : v; }
    std::uint32_t operator[](var x) const { return x == var::p ? p : x == var::q ? q : v; }

    bool is_one() const { return p == 0 && q == 0 && v == 0; }

    friend monomial operator*(monomial a, monomial b) { return {a.p + b.p, a.q + b.q, a.v + b.v}; }
    friend auto operator<=>(const monomial &, const monomial &) = default;
};

inline monomial mono_p(std::uint32_t e = 1) { return {e, 0, 0}; }
inline monomial mono_q(std::uint32_t e = 1) { return {0, e, 0}; }
inline monomial mono_v(std::uint32_t e = 1) { return {0, 0, e}; }

/// Per-variable inclusive degree bounds. Monomials exceeding a bound are
/// dropped by every operation; since exponents are non-negative the dropped
/// monomials form an ideal, so truncation commutes with ring operations.
struct degree_caps {
    std::optional<std::uint32_t> p;
    std::optional<std::uint32_t> q;
    std::optional<std::uint32_t> v;

    std::optional<std::uint32_t> operator[](var x) const { return x == var::p ? p : x == var::q ? q : v; }

    bool admits(const monomial &m) const
    {
        return (!p || m.p <= *p) && (!q || m.q <= *q) && (!v || m.v <= *v);
    }

    friend bool operator==(const degree_caps &, const degree_caps &) = default;
};

/// Sparse polynomial in p, q, v over the rationals. Terms are kept sorted by
/// exponent triple with no zero coefficients, so structural equality is
/// mathematical equality.
class mpoly {
public:
    using term = std::pair<monomial, rational>;

    mpoly() = default;
    mpoly(long c)
    {
        if (c != 0) {
            terms_.emplace_back(monomial{}, rational(c));
        }
    }
    mpoly(const rational &c)
    {
        if (c != 0) {
            terms_.emplace_back(monomial{}, c);
        }
    }
    mpoly(const rational &c, monomial m)
    {
        if (c != 0) {
            terms_.emplace_back(m, c);
        }
    }

    static mpoly from_map(const std::map<monomial, rational> &m)
    {
        mpoly out;
        out.terms_.reserve(m.size());
        for (const auto &[mono, c] : m) {
            if (c != 0) {
                out.terms_.emplace_back(mono, c);
            }
        }
        return out;
    }

    const std::vector<term> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    rational coeff(monomial m) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const term &t, const monomial &k) { return t.first < k; });
        return it != terms_.end() && it->first == m ? it->second : rational(0);
    }

    rational constant_term() const { return coeff(monomial{}); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

    std::uint32_t degree(var x) const
    {
        std::uint32_t d = 0;
        for (const auto &t : terms_) {
            d = std::max(d, t.first[x]);
        }
        return d;
    }

    std::uint32_t min_degree(var x) const
    {
        std::uint32_t d = UINT32_MAX;
        for (const auto &t : terms_) {
            d = std::min(d, t.first[x]);
        }
        return terms_.empty() ? 0 : d;
    }

    friend bool operator==(const mpoly &a, const mpoly &b) { return a.terms_ == b.terms_; }

    friend mpoly operator+(const mpoly &a, const mpoly &b) { return merge(a, b, false); }
    friend mpoly operator-(const mpoly &a, const mpoly &b) { return merge(a, b, true); }
    mpoly operator-() const
    {
        mpoly out = *this;
        for (auto &t : out.terms_) {
            t.second = -t.second;
        }
        return out;
    }
    mpoly &operator+=(const mpoly &b) { return *this = *this + b; }
    mpoly &operator-=(const mpoly &b) { return *this = *this - b; }

    friend mpoly operator*(const mpoly &a, const mpoly &b) { return multiply(a, b, degree_caps{}); }
    mpoly &operator*=(const mpoly &b) { return *this = *this * b; }

    static mpoly multiply(const mpoly &a, const mpoly &b, const degree_caps &caps)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        if (b.size() == 1) {
            return a.times_term(b.terms_[0].second, b.terms_[0].first, caps);
        }
        if (a.size() == 1) {
            return b.times_term(a.terms_[0].second, a.terms_[0].first, caps);
        }
        std::map<monomial, rational> acc;
        rational prod;
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                const monomial m = ma * mb;
                if (!caps.admits(m)) {
                    continue;
                }
                mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
                acc[m] += prod;
            }
        }
        return from_map(acc);
    }

    /// c * m * this, dropping monomials outside caps.
    mpoly times_term(const rational &c, monomial m, const degree_caps &caps = {}) const
    {
        mpoly out;
        if (c == 0) {
            return out;
        }
        out.terms_.reserve(terms_.size());
        for (const auto &[mono, coef] : terms_) {
            const monomial shifted = mono * m;
            if (caps.admits(shifted)) {
                out.terms_.emplace_back(shifted, coef * c);
            }
        }
        return out;
    }

    mpoly scaled(const rational &c) const { return times_term(c, monomial{}); }

    mpoly truncated(const degree_caps &caps) const
    {
        mpoly out;
        for (const auto &t : terms_) {
            if (caps.admits(t.first)) {
                out.terms_.push_back(t);
            }
        }
        return out;
    }

    /// Formal partial derivative.
    mpoly derivative(var x) const
    {
        std::map<monomial, rational> acc;
        for (const auto &[m, c] : terms_) {
            if (m[x] == 0) {
                continue;
            }
            monomial d = m;
            d[x] -= 1;
            acc[d] += c * m[x];
        }
        return from_map(acc);
    }

    /// Sets x = 1.
    mpoly eval_one(var x) const
    {
        std::map<monomial, rational> acc;
        for (const auto &[m, c] : terms_) {
            monomial d = m;
            d[x] = 0;
            acc[d] += c;
        }
        return from_map(acc);
    }

    /// Replaces x by the monomial image (x^e -> image^e), dropping terms outside caps.
    mpoly substitute(var x, monomial image, const degree_caps &caps = {}) const
    {
        std::map<monomial, rational> acc;
        for (const auto &[m, c] : terms_) {
            monomial d = m;
            const std::uint32_t e = d[x];
            d[x] = 0;
            d = d * monomial{image.p * e, image.q * e, image.v * e};
            if (caps.admits(d)) {
                acc[d] += c;
            }
        }
        return from_map(acc);
    }

    /// Divides every term by c * m; throws internal_inconsistency if some term is not divisible by m.
    mpoly divide_exact(const rational &c, monomial m, const char *what) const
    {
        mpoly out;
        out.terms_.reserve(terms_.size());
        for (const auto &[mono, coef] : terms_) {
            if (mono.p < m.p || mono.q < m.q || mono.v < m.v) {
                throw internal_inconsistency(std::string("monomial division not exact in ") + what);
            }
            out.terms_.emplace_back(monomial{mono.p - m.p, mono.q - m.q, mono.v - m.v}, coef / c);
        }
        return out;
    }

    /// this / (1 - m) expanded as a geometric series under caps. m must be a
    /// non-constant monomial with at least one capped variable.
    mpoly div_one_minus(monomial m, const degree_caps &caps) const
    {
        const bool bounded = (m.p > 0 && caps.p) || (m.q > 0 && caps.q) || (m.v > 0 && caps.v);
        if (m.is_one() || !bounded) {
            throw non_unit_divisor();
        }
        mpoly sum = truncated(caps);
        mpoly term = sum;
        while (!term.is_zero()) {
            term = term.times_term(rational(1), m, caps);
            sum += term;
        }
        return sum;
    }

    /// Multiplicative inverse in the ring truncated at caps. Requires a nonzero
    /// constant term, and every variable of the non-constant part must be capped.
    mpoly inverse(const degree_caps &caps) const
    {
        const rational c0 = constant_term();
        if (c0 == 0) {
            throw non_unit_divisor();
        }
        mpoly rest = *this - mpoly(c0);
        for (const auto &[m, c] : rest.terms_) {
            (void)c;
            const bool bounded = (m.p > 0 && caps.p) || (m.q > 0 && caps.q) || (m.v > 0 && caps.v);
            if (!bounded) {
                throw non_unit_divisor();
            }
        }
        // 1/(c0 (1 + r)) = (1/c0) * sum (-r)^k, r = rest / c0; terminates since
        // every power of r raises some capped degree.
        const rational inv0 = 1 / c0;
        const mpoly neg_r = rest.scaled(-inv0).truncated(caps);
        mpoly sum(1);
        mpoly power(1);
        while (true) {
            power = multiply(power, neg_r, caps);
            if (power.is_zero()) {
                break;
            }
            sum += power;
        }
        return sum.scaled(inv0);
    }

    /// Canonical text: terms in ascending (p, q, v) order, e.g. "2+p^2q+3v^2";
    /// non-integer coefficients are parenthesised, as in "(1/2)p".
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto &[m, c] = terms_[i];
            rational mag = c;
            if (c < 0) {
                out += "-";
                mag = -c;
            } else if (i > 0) {
                out += "+";
            }
            std::string vars;
            const auto put = [&](char name, std::uint32_t e) {
                if (e == 0) {
                    return;
                }
                vars.push_back(name);
                if (e > 1) {
                    vars += "^" + std::to_string(e);
                }
            };
            put('p', m.p);
            put('q', m.q);
            put('v', m.v);
            const bool unit = mag == 1;
            if (!unit || vars.empty()) {
                out += is_integer(mag) ? mag.get_str() : "(" + mag.get_str() + ")";
            }
            out += vars;
        }
        return out;
    }

private:
    static mpoly merge(const mpoly &a, const mpoly &b, bool negate_b)
    {
        mpoly out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                out.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                out.terms_.emplace_back(ib->first, negate_b ? rational(-ib->second) : ib->second);
                ++ib;
            } else {
                rational c = negate_b ? rational(ia->second - ib->second) : rational(ia->second + ib->second);
                if (c != 0) {
                    out.terms_.emplace_back(ia->first, std::move(c));
                }
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    std::vector<term> terms_;
};

} // namespace catpoly
