#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "mpoly.hpp"
#include "numbers.hpp"

namespace catpoly {

namespace detail {

inline std::optional<std::uint32_t> tighter(std::optional<std::uint32_t> a, std::optional<std::uint32_t> b)
{
    if (!a) {
        return b;
    }
    if (!b) {
        return a;
    }
    return std::min(*a, *b);
}

inline degree_caps meet(const degree_caps &a, const degree_caps &b)
{
    return {tighter(a.p, b.p), tighter(a.q, b.q), tighter(a.v, b.v)};
}

} // namespace detail

/// Power series in x known modulo x^order, with mpoly coefficients and
/// optional degree caps applied uniformly by every operation.
class trunc_series {
public:
    explicit trunc_series(std::size_t order = 0, degree_caps caps = {}) : coeffs_(order), caps_(caps) {}

    trunc_series(std::vector<mpoly> coeffs, degree_caps caps) : coeffs_(std::move(coeffs)), caps_(caps)
    {
        for (auto &c : coeffs_) {
            c = c.truncated(caps_);
        }
    }

    /// c * x^k modulo x^order.
    static trunc_series monomial_x(std::size_t order, std::size_t k, const mpoly &c = mpoly(1),
                                   degree_caps caps = {})
    {
        trunc_series s(order, caps);
        if (k < order) {
            s.coeffs_[k] = c.truncated(caps);
        }
        return s;
    }

    /// Series with the given leading coefficients (rest zero).
    static trunc_series from_list(std::size_t order, std::initializer_list<mpoly> cs, degree_caps caps = {})
    {
        trunc_series s(order, caps);
        std::size_t k = 0;
        for (const auto &c : cs) {
            if (k < order) {
                s.coeffs_[k] = c.truncated(caps);
            }
            ++k;
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size(); }
    const degree_caps &caps() const noexcept { return caps_; }
    const std::vector<mpoly> &coeffs() const noexcept { return coeffs_; }

    const mpoly &coeff(std::size_t n) const
    {
        if (n >= coeffs_.size()) {
            throw std::out_of_range("coefficient " + std::to_string(n) + " beyond order " +
                                    std::to_string(coeffs_.size()));
        }
        return coeffs_[n];
    }

    void set_coeff(std::size_t n, const mpoly &c)
    {
        if (n >= coeffs_.size()) {
            throw std::out_of_range("coefficient index beyond order");
        }
        coeffs_[n] = c.truncated(caps_);
    }

    friend bool operator==(const trunc_series &a, const trunc_series &b) { return a.coeffs_ == b.coeffs_; }

    // --- ring operations -------------------------------------------------

    friend trunc_series operator+(const trunc_series &a, const trunc_series &b)
    {
        check_order(a, b);
        trunc_series out(a.order(), detail::meet(a.caps_, b.caps_));
        for (std::size_t n = 0; n < a.order(); ++n) {
            out.coeffs_[n] = (a.coeffs_[n] + b.coeffs_[n]).truncated(out.caps_);
        }
        return out;
    }

    friend trunc_series operator-(const trunc_series &a, const trunc_series &b)
    {
        check_order(a, b);
        trunc_series out(a.order(), detail::meet(a.caps_, b.caps_));
        for (std::size_t n = 0; n < a.order(); ++n) {
            out.coeffs_[n] = (a.coeffs_[n] - b.coeffs_[n]).truncated(out.caps_);
        }
        return out;
    }

    trunc_series operator-() const
    {
        return map([](const mpoly &c) { return -c; });
    }

    friend trunc_series operator*(const trunc_series &a, const trunc_series &b)
    {
        check_order(a, b);
        const degree_caps caps = detail::meet(a.caps_, b.caps_);
        trunc_series out(a.order(), caps);
        for (std::size_t i = 0; i < a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j < a.order(); ++j) {
                if (b.coeffs_[j].is_zero()) {
                    continue;
                }
                out.coeffs_[i + j] += mpoly::multiply(a.coeffs_[i], b.coeffs_[j], caps);
            }
        }
        return out;
    }

    /// Coefficient-wise multiplication by a polynomial.
    trunc_series operator*(const mpoly &c) const
    {
        const degree_caps caps = caps_;
        return map([&](const mpoly &a) { return mpoly::multiply(a, c, caps); });
    }

    trunc_series scaled(const rational &r) const
    {
        return map([&](const mpoly &a) { return a.scaled(r); });
    }

    /// a / b; the constant term of b must be a unit of the capped polynomial ring.
    friend trunc_series operator/(const trunc_series &a, const trunc_series &b)
    {
        check_order(a, b);
        const degree_caps caps = detail::meet(a.caps_, b.caps_);
        const mpoly inv0 = b.coeffs_.empty() ? mpoly(1) : b.coeffs_[0].inverse(caps);
        trunc_series out(a.order(), caps);
        for (std::size_t n = 0; n < a.order(); ++n) {
            mpoly acc = a.coeffs_[n];
            for (std::size_t k = 1; k <= n; ++k) {
                if (!b.coeffs_[k].is_zero() && !out.coeffs_[n - k].is_zero()) {
                    acc -= mpoly::multiply(b.coeffs_[k], out.coeffs_[n - k], caps);
                }
            }
            out.coeffs_[n] = mpoly::multiply(acc, inv0, caps);
        }
        return out;
    }

    /// Square root of a series whose constant term is exactly 1.
    trunc_series sqrt() const
    {
        if (order() == 0) {
            return *this;
        }
        if (!(coeffs_[0] == mpoly(1))) {
            throw bad_sqrt_constant_term();
        }
        trunc_series out(order(), caps_);
        out.coeffs_[0] = mpoly(1);
        const rational half = make_rational(1, 2);
        for (std::size_t n = 1; n < order(); ++n) {
            mpoly acc = coeffs_[n];
            for (std::size_t k = 1; k < n; ++k) {
                acc -= mpoly::multiply(out.coeffs_[k], out.coeffs_[n - k], caps_);
            }
            out.coeffs_[n] = acc.scaled(half);
        }
        return out;
    }

    // --- coefficient-wise transforms ---------------------------------------

    trunc_series map(const std::function<mpoly(const mpoly &)> &f) const
    {
        trunc_series out(order(), caps_);
        for (std::size_t n = 0; n < order(); ++n) {
            out.coeffs_[n] = f(coeffs_[n]).truncated(caps_);
        }
        return out;
    }

    trunc_series derivative(var x) const
    {
        return map([x](const mpoly &c) { return c.derivative(x); });
    }

    trunc_series eval_one(var x) const
    {
        trunc_series out = map([x](const mpoly &c) { return c.eval_one(x); });
        return out;
    }

    /// x -> x q^j.
    trunc_series subst_x_scale(std::uint32_t j) const
    {
        trunc_series out(order(), caps_);
        for (std::size_t n = 0; n < order(); ++n) {
            out.coeffs_[n] = coeffs_[n].times_term(rational(1), mono_q(j * static_cast<std::uint32_t>(n)), caps_);
        }
        return out;
    }

    /// v -> q^k v.
    trunc_series subst_v_monomial(std::uint32_t k) const
    {
        return substitute(var::v, monomial{0, k, 1});
    }

    trunc_series substitute(var x, monomial image) const
    {
        const degree_caps caps = caps_;
        return map([&](const mpoly &c) { return c.substitute(x, image, caps); });
    }

    // --- order management ------------------------------------------------

    /// Same series modulo x^new_order (new_order <= order).
    trunc_series truncated(std::size_t new_order) const
    {
        if (new_order > order()) {
            throw order_mismatch(new_order, order());
        }
        trunc_series out(new_order, caps_);
        std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order), out.coeffs_.begin());
        return out;
    }

    trunc_series with_caps(const degree_caps &caps) const
    {
        return trunc_series(coeffs_, caps);
    }

    /// Division by x^k; the k lowest coefficients must vanish. Loses k orders.
    trunc_series shifted_down(std::size_t k, const char *what = "shift") const
    {
        if (k > order()) {
            throw order_mismatch(k, order());
        }
        for (std::size_t n = 0; n < k; ++n) {
            if (!coeffs_[n].is_zero()) {
                throw internal_inconsistency(std::string("low-order coefficient does not vanish in ") + what);
            }
        }
        trunc_series out(order() - k, caps_);
        std::copy(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end(), out.coeffs_.begin());
        return out;
    }

    /// Multiplication by x^k modulo x^order.
    trunc_series shifted_up(std::size_t k) const
    {
        trunc_series out(order(), caps_);
        for (std::size_t n = k; n < order(); ++n) {
            out.coeffs_[n] = coeffs_[n - k];
        }
        return out;
    }

    /// Smallest n with a nonzero coefficient, or order() for the zero series.
    std::size_t valuation() const
    {
        std::size_t n = 0;
        while (n < order() && coeffs_[n].is_zero()) {
            ++n;
        }
        return n;
    }

    bool is_zero() const { return valuation() == order(); }

private:
    static void check_order(const trunc_series &a, const trunc_series &b)
    {
        if (a.order() != b.order()) {
            throw order_mismatch(a.order(), b.order());
        }
    }

    std::vector<mpoly> coeffs_;
    degree_caps caps_;
};

/// num / den where den may carry a monomial factor (x^k and a common p,q,v
/// monomial). The factor is first divided out of both operands, and must
/// divide num exactly; otherwise internal_inconsistency is thrown. The result
/// has order num.order() - k.
inline trunc_series exact_quotient(const trunc_series &num, const trunc_series &den, const char *what)
{
    if (num.order() != den.order()) {
        throw order_mismatch(num.order(), den.order());
    }
    const std::size_t k = den.valuation();
    if (k == den.order()) {
        throw non_unit_divisor();
    }
    monomial common{UINT32_MAX, UINT32_MAX, UINT32_MAX};
    for (const auto &c : den.coeffs()) {
        if (c.is_zero()) {
            continue;
        }
        common.p = std::min(common.p, c.min_degree(var::p));
        common.q = std::min(common.q, c.min_degree(var::q));
        common.v = std::min(common.v, c.min_degree(var::v));
    }
    const auto strip = [&](const trunc_series &s) {
        return s.map([&](const mpoly &c) { return c.divide_exact(rational(1), common, what); })
            .shifted_down(k, what);
    };
    return strip(num) / strip(den);
}

/// 1 - 2x - 3x^2, the discriminant shared by the Motzkin-family closed forms.
inline trunc_series motzkin_discriminant(std::size_t order)
{
    return trunc_series::from_list(order, {mpoly(1), mpoly(-2), mpoly(-3)});
}

/// Polynomial in x with rational coefficients, lowest degree first.
inline trunc_series x_polynomial(std::size_t order, std::initializer_list<long> cs, degree_caps caps = {})
{
    trunc_series s(order, caps);
    std::size_t k = 0;
    for (long c : cs) {
        if (k < order) {
            s.set_coeff(k, mpoly(c));
        }
        ++k;
    }
    return s;
}

} // namespace catpoly
