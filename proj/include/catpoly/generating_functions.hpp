#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "errors.hpp"
#include "mpoly.hpp"
#include "series.hpp"

// Constructors for the generating functions of (>=,>=)-avoiding Catalan words.
// Every function returns coefficients of x^0 .. x^(order-1); series over
// nonempty words have a zero constant term.

namespace catpoly {

/// p uncapped (no geometric series in p is ever formed), q capped at the
/// largest area N(N+1)/2, v capped at N.
inline degree_caps default_caps(std::size_t order)
{
    const auto n = static_cast<std::uint32_t>(order);
    return {std::nullopt, n * (n + 1) / 2, n};
}

// ---------------------------------------------------------------------------
// Univariate building blocks

/// M(x) = (1 - x - sqrt(1 - 2x - 3x^2)) / (2x^2).
inline trunc_series gf_motzkin(std::size_t order)
{
    const std::size_t work = order + 2;
    const trunc_series root = motzkin_discriminant(work).sqrt();
    const trunc_series num = x_polynomial(work, {1, -1}) - root;
    return num.shifted_down(2, "gf_motzkin").scaled(make_rational(1, 2));
}

/// T(x) = 1 / sqrt(1 - 2x - 3x^2).
inline trunc_series gf_trinomial(std::size_t order)
{
    return x_polynomial(order, {1}) / motzkin_discriminant(order).sqrt();
}

// ---------------------------------------------------------------------------
// Functional equations solved by fixed-point iteration

/// Solves C = RHS(C) where [x^n] RHS only reads coefficients below n. Each
/// sweep updates coefficients in increasing n from the current iterate; the
/// iteration stops once a sweep changes nothing.
inline trunc_series solve_fixed_point(std::size_t order, const degree_caps &caps,
                                      const std::function<mpoly(const trunc_series &, std::size_t)> &rhs_coeff)
{
    trunc_series c(order, caps);
    const std::size_t max_sweeps = std::max<std::size_t>(order, 2);
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (std::size_t n = 0; n < order; ++n) {
            mpoly next = rhs_coeff(c, n).truncated(caps);
            if (!(next == c.coeff(n))) {
                c.set_coeff(n, next);
                changed = true;
            }
        }
        if (!changed) {
            return c;
        }
    }
    throw no_convergence(order);
}

/// C(x; p, q; v): length x, semiperimeter p, area q, last letter v.
inline trunc_series master_pqv(std::size_t order)
{
    const degree_caps caps = default_caps(order);
    const monomial qv{0, 1, 1};
    return solve_fixed_point(order, caps, [&](const trunc_series &c, std::size_t n) {
        mpoly out;
        if (n == 1) {
            out += mpoly(rational(1), monomial{2, 1, 0});
        }
        if (n == 2) {
            out += mpoly(rational(1), monomial{3, 2, 0});
        }
        if (n >= 1) {
            // p^2 q^2 x v C(x; p, q; qv)
            out += c.coeff(n - 1).substitute(var::v, monomial{0, 1, 1}, caps).times_term(1, {2, 2, 1}, caps);
        }
        if (n >= 2) {
            const mpoly &prev = c.coeff(n - 2);
            // p^3 q^3 x^2 / (1 - qv) C(x; p, q; q)
            out += prev.substitute(var::v, mono_q(), caps).div_one_minus(qv, caps).times_term(1, {3, 3, 0}, caps);
            // - p^3 q^5 x^2 v^2 / (1 - qv) C(x; p, q; q^2 v)
            out -= prev.substitute(var::v, monomial{0, 2, 1}, caps).div_one_minus(qv, caps).times_term(1, {3, 5, 2}, caps);
        }
        return out;
    });
}

/// C(x; q; v) with q marking interior points.
inline trunc_series master_interior_qv(std::size_t order)
{
    const degree_caps caps = default_caps(order);
    const monomial qv{0, 1, 1};
    return solve_fixed_point(order, caps, [&](const trunc_series &c, std::size_t n) {
        mpoly out;
        if (n == 1 || n == 2) {
            out += mpoly(1);
        }
        if (n >= 1) {
            out += c.coeff(n - 1).substitute(var::v, monomial{0, 1, 1}, caps).times_term(1, mono_v(), caps);
        }
        if (n >= 2) {
            const mpoly &prev = c.coeff(n - 2);
            out += prev.substitute(var::v, mono_q(), caps).div_one_minus(qv, caps);
            out -= prev.substitute(var::v, monomial{0, 2, 1}, caps).div_one_minus(qv, caps).times_term(1, {0, 2, 2}, caps);
        }
        return out;
    });
}

// ---------------------------------------------------------------------------
// Semiperimeter: kernel method closed forms

/// 1 - 2p^2 x + (p^4 - 4p^3) x^2.
inline trunc_series sper_discriminant(std::size_t order, degree_caps caps = {})
{
    return trunc_series::from_list(order,
                                   {mpoly(1), mpoly(-2, mono_p(2)), mpoly(1, mono_p(4)) - mpoly(4, mono_p(3))},
                                   caps);
}

/// S(x, p) = (1 - p^2 x - 2p^3 x^2 - sqrt(disc)) / (2 p^3 x^2).
inline trunc_series cf_S(std::size_t order)
{
    const std::size_t work = order + 2;
    const trunc_series num =
        trunc_series::from_list(work, {mpoly(1), mpoly(-1, mono_p(2)), mpoly(-2, mono_p(3))}) -
        sper_discriminant(work).sqrt();
    const trunc_series den = trunc_series::monomial_x(work, 2, mpoly(2, mono_p(3)));
    return exact_quotient(num, den, "cf_S");
}

/// C(x; p, 1; v) in closed form.
inline trunc_series cf_C_sper_v(std::size_t order)
{
    const degree_caps caps = default_caps(order);
    const mpoly v = mpoly(1, mono_v());
    const mpoly one_minus_v = mpoly(1) - v;
    // 1 + (1 - 2v) p^2 x - 2 v p^3 x^2 - sqrt(disc)
    const trunc_series num =
        trunc_series::from_list(order,
                                {mpoly(1), (mpoly(1) - v.scaled(2)) * mpoly(1, mono_p(2)), mpoly(-2, {3, 0, 1})},
                                caps) -
        sper_discriminant(order, caps).sqrt();
    // 2((1 - v) - p^2 v (1 - v) x + p^3 v^2 x^2)
    const trunc_series den =
        trunc_series::from_list(order,
                                {one_minus_v.scaled(2), (one_minus_v * mpoly(-2, {2, 0, 1})),
                                 mpoly(2, {3, 0, 2})},
                                caps);
    return exact_quotient(num, den, "cf_C_sper_v");
}

/// Small root v0 of the kernel 1 - p^2 x v + p^3 x^2 v^2 / (1 - v).
inline trunc_series kernel_root_v0(std::size_t order)
{
    const std::size_t work = order + 1;
    const trunc_series num =
        trunc_series::from_list(work, {mpoly(1), mpoly(1, mono_p(2))}) - sper_discriminant(work).sqrt();
    const trunc_series den = trunc_series::from_list(work, {mpoly(), mpoly(2, mono_p(2)), mpoly(2, mono_p(3))});
    return exact_quotient(num, den, "kernel_root_v0");
}

/// The kernel multiplied by (1 - v), evaluated at v = root:
/// (1 - v)(1 - p^2 x v) + p^3 x^2 v^2. Vanishes exactly when the kernel does,
/// and avoids dividing by 1 - v0, which has no invertible constant term.
inline trunc_series kernel_residual(const trunc_series &root)
{
    const std::size_t n = root.order();
    const trunc_series one = x_polynomial(n, {1});
    const trunc_series p2x = trunc_series::monomial_x(n, 1, mpoly(1, mono_p(2)));
    const trunc_series p3x2 = trunc_series::monomial_x(n, 2, mpoly(1, mono_p(3)));
    return (one - root) * (one - p2x * root) + p3x2 * root * root;
}

// ---------------------------------------------------------------------------
// Last letter

/// C(x; 1, 1; v) = (x(1 - v) - x^2 v + x^2 M(x)) / (1 - v - x v (1 - v) + x^2 v^2).
inline trunc_series cf_C_last(std::size_t order)
{
    const degree_caps caps = default_caps(order);
    const mpoly v = mpoly(1, mono_v());
    const mpoly one_minus_v = mpoly(1) - v;
    const trunc_series motz = gf_motzkin(order).with_caps(caps);
    const trunc_series num = trunc_series::from_list(order, {mpoly(), one_minus_v, -v}, caps) +
                             motz.shifted_up(2);
    const trunc_series den = trunc_series::from_list(order, {one_minus_v, -(v * one_minus_v), v * v}, caps);
    return exact_quotient(num, den, "cf_C_last");
}

// ---------------------------------------------------------------------------
// Totals: univariate closed forms in sqrt(1 - 2x - 3x^2)

/// Total of the last letter over words of length n.
inline trunc_series gf_h(std::size_t order)
{
    const std::size_t work = order + 4;
    const trunc_series root = motzkin_discriminant(work).sqrt();
    const trunc_series num =
        x_polynomial(work, {1, 1}) * (x_polynomial(work, {-1, 2}) * root + x_polynomial(work, {1, -3, 0, 2}));
    return exact_quotient(num, x_polynomial(work, {0, 0, 0, 0, 2}), "gf_h");
}

/// Total semiperimeter over words of length n.
inline trunc_series gf_s(std::size_t order)
{
    const std::size_t work = order + 2;
    const trunc_series root = motzkin_discriminant(work).sqrt();
    const trunc_series num = x_polynomial(work, {3, -4, -5}) + x_polynomial(work, {-3, 1}) * root;
    const trunc_series den = x_polynomial(work, {0, 0, 2}) * root;
    return exact_quotient(num, den, "gf_s");
}

/// Total area over words of length n.
inline trunc_series gf_u(std::size_t order)
{
    const std::size_t work = order + 4;
    const trunc_series root = motzkin_discriminant(work).sqrt();
    const trunc_series num = x_polynomial(work, {-1, 3, 1, -2}) * root + x_polynomial(work, {1, -4, 0, 7, 2});
    return exact_quotient(num, x_polynomial(work, {0, 0, 0, 0, -2, 4, 6}), "gf_u");
}

/// Total number of interior points over words of length n.
inline trunc_series gf_p(std::size_t order)
{
    const std::size_t work = order + 4;
    const trunc_series root = motzkin_discriminant(work).sqrt();
    const trunc_series num =
        x_polynomial(work, {-1, 3, 5, -8, -8}) * root + x_polynomial(work, {1, -4, -4, 17, 12, -10, -6});
    return exact_quotient(num, x_polynomial(work, {0, 0, 0, 0, -2, 4, 6}), "gf_p");
}

// ---------------------------------------------------------------------------
// Area: words ending with an ascent, and the product formula

namespace detail {

inline mpoly q_poly(std::initializer_list<std::pair<long, std::uint32_t>> terms)
{
    mpoly out;
    for (const auto &[c, e] : terms) {
        out += mpoly(rational(c), mono_q(e));
    }
    return out;
}

/// Ratio of two sums over j >= 1 of x^j * weight_j, assembled as
/// num_j x^j / (1 - sum den_j x^j).
inline trunc_series ratio_of_sums(std::size_t order, const degree_caps &caps,
                                  const std::function<std::pair<mpoly, mpoly>(std::size_t)> &terms)
{
    trunc_series num(order, caps);
    trunc_series den = x_polynomial(order, {1}, caps);
    for (std::size_t j = 1; j < order; ++j) {
        const auto [a, b] = terms(j);
        num.set_coeff(j, a);
        den.set_coeff(j, -b);
    }
    return num / den;
}

/// sum_{i>=1} x^i q^{offset(i)} prod_{j<i} (1 + F(x q^j, q)).
inline trunc_series staircase_product(const trunc_series &f, const std::function<std::uint32_t(std::size_t)> &offset)
{
    const std::size_t order = f.order();
    const degree_caps caps = f.caps();
    const trunc_series one = x_polynomial(order, {1}, caps);
    trunc_series out(order, caps);
    trunc_series prod = one;
    for (std::size_t i = 1; i < order; ++i) {
        // Only order - i coefficients of the partial product survive the x^i shift.
        const std::size_t need = order - i;
        const trunc_series factor = (one + f.subst_x_scale(static_cast<std::uint32_t>(i - 1))).truncated(need);
        prod = prod.truncated(need) * factor;
        for (std::size_t n = 0; n < need; ++n) {
            if (!prod.coeff(n).is_zero()) {
                out.set_coeff(n + i, out.coeff(n + i) + prod.coeff(n).times_term(1, mono_q(offset(i)), caps));
            }
        }
    }
    return out;
}

} // namespace detail

/// B(x, q): words of the class ending with a strict ascent, by length and area.
inline trunc_series sum_B(std::size_t order)
{
    const degree_caps caps = default_caps(order);
    // prod_{i<j} (1 - q^i + q^{2i}) / (1 - q^i), built incrementally.
    mpoly weight(1);
    std::size_t built = 1;
    return detail::ratio_of_sums(order, caps, [&](std::size_t j) {
        for (; built < j; ++built) {
            const auto i = static_cast<std::uint32_t>(built);
            weight = mpoly::multiply(weight, detail::q_poly({{1, 0}, {-1, i}, {1, 2 * i}}), caps)
                         .div_one_minus(mono_q(i), caps);
        }
        const long sign = (j % 2 == 1) ? 1 : -1;
        const auto jj = static_cast<std::uint32_t>(j);
        const mpoly head = weight.times_term(sign, mono_q(jj), caps);
        return std::pair{head, head.div_one_minus(mono_q(jj), caps)};
    });
}

/// B(x, q) from its continued fraction truncated at the given depth (the
/// deepest level is replaced by 1 + q^depth x).
inline trunc_series cf_B_contfrac(std::size_t order, std::size_t depth)
{
    if (depth < order) {
        throw depth_too_shallow(depth, order);
    }
    const degree_caps caps = default_caps(order);
    const trunc_series one = x_polynomial(order, {1}, caps);
    const auto qk_x = [&](std::size_t k) {
        return trunc_series::monomial_x(order, 1, mpoly(1, mono_q(static_cast<std::uint32_t>(k))), caps);
    };
    trunc_series level = one + qk_x(depth);
    for (std::size_t k = depth - 1; k >= 1; --k) {
        level = (one + qk_x(k)) * (one - qk_x(k + 1) / level);
    }
    return one / (one - qk_x(1) / level) - one;
}

/// C(x; 1, q; 1) = sum_i x^i q^{i(i+1)/2} prod_{j<i} (1 + B(x q^j, q)).
inline trunc_series prod_area(std::size_t order)
{
    return detail::staircase_product(sum_B(order), [](std::size_t i) {
        return static_cast<std::uint32_t>(i * (i + 1) / 2);
    });
}

// ---------------------------------------------------------------------------
// Interior points

/// H(x, q): words of the class ending with a strict ascent, by length and interior points.
inline trunc_series sum_H(std::size_t order)
{
    const degree_caps caps = default_caps(order);
    // prod_{i<j} (q^{i-1} - 1/(1 - q^i)).
    mpoly weight(1);
    std::size_t built = 1;
    return detail::ratio_of_sums(order, caps, [&](std::size_t j) {
        for (; built < j; ++built) {
            const auto i = static_cast<std::uint32_t>(built);
            const mpoly factor = mpoly(1, mono_q(i - 1)) - mpoly(1).div_one_minus(mono_q(i), caps);
            weight = mpoly::multiply(weight, factor, caps);
        }
        return std::pair{weight, weight.div_one_minus(mono_q(static_cast<std::uint32_t>(j)), caps)};
    });
}

/// C(x, q; 1) = sum_i x^i q^{(i-2)(i-1)/2} prod_{j<i} (1 + H(x q^j, q)).
inline trunc_series prod_interior(std::size_t order)
{
    return detail::staircase_product(sum_H(order), [](std::size_t i) {
        return static_cast<std::uint32_t>((i - 1) * (i >= 2 ? i - 2 : 0) / 2);
    });
}

} // namespace catpoly
