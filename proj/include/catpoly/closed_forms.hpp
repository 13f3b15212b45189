#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "numbers.hpp"

namespace catpoly {

/// Central trinomial coefficient: sum_k C(n,k) C(n-k,k).
inline big_int trinomial(unsigned long n)
{
    big_int sum = 0;
    for (unsigned long k = 0; 2 * k <= n; ++k) {
        sum += binomial(n, k) * binomial(n - k, k);
    }
    return sum;
}

/// m_n = (1/(n+1)) sum_i C(n+1, i) C(n+1-i, i+1).
inline big_int motzkin(unsigned long n)
{
    big_int sum = 0;
    for (unsigned long i = 0; 2 * i + 1 <= n + 1; ++i) {
        sum += binomial(n + 1, i) * binomial(n + 1 - i, i + 1);
    }
    return exact_div(sum, big_int(n + 1), "motzkin");
}

namespace detail {

// (1/2) * (c0 T_n + c1 T_{n+1} + ... ) + (three_pow ? 3^{n+1}/2 : 0).
inline big_int halved_trinomial_combination(unsigned long n, std::initializer_list<long> coeffs, bool three_pow,
                                            const char *what)
{
    if (n < 1) {
        throw internal_inconsistency(std::string(what) + " is defined for n >= 1");
    }
    big_int sum = three_pow ? pow_ui(3, n + 1) : big_int(0);
    unsigned long k = n;
    for (long c : coeffs) {
        sum += c * trinomial(k++);
    }
    return exact_div(sum, big_int(2), what);
}

} // namespace detail

/// Total of the last letter over words of length n.
inline big_int h_closed(unsigned long n)
{
    return detail::halved_trinomial_combination(n, {-6, -7, 3, 3, -1}, false, "h_closed");
}

/// Total semiperimeter.
inline big_int s_closed(unsigned long n)
{
    return detail::halved_trinomial_combination(n, {-5, -4, 3}, false, "s_closed");
}

/// Total area.
inline big_int u_closed(unsigned long n)
{
    return detail::halved_trinomial_combination(n, {0, 2, -1, -3, 1}, true, "u_closed");
}

/// Total number of interior points.
inline big_int p_closed(unsigned long n)
{
    return detail::halved_trinomial_combination(n, {8, 8, -5, -3, 1}, true, "p_closed");
}

// Leading-order asymptotics. Diagnostics only; overflow to +inf past n ~ 640.

inline double asym_h(unsigned long n)
{
    const double x = static_cast<double>(n);
    return 2.0 * std::sqrt(3.0) / std::sqrt(std::numbers::pi) * std::pow(3.0, x + 1) / std::pow(x, 1.5);
}

inline double asym_s(unsigned long n)
{
    const double x = static_cast<double>(n);
    return 5.0 * std::sqrt(3.0) / (2.0 * std::sqrt(std::numbers::pi)) * std::pow(3.0, x) / std::sqrt(x);
}

/// Shared by the area and interior-point totals.
inline double asym_up(unsigned long n)
{
    return std::pow(3.0, static_cast<double>(n) + 1) / 2.0;
}

/// Exact value divided by an approximation, computed in log space.
inline double ratio_to(const big_int &exact, double approx)
{
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, exact.get_mpz_t());
    return std::exp(std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2 - std::log(approx));
}

inline rational expected_last(unsigned long n)
{
    rational r(h_closed(n), motzkin(n));
    r.canonicalize();
    return r;
}

inline rational expected_sper(unsigned long n)
{
    rational r(s_closed(n), motzkin(n));
    r.canonicalize();
    return r;
}

} // namespace catpoly
