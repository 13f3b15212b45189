#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace catpoly {

using big_int = mpz_class;
using rational = mpq_class;

inline rational make_rational(long num, long den = 1)
{
    rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const big_int &z) { return z.get_str(); }

inline std::string to_string(const rational &r) { return r.get_str(); }

inline big_int binomial(unsigned long n, unsigned long k)
{
    big_int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline big_int pow_ui(unsigned long base, unsigned long exp)
{
    big_int out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

// Exact integer quotient; throws if den does not divide num.
inline big_int exact_div(const big_int &num, const big_int &den, const char *what)
{
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw internal_inconsistency(std::string("inexact division in ") + what);
    }
    big_int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline bool is_integer(const rational &r) { return r.get_den() == 1; }

} // namespace catpoly
