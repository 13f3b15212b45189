#include <gtest/gtest.h>

#include <map>

#include <catpoly/generating_functions.hpp>

#include "oracle_util.hpp"

using namespace catpoly;

namespace {

mpoly monomial_sum(std::initializer_list<std::pair<long, monomial>> terms)
{
    mpoly out;
    for (const auto &[c, m] : terms) {
        out += mpoly(rational(c), m);
    }
    return out;
}

/// Histogram of (sper, area or interior, last) over naive (>=,>=) sequences.
trunc_series naive_histogram(std::size_t order, bool interior, bool only_ascent_ending = false)
{
    std::vector<mpoly> coeffs(order);
    for (std::size_t n = 1; n < order; ++n) {
        std::map<monomial, rational> acc;
        for (const auto &s : test_oracle::geqgeq_sequences(n)) {
            if (only_ascent_ending && n >= 2 && s[n - 2] >= s[n - 1]) {
                continue;
            }
            const auto g = test_oracle::measure(s);
            acc[monomial{static_cast<std::uint32_t>(g.sper),
                         static_cast<std::uint32_t>(interior ? g.inter : g.area),
                         static_cast<std::uint32_t>(s.back())}] += 1;
        }
        coeffs[n] = mpoly::from_map(acc);
    }
    return trunc_series(std::move(coeffs), degree_caps{});
}

trunc_series only(const trunc_series &s, std::initializer_list<var> drop)
{
    trunc_series out = s;
    for (var x : drop) {
        out = out.eval_one(x);
    }
    return out;
}

} // namespace

TEST(Univariate, MotzkinAndTrinomial)
{
    const auto m = test_oracle::motzkin_numbers(30);
    const trunc_series M = gf_motzkin(30), T = gf_trinomial(8);
    for (std::size_t n = 0; n < 30; ++n) {
        EXPECT_EQ(M.coeff(n), mpoly(rational(m[n])));
    }
    const long t[] = {1, 1, 3, 7, 19, 51, 141, 393};
    for (std::size_t n = 0; n < 8; ++n) {
        EXPECT_EQ(T.coeff(n), mpoly(t[n]));
    }
}

TEST(Totals, PrintedSequences)
{
    const long h[] = {0, 1, 4, 12, 34, 94, 258, 707, 1940, 5337};
    const long s[] = {2, 7, 21, 62, 180, 522, 1512, 4384, 12726, 36995};
    const long u[] = {1, 5, 19, 66, 218, 701, 2215, 6919, 21438, 66034};
    const long p[] = {0, 0, 2, 13, 59, 230, 830, 2858, 9547, 31227};
    const trunc_series H = gf_h(11), S = gf_s(11), U = gf_u(11), P = gf_p(11);
    for (std::size_t n = 1; n <= 10; ++n) {
        EXPECT_EQ(H.coeff(n), mpoly(h[n - 1])) << n;
        EXPECT_EQ(S.coeff(n), mpoly(s[n - 1])) << n;
        EXPECT_EQ(U.coeff(n), mpoly(u[n - 1])) << n;
        EXPECT_EQ(P.coeff(n), mpoly(p[n - 1])) << n;
    }
}

TEST(Master, MatchesNaiveHistogramThroughNine)
{
    const std::size_t order = 10;
    EXPECT_EQ(master_pqv(order), naive_histogram(order, false));
    EXPECT_EQ(only(master_interior_qv(order), {}), only(naive_histogram(order, true), {var::p}));
}

TEST(Master, BoldCoefficients)
{
    EXPECT_EQ(cf_C_last(5).coeff(4), monomial_sum({{2, {}}, {3, mono_v()}, {3, mono_v(2)}, {1, mono_v(3)}}));
    EXPECT_EQ(cf_S(5).coeff(4), monomial_sum({{2, mono_p(6)}, {6, mono_p(7)}, {1, mono_p(8)}}));
    EXPECT_EQ(prod_area(6).coeff(5).coeff(mono_q(9)), rational(5));
    EXPECT_EQ(prod_interior(6).coeff(5).coeff(mono_q(3)), rational(5));
    EXPECT_EQ(cf_C_sper_v(5).coeff(4),
              monomial_sum({{1, mono_p(6)}, {1, monomial{6, 0, 1}}, {1, mono_p(7)}, {2, monomial{7, 0, 1}},
                            {3, monomial{7, 0, 2}}, {1, monomial{8, 0, 3}}}));
}

TEST(ClosedForms, AgreeWithMasterSpecializations)
{
    const std::size_t order = 12;
    const trunc_series master = master_pqv(order);
    EXPECT_EQ(cf_S(order), only(master, {var::q, var::v}));
    EXPECT_EQ(cf_C_sper_v(order), only(master, {var::q}));
    EXPECT_EQ(cf_C_last(order), only(master, {var::p, var::q}));
    EXPECT_EQ(prod_area(order), only(master, {var::p, var::v}));
    EXPECT_EQ(prod_interior(order), only(master_interior_qv(order), {var::v}));
}

TEST(Products, MatchNaiveEnumeration)
{
    const std::size_t order = 10;
    EXPECT_EQ(prod_area(order), only(naive_histogram(order, false), {var::p, var::v}));
    EXPECT_EQ(prod_interior(order), only(naive_histogram(order, true), {var::p, var::v}));
    EXPECT_EQ(sum_B(order), only(naive_histogram(order, false, true), {var::p, var::v}));
    EXPECT_EQ(sum_H(order), only(naive_histogram(order, true, true), {var::p, var::v}));
    EXPECT_EQ(sum_B(5).coeff(4), monomial_sum({{1, mono_q(6)}, {1, mono_q(7)}, {1, mono_q(8)}, {1, mono_q(10)}}));
    EXPECT_EQ(sum_H(5).coeff(4), monomial_sum({{1, {}}, {1, mono_q()}, {1, mono_q(2)}, {1, mono_q(3)}}));
}

TEST(Kernel, RootAnnihilatesKernelThroughOrderTwenty)
{
    const trunc_series v0 = kernel_root_v0(20);
    EXPECT_TRUE(kernel_residual(v0).is_zero());
    EXPECT_TRUE(v0.coeff(0) == mpoly(1));
    EXPECT_TRUE(v0.coeff(1).is_zero());
    EXPECT_EQ(v0.coeff(2), mpoly(1, mono_p(3)));
    EXPECT_EQ(v0.coeff(3), mpoly(1, mono_p(5)));
    EXPECT_EQ(v0.coeff(4), monomial_sum({{2, mono_p(6)}, {1, mono_p(7)}}));
}

TEST(ContinuedFraction, EqualsSumThroughTwelve)
{
    for (std::size_t n = 1; n <= 12; ++n) {
        EXPECT_EQ(cf_B_contfrac(n, n), sum_B(n)) << n;
    }
    EXPECT_EQ(cf_B_contfrac(8, 15), sum_B(8));
    EXPECT_THROW(cf_B_contfrac(8, 7), depth_too_shallow);
}

TEST(Derivatives, TotalsFromMarkedSeries)
{
    const std::size_t order = 14;
    EXPECT_EQ(cf_C_last(order).derivative(var::v).eval_one(var::v), gf_h(order));
    EXPECT_EQ(cf_S(order).derivative(var::p).eval_one(var::p), gf_s(order));
    EXPECT_EQ(prod_area(order).derivative(var::q).eval_one(var::q), gf_u(order));
    EXPECT_EQ(prod_interior(order).derivative(var::q).eval_one(var::q), gf_p(order));
    EXPECT_EQ(cf_S(order).eval_one(var::p), gf_motzkin(order) - x_polynomial(order, {1}));
}

TEST(FixedPoint, DeterministicAcrossRuns)
{
    EXPECT_EQ(master_pqv(9), master_pqv(9));
    EXPECT_EQ(default_caps(5).q, std::optional<std::uint32_t>(15));
}
