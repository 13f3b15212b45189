#include <gtest/gtest.h>

#include <catpoly/closed_forms.hpp>
#include <catpoly/generating_functions.hpp>
#include <catpoly/oracles.hpp>

#include "oracle_util.hpp"

using namespace catpoly;

TEST(ClosedForms, MotzkinAndTrinomial)
{
    const auto m = test_oracle::motzkin_numbers(200);
    for (unsigned long n = 0; n <= 200; ++n) {
        ASSERT_EQ(motzkin(n), m[n]) << n;
    }
    EXPECT_EQ(trinomial(6), big_int(141));
    // Central trinomials satisfy n T_n = (2n-1) T_{n-1} + 3(n-1) T_{n-2}.
    for (unsigned long n = 2; n <= 200; ++n) {
        ASSERT_EQ(n * trinomial(n), (2 * n - 1) * trinomial(n - 1) + 3 * (n - 1) * trinomial(n - 2)) << n;
    }
}

TEST(ClosedForms, MatchSeriesThroughThirty)
{
    const trunc_series h = gf_h(31), s = gf_s(31), u = gf_u(31), p = gf_p(31);
    for (unsigned long n = 1; n <= 30; ++n) {
        EXPECT_EQ(h.coeff(n), mpoly(rational(h_closed(n)))) << n;
        EXPECT_EQ(s.coeff(n), mpoly(rational(s_closed(n)))) << n;
        EXPECT_EQ(u.coeff(n), mpoly(rational(u_closed(n)))) << n;
        EXPECT_EQ(p.coeff(n), mpoly(rational(p_closed(n)))) << n;
    }
}

TEST(ClosedForms, MatchBitmapSumsThroughTen)
{
    for (unsigned long n = 1; n <= 10; ++n) {
        long h = 0, s = 0, u = 0, p = 0;
        for (const auto &w : test_oracle::geqgeq_sequences(n)) {
            const auto g = test_oracle::measure(w);
            h += w.back();
            s += g.sper;
            u += g.area;
            p += g.inter;
        }
        EXPECT_EQ(h_closed(n), big_int(h)) << n;
        EXPECT_EQ(s_closed(n), big_int(s)) << n;
        EXPECT_EQ(u_closed(n), big_int(u)) << n;
        EXPECT_EQ(p_closed(n), big_int(p)) << n;
    }
}

TEST(ClosedForms, MatchLibraryEnumerationThroughTwelve)
{
    using oracle::statistic;
    for (unsigned long n = 11; n <= 12; ++n) {
        EXPECT_EQ(oracle::total(n, statistic::last), h_closed(n));
        EXPECT_EQ(oracle::total(n, statistic::sper), s_closed(n));
        EXPECT_EQ(oracle::total(n, statistic::area), u_closed(n));
        EXPECT_EQ(oracle::total(n, statistic::inter), p_closed(n));
    }
}

TEST(ClosedForms, DomainGuard)
{
    EXPECT_THROW(h_closed(0), internal_inconsistency);
    EXPECT_NO_THROW(p_closed(1000));
}

TEST(Asymptotics, RatiosApproachOne)
{
    const auto check = [](double near, double far) {
        EXPECT_GE(far, 0.85);
        EXPECT_LE(far, 1.15);
        EXPECT_LT(std::abs(far - 1), std::abs(near - 1));
    };
    check(ratio_to(h_closed(50), asym_h(50)), ratio_to(h_closed(300), asym_h(300)));
    check(ratio_to(s_closed(50), asym_s(50)), ratio_to(s_closed(300), asym_s(300)));
    check(ratio_to(u_closed(50), asym_up(50)), ratio_to(u_closed(300), asym_up(300)));
    check(ratio_to(p_closed(50), asym_up(50)), ratio_to(p_closed(300), asym_up(300)));
}

TEST(Expectations, ExactRationals)
{
    EXPECT_EQ(expected_last(2), make_rational(1, 2));
    EXPECT_EQ(expected_sper(1), rational(2));
    EXPECT_EQ(expected_sper(4), make_rational(62, 9));
}
