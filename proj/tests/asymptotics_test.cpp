#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "wreath/asymptotics.hpp"

using namespace wreath;

namespace {

constexpr double pi = std::numbers::pi;

double ratio_to_exact(const Estimate& e, const integer& exact)
{
    return std::exp(e.log_value - log_of(exact));
}

} // namespace

TEST(LogOf, MatchesDoubleLogAndHandlesHugeValues)
{
    EXPECT_NEAR(log_of(integer(1000)), std::log(1000.0), 1e-14);
    integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 1000);
    EXPECT_NEAR(log_of(big), 1000 * std::log(10.0), 1e-9);
    EXPECT_THROW(log_of(integer(0)), std::domain_error);
}

TEST(CdfParams, SingleEntry)
{
    const auto p = cdf_params(ExponentVector({1}));
    EXPECT_EQ(p.d, 1);
    EXPECT_EQ(p.gamma_total, 1);
    EXPECT_EQ(p.delta, 1);
    EXPECT_NEAR(p.a_const, pi * pi / 6, 1e-15);
    EXPECT_NEAR(p.log_prefactor, -0.5 * std::log(2 * pi), 1e-15);
}

TEST(CdfParams, OnlySecondIndexActive)
{
    const auto p = cdf_params(ExponentVector({0, 3}));
    EXPECT_EQ(p.d, 2);
    EXPECT_EQ(p.gamma_total, 3);
    EXPECT_EQ(p.delta, 3);
    EXPECT_NEAR(p.a_const, pi * pi / 2, 1e-14);
    EXPECT_NEAR(p.log_prefactor, -1.5 * std::log(2 * pi), 1e-14);
}

TEST(CdfParams, MixedEntries)
{
    const auto p = cdf_params(ExponentVector({2, 1}));
    EXPECT_EQ(p.d, 1);
    EXPECT_EQ(p.gamma_total, 3);
    EXPECT_EQ(p.delta, rational(5, 2));
    EXPECT_NEAR(p.log_prefactor, std::log(1 / (2 * pi)) + 0.5 * std::log(2 / (2 * pi)), 1e-14);
}

TEST(CdfEstimate, PartitionsAtHundred)
{
    const auto e = cdf_estimate(ExponentVector({1}), 100);
    const double r = ratio_to_exact(e, partition_count(100));
    EXPECT_LT(std::fabs(r - 1), 0.05);
    EXPECT_NEAR(r, 1.0457135630736358, 1e-12);
}

TEST(CdfEstimate, ErrorShrinksWithN)
{
    const auto p = partition_counts(400);
    const double at100 = std::fabs(ratio_to_exact(cdf_estimate(ExponentVector({1}), 100), p[100]) - 1);
    const double at400 = std::fabs(ratio_to_exact(cdf_estimate(ExponentVector({1}), 400), p[400]) - 1);
    EXPECT_LT(at400, at100);
    EXPECT_NEAR(at400, 0.022503277648237127, 1e-12);
}

TEST(CdfEstimate, SeriesIndexWrapper)
{
    const ExponentVector e({0, 3});
    EXPECT_DOUBLE_EQ(cdf_estimate_at(e, 40).log_value, cdf_estimate(e, 20).log_value);
    EXPECT_THROW(cdf_estimate_at(e, 41), std::invalid_argument);
    EXPECT_THROW(cdf_estimate_at(e, 0), std::invalid_argument);
}

TEST(CdfEstimate, OverflowKeepsLog)
{
    const auto e = sym_estimate(10, 1'000'000);
    EXPECT_FALSE(e.value.has_value());
    EXPECT_TRUE(std::isfinite(e.log_value));
    EXPECT_TRUE(sym_estimate(10, 100).value.has_value());
}

TEST(SymEstimate, AgreesWithGenericEstimate)
{
    for (std::int64_t m = 1; m <= 12; ++m)
        for (std::uint64_t n = 10; n <= 1'000'000; n *= 10) {
            const double a = sym_estimate(m, n).log_value;
            const double b = cdf_estimate(ExponentVector({m}), n).log_value;
            EXPECT_LT(std::fabs(a - b), 1e-12 * std::fabs(b)) << m << ' ' << n;
        }
}

TEST(SymEstimate, ClassicalPartitionAsymptotic)
{
    const double n = 100;
    const double classical = std::exp(pi * std::sqrt(2 * n / 3)) / (4 * n * std::sqrt(3.0));
    EXPECT_NEAR(*sym_estimate(1, 100).value / classical, 1.0, 1e-13);
}

TEST(SymEstimate, AgainstExactAtFiveHundred)
{
    // Leading-order only: the relative error is still about 19% here.
    const auto exact = growth_series(GroupSpec::sym(10), 500).integer_coeffs();
    EXPECT_NEAR(ratio_to_exact(sym_estimate(10, 500), exact[500]), 1.1873651757718929, 1e-11);
}

TEST(AltEstimate, AgreesWithGenericEstimate)
{
    for (std::int64_t m = 1; m <= 12; ++m)
        for (std::uint64_t n = 10; n <= 1'000'000; n *= 10) {
            const double a = alt_estimate(m, n).log_value;
            const double b = cdf_estimate(ExponentVector({2 * m}), n).log_value
                             - static_cast<double>(m) * std::log(2.0);
            EXPECT_LT(std::fabs(a - b), 1e-12 * std::fabs(b)) << m << ' ' << n;
        }
}

TEST(AltEstimate, AgainstExactAtFiveHundred)
{
    const auto exact = growth_series(GroupSpec::alt(5), 500).integer_coeffs();
    EXPECT_NEAR(ratio_to_exact(alt_estimate(5, 500), exact[500]), 1.1873414131840769, 1e-11);
}

TEST(AltEstimate, TopSummandDominates)
{
    const auto terms = alt_binomial_terms(5, 500);
    ASSERT_EQ(terms.size(), 6U);
    EXPECT_GT(terms[5].log_value - terms[4].log_value, 10.0);
    EXPECT_NEAR(terms[5].log_value, alt_estimate(5, 500).log_value, 1e-12 * 200);
    for (std::size_t k = 0; k + 1 < terms.size(); ++k)
        EXPECT_LT(terms[k].log_value, terms[k + 1].log_value);
}

TEST(AltEstimate, EvenOnlySummandVanishesAtOddIndex)
{
    const auto terms = alt_binomial_terms(3, 101);
    EXPECT_EQ(terms[0].value, 0.0);
    EXPECT_TRUE(std::isinf(terms[0].log_value));
    const auto full = alt_binomial_estimate(3, 101);
    EXPECT_GT(full.log_value, alt_estimate(3, 101).log_value);
    EXPECT_LT(full.log_value - alt_estimate(3, 101).log_value, 1e-2);
}

TEST(RatioEstimate, FiniteLimits)
{
    for (std::uint64_t n : {1ULL, 50ULL, 1'000'000ULL}) {
        EXPECT_NEAR(*ratio_estimate(GroupSpec::sym(4), GroupSpec::sym(4), n).value, 1.0, 1e-12);
        EXPECT_NEAR(*ratio_estimate(GroupSpec::sym(10), GroupSpec::alt(5), n).value, 32.0, 1e-10);
        EXPECT_NEAR(*ratio_estimate(GroupSpec::alt(5), GroupSpec::sym(10), n).value, 1.0 / 32, 1e-12);
        EXPECT_NEAR(*ratio_estimate(GroupSpec::alt(3), GroupSpec::alt(3), n).value, 1.0, 1e-12);
    }
}

TEST(RatioEstimate, EqualsQuotientOfEstimates)
{
    for (auto k1 : {Kind::sym, Kind::alt})
        for (auto k2 : {Kind::sym, Kind::alt})
            for (std::int64_t a = 1; a <= 8; ++a)
                for (std::int64_t b = 1; b <= 8; ++b)
                    for (std::uint64_t n : {10ULL, 1000ULL, 100000ULL}) {
                        const GroupSpec g1(k1, a), g2(k2, b);
                        const double closed = ratio_estimate(g1, g2, n).log_value;
                        const double quotient =
                            growth_estimate(g1, n).log_value - growth_estimate(g2, n).log_value;
                        // the quotient cancels two logs of size ~sqrt(n); allow for that
                        const double scale = std::max(1.0, growth_estimate(g1, n).log_value);
                        EXPECT_LT(std::fabs(closed - quotient), 1e-12 * scale)
                            << to_string(k1) << a << '/' << to_string(k2) << b << " n=" << n;
                    }
}

TEST(ClassifyRatio, Examples)
{
    EXPECT_EQ(classify_ratio(GroupSpec::sym(3), GroupSpec::sym(7)).tag, RatioTag::zero);
    EXPECT_EQ(classify_ratio(GroupSpec::sym(7), GroupSpec::sym(3)).tag, RatioTag::infinite);
    EXPECT_EQ(classify_ratio(GroupSpec::sym(10), GroupSpec::alt(5)),
              (RatioClass{RatioTag::finite, 32.0}));
    EXPECT_EQ(classify_ratio(GroupSpec::alt(5), GroupSpec::sym(10)),
              (RatioClass{RatioTag::finite, 1.0 / 32}));
    EXPECT_EQ(classify_ratio(GroupSpec::alt(4), GroupSpec::alt(4)),
              (RatioClass{RatioTag::finite, 1.0}));
    EXPECT_EQ(classify_ratio(GroupSpec::sym(9), GroupSpec::alt(5)).tag, RatioTag::zero);
    EXPECT_EQ(classify_ratio(GroupSpec::alt(2), GroupSpec::sym(3)).tag, RatioTag::infinite);
}

TEST(ClassifyRatio, EstimatesMoveTowardTheVerdict)
{
    for (auto k1 : {Kind::sym, Kind::alt})
        for (auto k2 : {Kind::sym, Kind::alt})
            for (std::int64_t a = 1; a <= 8; ++a)
                for (std::int64_t b = 1; b <= 8; ++b) {
                    const GroupSpec g1(k1, a), g2(k2, b);
                    const auto v = classify_ratio(g1, g2);
                    const double lo = ratio_estimate(g1, g2, 10'000).log_value;
                    const double hi = ratio_estimate(g1, g2, 1'000'000).log_value;
                    if (v.tag == RatioTag::zero)
                        EXPECT_LT(hi, lo);
                    else if (v.tag == RatioTag::infinite)
                        EXPECT_GT(hi, lo);
                    else
                        EXPECT_NEAR(std::exp(hi) / *v.value, 1.0, 0.1);
                }
}
