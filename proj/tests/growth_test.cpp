#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "wreath/growth.hpp"

using namespace wreath;

namespace {

rational random_rational(std::mt19937_64& rng, long bound)
{
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<unsigned long> den(1, static_cast<unsigned long>(bound));
    rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

rational q(long n, unsigned long d = 1)
{
    rational r(n, d);
    r.canonicalize();
    return r;
}

} // namespace

TEST(GroupSpec, RejectsNonPositiveM)
{
    EXPECT_THROW(GroupSpec::sym(0), std::invalid_argument);
    EXPECT_THROW(GroupSpec::alt(-2), std::invalid_argument);
}

TEST(FhatPolynomial, LowOrders)
{
    const auto f2 = fhat_polynomial(2);
    ASSERT_EQ(f2.terms.size(), 1U);
    EXPECT_EQ(f2.terms[0].exponents, (std::vector<std::uint32_t>{2}));
    EXPECT_EQ(f2.terms[0].coefficient, q(1, 2));

    const auto f3 = fhat_polynomial(3);
    ASSERT_EQ(f3.terms.size(), 2U);
    EXPECT_EQ(f3.terms[0].exponents, (std::vector<std::uint32_t>{3, 0}));
    EXPECT_EQ(f3.terms[0].coefficient, q(-1, 3));
    EXPECT_EQ(f3.terms[1].exponents, (std::vector<std::uint32_t>{1, 1}));
    EXPECT_EQ(f3.terms[1].coefficient, 1);
}

TEST(FhatPolynomial, SixHasTenTerms)
{
    const auto f6 = fhat_polynomial(6);
    ASSERT_EQ(f6.terms.size(), 10U);
    // 3/2 x1^2 x2^2 and -2 x1 x2 x3
    EXPECT_EQ(f6.terms[3].exponents, (std::vector<std::uint32_t>{2, 2, 0, 0, 0}));
    EXPECT_EQ(f6.terms[3].coefficient, q(3, 2));
    EXPECT_EQ(f6.terms[5].exponents, (std::vector<std::uint32_t>{1, 1, 1, 0, 0}));
    EXPECT_EQ(f6.terms[5].coefficient, -2);
}

TEST(FhatPolynomial, TermCountIsPartitionsMinusOne)
{
    const auto p = partition_counts(20);
    for (std::uint32_t n = 2; n <= 20; ++n)
        EXPECT_EQ(fhat_polynomial(n).terms.size() + 1, p[n].get_ui());
}

TEST(FhatPolynomial, TermsSatisfyWeightConstraint)
{
    for (const auto& t : fhat_polynomial(12).terms) {
        std::uint32_t weight = 0;
        for (std::size_t i = 0; i < t.exponents.size(); ++i)
            weight += static_cast<std::uint32_t>(i + 1) * t.exponents[i];
        EXPECT_EQ(weight, 12U);
    }
}

TEST(FhatPolynomial, RangeChecked)
{
    EXPECT_THROW(fhat_polynomial(1), std::out_of_range);
    EXPECT_THROW(fhat_polynomial(31), std::out_of_range);
}

TEST(FhatEval, BaseCases)
{
    EXPECT_EQ(fhat_eval(1, {}), 0);
    EXPECT_EQ(fhat_eval(2, {q(7)}), q(49, 2));
    EXPECT_EQ(fhat_eval(3, {q(2), q(5)}), q(22, 3));
}

TEST(FhatEval, ExplicitMatchesConvolution)
{
    std::mt19937_64 rng(99);
    for (std::uint32_t n = 2; n <= 20; ++n) {
        const auto poly = fhat_polynomial(n);
        for (int t = 0; t < 100; ++t) {
            std::vector<rational> v;
            for (std::uint32_t i = 1; i < n; ++i)
                v.push_back(random_rational(rng, 10));
            ASSERT_EQ(fhat_eval_explicit(poly, v), fhat_eval(n, v)) << "n = " << n;
        }
    }
}

TEST(FhatEval, ArityChecked) { EXPECT_THROW(fhat_eval(3, {q(1)}), std::invalid_argument); }

TEST(NewtonIdentity, PowerSumsAgainstElementarySymmetric)
{
    // For random rational roots, s_n - s_{n-1} e_1 + ... + (-1)^n n e_n = 0.
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 8; ++n) {
        std::vector<rational> roots;
        for (int i = 0; i < n; ++i)
            roots.push_back(random_rational(rng, 6));
        std::vector<rational> e(static_cast<std::size_t>(n) + 1); // prod (1 + X_j t)
        e[0] = 1;
        for (const auto& x : roots)
            for (int i = n; i >= 1; --i)
                e[static_cast<std::size_t>(i)] += x * e[static_cast<std::size_t>(i - 1)];
        auto s = [&](int k) {
            rational acc;
            for (const auto& x : roots) {
                rational p = 1;
                for (int j = 0; j < k; ++j)
                    p *= x;
                acc += p;
            }
            return acc;
        };
        rational total = s(n);
        for (int i = 1; i < n; ++i)
            total += (i % 2 ? -1 : 1) * s(n - i) * e[static_cast<std::size_t>(i)];
        total += (n % 2 ? -1 : 1) * n * e[static_cast<std::size_t>(n)];
        EXPECT_EQ(total, 0) << "n = " << n;
    }
}

TEST(GrowthSeries, PaperTableEntries)
{
    EXPECT_EQ(growth_series(GroupSpec::sym(10), 10)[1], 10);
    EXPECT_EQ(growth_series(GroupSpec::sym(10), 10)[10], 1605340);
    EXPECT_EQ(growth_series(GroupSpec::alt(5), 10)[1], 5);
    EXPECT_EQ(growth_series(GroupSpec::alt(5), 10)[10], 176963);
}

TEST(GrowthSeries, AltWithOneClassIsAltBase)
{
    EXPECT_EQ(growth_series(GroupSpec::alt(1), 2), (Series{1, 1, 3}));
    EXPECT_EQ(growth_series(GroupSpec::alt(1), 60), alt_base_series(60));
    EXPECT_EQ(growth_series(GroupSpec::sym(1), 60), sym_base_series(60));
}

TEST(GammaSymRecurrence, Examples)
{
    for (std::int64_t m : {1, 2, 7, 10})
        EXPECT_EQ(gamma_sym_recurrence(m, 1)[1], m);
    EXPECT_EQ(gamma_sym_recurrence(10, 10)[10], 1605340);
    EXPECT_EQ(gamma_sym_recurrence(3, 2)[2], 9);
}

TEST(GammaSymRecurrence, EqualsProductFormula)
{
    for (std::int64_t m = 1; m <= 12; ++m)
        EXPECT_EQ(gamma_sym_recurrence(m, 200), growth_series(GroupSpec::sym(m), 200)) << "M=" << m;
}

TEST(EulerPowerSeries, PolynomialFormAgreesForRationalExponents)
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) {
        const auto r = random_rational(rng, 10);
        EXPECT_EQ(euler_power_series_fhat(r, 30), euler_power_series(r, 30)) << "r = " << r;
    }
}

TEST(EulerPowerSeries, IntegerExponentsMatchProducts)
{
    EXPECT_EQ(euler_power_series(q(1), 50), expand_product({{{1, 1}}}, 50));
    EXPECT_EQ(euler_power_series(q(-4), 50), expand_product({{{1, -4}}}, 50));
}

TEST(NoCoefficient, Examples)
{
    for (long m : {1, 3, 10})
        EXPECT_EQ(no_coefficient(q(-m), 1), m);
    EXPECT_EQ(no_coefficient(q(-10), 10), 1605340);
    for (std::uint32_t n = 1; n <= 8; ++n)
        EXPECT_EQ(no_coefficient(q(0), n), 0);
    EXPECT_EQ(no_coefficient(q(5, 7), 0), 1);
}

TEST(NoCoefficient, EqualsProductForNegativeIntegers)
{
    for (long m = 1; m <= 6; ++m) {
        const auto prod = growth_series(GroupSpec::sym(m), 35);
        for (std::uint32_t n = 0; n <= 35; n += (n < 20 ? 1 : 5)) {
            const auto v = no_coefficient(q(-m), n);
            EXPECT_EQ(v.get_den(), 1);
            EXPECT_EQ(v, prod[n]) << "M=" << m << " n=" << n;
        }
    }
}

TEST(NoCoefficient, EqualsRecurrenceForRationalExponents)
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 4; ++t) {
        const auto r = random_rational(rng, 10);
        const auto series = euler_power_series(r, 25);
        for (std::uint32_t n = 0; n <= 25; ++n)
            EXPECT_EQ(no_coefficient(r, n), series[n]) << "r=" << r << " n=" << n;
    }
}

TEST(NoCoefficient, ThreadCountDoesNotChangeResult)
{
    const auto r = q(-7, 3);
    const auto serial = no_coefficient(r, 22, 1);
    for (unsigned threads : {2U, 3U, 8U, 64U})
        EXPECT_EQ(no_coefficient(r, 22, threads), serial);
}

TEST(AltDivisorSum, ClosedFormAgrees)
{
    for (std::int64_t m = 1; m <= 10; ++m)
        for (std::int64_t k = 0; k <= m; ++k)
            for (std::int64_t n = 1; n <= 500; ++n)
                ASSERT_EQ(-alt_divisor_sum(m, k, n), alt_divisor_sum_closed(m, k, n))
                    << m << ' ' << k << ' ' << n;
}

TEST(AltDivisorSum, OnlyTheInverseDivisorSimplificationHolds)
{
    // (1/n) sum_{d|n} d f(n/d) = sum_{delta|n} f(delta)/delta, with
    // f(delta) = (-1)^delta (k - M) - (k + M). Weighting by delta instead of
    // 1/delta breaks already at n = 2.
    auto f = [](std::int64_t m, std::int64_t k, std::int64_t delta) {
        return rational((delta % 2 == 0 ? 1 : -1) * (k - m) - (k + m));
    };
    for (std::int64_t m = 1; m <= 6; ++m)
        for (std::int64_t k = 0; k <= m; ++k) {
            for (std::int64_t n = 1; n <= 200; ++n) {
                rational inverse_weighted;
                for (std::int64_t d = 1; d <= n; ++d)
                    if (n % d == 0)
                        inverse_weighted += f(m, k, d) / rational(d);
                ASSERT_EQ(rational(alt_divisor_sum(m, k, n)) / rational(n), inverse_weighted);
            }
            const rational delta_weighted = f(m, k, 1) * 1 + f(m, k, 2) * 2;
            EXPECT_NE(rational(alt_divisor_sum(m, k, 2)) / 2, delta_weighted);
        }
}

TEST(AltSummand, LowCoefficients)
{
    for (std::int64_t m = 1; m <= 6; ++m)
        for (std::int64_t k = 0; k <= m; ++k) {
            const auto a = alt_summand(m, k, 2);
            EXPECT_EQ(a.k, k);
            EXPECT_EQ(a.coeffs[0], 1);
            EXPECT_EQ(a.coeffs[1], 2 * k);
            EXPECT_EQ(a.coeffs[2], 2 * k * k + 2 * k + m);
        }
    EXPECT_EQ(alt_summand(1, 0, 4).coeffs, (Series{1, 0, 1, 0, 2}));
}

TEST(AltSummand, EqualsItsProduct)
{
    for (std::int64_t m = 1; m <= 5; ++m)
        for (std::int64_t k = 0; k <= m; ++k)
            EXPECT_EQ(alt_summand(m, k, 80).coeffs,
                      expand_product({{{1, -2 * k}, {2, -(m - k)}}}, 80));
}

TEST(AltSummand, PolynomialFormAgrees)
{
    for (std::int64_t k = 0; k <= 3; ++k)
        EXPECT_EQ(alt_summand_fhat(3, k, 25).coeffs, alt_summand(3, k, 25).coeffs);
}

TEST(AltSummand, RangeChecked)
{
    EXPECT_THROW(alt_summand(3, 4, 5), std::out_of_range);
    EXPECT_THROW(alt_summand(3, -1, 5), std::out_of_range);
}

TEST(GammaAltRecurrence, Examples)
{
    EXPECT_EQ(gamma_alt_recurrence(5, 10)[1], 5);
    EXPECT_EQ(gamma_alt_recurrence(5, 10)[10], 176963);
    EXPECT_EQ(gamma_alt_recurrence(1, 2)[2], 3);
}

TEST(GammaAltRecurrence, EqualsProductFormula)
{
    for (std::int64_t m = 1; m <= 8; ++m)
        EXPECT_EQ(gamma_alt_recurrence(m, 150), growth_series(GroupSpec::alt(m), 150)) << "M=" << m;
}

TEST(GrowthRate, ClosedForms)
{
    const auto s6 = growth_rate(GroupSpec::sym(6));
    EXPECT_EQ(s6.pi_multiple, 1);
    EXPECT_EQ(s6.radicand, 4);
    EXPECT_NEAR(s6.value, 2 * std::numbers::pi, 1e-14);

    const auto a3 = growth_rate(GroupSpec::alt(3));
    EXPECT_EQ(a3.pi_multiple, 2);
    EXPECT_EQ(a3.radicand, 1);
    EXPECT_NEAR(a3.value, 2 * std::numbers::pi, 1e-14);

    const auto s5 = growth_rate(GroupSpec::sym(5));
    EXPECT_EQ(s5.radicand, q(10, 3));
    EXPECT_NEAR(s5.value, std::numbers::pi * std::sqrt(10.0 / 3.0), 1e-14);
}
