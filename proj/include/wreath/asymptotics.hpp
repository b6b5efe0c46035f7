#pragma once

// Leading-order asymptotics of generalized partition functions and of the
// wreath-product growth series built from them. Everything is evaluated in
// log-space; the linear value is reported only when it fits in a double.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "growth.hpp"
#include "partitions.hpp"

namespace wreath {

/// A positive quantity known through its natural logarithm.
struct Estimate {
    double log_value = 0.0;
    /// exp(log_value), absent when it overflows (or underflows to zero).
    std::optional<double> value;

    static Estimate from_log(double log_value)
    {
        Estimate e;
        e.log_value = log_value;
        const double v = std::exp(log_value);
        if (std::isfinite(v) && v > 0.0)
            e.value = v;
        return e;
    }

    /// The estimate of a quantity that is exactly zero.
    static Estimate zero()
    {
        Estimate e;
        e.log_value = -std::numeric_limits<double>::infinity();
        e.value = 0.0;
        return e;
    }
};

/// Natural log of a positive big integer, without overflowing a double.
inline double log_of(const integer& x)
{
    if (sgn(x) <= 0)
        throw std::domain_error("log_of: argument must be positive");
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

/// d, gamma, delta, A and log(lambda) for an exponent vector e.
struct AsymptoticParams {
    std::int64_t d = 1;
    std::int64_t gamma_total = 0;
    rational delta;
    double a_const = 0.0;
    double log_prefactor = 0.0;
};

inline AsymptoticParams cdf_params(const ExponentVector& e)
{
    AsymptoticParams p;
    std::int64_t d = 0;
    for (std::size_t m = 1; m <= e.size(); ++m)
        if (e.at(m) != 0)
            d = std::gcd(d, static_cast<std::int64_t>(m));
    p.d = d;

    const double log_two_pi = std::log(2.0 * std::numbers::pi);
    for (std::size_t m = 1; static_cast<std::size_t>(d) * m <= e.size(); ++m) {
        const auto em = e.at(static_cast<std::size_t>(d) * m);
        if (em == 0)
            continue;
        p.gamma_total += em;
        p.delta += rational(em, static_cast<unsigned long>(m));
        p.log_prefactor += 0.5 * static_cast<double>(em)
                           * (std::log(static_cast<double>(m)) - log_two_pi);
    }
    p.delta.canonicalize();
    p.a_const = std::numbers::pi * std::numbers::pi * p.delta.get_d() / 6.0;
    return p;
}

/// Leading-order estimate of p(d n)_e. Note the index: n is the reduced
/// index, the series coefficient estimated is the one at q^{d n}.
inline Estimate cdf_estimate(const ExponentVector& e, std::uint64_t n)
{
    if (n < 1)
        throw std::invalid_argument("cdf_estimate: n must be positive");
    const auto p = cdf_params(e);
    const double g = static_cast<double>(p.gamma_total);
    const double x = static_cast<double>(n);
    const double log_value = p.log_prefactor + (1.0 + g) / 4.0 * std::log(p.a_const)
                             - std::log(2.0 * std::sqrt(std::numbers::pi))
                             - (3.0 + g) / 4.0 * std::log(x) + 2.0 * std::sqrt(p.a_const * x);
    return Estimate::from_log(log_value);
}

/// cdf_estimate addressed by series index; requires d | index.
inline Estimate cdf_estimate_at(const ExponentVector& e, std::uint64_t series_index)
{
    const auto d = static_cast<std::uint64_t>(cdf_params(e).d);
    if (series_index == 0 || series_index % d != 0)
        throw std::invalid_argument("cdf_estimate_at: series index " + std::to_string(series_index)
                                    + " is not a positive multiple of d = " + std::to_string(d));
    return cdf_estimate(e, series_index / d);
}

/// Closed-form estimate of gamma(n) for H wr Sym(X), |H_*| = M.
inline Estimate sym_estimate(std::int64_t m, std::uint64_t n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("sym_estimate: M and n must be positive");
    const double M = static_cast<double>(m);
    const double x = static_cast<double>(n);
    const double log_value = (1.0 + M) / 4.0 * std::log(M) - (5.0 + 3.0 * M) / 4.0 * std::log(2.0)
                             - (1.0 + M) / 4.0 * std::log(3.0) - (3.0 + M) / 4.0 * std::log(x)
                             + std::numbers::pi * std::sqrt(2.0 * x * M / 3.0);
    return Estimate::from_log(log_value);
}

/// Closed-form estimate of gamma(n) for H wr Alt(X), keeping only the
/// dominant binomial summand k = M.
inline Estimate alt_estimate(std::int64_t m, std::uint64_t n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("alt_estimate: M and n must be positive");
    const double M = static_cast<double>(m);
    const double x = static_cast<double>(n);
    const double log_value = (1.0 + 2.0 * M) / 4.0 * std::log(M) - (1.0 + 2.0 * M) * std::log(2.0)
                             - (1.0 + 2.0 * M) / 4.0 * std::log(3.0)
                             - (3.0 + 2.0 * M) / 4.0 * std::log(x)
                             + 2.0 * std::numbers::pi * std::sqrt(x * M / 3.0);
    return Estimate::from_log(log_value);
}

inline Estimate growth_estimate(const GroupSpec& g, std::uint64_t n)
{
    return g.kind == Kind::sym ? sym_estimate(g.m, n) : alt_estimate(g.m, n);
}

/// Per-summand estimates 2^{-M} C(M,k) p(n)_{(2k, M-k)} for k = 0..M.
/// The k = 0 summand lives on even indices only and is exactly zero at odd n.
inline std::vector<Estimate> alt_binomial_terms(std::int64_t m, std::uint64_t n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("alt_binomial_terms: M and n must be positive");
    std::vector<Estimate> out;
    out.reserve(static_cast<std::size_t>(m) + 1);
    for (std::int64_t k = 0; k <= m; ++k) {
        std::vector<std::int64_t> entries{2 * k};
        if (m - k > 0)
            entries.push_back(m - k);
        const ExponentVector e(entries);
        const auto d = static_cast<std::uint64_t>(cdf_params(e).d);
        if (n % d != 0) {
            out.push_back(Estimate::zero());
            continue;
        }
        const double log_binom = std::lgamma(static_cast<double>(m) + 1.0)
                                 - std::lgamma(static_cast<double>(k) + 1.0)
                                 - std::lgamma(static_cast<double>(m - k) + 1.0);
        const double shift = log_binom - static_cast<double>(m) * std::log(2.0);
        out.push_back(Estimate::from_log(cdf_estimate_at(e, n).log_value + shift));
    }
    return out;
}

/// Sum of all binomial summand estimates.
inline Estimate alt_binomial_estimate(std::int64_t m, std::uint64_t n)
{
    const auto terms = alt_binomial_terms(m, n);
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms)
        top = std::max(top, t.log_value);
    double acc = 0.0;
    for (const auto& t : terms)
        if (std::isfinite(t.log_value))
            acc += std::exp(t.log_value - top);
    return Estimate::from_log(top + std::log(acc));
}

/// Closed-form asymptotic of gamma_{g1}(n) / gamma_{g2}(n).
inline Estimate ratio_estimate(const GroupSpec& g1, const GroupSpec& g2, std::uint64_t n)
{
    if (n < 1)
        throw std::invalid_argument("ratio_estimate: n must be positive");
    const double x = static_cast<double>(n);
    const double a = static_cast<double>(g1.m);
    const double b = static_cast<double>(g2.m);
    const double log2 = std::log(2.0);
    const double log3n = std::log(3.0 * x);
    const double sym_exp = std::numbers::pi * std::sqrt(2.0 * x / 3.0);
    double lv = 0.0;
    if (g1.kind == Kind::sym && g2.kind == Kind::sym) {
        lv = (1.0 + a) / 4.0 * std::log(a) - (1.0 + b) / 4.0 * std::log(b)
             + 0.75 * (b - a) * log2 + (b - a) / 4.0 * log3n
             + sym_exp * (std::sqrt(a) - std::sqrt(b));
    } else if (g1.kind == Kind::sym && g2.kind == Kind::alt) {
        lv = (1.0 + a) / 4.0 * std::log(a) - (1.0 + 2.0 * b) / 4.0 * std::log(b)
             + (8.0 * b - 3.0 * a - 1.0) / 4.0 * log2 + (2.0 * b - a) / 4.0 * log3n
             + sym_exp * (std::sqrt(a) - std::sqrt(2.0 * b));
    } else if (g1.kind == Kind::alt && g2.kind == Kind::sym) {
        lv = (1.0 + 2.0 * a) / 4.0 * std::log(a) - (1.0 + b) / 4.0 * std::log(b)
             + (1.0 + 3.0 * b - 8.0 * a) / 4.0 * log2 + (b - 2.0 * a) / 4.0 * log3n
             + sym_exp * (std::sqrt(2.0 * a) - std::sqrt(b));
    } else {
        lv = (1.0 + 2.0 * a) / 4.0 * std::log(a) - (1.0 + 2.0 * b) / 4.0 * std::log(b)
             + (b - a) * std::log(4.0) + (b - a) / 2.0 * log3n
             + 2.0 * std::numbers::pi * std::sqrt(x / 3.0) * (std::sqrt(a) - std::sqrt(b));
    }
    return Estimate::from_log(lv);
}

enum class RatioTag { zero, infinite, finite };

inline const char* to_string(RatioTag t)
{
    switch (t) {
    case RatioTag::zero: return "zero";
    case RatioTag::infinite: return "infinite";
    case RatioTag::finite: return "finite";
    }
    return "?";
}

/// Limit of gamma_{g1}(n) / gamma_{g2}(n) as n grows.
struct RatioClass {
    RatioTag tag = RatioTag::finite;
    std::optional<double> value; // present iff tag == finite

    friend bool operator==(const RatioClass&, const RatioClass&) = default;
};

/// Sym with M classes grows like a generalized partition function of weight
/// M, Alt with M classes like weight 2M; the larger weight wins outright.
inline RatioClass classify_ratio(const GroupSpec& g1, const GroupSpec& g2)
{
    auto weight = [](const GroupSpec& g) { return g.kind == Kind::sym ? g.m : 2 * g.m; };
    const auto w1 = weight(g1);
    const auto w2 = weight(g2);
    if (w1 < w2)
        return {RatioTag::zero, std::nullopt};
    if (w1 > w2)
        return {RatioTag::infinite, std::nullopt};
    if (g1.kind == g2.kind)
        return {RatioTag::finite, 1.0};
    if (g1.kind == Kind::sym)
        return {RatioTag::finite, std::ldexp(1.0, static_cast<int>(g2.m))};
    return {RatioTag::finite, std::ldexp(1.0, -static_cast<int>(g1.m))};
}

} // namespace wreath
