#pragma once

// Conjugacy growth series of H wr Sym(X) and H wr Alt(X): the product
// formulas, the universal polynomials Fhat_n, the logarithmic-derivative
// recurrences, and the hook-length sum for prod (1 - q^n)^r.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "partitions.hpp"
#include "qseries.hpp"

namespace wreath {

enum class Kind { sym, alt };

inline const char* to_string(Kind k) { return k == Kind::sym ? "sym" : "alt"; }

/// Identifies H wr_X Sym(X) or H wr_X Alt(X) by the number m of conjugacy
/// classes of H.
struct GroupSpec {
    Kind kind = Kind::sym;
    std::int64_t m = 1;

    GroupSpec() = default;
    GroupSpec(Kind kind_, std::int64_t m_) : kind(kind_), m(m_)
    {
        if (m < 1)
            throw std::invalid_argument("GroupSpec: m must be at least 1, got " + std::to_string(m));
    }

    static GroupSpec sym(std::int64_t m) { return {Kind::sym, m}; }
    static GroupSpec alt(std::int64_t m) { return {Kind::alt, m}; }

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// ---------------------------------------------------------------------------
// Fhat_n
// ---------------------------------------------------------------------------

inline constexpr std::uint32_t fhat_explicit_limit = 30;

/// One monomial x_1^{m_1} ... x_{n-1}^{m_{n-1}} with its coefficient.
struct FhatTerm {
    std::vector<std::uint32_t> exponents; // m_1..m_{n-1}
    rational coefficient;
    friend bool operator==(const FhatTerm&, const FhatTerm&) = default;
};

/// Fhat_n as an explicit list of terms, sorted lexicographically decreasing
/// by exponent vector.
struct FhatPolynomial {
    std::uint32_t n = 0;
    std::vector<FhatTerm> terms;
};

/// The explicit polynomial Fhat_n: one term per partition of n with no part
/// equal to n, coefficient (-1)^{|m|} (|m| - 1)! / (m_1! ... m_{n-1}!).
inline FhatPolynomial fhat_polynomial(std::uint32_t n, std::uint32_t limit = fhat_explicit_limit)
{
    if (n < 2 || n > limit)
        throw std::out_of_range("fhat_polynomial: n must lie in [2, " + std::to_string(limit)
                                + "], got " + std::to_string(n));
    FhatPolynomial poly;
    poly.n = n;
    for (const auto& lambda : enumerate_partitions(n, n - 1)) {
        FhatTerm t;
        t.exponents.assign(n - 1, 0);
        for (auto part : lambda.parts())
            ++t.exponents[part - 1];
        const auto len = static_cast<unsigned long>(lambda.length());
        integer num;
        mpz_fac_ui(num.get_mpz_t(), len - 1);
        integer den = 1;
        for (auto m : t.exponents) {
            integer f;
            mpz_fac_ui(f.get_mpz_t(), m);
            den *= f;
        }
        t.coefficient = rational(num, den);
        t.coefficient.canonicalize();
        if (len % 2 == 1)
            t.coefficient = -t.coefficient;
        poly.terms.push_back(std::move(t));
    }
    std::sort(poly.terms.begin(), poly.terms.end(),
              [](const FhatTerm& a, const FhatTerm& b) { return a.exponents > b.exponents; });
    return poly;
}

/// Evaluates an explicit Fhat_n at v_1..v_{n-1}.
inline rational fhat_eval_explicit(const FhatPolynomial& poly, const std::vector<rational>& values)
{
    if (values.size() + 1 != poly.n)
        throw std::invalid_argument("fhat_eval_explicit: expected " + std::to_string(poly.n - 1)
                                    + " values");
    rational total;
    for (const auto& t : poly.terms) {
        rational mono = t.coefficient;
        for (std::size_t i = 0; i < t.exponents.size(); ++i)
            for (std::uint32_t e = 0; e < t.exponents[i]; ++e)
                mono *= values[i];
        total += mono;
    }
    return total;
}

/// Fhat_n(v_1, ..., v_{n-1}) without materializing the polynomial.
///
/// If 1 + sum v_i q^i has logarithm sum L_i q^i, then Fhat_n = v_n - L_n,
/// which is independent of v_n. With the Newton convolution
/// i L_i = i v_i - sum_{j<i} j L_j v_{i-j}, this is
/// Fhat_n = (1/n) sum_{i=1}^{n-1} i L_i v_{n-i}. Fhat_1 is the empty sum, 0.
inline rational fhat_eval(std::uint32_t n, const std::vector<rational>& values)
{
    if (n < 1)
        throw std::invalid_argument("fhat_eval: n must be positive");
    if (values.size() + 1 != n)
        throw std::invalid_argument("fhat_eval: expected " + std::to_string(n - 1) + " values");
    std::vector<rational> iL(n); // iL[i] = i * L_i
    for (std::uint32_t i = 1; i < n; ++i) {
        rational acc = i * values[i - 1];
        for (std::uint32_t j = 1; j < i; ++j)
            acc -= iL[j] * values[i - j - 1];
        iL[i] = acc;
    }
    rational total;
    for (std::uint32_t i = 1; i < n; ++i)
        total += iL[i] * values[n - i - 1];
    return total / n;
}

// ---------------------------------------------------------------------------
// Logarithmic-derivative recurrences
// ---------------------------------------------------------------------------

/// Solves n a(n) = sum_{i=0}^{n-1} c(n-i) a(i), a(0) = 1, for the series A
/// with q A'/A = sum_{j>=1} c(j) q^j. c[0] is ignored.
inline Series log_derivative_recurrence(const std::vector<rational>& c, std::size_t order)
{
    if (c.size() < order + 1)
        throw std::invalid_argument("log_derivative_recurrence: too few coefficients");
    std::vector<rational> a(order + 1);
    a[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        rational acc;
        for (std::size_t i = 0; i < n; ++i)
            acc += c[n - i] * a[i];
        a[n] = acc / static_cast<unsigned long>(n);
    }
    return Series(std::move(a));
}

/// The same series via a(n) = Fhat_n(a(1..n-1)) + c(n)/n, the polynomial
/// form of the recurrence. O(N^3); intended for cross-checks.
inline Series log_derivative_recurrence_fhat(const std::vector<rational>& c, std::size_t order)
{
    if (c.size() < order + 1)
        throw std::invalid_argument("log_derivative_recurrence_fhat: too few coefficients");
    std::vector<rational> a(order + 1);
    a[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        std::vector<rational> prev(a.begin() + 1, a.begin() + static_cast<std::ptrdiff_t>(n));
        a[n] = fhat_eval(static_cast<std::uint32_t>(n), prev)
               + c[n] / rational(static_cast<unsigned long>(n));
    }
    return Series(std::move(a));
}

namespace detail {

// q d/dq log prod (1 - q^k)^r has coefficients -r sigma_1(j).
inline std::vector<rational> euler_power_log_derivative(const rational& r, std::size_t order)
{
    const auto s1 = sigma1_table(order);
    std::vector<rational> c(order + 1);
    for (std::size_t j = 1; j <= order; ++j)
        c[j] = -r * s1[j];
    return c;
}

inline void require_nonnegative_integral(const Series& s, const char* what)
{
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (s[i].get_den() != 1 || sgn(s[i]) < 0)
            throw consistency_error(std::string(what) + ": coefficient of q^" + std::to_string(i)
                                    + " is " + s[i].get_str()
                                    + ", expected a nonnegative integer");
    }
}

} // namespace detail

/// prod_{n>=1} (1 - q^n)^r for any rational r, by the recurrence
/// n p(n) = -r sum_{i=1}^{n} sigma_1(i) p(n-i).
inline Series euler_power_series(const rational& r, std::size_t order)
{
    return log_derivative_recurrence(detail::euler_power_log_derivative(r, order), order);
}

/// The same coefficients via p(n) = Fhat_n(p(1..n-1)) - (r/n) sigma_1(n).
inline Series euler_power_series_fhat(const rational& r, std::size_t order)
{
    return log_derivative_recurrence_fhat(detail::euler_power_log_derivative(r, order), order);
}

// ---------------------------------------------------------------------------
// Growth series
// ---------------------------------------------------------------------------

/// Sum p(n) q^n = prod 1/(1 - q^n): Sym(X) itself.
inline Series sym_base_series(std::size_t order) { return expand_product({{{1, -1}}}, order); }

/// (1/2) prod 1/(1 - q^n)^2 + (1/2) prod 1/(1 - q^{2n}): Alt(X) itself.
inline Series alt_base_series(std::size_t order)
{
    const rational half(1, 2);
    Series s = series_add(expand_product({{{1, -2}}}, order), expand_product({{{2, -1}}}, order),
                          half, half);
    detail::require_nonnegative_integral(s, "alt_base_series");
    return s;
}

/// Growth series of the wreath product: prod (1 - q^n)^{-M} for Sym, and
/// the M-th power of the Alt(X) series for Alt.
inline Series growth_series(const GroupSpec& g, std::size_t order)
{
    Series s = g.kind == Kind::sym ? expand_product({{{1, -g.m}}}, order)
                                   : series_pow(alt_base_series(order), g.m);
    detail::require_nonnegative_integral(s, "growth_series");
    return s;
}

/// gamma(n) for H wr Sym(X) from n gamma(n) = M sigma_1(n) + M sum_{i=1}^{n-1}
/// sigma_1(n-i) gamma(i), the Newton form of gamma(n) = Fhat_n(...) + (M/n) sigma_1(n).
inline Series gamma_sym_recurrence(std::int64_t m, std::size_t order)
{
    if (m < 1)
        throw std::invalid_argument("gamma_sym_recurrence: M must be positive");
    Series s = euler_power_series(rational(-m), order);
    detail::require_nonnegative_integral(s, "gamma_sym_recurrence");
    return s;
}

/// sum over partitions lambda of n of prod_{h in H(lambda)} (1 - (1+r)/h^2),
/// the coefficient of q^n in prod (1 - q^k)^r.
///
/// With 1 + r = a/b, each partition contributes N_lambda / (b^n H_lambda^2)
/// where N_lambda = prod (b h^2 - a) and H_lambda is the hook product. Since
/// n!/H_lambda is the integer f^lambda, the whole sum is
/// (sum N_lambda (f^lambda)^2) / (b^n (n!)^2), accumulated in integers.
/// Work is sharded over the largest part across `threads` workers.
inline rational no_coefficient(const rational& r, std::uint32_t n, unsigned threads = 1)
{
    if (n == 0)
        return 1;
    const rational z = 1 + r;
    const integer a = z.get_num();
    const integer b = z.get_den();
    integer nfact;
    mpz_fac_ui(nfact.get_mpz_t(), n);

    auto shard_sum = [&](std::uint32_t largest) {
        integer total;
        for (const auto& rest : enumerate_partitions(n - largest, largest)) {
            std::vector<std::uint32_t> parts;
            parts.reserve(rest.length() + 1);
            parts.push_back(largest);
            parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
            const auto hooks = hook_multiset(Partition(std::move(parts)));
            integer num = 1;
            integer hook_product = 1;
            for (auto h : hooks.hooks) {
                const integer h2 = integer(h) * h;
                num *= b * h2 - a;
                hook_product *= h;
            }
            integer f = nfact / hook_product;
            total += num * f * f;
        }
        return total;
    };

    std::vector<integer> partial(n + 1);
    threads = std::max(1U, std::min<unsigned>(threads, n));
    if (threads == 1) {
        for (std::uint32_t p = 1; p <= n; ++p)
            partial[p] = shard_sum(p);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::uint32_t p = 1 + w; p <= n; p += threads)
                    partial[p] = shard_sum(p);
            });
        for (auto& t : pool)
            t.join();
    }
    integer total;
    for (const auto& x : partial)
        total += x;
    integer bn;
    mpz_pow_ui(bn.get_mpz_t(), b.get_mpz_t(), n);
    rational out(total, bn * nfact * nfact);
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// Alternating case
// ---------------------------------------------------------------------------

/// One binomial summand of the Alt growth series: the coefficients a_k(n) of
/// prod 1/((1 - q^n)^{2k} (1 - q^{2n})^{M-k}).
struct AltSummand {
    std::int64_t k = 0;
    Series coeffs{0};
};

/// b_k(n) = sum_{d | n} d [(-1)^{n/d} (k - M) - (k + M)], summed literally over
/// divisors. -b_k(n) is the q^n coefficient of q A_k'/A_k.
inline integer alt_divisor_sum(std::int64_t m, std::int64_t k, std::int64_t n)
{
    if (n < 1)
        throw std::domain_error("alt_divisor_sum: n must be positive");
    integer total;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        const std::int64_t sign = ((n / d) % 2 == 0) ? 1 : -1;
        total += integer(d) * (sign * (k - m) - (k + m));
    }
    return total;
}

/// The closed form 2k sigma_1(n) + 2(M - k) sigma_1(n/2) [n even] of -b_k(n).
inline integer alt_divisor_sum_closed(std::int64_t m, std::int64_t k, std::int64_t n)
{
    integer out = 2 * integer(k) * sigma(1, n);
    if (n % 2 == 0)
        out += 2 * integer(m - k) * sigma(1, n / 2);
    return out;
}

namespace detail {

inline void require_summand_index(std::int64_t m, std::int64_t k)
{
    if (m < 1)
        throw std::invalid_argument("alt summand: M must be positive");
    if (k < 0 || k > m)
        throw std::out_of_range("alt summand: k must lie in [0, M], got " + std::to_string(k));
}

inline std::vector<rational> alt_log_derivative(std::int64_t m, std::int64_t k, std::size_t order)
{
    std::vector<rational> c(order + 1);
    for (std::size_t j = 1; j <= order; ++j)
        c[j] = -alt_divisor_sum(m, k, static_cast<std::int64_t>(j));
    return c;
}

} // namespace detail

/// a_k(0..N) from n a_k(n) = -sum_{i=0}^{n-1} b_k(n-i) a_k(i).
inline AltSummand alt_summand(std::int64_t m, std::int64_t k, std::size_t order)
{
    detail::require_summand_index(m, k);
    return {k, log_derivative_recurrence(detail::alt_log_derivative(m, k, order), order)};
}

/// a_k via a_k(n) = Fhat_n(a_k(1..n-1)) - b_k(n)/n. O(N^3).
inline AltSummand alt_summand_fhat(std::int64_t m, std::int64_t k, std::size_t order)
{
    detail::require_summand_index(m, k);
    return {k, log_derivative_recurrence_fhat(detail::alt_log_derivative(m, k, order), order)};
}

/// gamma(n) for H wr Alt(X) as 2^{-M} sum_{k=0}^{M} C(M,k) a_k(n).
inline Series gamma_alt_recurrence(std::int64_t m, std::size_t order)
{
    if (m < 1)
        throw std::invalid_argument("gamma_alt_recurrence: M must be positive");
    std::vector<rational> total(order + 1);
    integer binom = 1;
    for (std::int64_t k = 0; k <= m; ++k) {
        if (k > 0)
            binom = binom * (m - k + 1) / k;
        const auto a = alt_summand(m, k, order);
        for (std::size_t n = 0; n <= order; ++n)
            total[n] += binom * a.coeffs[n];
    }
    integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(m));
    for (auto& x : total)
        x /= scale;
    Series s(std::move(total));
    detail::require_nonnegative_integral(s, "gamma_alt_recurrence");
    return s;
}

// ---------------------------------------------------------------------------
// Exponential growth rate
// ---------------------------------------------------------------------------

/// limsup log gamma(n) / sqrt(n) = pi_multiple * pi * sqrt(radicand).
struct GrowthRate {
    std::int64_t pi_multiple = 1;
    rational radicand;
    double value = 0.0;
};

inline GrowthRate growth_rate(const GroupSpec& g)
{
    GrowthRate out;
    if (g.kind == Kind::sym) {
        out.pi_multiple = 1;
        out.radicand = rational(2 * g.m, 3);
    } else {
        out.pi_multiple = 2;
        out.radicand = rational(g.m, 3);
    }
    out.radicand.canonicalize();
    out.value = static_cast<double>(out.pi_multiple) * std::numbers::pi
                * std::sqrt(out.radicand.get_d());
    return out;
}

} // namespace wreath
