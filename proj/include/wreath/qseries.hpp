#pragma once

// Truncated formal power series in q with exact rational coefficients.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wreath {

using integer = mpz_class;
using rational = mpq_class;

/// Raised when an exact computation produces a value that the underlying
/// identity forbids (a non-integral or negative count, for instance).
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline bool is_integral(const rational& x) { return x.get_den() == 1; }

inline std::vector<integer> numerators(const std::vector<rational>& v)
{
    std::vector<integer> out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(x.get_num());
    return out;
}

inline bool all_integral(const std::vector<rational>& v)
{
    for (const auto& x : v)
        if (!is_integral(x))
            return false;
    return true;
}

} // namespace detail

/// A power series c_0 + c_1 q + ... + c_N q^N known modulo q^{N+1}.
///
/// The truncation order N is part of the value. Binary operations demand
/// equal orders and throw std::invalid_argument otherwise; nothing is ever
/// re-truncated implicitly.
class Series {
public:
    /// The zero series of the given order.
    explicit Series(std::size_t order) : coeffs_(order + 1) {}

    /// Takes ownership of c_0..c_N; the order is coeffs.size() - 1.
    explicit Series(std::vector<rational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw std::invalid_argument("Series: coefficient list must be non-empty");
    }

    Series(std::initializer_list<rational> coeffs)
        : Series(std::vector<rational>(coeffs))
    {
    }

    static Series from_integers(const std::vector<integer>& coeffs)
    {
        std::vector<rational> c;
        c.reserve(coeffs.size());
        for (const auto& x : coeffs)
            c.emplace_back(x);
        return Series(std::move(c));
    }

    static Series one(std::size_t order)
    {
        Series s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    const rational& coeff(std::size_t i) const { return coeffs_.at(i); }
    const std::vector<rational>& coeffs() const noexcept { return coeffs_; }

    /// True when every coefficient has denominator one.
    bool is_integral() const { return detail::all_integral(coeffs_); }

    /// The coefficients as integers; throws consistency_error if any is not.
    std::vector<integer> integer_coeffs() const
    {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!detail::is_integral(coeffs_[i]))
                throw consistency_error("coefficient of q^" + std::to_string(i) + " is "
                                        + coeffs_[i].get_str() + ", not an integer");
        return detail::numerators(coeffs_);
    }

    /// A copy truncated to a lower order.
    Series truncated(std::size_t order) const
    {
        if (order > this->order())
            throw std::invalid_argument("Series::truncated: cannot raise the order");
        return Series(std::vector<rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<rational> coeffs_;
};

namespace detail {

inline void require_same_order(const Series& s, const Series& t, const char* op)
{
    if (s.order() != t.order())
        throw std::invalid_argument(std::string(op) + ": order mismatch ("
                                    + std::to_string(s.order()) + " vs "
                                    + std::to_string(t.order()) + ")");
}

// Truncated Cauchy product of two integer coefficient vectors of equal length.
inline std::vector<integer> convolve(const std::vector<integer>& a, const std::vector<integer>& b)
{
    const std::size_t n = a.size();
    std::vector<integer> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

} // namespace detail

/// w1*s + w2*t, coefficientwise.
inline Series series_add(const Series& s, const Series& t, const rational& w1 = 1,
                         const rational& w2 = 1)
{
    detail::require_same_order(s, t, "series_add");
    std::vector<rational> c(s.order() + 1);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = w1 * s[i] + w2 * t[i];
    return Series(std::move(c));
}

/// Truncated Cauchy product.
inline Series series_mul(const Series& s, const Series& t)
{
    detail::require_same_order(s, t, "series_mul");
    if (s.is_integral() && t.is_integral())
        return Series::from_integers(
            detail::convolve(detail::numerators(s.coeffs()), detail::numerators(t.coeffs())));

    const std::size_t n = s.order() + 1;
    std::vector<rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(s[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            c[i + j] += s[i] * t[j];
    }
    return Series(std::move(c));
}

inline Series operator+(const Series& s, const Series& t) { return series_add(s, t); }
inline Series operator-(const Series& s, const Series& t) { return series_add(s, t, 1, -1); }
inline Series operator*(const Series& s, const Series& t) { return series_mul(s, t); }

/// Multiplicative inverse; requires a nonzero constant term.
inline Series series_inv(const Series& s)
{
    if (sgn(s[0]) == 0)
        throw std::domain_error("series_inv: constant term is zero");
    const std::size_t n = s.order() + 1;
    std::vector<rational> t(n);
    const rational inv0 = 1 / s[0];
    t[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        rational acc;
        for (std::size_t i = 1; i <= k; ++i)
            acc += s[i] * t[k - i];
        t[k] = -acc * inv0;
    }
    return Series(std::move(t));
}

/// s^m by binary exponentiation, truncating after every product.
inline Series series_pow(const Series& s, std::int64_t m)
{
    if (m < 0) {
        if (sgn(s[0]) == 0)
            throw std::domain_error("series_pow: negative power of a series with zero constant term");
        return series_pow(series_inv(s), -m);
    }
    Series result = Series::one(s.order());
    Series base = s;
    auto e = static_cast<std::uint64_t>(m);
    while (e != 0) {
        if (e & 1U)
            result = series_mul(result, base);
        e >>= 1U;
        if (e != 0)
            base = series_mul(base, base);
    }
    return result;
}

/// One factor prod_{n>=1} (1 - q^{period*n})^{exponent}.
struct EulerFactor {
    std::int64_t period = 1;
    std::int64_t exponent = 0;
    friend bool operator==(const EulerFactor&, const EulerFactor&) = default;
};

/// A finite product of Euler factors. Periods may repeat; an empty product is 1.
struct EulerProduct {
    std::vector<EulerFactor> factors;
    friend bool operator==(const EulerProduct&, const EulerProduct&) = default;
};

/// Expands an Euler product to the given order.
///
/// Each (1 - q^s)^{+-1} is applied in place by a sparse O(N) sweep, so a factor
/// (a, e) costs O(|e| N^2 / a). Everything stays in exact integer arithmetic.
inline Series expand_product(const EulerProduct& p, std::size_t order)
{
    std::vector<integer> c(order + 1);
    c[0] = 1;
    for (const auto& f : p.factors) {
        if (f.period < 1)
            throw std::invalid_argument("expand_product: factor period must be positive");
        const auto a = static_cast<std::size_t>(f.period);
        for (std::size_t step = a; step <= order; step += a) {
            if (f.exponent < 0) {
                // divide by (1 - q^step)
                for (std::int64_t rep = 0; rep < -f.exponent; ++rep)
                    for (std::size_t i = step; i <= order; ++i)
                        c[i] += c[i - step];
            } else {
                // multiply by (1 - q^step)
                for (std::int64_t rep = 0; rep < f.exponent; ++rep)
                    for (std::size_t i = order; i >= step; --i)
                        c[i] -= c[i - step];
            }
        }
    }
    return Series::from_integers(c);
}

} // namespace wreath
