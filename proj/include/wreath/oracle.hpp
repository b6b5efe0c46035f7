#pragma once

// Brute-force reference implementations. Nothing here calls the optimized
// series routines; the only shared pieces are the Series/EulerProduct value
// types and the partition enumerator.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "partitions.hpp"
#include "qseries.hpp"

namespace wreath::oracle {

inline constexpr std::size_t naive_max_order = 120;

namespace detail {

using poly = std::vector<integer>;

inline poly naive_product(const poly& a, const poly& b)
{
    poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (i + j < out.size())
                out[i + j] += a[i] * b[j];
    return out;
}

// 1 + q^s + q^{2s} + ... truncated, i.e. 1/(1 - q^s).
inline poly geometric(std::size_t s, std::size_t len)
{
    poly g(len);
    for (std::size_t i = 0; i < len; i += s)
        g[i] = 1;
    return g;
}

// 1 - q^s truncated.
inline poly binomial_factor(std::size_t s, std::size_t len)
{
    poly g(len);
    g[0] = 1;
    if (s < len)
        g[s] = -1;
    return g;
}

} // namespace detail

/// Reference expansion of an Euler product by full dense convolution with
/// one geometric series (or binomial) per unit of exponent.
inline Series naive_coefficients(const EulerProduct& p, std::size_t order)
{
    if (order > naive_max_order)
        throw std::out_of_range("naive_coefficients: order above " + std::to_string(naive_max_order));
    const std::size_t len = order + 1;
    detail::poly acc(len);
    acc[0] = 1;
    for (const auto& f : p.factors) {
        if (f.period < 1)
            throw std::invalid_argument("naive_coefficients: factor period must be positive");
        for (std::size_t n = 1; static_cast<std::size_t>(f.period) * n <= order; ++n) {
            const std::size_t s = static_cast<std::size_t>(f.period) * n;
            const auto unit = f.exponent < 0 ? detail::geometric(s, len)
                                             : detail::binomial_factor(s, len);
            const std::int64_t reps = f.exponent < 0 ? -f.exponent : f.exponent;
            for (std::int64_t r = 0; r < reps; ++r)
                acc = detail::naive_product(acc, unit);
        }
    }
    std::vector<rational> c(acc.begin(), acc.end());
    return Series(std::move(c));
}

namespace detail {

// Number of partitions of each weight 0..n, counted by walking the stream.
inline std::vector<integer> enumerated_counts(std::uint32_t n, bool even_length_only)
{
    std::vector<integer> out(n + 1);
    for (std::uint32_t w = 0; w <= n; ++w) {
        std::uint64_t count = 0;
        for (const auto& lambda : enumerate_partitions(w))
            if (!even_length_only || lambda.length() % 2 == 0)
                ++count;
        out[w] = static_cast<unsigned long>(count);
    }
    return out;
}

// Sum over weight compositions (w_1..w_k) of n of prod slot_counts[i][w_i].
inline integer compositions_sum(const std::vector<const std::vector<integer>*>& slot_counts,
                                std::size_t slot, std::uint32_t remaining)
{
    const auto& counts = *slot_counts[slot];
    if (slot + 1 == slot_counts.size())
        return counts[remaining];
    integer total;
    for (std::uint32_t w = 0; w <= remaining; ++w) {
        if (sgn(counts[w]) == 0)
            continue;
        total += counts[w] * compositions_sum(slot_counts, slot + 1, remaining - w);
    }
    return total;
}

} // namespace detail

/// Number of M-tuples of partitions of total weight n: the conjugacy
/// types of H wr Sym(X) of length n, one partition per class of H.
inline integer sym_type_count(std::int64_t m, std::uint32_t n)
{
    if (m < 1 || m > 4 || n > 25)
        throw std::out_of_range("sym_type_count: requires 1 <= M <= 4 and n <= 25");
    const auto p = detail::enumerated_counts(n, false);
    std::vector<const std::vector<integer>*> slots(static_cast<std::size_t>(m), &p);
    return detail::compositions_sum(slots, 0, n);
}

/// Number of families (alpha_eta, beta_eta), eta = 1..M, where each beta has
/// an even number of parts and the total weight is n: the conjugacy types
/// of H wr Alt(X) of length n.
inline integer alt_type_count(std::int64_t m, std::uint32_t n)
{
    if (m < 1 || m > 3 || n > 20)
        throw std::out_of_range("alt_type_count: requires 1 <= M <= 3 and n <= 20");
    const auto p = detail::enumerated_counts(n, false);
    const auto pe = detail::enumerated_counts(n, true);
    std::vector<const std::vector<integer>*> slots;
    for (std::int64_t i = 0; i < m; ++i) {
        slots.push_back(&p);
        slots.push_back(&pe);
    }
    return detail::compositions_sum(slots, 0, n);
}

} // namespace wreath::oracle
