#pragma once

// Integer partitions, divisor sums and hook lengths of Ferrers diagrams.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qseries.hpp"

namespace wreath {

/// A weakly decreasing sequence of positive parts. The empty partition is
/// the unique partition of zero.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    std::uint64_t weight() const noexcept
    {
        std::uint64_t w = 0;
        for (auto p : parts_)
            w += p;
        return w;
    }

    /// Column heights of the Ferrers diagram.
    Partition conjugate() const
    {
        std::vector<std::uint32_t> cols(parts_.empty() ? 0 : parts_.front(), 0);
        for (auto p : parts_)
            for (std::uint32_t j = 0; j < p; ++j)
                ++cols[j];
        Partition out;
        out.parts_ = std::move(cols);
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint32_t> parts_;
};

/// Hook lengths of a partition, one per box.
struct HookMultiset {
    /// Hook lengths in row-major diagram order.
    std::vector<std::uint32_t> hooks;

    std::size_t size() const noexcept { return hooks.size(); }

    /// The hooks in ascending order; two multisets are equal iff these agree.
    std::vector<std::uint32_t> sorted() const
    {
        auto s = hooks;
        std::sort(s.begin(), s.end());
        return s;
    }

    friend bool operator==(const HookMultiset& a, const HookMultiset& b)
    {
        return a.sorted() == b.sorted();
    }
};

/// Range over the partitions of n with every part at most max_part, in
/// lexicographically decreasing order. Each range is an independent,
/// restartable stream, so callers can shard by largest part.
class PartitionRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        iterator& operator++()
        {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }

        friend bool operator==(const iterator& a, const iterator& b)
        {
            return a.done_ == b.done_;
        }

    private:
        friend class PartitionRange;

        iterator(std::uint32_t n, std::uint32_t max_part)
        {
            std::vector<std::uint32_t> parts;
            if (n > 0 && max_part == 0) {
                done_ = true;
                return;
            }
            std::uint32_t rest = n;
            while (rest > 0) {
                const auto p = std::min(rest, max_part);
                parts.push_back(p);
                rest -= p;
            }
            current_ = Partition(std::move(parts));
            done_ = false;
        }

        // Standard successor in decreasing lex order: strip trailing ones,
        // decrement the last part > 1, and refill greedily with that bound.
        void advance()
        {
            auto parts = current_.parts();
            std::uint32_t ones = 0;
            while (!parts.empty() && parts.back() == 1) {
                parts.pop_back();
                ++ones;
            }
            if (parts.empty()) {
                done_ = true;
                return;
            }
            const std::uint32_t bound = parts.back() - 1;
            std::uint32_t rest = ones + 1;
            parts.back() = bound;
            while (rest > 0) {
                const auto p = std::min(rest, bound);
                parts.push_back(p);
                rest -= p;
            }
            current_ = Partition(std::move(parts));
        }

        Partition current_;
        bool done_ = true;
    };

    PartitionRange(std::uint32_t n, std::uint32_t max_part) : n_(n), max_part_(max_part) {}

    iterator begin() const { return iterator(n_, max_part_); }
    iterator end() const { return iterator(); }

private:
    std::uint32_t n_;
    std::uint32_t max_part_;
};

/// Every partition of n exactly once, lexicographically decreasing.
inline PartitionRange enumerate_partitions(std::uint32_t n) { return PartitionRange(n, n); }

/// Partitions of n whose largest part is at most max_part.
inline PartitionRange enumerate_partitions(std::uint32_t n, std::uint32_t max_part)
{
    return PartitionRange(n, std::min(n, max_part));
}

/// p(0), ..., p(n) by Euler's pentagonal recurrence, O(n^{3/2}).
inline std::vector<integer> partition_counts(std::size_t n)
{
    std::vector<integer> p(n + 1);
    p[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        integer acc;
        for (std::size_t k = 1;; ++k) {
            const std::size_t g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            const std::size_t g2 = k * (3 * k + 1) / 2;
            if (k % 2 == 1) {
                acc += p[m - g1];
                if (g2 <= m)
                    acc += p[m - g2];
            } else {
                acc -= p[m - g1];
                if (g2 <= m)
                    acc -= p[m - g2];
            }
        }
        p[m] = std::move(acc);
    }
    return p;
}

inline integer partition_count(std::size_t n) { return partition_counts(n)[n]; }

/// Partitions of m into an even number of parts, m = 0..n.
///
/// Uses p_e = (p + d) / 2 where d is the coefficient of prod 1/(1 + q^k)
/// = prod (1 - q^k) / (1 - q^{2k}), the signed count by part-count parity.
inline std::vector<integer> even_parts_counts(std::size_t n)
{
    const auto p = partition_counts(n);
    const auto d = expand_product({{{1, 1}, {2, -1}}}, n).integer_coeffs();
    std::vector<integer> out(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        integer twice = p[m] + d[m];
        if (!mpz_divisible_2exp_p(twice.get_mpz_t(), 1))
            throw consistency_error("even_parts_counts: odd numerator at " + std::to_string(m));
        out[m] = twice / 2;
    }
    return out;
}

inline integer even_parts_count(std::size_t n) { return even_parts_counts(n)[n]; }

/// Hook lengths laid out as the Ferrers diagram: row i holds the hooks of
/// the cells (i, 0..parts[i]-1).
inline std::vector<std::vector<std::uint32_t>> hook_diagram(const Partition& lambda)
{
    const auto cols = lambda.conjugate().parts();
    const auto& rows = lambda.parts();
    std::vector<std::vector<std::uint32_t>> out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out[i].reserve(rows[i]);
        for (std::size_t j = 0; j < rows[i]; ++j) {
            const auto arm = rows[i] - static_cast<std::uint32_t>(j) - 1;
            const auto leg = cols[j] - static_cast<std::uint32_t>(i) - 1;
            out[i].push_back(arm + leg + 1);
        }
    }
    return out;
}

inline HookMultiset hook_multiset(const Partition& lambda)
{
    HookMultiset h;
    h.hooks.reserve(lambda.weight());
    for (const auto& row : hook_diagram(lambda))
        h.hooks.insert(h.hooks.end(), row.begin(), row.end());
    return h;
}

/// sigma_k(n) = sum of d^k over the divisors d of n.
inline integer sigma(std::uint32_t k, std::int64_t n)
{
    if (n <= 0)
        throw std::domain_error("sigma: n must be positive, got " + std::to_string(n));
    integer total;
    auto add_pow = [&](std::int64_t d) {
        integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), k);
        total += t;
    };
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        add_pow(d);
        if (d != n / d)
            add_pow(n / d);
    }
    return total;
}

/// sigma_1(0..n) by a divisor sieve; entry 0 is unused and left at zero.
inline std::vector<std::int64_t> sigma1_table(std::size_t n)
{
    std::vector<std::int64_t> s(n + 1, 0);
    for (std::size_t d = 1; d <= n; ++d)
        for (std::size_t m = d; m <= n; m += d)
            s[m] += static_cast<std::int64_t>(d);
    return s;
}

/// A nonzero vector (e_1, ..., e_k) of nonnegative exponents, indexing the
/// product prod_n (1 - q^n)^{-e_1} ... (1 - q^{kn})^{-e_k}.
class ExponentVector {
public:
    explicit ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries))
    {
        bool any = false;
        for (auto e : entries_) {
            if (e < 0)
                throw std::invalid_argument("ExponentVector: entries must be nonnegative");
            any = any || e > 0;
        }
        if (!any)
            throw std::invalid_argument("ExponentVector: at least one entry must be positive");
    }

    const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// e_m for 1-based m; zero beyond the stored length.
    std::int64_t at(std::size_t m) const
    {
        return (m >= 1 && m <= entries_.size()) ? entries_[m - 1] : 0;
    }

    EulerProduct as_product() const
    {
        EulerProduct p;
        for (std::size_t m = 1; m <= entries_.size(); ++m)
            if (entries_[m - 1] != 0)
                p.factors.push_back({static_cast<std::int64_t>(m), -entries_[m - 1]});
        return p;
    }

private:
    std::vector<std::int64_t> entries_;
};

/// Generating function of the generalized partition function p(n)_e.
inline Series generalized_partition_series(const ExponentVector& e, std::size_t order)
{
    return expand_product(e.as_product(), order);
}

} // namespace wreath
