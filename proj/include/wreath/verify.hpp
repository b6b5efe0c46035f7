#pragma once

// Self-verification suite: every cross-check between independent routes
// (products, recurrences, hook sums, brute-force enumeration, asymptotics),
// run at a quick or full size.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "asymptotics.hpp"
#include "growth.hpp"
#include "oracle.hpp"
#include "partitions.hpp"
#include "qseries.hpp"
#include "ratio_table.hpp"

namespace wreath::verify {

enum class Level { quick, full };

struct Options {
    Level level = Level::quick;
    unsigned threads = 1;
    /// Name of a check whose computed side gets one coefficient bumped by 1.
    /// Exercises the failure path; empty disables it.
    std::string corrupt;
};

struct CheckResult {
    std::string name;
    int criterion = 0;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Context handed to each check body.
class Context {
public:
    Context(const Options& opts, std::string name)
        : opts_(opts), corrupt_(opts.corrupt == name)
    {
    }

    bool full() const { return opts_.level == Level::full; }
    unsigned threads() const { return opts_.threads; }

    /// Pick the quick or full size of a parameter.
    template <typename T>
    T size(T quick, T full_size) const
    {
        return full() ? full_size : quick;
    }

    /// Applies the injected fault, if this check was selected.
    Series tap(Series s)
    {
        if (!corrupt_ || used_)
            return s;
        used_ = true;
        auto c = s.coeffs();
        c.back() += 1;
        return Series(std::move(c));
    }

    integer tap(integer x)
    {
        if (!corrupt_ || used_)
            return x;
        used_ = true;
        return x + 1;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    const Options& opts_;
    bool corrupt_;
    bool used_ = false;
    std::mt19937_64 rng_{0x5eed'cafe'f00dULL};
};

/// A check fails by returning a non-empty message.
using CheckBody = std::function<std::string(Context&)>;

struct Check {
    std::string name;
    int criterion;
    bool quick;
    CheckBody body;
};

namespace detail {

inline std::string first_mismatch(const Series& got, const Series& want, const std::string& what)
{
    if (got.order() != want.order())
        return what + ": order " + std::to_string(got.order()) + " vs "
               + std::to_string(want.order());
    for (std::size_t i = 0; i <= got.order(); ++i)
        if (got[i] != want[i])
            return what + ": q^" + std::to_string(i) + " coefficient " + got[i].get_str()
                   + " != " + want[i].get_str();
    return {};
}

inline rational random_rational(std::mt19937_64& rng, std::int64_t bound)
{
    std::uniform_int_distribution<std::int64_t> num(-bound, bound);
    std::uniform_int_distribution<std::int64_t> den(1, bound);
    rational r(num(rng), static_cast<unsigned long>(den(rng)));
    r.canonicalize();
    return r;
}

// (exponents, coefficient) as printed for Fhat_2..Fhat_6.
struct GoldenTerm {
    std::vector<std::uint32_t> exponents;
    const char* coefficient;
};

inline const std::vector<std::vector<GoldenTerm>>& fhat_golden()
{
    static const std::vector<std::vector<GoldenTerm>> table{
        {{{2}, "1/2"}},
        {{{3, 0}, "-1/3"}, {{1, 1}, "1"}},
        {{{4, 0, 0}, "1/4"}, {{2, 1, 0}, "-1"}, {{0, 2, 0}, "1/2"}, {{1, 0, 1}, "1"}},
        {{{5, 0, 0, 0}, "-1/5"},
         {{3, 1, 0, 0}, "1"},
         {{2, 0, 1, 0}, "-1"},
         {{1, 2, 0, 0}, "-1"},
         {{1, 0, 0, 1}, "1"},
         {{0, 1, 1, 0}, "1"}},
        {{{6, 0, 0, 0, 0}, "1/6"},
         {{4, 1, 0, 0, 0}, "-1"},
         {{3, 0, 1, 0, 0}, "1"},
         {{2, 2, 0, 0, 0}, "3/2"},
         {{2, 0, 0, 1, 0}, "-1"},
         {{1, 1, 1, 0, 0}, "-2"},
         {{1, 0, 0, 0, 1}, "1"},
         {{0, 3, 0, 0, 0}, "-1/3"},
         {{0, 1, 0, 1, 0}, "1"},
         {{0, 0, 2, 0, 0}, "1/2"}},
    };
    return table;
}

// Limits of gamma_{g1}/gamma_{g2}, stated case by case.
inline RatioClass corollary_verdict(const GroupSpec& g1, const GroupSpec& g2)
{
    const auto a = g1.m;
    const auto b = g2.m;
    auto cmp = [](std::int64_t x, std::int64_t y, RatioClass eq) {
        if (x < y)
            return RatioClass{RatioTag::zero, std::nullopt};
        if (x > y)
            return RatioClass{RatioTag::infinite, std::nullopt};
        return eq;
    };
    if (g1.kind == Kind::sym && g2.kind == Kind::sym)
        return cmp(a, b, {RatioTag::finite, 1.0});
    if (g1.kind == Kind::sym && g2.kind == Kind::alt)
        return cmp(a, 2 * b, {RatioTag::finite, std::pow(2.0, static_cast<double>(b))});
    if (g1.kind == Kind::alt && g2.kind == Kind::sym)
        return cmp(2 * a, b, {RatioTag::finite, 1.0 / std::pow(2.0, static_cast<double>(a))});
    return cmp(a, b, {RatioTag::finite, 1.0});
}

} // namespace detail

/// Values printed for the M_S = 10, M_A = 5 comparison.
struct TableGolden {
    std::uint64_t n;
    const char* ratio;
};

inline const std::vector<TableGolden>& table_golden()
{
    static const std::vector<TableGolden> rows{
        {1, "2"},           {10, "9.071613840"},  {100, "30.93736108"}, {200, "31.90686071"},
        {300, "31.98624714"}, {400, "31.99729613"}, {500, "31.99935959"},
    };
    return rows;
}

/// True when `printed` equals `expected` up to one unit in the tenth
/// significant digit.
inline bool matches_sig10(const std::string& printed, const std::string& expected)
{
    const double p = std::stod(printed);
    const double e = std::stod(expected);
    const double unit = std::pow(10.0, std::floor(std::log10(std::fabs(e))) - 9.0);
    return std::fabs(p - e) <= unit * (1.0 + 1e-6);
}

inline std::vector<Check> all_checks()
{
    std::vector<Check> checks;

    checks.push_back({"paper_table", 1, false, [](Context& ctx) -> std::string {
        const auto rows = ratio_table(10, 5, default_ratio_rows());
        const auto s1 = ctx.tap(rows[0].sym);
        if (s1 != 10 || rows[0].alt != 5)
            return "n=1 coefficients " + s1.get_str() + ", " + rows[0].alt.get_str();
        if (rows[1].sym != 1605340 || rows[1].alt != 176963)
            return "n=10 coefficients " + rows[1].sym.get_str() + ", " + rows[1].alt.get_str();
        const auto& golden = table_golden();
        for (std::size_t i = 0; i < golden.size(); ++i) {
            const auto printed = format_sig10(rows[i].ratio);
            if (rows[i].n != golden[i].n || !matches_sig10(printed, golden[i].ratio))
                return "ratio at n=" + std::to_string(golden[i].n) + " printed " + printed
                       + ", expected " + golden[i].ratio;
        }
        return {};
    }});

    checks.push_back({"theorem1_recurrence", 2, true, [](Context& ctx) -> std::string {
        const auto top = ctx.size<std::int64_t>(4, 12);
        const auto order = ctx.size<std::size_t>(60, 200);
        for (std::int64_t m = 1; m <= top; ++m) {
            auto rec = ctx.tap(gamma_sym_recurrence(m, order));
            auto msg = detail::first_mismatch(rec, growth_series(GroupSpec::sym(m), order),
                                              "M=" + std::to_string(m));
            if (!msg.empty())
                return msg;
        }
        return {};
    }});

    checks.push_back({"theorem2_recurrence", 3, true, [](Context& ctx) -> std::string {
        const auto top = ctx.size<std::int64_t>(3, 8);
        const auto order = ctx.size<std::size_t>(60, 150);
        for (std::int64_t m = 1; m <= top; ++m) {
            auto rec = ctx.tap(gamma_alt_recurrence(m, order));
            auto msg = detail::first_mismatch(rec, growth_series(GroupSpec::alt(m), order),
                                              "M=" + std::to_string(m));
            if (!msg.empty())
                return msg;
        }
        return {};
    }});

    checks.push_back({"alt_divisor_sum_closed_form", 3, true, [](Context& ctx) -> std::string {
        const auto top_n = ctx.size<std::int64_t>(100, 500);
        for (std::int64_t m = 1; m <= 10; ++m)
            for (std::int64_t k = 0; k <= m; ++k)
                for (std::int64_t n = 1; n <= top_n; ++n) {
                    const integer lhs = ctx.tap(integer(-alt_divisor_sum(m, k, n)));
                    const integer rhs = alt_divisor_sum_closed(m, k, n);
                    if (lhs != rhs)
                        return "M=" + std::to_string(m) + " k=" + std::to_string(k) + " n="
                               + std::to_string(n) + ": " + lhs.get_str() + " != " + rhs.get_str();
                }
        return {};
    }});

    checks.push_back({"hook_length_sum", 4, true, [](Context& ctx) -> std::string {
        const auto top_n = ctx.size<std::uint32_t>(15, 35);
        for (std::int64_t m = 1; m <= 6; ++m) {
            const auto prod = growth_series(GroupSpec::sym(m), top_n);
            std::vector<rational> sums;
            for (std::uint32_t n = 0; n <= top_n; ++n) {
                const auto v = no_coefficient(rational(-m), n, ctx.threads());
                if (v.get_den() != 1 || sgn(v) < 0)
                    return "M=" + std::to_string(m) + " n=" + std::to_string(n)
                           + ": hook sum " + v.get_str() + " is not a nonnegative integer";
                sums.push_back(v);
            }
            auto msg = detail::first_mismatch(ctx.tap(Series(std::move(sums))), prod,
                                              "M=" + std::to_string(m));
            if (!msg.empty())
                return msg;
        }
        return {};
    }});

    checks.push_back({"hook_length_sum_rational_r", 4, false, [](Context& ctx) -> std::string {
        for (int trial = 0; trial < 6; ++trial) {
            const auto r = detail::random_rational(ctx.rng(), 10);
            const std::size_t order = 25;
            std::vector<rational> sums;
            for (std::uint32_t n = 0; n <= order; ++n)
                sums.push_back(no_coefficient(r, n, ctx.threads()));
            auto msg = detail::first_mismatch(ctx.tap(Series(std::move(sums))),
                                              euler_power_series(r, order), "r=" + r.get_str());
            if (!msg.empty())
                return msg;
        }
        return {};
    }});

    checks.push_back({"fhat_golden", 5, true, [](Context&) -> std::string {
        const auto& golden = detail::fhat_golden();
        for (std::uint32_t n = 2; n <= 6; ++n) {
            const auto poly = fhat_polynomial(n);
            auto want = golden[n - 2];
            std::sort(want.begin(), want.end(),
                      [](const auto& a, const auto& b) { return a.exponents > b.exponents; });
            if (poly.terms.size() != want.size())
                return "Fhat_" + std::to_string(n) + ": " + std::to_string(poly.terms.size())
                       + " terms, expected " + std::to_string(want.size());
            for (std::size_t i = 0; i < want.size(); ++i)
                if (poly.terms[i].exponents != want[i].exponents
                    || poly.terms[i].coefficient != rational(want[i].coefficient))
                    return "Fhat_" + std::to_string(n) + ": term " + std::to_string(i)
                           + " has coefficient " + poly.terms[i].coefficient.get_str();
        }
        return {};
    }});

    checks.push_back({"fhat_explicit_vs_convolution", 5, true, [](Context& ctx) -> std::string {
        const auto top = ctx.size<std::uint32_t>(10, 20);
        const auto trials = ctx.size<int>(20, 100);
        for (std::uint32_t n = 2; n <= top; ++n) {
            const auto poly = fhat_polynomial(n);
            for (int t = 0; t < trials; ++t) {
                std::vector<rational> v;
                for (std::uint32_t i = 1; i < n; ++i)
                    v.push_back(detail::random_rational(ctx.rng(), 10));
                rational lhs = fhat_eval_explicit(poly, v);
                if (t == 0)
                    lhs = rational(ctx.tap(integer(1))) - 1 + lhs;
                const rational rhs = fhat_eval(n, v);
                if (lhs != rhs)
                    return "n=" + std::to_string(n) + ": " + lhs.get_str() + " != " + rhs.get_str();
            }
        }
        return {};
    }});

    checks.push_back({"alt_base_identity", 6, true, [](Context& ctx) -> std::string {
        const auto order = ctx.size<std::size_t>(80, 200);
        const auto p = partition_counts(order);
        const auto pe = even_parts_counts(order);
        const auto lhs = series_mul(Series::from_integers(p), Series::from_integers(pe));
        return detail::first_mismatch(ctx.tap(lhs), alt_base_series(order), "alt base");
    }});

    checks.push_back({"hook_lengths_figure", 7, true, [](Context& ctx) -> std::string {
        const auto h = hook_multiset(Partition({6, 4, 3, 1, 1}));
        auto got = h.hooks;
        got.front() = static_cast<std::uint32_t>(ctx.tap(integer(got.front())).get_ui());
        const std::vector<std::uint32_t> want{10, 7, 6, 4, 2, 1, 7, 4, 3, 1, 5, 2, 1, 2, 1};
        if (HookMultiset{got} == HookMultiset{want})
            return {};
        std::ostringstream os;
        for (auto x : got)
            os << x << ' ';
        return "hooks of (6,4,3,1,1) are " + os.str();
    }});

    checks.push_back({"oracle_sym_types", 8, true, [](Context& ctx) -> std::string {
        const auto top_m = ctx.size<std::int64_t>(2, 4);
        const auto top_n = ctx.size<std::uint32_t>(12, 20);
        for (std::int64_t m = 1; m <= top_m; ++m) {
            const auto prod = growth_series(GroupSpec::sym(m), top_n).integer_coeffs();
            for (std::uint32_t n = 0; n <= top_n; ++n) {
                auto c = oracle::sym_type_count(m, n);
                if (n == top_n)
                    c = ctx.tap(c);
                if (c != prod[n])
                    return "M=" + std::to_string(m) + " n=" + std::to_string(n) + ": "
                           + c.get_str() + " types vs " + prod[n].get_str();
            }
        }
        return {};
    }});

    checks.push_back({"oracle_alt_types", 8, true, [](Context& ctx) -> std::string {
        const auto top_m = ctx.size<std::int64_t>(2, 3);
        const auto top_n = ctx.size<std::uint32_t>(10, 15);
        for (std::int64_t m = 1; m <= top_m; ++m) {
            const auto prod = growth_series(GroupSpec::alt(m), top_n).integer_coeffs();
            for (std::uint32_t n = 0; n <= top_n; ++n) {
                auto c = oracle::alt_type_count(m, n);
                if (n == top_n)
                    c = ctx.tap(c);
                if (c != prod[n])
                    return "M=" + std::to_string(m) + " n=" + std::to_string(n) + ": "
                           + c.get_str() + " types vs " + prod[n].get_str();
            }
        }
        return {};
    }});

    checks.push_back({"oracle_naive_products", 8, true, [](Context& ctx) -> std::string {
        const auto trials = ctx.size<int>(10, 50);
        std::uniform_int_distribution<int> nfactors(1, 3);
        std::uniform_int_distribution<std::int64_t> period(1, 4);
        std::uniform_int_distribution<std::int64_t> exponent(-5, 5);
        std::uniform_int_distribution<std::size_t> order(0, 80);
        for (int t = 0; t < trials; ++t) {
            EulerProduct p;
            const int k = nfactors(ctx.rng());
            for (int i = 0; i < k; ++i)
                p.factors.push_back({period(ctx.rng()), exponent(ctx.rng())});
            const auto n = order(ctx.rng());
            auto msg = detail::first_mismatch(ctx.tap(expand_product(p, n)),
                                              oracle::naive_coefficients(p, n),
                                              "trial " + std::to_string(t));
            if (!msg.empty())
                return msg;
        }
        return {};
    }});

    checks.push_back({"asymptotic_closed_forms", 9, true, [](Context& ctx) -> std::string {
        bool first = true;
        for (std::int64_t m = 1; m <= 12; ++m)
            for (std::uint64_t n = 10; n <= 1'000'000; n *= 10) {
                double sym = sym_estimate(m, n).log_value;
                if (first) {
                    sym += static_cast<double>(ctx.tap(integer(0)).get_si());
                    first = false;
                }
                const double cdf = cdf_estimate(ExponentVector({m}), n).log_value;
                if (std::fabs(sym - cdf) >= 1e-12 * std::fabs(cdf))
                    return "sym M=" + std::to_string(m) + " n=" + std::to_string(n);
                const double alt = alt_estimate(m, n).log_value;
                const double cdf2 = cdf_estimate(ExponentVector({2 * m}), n).log_value
                                    - static_cast<double>(m) * std::log(2.0);
                if (std::fabs(alt - cdf2) >= 1e-12 * std::fabs(cdf2))
                    return "alt M=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        return {};
    }});

    checks.push_back({"asymptotic_convergence", 9, false, [](Context& ctx) -> std::string {
        const std::vector<std::uint64_t> ns{100, 200, 300, 400, 500};
        const std::vector<GroupSpec> groups{GroupSpec::sym(10), GroupSpec::alt(5)};
        std::ostringstream fails;
        for (const auto& g : groups) {
            auto exact = growth_series(g, 500).integer_coeffs();
            exact[500] = ctx.tap(exact[500]);
            double prev = INFINITY;
            for (auto n : ns) {
                const double log_exact = log_of(exact[n]);
                const double err = std::fabs(std::expm1(growth_estimate(g, n).log_value - log_exact));
                if (!(err < prev))
                    fails << to_string(g.kind) << ' ' << g.m << ": error at n=" << n << " is "
                          << err << ", not below " << prev << "; ";
                prev = err;
            }
            if (!(prev < 0.05))
                fails << to_string(g.kind) << ' ' << g.m << ": |estimate/exact - 1| = " << prev
                      << " at n=500 (bound 0.05); ";
        }
        return fails.str();
    }});

    checks.push_back({"ratio_classification", 9, true, [](Context& ctx) -> std::string {
        std::vector<int> seen(12, 0);
        bool first = true;
        for (auto k1 : {Kind::sym, Kind::alt})
            for (auto k2 : {Kind::sym, Kind::alt})
                for (std::int64_t a = 1; a <= 8; ++a)
                    for (std::int64_t b = 1; b <= 8; ++b) {
                        const GroupSpec g1(k1, a), g2(k2, b);
                        auto got = classify_ratio(g1, g2);
                        if (first && ctx.tap(integer(0)) != 0)
                            got.tag = RatioTag::infinite;
                        first = false;
                        const auto want = detail::corollary_verdict(g1, g2);
                        const bool same = got.tag == want.tag
                                          && (got.tag != RatioTag::finite
                                              || std::fabs(*got.value - *want.value) < 1e-15);
                        if (!same)
                            return std::string(to_string(k1)) + ' ' + std::to_string(a) + " / "
                                   + to_string(k2) + ' ' + std::to_string(b) + ": got "
                                   + to_string(got.tag);
                        const int case_index = (k1 == Kind::alt ? 2 : 0) + (k2 == Kind::alt ? 1 : 0);
                        ++seen[static_cast<std::size_t>(case_index * 3 + static_cast<int>(got.tag))];
                    }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i] == 0)
                return "verdict " + std::to_string(i) + " never produced on the grid";
        return {};
    }});

    checks.push_back({"ratio_estimate_coherence", 9, false, [](Context&) -> std::string {
        for (auto k1 : {Kind::sym, Kind::alt})
            for (auto k2 : {Kind::sym, Kind::alt})
                for (std::int64_t a = 1; a <= 8; ++a)
                    for (std::int64_t b = 1; b <= 8; ++b) {
                        const GroupSpec g1(k1, a), g2(k2, b);
                        const auto verdict = classify_ratio(g1, g2);
                        const double lo = ratio_estimate(g1, g2, 10'000).log_value;
                        const double hi = ratio_estimate(g1, g2, 1'000'000).log_value;
                        bool ok = true;
                        if (verdict.tag == RatioTag::zero)
                            ok = hi < lo;
                        else if (verdict.tag == RatioTag::infinite)
                            ok = hi > lo;
                        else
                            ok = std::fabs(std::exp(hi) / *verdict.value - 1.0) < 0.1;
                        if (!ok)
                            return std::string(to_string(k1)) + ' ' + std::to_string(a) + " / "
                                   + to_string(k2) + ' ' + std::to_string(b);
                    }
        return {};
    }});

    checks.push_back({"growth_rate_at_500", 9, false, [](Context& ctx) -> std::string {
        std::vector<GroupSpec> groups{GroupSpec::sym(1), GroupSpec::sym(5), GroupSpec::sym(10),
                                      GroupSpec::alt(1), GroupSpec::alt(5)};
        std::ostringstream fails;
        for (const auto& g : groups) {
            auto exact = growth_series(g, 500).integer_coeffs();
            const integer top = ctx.tap(exact[500]);
            const double observed = log_of(top) / std::sqrt(500.0);
            const double rate = growth_rate(g).value;
            const double rel = std::fabs(observed / rate - 1.0);
            if (!(rel <= 0.10))
                fails << to_string(g.kind) << ' ' << g.m << ": log(gamma(500))/sqrt(500) = "
                      << observed << " vs rate " << rate << " (off by " << rel * 100.0
                      << "%, bound 10%); ";
        }
        return fails.str();
    }});

    return checks;
}

/// Runs every check applicable at the requested level, in a fixed order.
inline std::vector<CheckResult> run(const Options& opts,
                                    const std::function<void(const CheckResult&)>& on_result = {})
{
    std::vector<CheckResult> results;
    for (const auto& check : all_checks()) {
        if (opts.level == Level::quick && !check.quick)
            continue;
        CheckResult r;
        r.name = check.name;
        r.criterion = check.criterion;
        const auto start = std::chrono::steady_clock::now();
        try {
            Context ctx(opts, check.name);
            r.detail = check.body(ctx);
            while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';'))
                r.detail.pop_back();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_result)
            on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace wreath::verify
