#pragma once

// gamma_Sym(n) / gamma_Alt(n) side by side, the comparison that illustrates
// the 2^{M_A} limit when M_S = 2 M_A.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "growth.hpp"

namespace wreath {

struct RatioRow {
    std::uint64_t n = 0;
    integer sym;
    integer alt;
    double ratio = 0.0;
};

inline const std::vector<std::uint64_t>& default_ratio_rows()
{
    static const std::vector<std::uint64_t> rows{1, 10, 100, 200, 300, 400, 500};
    return rows;
}

/// Exact coefficients of H wr Sym(X) (M = m_sym) and H wr Alt(X) (M = m_alt)
/// at the requested lengths, and their ratio rounded once to double.
inline std::vector<RatioRow> ratio_table(std::int64_t m_sym, std::int64_t m_alt,
                                         const std::vector<std::uint64_t>& rows)
{
    std::uint64_t order = 0;
    for (auto n : rows)
        order = std::max(order, n);
    const auto sym = growth_series(GroupSpec::sym(m_sym), order).integer_coeffs();
    const auto alt = growth_series(GroupSpec::alt(m_alt), order).integer_coeffs();
    std::vector<RatioRow> out;
    out.reserve(rows.size());
    for (auto n : rows) {
        RatioRow r;
        r.n = n;
        r.sym = sym[n];
        r.alt = alt[n];
        // 200 bits keeps the quotient exact well past double precision
        // before the single rounding in get_d().
        mpf_class q(r.sym, 200);
        q /= mpf_class(r.alt, 200);
        r.ratio = q.get_d();
        out.push_back(std::move(r));
    }
    return out;
}

/// Ten significant digits with trailing zeros kept, e.g. 9.071613840.
inline std::string format_sig10(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.10g", x);
    return buf;
}

} // namespace wreath
