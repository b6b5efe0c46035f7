// wreathgrowth: conjugacy growth coefficients of H wr Sym(X) and H wr Alt(X).
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wreath/asymptotics.hpp"
#include "wreath/growth.hpp"
#include "wreath/partitions.hpp"
#include "wreath/ratio_table.hpp"
#include "wreath/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace wreath;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { text, csv, json };

/// A cell renders as `text` in text/CSV output and as `value` in JSON.
struct Cell {
    std::string text;
    ordered_json value;
};

Cell exact(const integer& x) { return {x.get_str(), x.get_str()}; }
Cell exact(std::uint64_t x) { return {std::to_string(x), std::to_string(x)}; }
Cell exact(const rational& x) { return {x.get_str(), x.get_str()}; }
Cell label(std::string s) { return {s, s}; }

std::string shortest(double x)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

Cell real(double x) { return {shortest(x), x}; }

struct Report {
    std::string command;
    ordered_json params = ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Replaces the tabular text rendering when set.
    std::optional<std::string> text;
};

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void render(const Report& r, Format fmt, std::ostream& os)
{
    switch (fmt) {
    case Format::json: {
        ordered_json doc;
        doc["command"] = r.command;
        doc["params"] = r.params;
        doc["rows"] = ordered_json::array();
        for (const auto& row : r.rows) {
            ordered_json obj = ordered_json::object();
            for (std::size_t i = 0; i < r.columns.size(); ++i)
                obj[r.columns[i]] = row[i].value;
            doc["rows"].push_back(std::move(obj));
        }
        os << doc.dump(2) << '\n';
        return;
    }
    case Format::csv:
        for (std::size_t i = 0; i < r.columns.size(); ++i)
            os << (i ? "," : "") << csv_escape(r.columns[i]);
        os << '\n';
        for (const auto& row : r.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << csv_escape(row[i].text);
            os << '\n';
        }
        return;
    case Format::text:
        if (r.text) {
            os << *r.text;
            return;
        }
        std::vector<std::size_t> width(r.columns.size());
        for (std::size_t i = 0; i < r.columns.size(); ++i)
            width[i] = r.columns[i].size();
        for (const auto& row : r.rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], row[i].text.size());
        auto line = [&](auto get) {
            std::string s;
            for (std::size_t i = 0; i < r.columns.size(); ++i) {
                const std::string cell = get(i);
                if (i)
                    s += "  ";
                s += std::string(width[i] - cell.size(), ' ') + cell;
            }
            os << s << '\n';
        };
        line([&](std::size_t i) { return r.columns[i]; });
        for (const auto& row : r.rows)
            line([&](std::size_t i) { return row[i].text; });
        return;
    }
}

// ---------------------------------------------------------------------------

Report cmd_coeffs(const std::string& kind, std::optional<std::int64_t> m, std::size_t order)
{
    Report r;
    r.command = "coeffs";
    r.params["kind"] = kind;
    r.params["order"] = std::to_string(order);
    Series s(0);
    if (kind == "sym-base" || kind == "alt-base") {
        if (m)
            throw UsageError("--m is not accepted for " + kind);
        s = kind == "sym-base" ? sym_base_series(order) : alt_base_series(order);
    } else {
        if (!m)
            throw UsageError("--m is required for " + kind);
        if (*m < 1)
            throw UsageError("--m must be at least 1");
        r.params["m"] = std::to_string(*m);
        s = growth_series(GroupSpec(kind == "sym" ? Kind::sym : Kind::alt, *m), order);
    }
    r.columns = {"n", "gamma"};
    const auto c = s.integer_coeffs();
    for (std::size_t n = 0; n <= order; ++n)
        r.rows.push_back({exact(static_cast<std::uint64_t>(n)), exact(c[n])});
    return r;
}

Report cmd_ratio_table(std::int64_t m_sym, std::int64_t m_alt, const std::vector<std::uint64_t>& ns)
{
    if (m_sym < 1 || m_alt < 1)
        throw UsageError("--ms and --ma must be at least 1");
    for (auto n : ns)
        if (n < 1)
            throw UsageError("row indices must be at least 1");
    Report r;
    r.command = "ratio-table";
    r.params["ms"] = std::to_string(m_sym);
    r.params["ma"] = std::to_string(m_alt);
    r.params["rows"] = ordered_json::array();
    for (auto n : ns)
        r.params["rows"].push_back(std::to_string(n));
    r.columns = {"n", "gamma_sym", "gamma_alt", "ratio"};
    for (const auto& row : ratio_table(m_sym, m_alt, ns))
        r.rows.push_back({exact(row.n), exact(row.sym), exact(row.alt),
                          {format_sig10(row.ratio), row.ratio}});
    return r;
}

Report cmd_hooks(const std::vector<std::int64_t>& raw)
{
    std::vector<std::uint32_t> parts;
    for (auto p : raw) {
        if (p < 1)
            throw UsageError("parts must be positive");
        parts.push_back(static_cast<std::uint32_t>(p));
    }
    Partition lambda;
    try {
        lambda = Partition(parts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Report r;
    r.command = "hooks";
    r.params["parts"] = ordered_json::array();
    for (auto p : parts)
        r.params["parts"].push_back(std::to_string(p));
    r.columns = {"row", "hooks"};
    std::string text;
    const auto diagram = hook_diagram(lambda);
    for (std::size_t i = 0; i < diagram.size(); ++i) {
        std::string joined;
        ordered_json arr = ordered_json::array();
        for (auto h : diagram[i]) {
            joined += (joined.empty() ? "" : " ") + std::to_string(h);
            arr.push_back(std::to_string(h));
        }
        text += joined + '\n';
        r.rows.push_back({exact(static_cast<std::uint64_t>(i + 1)), {joined, arr}});
    }
    r.text = text;
    return r;
}

std::string render_monomial(const FhatTerm& t)
{
    std::string s;
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
        if (t.exponents[i] == 0)
            continue;
        if (!s.empty())
            s += ' ';
        s += "x" + std::to_string(i + 1);
        if (t.exponents[i] > 1)
            s += "^" + std::to_string(t.exponents[i]);
    }
    return s;
}

std::string render_polynomial(const FhatPolynomial& poly)
{
    std::string out;
    for (const auto& t : poly.terms) {
        const bool negative = sgn(t.coefficient) < 0;
        const rational mag = abs(t.coefficient);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mag != 1)
            out += mag.get_str() + " ";
        out += render_monomial(t);
    }
    return out;
}

Report cmd_fhat(std::int64_t n)
{
    if (n < 2 || n > static_cast<std::int64_t>(fhat_explicit_limit))
        throw UsageError("n must lie in [2, " + std::to_string(fhat_explicit_limit) + "]");
    const auto poly = fhat_polynomial(static_cast<std::uint32_t>(n));
    Report r;
    r.command = "fhat";
    r.params["n"] = std::to_string(n);
    r.columns = {"coefficient", "monomial", "exponents"};
    for (const auto& t : poly.terms) {
        std::string exps;
        ordered_json arr = ordered_json::array();
        for (auto e : t.exponents) {
            exps += (exps.empty() ? "" : " ") + std::to_string(e);
            arr.push_back(std::to_string(e));
        }
        r.rows.push_back({exact(t.coefficient), label(render_monomial(t)), {exps, arr}});
    }
    r.text = render_polynomial(poly) + '\n';
    return r;
}

struct AsymptArgs {
    std::string kind;
    std::optional<std::int64_t> m;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> series_index;
    std::vector<std::int64_t> generic;
    bool with_exact = false;
    bool binomial_sum = false;
};

inline constexpr std::uint64_t max_exact_order = 2000;

Report cmd_asympt(const AsymptArgs& a)
{
    if (a.n.has_value() == a.series_index.has_value())
        throw UsageError("give exactly one of --n and --series-index");
    Report r;
    r.command = "asympt";

    Estimate est;
    std::uint64_t index = 0; // series index of the estimated coefficient
    std::uint64_t reduced = 0;
    std::function<integer()> exact_value;

    if (!a.generic.empty()) {
        if (!a.kind.empty() || a.m)
            throw UsageError("--generic excludes a group kind and --m");
        std::optional<ExponentVector> e;
        try {
            e.emplace(a.generic);
        } catch (const std::invalid_argument& err) {
            throw UsageError(err.what());
        }
        const auto params = cdf_params(*e);
        const auto d = static_cast<std::uint64_t>(params.d);
        if (a.series_index) {
            if (*a.series_index == 0 || *a.series_index % d != 0)
                throw UsageError("series index " + std::to_string(*a.series_index)
                                 + " is not a positive multiple of d = " + std::to_string(d));
            reduced = *a.series_index / d;
        } else {
            reduced = *a.n;
        }
        if (reduced < 1)
            throw UsageError("n must be at least 1");
        index = reduced * d;
        est = cdf_estimate(*e, reduced);
        ordered_json ev = ordered_json::array();
        for (auto x : a.generic)
            ev.push_back(std::to_string(x));
        r.params["generic"] = ev;
        r.params["d"] = std::to_string(d);
        r.params["delta"] = params.delta.get_str();
        exact_value = [e = *e, index] {
            return generalized_partition_series(e, index).integer_coeffs()[index];
        };
    } else {
        if (a.kind != "sym" && a.kind != "alt")
            throw UsageError("kind must be sym or alt (or use --generic)");
        if (!a.m || *a.m < 1)
            throw UsageError("--m must be given and at least 1");
        const GroupSpec g(a.kind == "sym" ? Kind::sym : Kind::alt, *a.m);
        index = reduced = a.n ? *a.n : *a.series_index;
        if (index < 1)
            throw UsageError("n must be at least 1");
        if (a.binomial_sum && g.kind != Kind::alt)
            throw UsageError("--binomial-sum applies to alt only");
        est = a.binomial_sum ? alt_binomial_estimate(g.m, index) : growth_estimate(g, index);
        r.params["kind"] = a.kind;
        r.params["m"] = std::to_string(g.m);
        exact_value = [g, index] { return growth_series(g, index).integer_coeffs()[index]; };
    }
    r.params["n"] = std::to_string(reduced);
    r.params["series_index"] = std::to_string(index);

    r.columns = {"series_index", "log_estimate", "estimate"};
    std::vector<Cell> row{exact(index), real(est.log_value),
                          est.value ? real(*est.value) : Cell{"overflow", "overflow"}};
    if (a.with_exact) {
        if (index > max_exact_order)
            throw UsageError("--with-exact is limited to series index <= "
                             + std::to_string(max_exact_order));
        const integer x = exact_value();
        r.columns.insert(r.columns.end(), {"exact", "ratio"});
        row.push_back(exact(x));
        if (sgn(x) > 0)
            row.push_back(real(std::exp(est.log_value - log_of(x))));
        else
            row.push_back({"undefined", nullptr});
    }
    r.rows.push_back(std::move(row));
    return r;
}

Report cmd_verify(const std::string& level, unsigned threads, const std::string& corrupt,
                  bool& all_passed)
{
    verify::Options opts;
    opts.level = level == "full" ? verify::Level::full : verify::Level::quick;
    opts.threads = threads;
    opts.corrupt = corrupt;
    if (!corrupt.empty()) {
        bool known = false;
        for (const auto& c : verify::all_checks())
            known = known || c.name == corrupt;
        if (!known)
            throw UsageError("unknown check '" + corrupt + "'");
    }
    Report r;
    r.command = "verify";
    r.params["level"] = level;
    r.params["threads"] = std::to_string(threads);
    r.columns = {"check", "criterion", "status", "seconds", "detail"};
    std::string text;
    all_passed = true;
    for (const auto& res : verify::run(opts, [](const verify::CheckResult& c) {
             std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
         })) {
        all_passed = all_passed && res.passed;
        const std::string status = res.passed ? "PASS" : "FAIL";
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", res.seconds);
        text += status + " " + res.name + " [criterion " + std::to_string(res.criterion) + ", "
                + secs + " s]" + (res.passed ? "" : ": " + res.detail) + "\n";
        r.rows.push_back({label(res.name), exact(static_cast<std::uint64_t>(res.criterion)),
                          label(status), real(res.seconds), label(res.detail)});
    }
    text += all_passed ? "all checks passed\n" : "verification FAILED\n";
    r.text = text;
    return r;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Conjugacy growth series of permutational wreath products"};
    app.require_subcommand(1);

    Format format = Format::text;
    const std::map<std::string, Format> formats{
        {"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    std::string kind;
    std::optional<std::int64_t> m;
    std::size_t order = 20;
    auto* coeffs = app.add_subcommand("coeffs", "Coefficients gamma(0..N) of a growth series");
    coeffs->add_option("kind", kind, "sym-base | alt-base | sym | alt")
        ->required()
        ->check(CLI::IsMember({"sym-base", "alt-base", "sym", "alt"}));
    coeffs->add_option("--m", m, "Number of conjugacy classes of H");
    coeffs->add_option("--order", order, "Truncation order N");
    add_format(coeffs);

    std::int64_t m_sym = 10, m_alt = 5;
    std::vector<std::uint64_t> rows = default_ratio_rows();
    auto* ratio = app.add_subcommand("ratio-table", "gamma_Sym(n), gamma_Alt(n) and their ratio");
    ratio->add_option("--ms", m_sym, "Classes of H for the Sym factor");
    ratio->add_option("--ma", m_alt, "Classes of H for the Alt factor");
    ratio->add_option("--rows", rows, "Lengths n to tabulate")->delimiter(',');
    add_format(ratio);

    std::vector<std::int64_t> parts;
    auto* hooks = app.add_subcommand("hooks", "Hook lengths of a partition, row by row");
    hooks->add_option("parts", parts, "Weakly decreasing positive parts")->required();
    add_format(hooks);

    std::int64_t fhat_n = 2;
    auto* fhat = app.add_subcommand("fhat", "The universal polynomial Fhat_n");
    fhat->add_option("n", fhat_n, "Index n, 2 <= n <= 30")->required();
    add_format(fhat);

    AsymptArgs asym;
    auto* asympt = app.add_subcommand("asympt", "Leading-order asymptotic estimate");
    asympt->add_option("kind", asym.kind, "sym | alt");
    asympt->add_option("--m", asym.m, "Number of conjugacy classes of H");
    asympt->add_option("--n", asym.n, "Index n (reduced index for --generic)");
    asympt->add_option("--series-index", asym.series_index,
                       "Series index; with --generic it must be a multiple of d");
    asympt->add_option("--generic", asym.generic, "Exponent vector e1,e2,...")->delimiter(',');
    asympt->add_flag("--with-exact", asym.with_exact, "Also compute the exact coefficient");
    asympt->add_flag("--binomial-sum", asym.binomial_sum,
                     "Alt only: sum every binomial summand instead of the dominant one");
    add_format(asympt);

    std::string level = "quick";
    unsigned threads = 1;
    std::string corrupt;
    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-verification suite");
    verify_cmd->add_option("level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--threads", threads, "Workers for the hook-length sums")
        ->check(CLI::Range(1U, 256U));
    verify_cmd->add_option("--corrupt", corrupt, "Inject a fault into the named check (testing)");
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Report report;
        int status = 0;
        if (*coeffs) {
            report = cmd_coeffs(kind, m, order);
        } else if (*ratio) {
            report = cmd_ratio_table(m_sym, m_alt, rows);
        } else if (*hooks) {
            report = cmd_hooks(parts);
        } else if (*fhat) {
            report = cmd_fhat(fhat_n);
        } else if (*asympt) {
            report = cmd_asympt(asym);
        } else if (*verify_cmd) {
            bool ok = true;
            report = cmd_verify(level, threads, corrupt, ok);
            status = ok ? 0 : 1;
        }
        render(report, format, std::cout);
        return status;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
