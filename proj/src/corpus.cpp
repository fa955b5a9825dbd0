#include "lct/corpus.hpp"

#include "lct/boundary.hpp"
#include "lct/error.hpp"
#include "lct/k3cover.hpp"
#include "lct/polynomial.hpp"
#include "lct/threshold.hpp"
#include "lct/weights.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <sstream>

namespace lct {

// --- families -------------------------------------------------------------

std::pair<long, long> ab_exponents(long total)
{
    for (long b = total / 3; b >= 0; --b)
        if ((total - 3 * b) % 2 == 0)
            return {(total - 3 * b) / 2, b};
    throw DomainError("no exponents with 2a + 3b = " + std::to_string(total));
}

namespace {

long eval_placeholder(std::string_view expr, long n, long a, long b, bool has_ab)
{
    std::string_view head = expr.substr(0, 1);
    long base;
    if (head == "n" || head == "m")
        base = n;
    else if ((head == "a" || head == "b") && has_ab)
        base = head == "a" ? a : b;
    else
        throw ParseError("unknown placeholder '{" + std::string(expr) + "}'");
    std::string_view rest = expr.substr(1);
    if (rest.empty())
        return base;
    if (rest.front() != '+' && rest.front() != '-')
        throw ParseError("malformed placeholder '{" + std::string(expr) + "}'");
    Rational k = parse_rational(rest.substr(1));
    if (!is_integer(k))
        throw ParseError("malformed placeholder '{" + std::string(expr) + "}'");
    long kv = k.get_num().get_si();
    return rest.front() == '+' ? base + kv : base - kv;
}

} // namespace

std::string instantiate(const Family& family, long n)
{
    long a = 0, b = 0;
    if (family.ab) {
        long total = eval_placeholder(*family.ab, n, 0, 0, false);
        std::tie(a, b) = ab_exponents(total);
    }
    std::string out;
    const std::string& t = family.text;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] != '{') {
            out += t[i];
            continue;
        }
        auto close = t.find('}', i);
        if (close == std::string::npos)
            throw ParseError("unterminated placeholder", i);
        out += std::to_string(eval_placeholder(std::string_view(t).substr(i + 1, close - i - 1), n, a, b,
                                               family.ab.has_value()));
        i = close;
    }
    return out;
}

// --- loading --------------------------------------------------------------

namespace {

class RowReader {
public:
    RowReader(const nlohmann::json& row, std::size_t index) : row_(row), index_(index) {}

    [[noreturn]] void fail(const std::string& field, const std::string& what) const
    {
        throw ParseError("row " + std::to_string(index_) + ", field '" + field + "': " + what);
    }

    const nlohmann::json& field(const std::string& name) const
    {
        if (!row_.contains(name))
            fail(name, "missing");
        return row_[name];
    }

    bool present(const std::string& name) const { return row_.contains(name) && !row_[name].is_null(); }

    std::string string(const std::string& name) const
    {
        const auto& v = field(name);
        if (!v.is_string())
            fail(name, "expected a string");
        return v.get<std::string>();
    }

    long integer(const std::string& name) const
    {
        const auto& v = field(name);
        if (!v.is_number_integer())
            fail(name, "expected an integer");
        return v.get<long>();
    }

    Rational rational(const std::string& name) const
    {
        try {
            return parse_rational(string(name));
        } catch (const ParseError& e) {
            fail(name, e.what());
        }
    }

    Weight weight(const std::string& name) const
    {
        const auto& v = field(name);
        if (!v.is_array() || v.size() != 3)
            fail(name, "expected three integers");
        std::vector<long> entries;
        for (const auto& e : v) {
            if (!e.is_number_integer())
                fail(name, "expected three integers");
            entries.push_back(e.get<long>());
        }
        try {
            return Weight(entries);
        } catch (const Error& e) {
            fail(name, e.what());
        }
    }

    DeltaTriple delta(const std::string& name) const
    {
        const auto& v = field(name);
        if (!v.is_array() || v.size() != 3)
            fail(name, "expected three entries");
        DeltaTriple out;
        for (std::size_t i = 0; i < 3; ++i) {
            if (v[i].is_null())
                continue;
            if (!v[i].is_string())
                fail(name, "entries are rational strings or null");
            try {
                out[i] = parse_rational(v[i].get<std::string>());
            } catch (const ParseError& e) {
                fail(name, e.what());
            }
        }
        return out;
    }

private:
    const nlohmann::json& row_;
    std::size_t index_;
};

TableRow read_row(const nlohmann::json& j, std::size_t index)
{
    RowReader r(j, index);
    if (!j.is_object())
        r.fail("", "row is not an object");
    TableRow row;
    long table = r.integer("table");
    if (table < 1 || table > 3)
        r.fail("table", "must be 1, 2 or 3");
    row.table = static_cast<int>(table);
    row.section = r.string("section");
    row.name = r.string("name");
    row.f_text = r.string("f");
    row.vars = r.present("vars") ? r.string("vars") : "xyz";
    row.ell_text = r.string("ell");
    row.c = r.rational("c");
    if (row.c <= 0 || row.c >= 1)
        r.fail("c", "must lie strictly between 0 and 1");
    row.weight = r.weight("w");
    row.s = r.weight("s");
    row.delta = r.delta("delta");
    if (r.present("deltaAlt"))
        row.delta_alt = r.delta("deltaAlt");
    if (r.present("yonemura"))
        row.yonemura = r.integer("yonemura");
    if (r.present("note"))
        row.note = r.string("note");
    if (r.present("family")) {
        const auto& fam = j["family"];
        if (!fam.is_object() || !fam.contains("text") || !fam["text"].is_string())
            r.fail("family", "expected an object with a 'text' string");
        Family family{fam["text"].get<std::string>(), std::nullopt};
        if (fam.contains("ab") && !fam["ab"].is_null()) {
            if (!fam["ab"].is_string())
                r.fail("family", "'ab' must be a string");
            family.ab = fam["ab"].get<std::string>();
        }
        row.family = std::move(family);
    }
    row.position = index;

    std::string field = "f";
    try {
        if (row.vars.size() != 3)
            r.fail("vars", "expected three variables");
        Polynomial f = parse_polynomial(row.f_text, row.vars);
        field = "ell";
        parse_polynomial(row.ell_text, row.vars);
        if (row.family) {
            field = "family";
            if (parse_polynomial(instantiate(*row.family, 2), row.vars) != f)
                r.fail("family", "instantiation at n = 2 differs from 'f'");
        }
    } catch (const ParseError& e) {
        if (std::string(e.what()).rfind("row ", 0) == 0)
            throw;
        r.fail(field, e.what());
    } catch (const DomainError& e) {
        r.fail(field, e.what());
    }
    return row;
}

} // namespace

std::vector<TableRow> parse_corpus(const nlohmann::json& j)
{
    if (!j.is_array())
        throw ParseError("corpus must be a JSON array of rows");
    std::vector<TableRow> rows;
    std::map<std::string, int> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        TableRow row = read_row(j[i], i);
        row.id = "T" + std::to_string(row.table) + "/" + (row.section.empty() ? "" : row.section + "/") + row.name;
        int k = ++seen[row.id];
        if (k > 1)
            row.id += "#" + std::to_string(k);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableRow> load_corpus(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open corpus file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return parse_corpus(j);
}

// --- verification ---------------------------------------------------------

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Warn:
        return "warn";
    }
    return "?";
}

bool RowReport::failed() const
{
    return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Fail; });
}

bool RowReport::warned() const
{
    return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Warn; });
}

const CheckResult& RowReport::check(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return c;
    throw DomainError("no check named '" + name + "'");
}

namespace {

const char* const kCheckNames[] = {"c", "S", "delta", "ell", "balance", "k3"};

std::string plane_text(const Weight& w)
{
    if (w[0] == 1 && w[1] == 1 && w[2] == 1)
        return "P^2";
    return "P(" + w.to_string() + ")";
}

std::string triple_text(const std::array<Rational, 3>& d)
{
    return "(" + to_string(d[0]) + "," + to_string(d[1]) + "," + to_string(d[2]) + ")";
}

std::array<Rational, 3> literal(const DeltaTriple& d)
{
    std::array<Rational, 3> out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = d[i].value_or(Rational(0));
    return out;
}

/// Equal up to a nonzero scalar.
bool proportional(const Polynomial& a, const Polynomial& b)
{
    if (a.term_count() != b.term_count() || a.is_zero())
        return a.is_zero() && b.is_zero();
    Rational ratio = b.terms().begin()->second / a.terms().begin()->second;
    return a * ratio == b;
}

bool same_support(const Polynomial& a, const Polynomial& b)
{
    if (a.term_count() != b.term_count())
        return false;
    auto ia = a.terms().begin();
    for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ia, ++ib)
        if (ia->first != ib->first)
            return false;
    return true;
}

struct Reporter {
    RowReport& report;

    void add(int number, CheckStatus status, std::string expected, std::string got, std::string message = {})
    {
        report.checks.push_back(
            {number, kCheckNames[number - 1], status, std::move(expected), std::move(got), std::move(message)});
    }
    void pass(int number, std::string value, std::string message = {})
    {
        add(number, CheckStatus::Pass, value, value, std::move(message));
    }
    void fail_from(int first, const std::string& message)
    {
        for (int k = first; k <= 6; ++k)
            add(k, CheckStatus::Fail, "", "", message);
    }
};

void check_k3(Reporter& rep, const TableRow& row, const Polynomial& f, const Rational& c)
{
    std::optional<long> m;
    try {
        m = standard_form(c);
    } catch (const DomainError& e) {
        rep.add(6, CheckStatus::Fail, row.yonemura ? "standard form" : "non-standard", "error", e.what());
        return;
    }
    if (!row.yonemura) {
        if (m) {
            rep.add(6, CheckStatus::Fail, "non-standard c", "c = 1 - 1/" + std::to_string(*m));
            return;
        }
        try {
            k3_cover(f, row.weight);
            rep.add(6, CheckStatus::Fail, "non-standard c", "k3_cover succeeded");
        } catch (const DomainError&) {
            rep.pass(6, "non-standard c");
        }
        return;
    }
    if (!m) {
        rep.add(6, CheckStatus::Fail, "standard form (Yonemura " + std::to_string(*row.yonemura) + ")",
                "non-standard c " + to_string(c));
        return;
    }
    K3CoverRecord k3 = k3_cover(f, row.weight, row.yonemura);
    std::string got = "t^" + std::to_string(k3.m) + ", weights (" + k3.weight4.to_string() + "), sum/d = " +
                      to_string(k3.normalized_sum);
    if (k3.m != *m || k3.normalized_sum != 1)
        rep.add(6, CheckStatus::Fail, "t^" + std::to_string(*m) + ", sum/d = 1", got);
    else
        rep.pass(6, got);
}

} // namespace

RowReport verify_row(const TableRow& row)
{
    RowReport report{row.id, row.table, row.section, row.name, {}};
    Reporter rep{report};

    std::optional<Polynomial> f;
    std::optional<ThresholdReport> tr;
    try {
        f = parse_polynomial(row.f_text, row.vars);
        tr = lct_candidate(*f, row.weight);
    } catch (const Error& e) {
        rep.fail_from(1, e.what());
        return report;
    }

    // (1) threshold
    if (tr->candidate == row.c)
        rep.pass(1, to_string(row.c));
    else
        rep.add(1, CheckStatus::Fail, to_string(row.c), to_string(tr->candidate));

    // (2) well-formed plane
    WellFormedPlane plane = well_form(row.weight);
    if (plane.well_formed == row.s)
        rep.pass(2, plane.display());
    else
        rep.add(2, CheckStatus::Fail, plane_text(row.s), plane.display());

    std::optional<LogEnriquesRecord> rec;
    std::optional<Polynomial> ell_table;
    try {
        rec = compute_record(*f, row.weight);
        ell_table = parse_polynomial(row.ell_text, row.vars);
    } catch (const Error& e) {
        rep.fail_from(3, e.what());
        return report;
    }

    // (3) different coefficients; the table may write a coordinate line as
    // a factor of ell instead of moving it into delta.
    const auto& delta = rec->delta;
    auto [ell_core, ell_powers] = divide_out_coordinate_factors(*ell_table);
    std::array<Rational, 3> lit = literal(row.delta);
    std::array<Rational, 3> absorbed = lit;
    bool any_power = false;
    for (std::size_t i = 0; i < 3; ++i) {
        absorbed[i] += tr->candidate * Rational(ell_powers[i]) / Rational(plane.pair_gcds[i]);
        any_power = any_power || ell_powers[i] > 0;
    }
    bool ell_absorbs = false;
    std::string delta_note;
    if (!rec->klt_coefficients()) {
        rep.add(3, CheckStatus::Fail, triple_text(lit), triple_text(delta), "delta >= 1");
    } else if (lit == delta) {
        if (row.delta_alt)
            delta_note = "reading " + triple_text(lit) + " certified; alternative " +
                         triple_text(literal(*row.delta_alt)) + " rejected";
        rep.pass(3, triple_text(delta), delta_note);
    } else if (any_power && absorbed == delta) {
        ell_absorbs = true;
        std::string lines;
        for (std::size_t i = 0; i < 3; ++i)
            if (ell_powers[i] > 0)
                lines += (lines.empty() ? "L" : ", L") + std::to_string(i + 1);
        delta_note = "table writes " + lines + " as a factor of ell";
        rep.add(3, CheckStatus::Pass, triple_text(lit), triple_text(delta), delta_note);
    } else if (row.delta_alt && literal(*row.delta_alt) == delta) {
        rep.add(3, CheckStatus::Pass, triple_text(lit), triple_text(delta),
                "alternative reading " + triple_text(delta) + " certified");
    } else {
        rep.add(3, CheckStatus::Fail, triple_text(lit), triple_text(delta));
    }

    // (4) residual curve
    const Polynomial& expected_ell = ell_absorbs ? ell_core : *ell_table;
    const Polynomial& got_ell = rec->residual_curve;
    if (proportional(expected_ell, got_ell))
        rep.add(4, CheckStatus::Pass, expected_ell.to_string(), got_ell.to_string(), ell_absorbs ? delta_note : "");
    else if (same_support(expected_ell, got_ell))
        rep.add(4, CheckStatus::Warn, expected_ell.to_string(), got_ell.to_string(),
                "monomial support agrees, coefficients differ");
    else
        rep.add(4, CheckStatus::Fail, expected_ell.to_string(), got_ell.to_string());

    // (5) numerical triviality
    Rational recomputed = balance_check(*rec);
    if (rec->balance_defect == 0 && recomputed == 0)
        rep.pass(5, "0");
    else
        rep.add(5, CheckStatus::Fail, "0", to_string(recomputed));

    // (6) K3 cover
    try {
        check_k3(rep, row, *f, tr->candidate);
    } catch (const std::exception& e) {
        rep.add(6, CheckStatus::Fail, "", "", e.what());
    }
    return report;
}

RowReport verify_row_instance(const TableRow& row, long n)
{
    if (!row.family)
        return verify_row(row);
    TableRow copy = row;
    try {
        copy.f_text = instantiate(*row.family, n);
    } catch (const Error& e) {
        RowReport report{row.id, row.table, row.section, row.name, {}};
        Reporter{report}.fail_from(1, e.what());
        return report;
    }
    copy.id += " [n=" + std::to_string(n) + "]";
    return verify_row(copy);
}

CorpusSummary verify_all(const std::vector<TableRow>& rows)
{
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(rows[a].table, rows[a].position) < std::tie(rows[b].table, rows[b].position);
    });

    std::vector<std::future<RowReport>> jobs;
    jobs.reserve(rows.size());
    for (std::size_t i : order)
        jobs.push_back(std::async(std::launch::async, [&row = rows[i]] { return verify_row(row); }));

    CorpusSummary summary;
    summary.rows = rows.size();
    for (auto& job : jobs) {
        RowReport report = job.get();
        if (report.failed()) {
            ++summary.failed;
            summary.failing_ids.push_back(report.id);
        } else if (report.warned()) {
            ++summary.warned;
        } else {
            ++summary.passed;
        }
        summary.reports.push_back(std::move(report));
    }
    return summary;
}

} // namespace lct
