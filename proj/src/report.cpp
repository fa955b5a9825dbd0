#include "lct/report.hpp"

#include "lct/error.hpp"

#include <sstream>

namespace lct {

EvalReport evaluate(const Polynomial& f, const Weight& w)
{
    EvalReport out{lct_candidate(f, w), false, std::nullopt, std::nullopt, {}};
    out.upper_bound_only = out.threshold.candidate >= 1;
    if (out.upper_bound_only) {
        out.note = "no log Enriques record or K3 cover: candidate >= 1";
        return out;
    }
    if (f.arity() == 3)
        out.record = compute_record(f, w);
    else
        out.note = "log Enriques record needs three variables";
    if (standard_form(out.threshold.candidate))
        out.k3 = k3_cover(f, w);
    else
        out.note = out.note.empty() ? "non-standard c" : out.note + "; non-standard c";
    return out;
}

std::string candidate_label(const Rational& candidate)
{
    if (candidate >= 1)
        return "upper bound only (≥ 1: pair is lc at t=1)";
    return "threshold candidate (upper bound)";
}

// --- JSON -----------------------------------------------------------------

namespace {

Json rational_array(const std::vector<Rational>& v)
{
    Json out = Json::array();
    for (const auto& q : v)
        out.push_back(to_string(q));
    return out;
}

} // namespace

Json to_json(const Weight& w)
{
    Json out = Json::array();
    for (long e : w.entries())
        out.push_back(e);
    return out;
}

Json to_json(const ThresholdReport& r)
{
    return Json{{"weight", to_json(r.weight)},
                {"order", r.order},
                {"c", to_string(r.candidate)},
                {"label", candidate_label(r.candidate)},
                {"discrepancyIntercept", to_string(r.discrepancy_intercept)},
                {"discrepancySlope", to_string(r.discrepancy_slope)}};
}

Json to_json(const LogEnriquesRecord& r)
{
    Json out{{"weight", to_json(r.plane.original)},
             {"wellFormed", to_json(r.plane.well_formed)},
             {"pairGcds", {r.plane.pair_gcds[0], r.plane.pair_gcds[1], r.plane.pair_gcds[2]}},
             {"S", r.plane.display()},
             {"c", to_string(r.c)},
             {"delta", rational_array({r.delta.begin(), r.delta.end()})},
             {"containsLine", {r.contains_line[0], r.contains_line[1], r.contains_line[2]}},
             {"lineMultiplicity", {r.line_multiplicity[0], r.line_multiplicity[1], r.line_multiplicity[2]}},
             {"ell", r.residual_curve.to_string()},
             {"residualDegree", r.residual_degree},
             {"balanceDefect", to_string(r.balance_defect)},
             {"kltCoefficients", r.klt_coefficients()}};
    out["warnings"] = r.warnings;
    return out;
}

Json to_json(const K3CoverRecord& r)
{
    return Json{{"m", r.m},
                {"coverPoly", r.cover_poly.to_string()},
                {"weight4", to_json(r.weight4)},
                {"degree", r.degree},
                {"normalizedSum", to_string(r.normalized_sum)},
                {"yonemura", r.yonemura ? Json(*r.yonemura) : Json()}};
}

Json to_json(const EvalReport& r)
{
    return Json{{"threshold", to_json(r.threshold)},
                {"upperBoundOnly", r.upper_bound_only},
                {"record", r.record ? to_json(*r.record) : Json()},
                {"k3", r.k3 ? to_json(*r.k3) : Json()},
                {"note", r.note.empty() ? Json() : Json(r.note)}};
}

Json to_json(const SearchResult& r)
{
    return Json{{"weight", to_json(r.weight)}, {"c", to_string(r.candidate)}, {"label", candidate_label(r.candidate)}};
}

Json to_json(const Verdict& v)
{
    return Json{{"kind", to_string(v.kind)},
                {"threshold", to_string(v.threshold)},
                {"detail", v.detail},
                {"weight", v.weight ? to_json(*v.weight) : Json()}};
}

Json cycle_json(const DualGraph& g, const Cycle& z)
{
    Json coeffs = Json::object();
    for (std::size_t i = 0; i < g.size(); ++i)
        coeffs[g.vertex(i).id] = z.coefficients[i];
    return Json{{"cycle", coeffs}, {"selfIntersection", intersect(g, z, z)}};
}

Json to_json(const EllipticInvariants& inv)
{
    return Json{{"d", inv.d}, {"pa", to_string(inv.pa)}, {"elliptic", inv.elliptic()}};
}

Json to_json(const DiscrepancySolution& sol)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < sol.ids.size(); ++i)
        out.push_back(Json{{"id", sol.ids[i]}, {"r", to_string(sol.r[i])}, {"a", to_string(sol.a[i])}});
    return Json{{"solution", out}};
}

Json klt_json(const DiscrepancySolution& sol)
{
    return Json{{"verdict", to_string(klt_verdict(sol))}, {"discrepancies", rational_array(sol.a)}};
}

Json to_json(const CheckResult& c)
{
    return Json{{"check", c.number}, {"name", c.name},        {"status", to_string(c.status)},
                {"expected", c.expected}, {"got", c.got}, {"message", c.message}};
}

Json to_json(const RowReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(to_json(c));
    return Json{{"id", r.id}, {"table", r.table}, {"section", r.section}, {"name", r.name}, {"checks", checks}};
}

Json to_json(const CorpusSummary& s)
{
    Json reports = Json::array();
    for (const auto& r : s.reports)
        reports.push_back(to_json(r));
    return Json{{"rows", s.rows},       {"passed", s.passed},          {"warned", s.warned},
                {"failed", s.failed},   {"failingIds", s.failing_ids}, {"reports", reports}};
}

// --- text -----------------------------------------------------------------

namespace {

std::string join(const std::vector<Rational>& v, const char* sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + to_string(v[i]);
    return out;
}

} // namespace

std::string to_text(const EvalReport& r)
{
    std::ostringstream out;
    const ThresholdReport& t = r.threshold;
    out << "weight       " << t.weight.to_string() << '\n'
        << "order        " << t.order << '\n'
        << "c            " << to_string(t.candidate) << "  [" << candidate_label(t.candidate) << "]\n"
        << "discrepancy  a(E, tF) = " << to_string(t.discrepancy_intercept) << " - "
        << (t.discrepancy_slope == -1 ? std::string() : to_string(-t.discrepancy_slope)) << "t\n";
    if (r.record) {
        const LogEnriquesRecord& rec = *r.record;
        out << "S            " << rec.plane.display() << "  (pair gcds " << rec.plane.pair_gcds[0] << ','
            << rec.plane.pair_gcds[1] << ',' << rec.plane.pair_gcds[2] << ")\n"
            << "delta        " << join({rec.delta.begin(), rec.delta.end()}) << '\n'
            << "ell          " << rec.residual_curve.to_string() << "  (degree " << rec.residual_degree << ")\n"
            << "balance      " << to_string(rec.balance_defect) << '\n';
        for (const auto& w : rec.warnings)
            out << "warning      " << w << '\n';
        if (!rec.klt_coefficients())
            out << "error        delta >= 1: the pair is not klt\n";
    }
    if (r.k3)
        out << "K3 cover     " << r.k3->cover_poly.to_string() << "  weights " << r.k3->weight4.to_string()
            << "  degree " << r.k3->degree << '\n';
    if (!r.note.empty())
        out << "note         " << r.note << '\n';
    return out.str();
}

std::string to_text(const SearchResult& r)
{
    return "weight " + r.weight.to_string() + "\nc      " + to_string(r.candidate) + "  [" +
           candidate_label(r.candidate) + "]\n";
}

std::string to_text(const Verdict& v)
{
    std::string out = to_string(v.kind) + " " + to_string(v.threshold) + "\n" + v.detail + "\n";
    if (v.weight)
        out += "weight " + v.weight->to_string() + "\n";
    return out;
}

std::string cycle_text(const DualGraph& g, const Cycle& z)
{
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i)
        out += g.vertex(i).id + " " + std::to_string(z.coefficients[i]) + "\n";
    out += "Z^2 " + std::to_string(intersect(g, z, z)) + "\n";
    return out;
}

std::string to_text(const EllipticInvariants& inv)
{
    return "d " + std::to_string(inv.d) + "\npa " + to_string(inv.pa) + "\nelliptic " +
           (inv.elliptic() ? "yes" : "no") + "\n";
}

std::string to_text(const DiscrepancySolution& sol)
{
    std::string out;
    for (std::size_t i = 0; i < sol.ids.size(); ++i)
        out += sol.ids[i] + " r=" + to_string(sol.r[i]) + " a=" + to_string(sol.a[i]) + "\n";
    return out;
}

std::string klt_text(const DiscrepancySolution& sol)
{
    return to_string(klt_verdict(sol)) + "\n";
}

std::string to_text(const CorpusSummary& s)
{
    std::ostringstream out;
    for (const auto& r : s.reports) {
        for (const auto& c : r.checks) {
            if (c.status == CheckStatus::Pass)
                continue;
            out << to_string(c.status) << ' ' << r.id << " (" << c.number << ") " << c.name;
            if (!c.expected.empty() || !c.got.empty())
                out << ": expected " << c.expected << ", got " << c.got;
            if (!c.message.empty())
                out << " - " << c.message;
            out << '\n';
        }
    }
    out << s.rows << " rows: " << s.passed << " passed, " << s.warned << " passed with warnings, " << s.failed
        << " failed\n";
    if (s.failed == 0)
        out << "all rows pass\n";
    return out.str();
}

} // namespace lct
