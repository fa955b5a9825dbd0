#include "lct/boundary.hpp"

#include "lct/threshold.hpp"

namespace lct {

bool LogEnriquesRecord::klt_coefficients() const
{
    for (const auto& d : delta)
        if (d >= 1)
            return false;
    return true;
}

Rational balance_check(const LogEnriquesRecord& r)
{
    const Weight& wf = r.plane.well_formed;
    Rational defect = r.c * Rational(r.residual_degree) - Rational(wf.sum());
    for (std::size_t i = 0; i < 3; ++i)
        defect += r.delta[i] * Rational(wf[i]);
    return defect;
}

LogEnriquesRecord compute_record(const Polynomial& f, const Weight& w)
{
    if (f.arity() != 3 || w.size() != 3)
        throw DomainError("log Enriques records need three variables and a length-3 weight");
    ThresholdReport report = lct_candidate(f, w);
    WellFormedPlane plane = well_form(w);
    Polynomial initial = weighted_part(f, w);
    auto [core, k] = divide_out_coordinate_factors(initial);
    RewrittenForm ell = rewrite_form(core, plane);

    LogEnriquesRecord r{plane, report.candidate, {}, {}, {}, ell.form, ell.degree, 0, {}};
    for (std::size_t i = 0; i < 3; ++i) {
        Rational m(plane.pair_gcds[i]);
        r.line_multiplicity[i] = k[i];
        r.contains_line[i] = k[i] > 0;
        r.delta[i] = 1 - 1 / m + r.c * Rational(k[i]) / m;
        if (k[i] > 1)
            r.warnings.push_back("coordinate line L" + std::to_string(i + 1) + " is contained with multiplicity " +
                                 std::to_string(k[i]));
    }
    r.balance_defect = balance_check(r);
    return r;
}

NonKltCoefficientError::NonKltCoefficientError(LogEnriquesRecord record)
    : Error("boundary coefficient delta >= 1 (pair is not klt)"), record_(std::move(record))
{
}

LogEnriquesRecord build_record(const Polynomial& f, const Weight& w)
{
    LogEnriquesRecord r = compute_record(f, w);
    if (!r.klt_coefficients())
        throw NonKltCoefficientError(std::move(r));
    return r;
}

} // namespace lct
