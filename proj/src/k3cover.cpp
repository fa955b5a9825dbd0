#include "lct/k3cover.hpp"

#include "lct/error.hpp"
#include "lct/threshold.hpp"

#include <stdexcept>

namespace lct {

namespace {

char cover_variable(const std::string& vars)
{
    for (char c : std::string("tuvsrqp"))
        if (vars.find(c) == std::string::npos)
            return c;
    throw DomainError("no free letter for the cover variable");
}

} // namespace

K3CoverRecord k3_cover(const Polynomial& f, const Weight& w, std::optional<long> yonemura)
{
    ThresholdReport report = lct_candidate(f, w);
    if (report.candidate >= 1 || !standard_form(report.candidate))
        throw DomainError("c = " + to_string(report.candidate) + " is not of the form 1 - 1/m");
    long m = *standard_form(report.candidate);
    long d = report.order;
    long wt = d - w.sum();

    std::string vars = f.variables() + cover_variable(f.variables());
    std::vector<Polynomial> embed;
    for (std::size_t i = 0; i < f.arity(); ++i)
        embed.push_back(Polynomial::variable(vars, i));
    Polynomial g = f.substitute(embed);
    Exponents tm(vars.size(), 0);
    tm.back() = static_cast<int>(m);
    g.add_term(tm, 1);

    std::vector<long> entries(w.entries().begin(), w.entries().end());
    entries.push_back(wt);
    Weight weight4(std::move(entries));
    Rational sum(weight4.sum(), d);
    sum.canonicalize();

    if (wt < 1 || d % wt != 0 || d / wt != m || sum != 1 || weighted_order(g, weight4) != d ||
        weighted_degree(tm, weight4) != d)
        throw std::logic_error("cover arithmetic is inconsistent for " + f.to_string());

    return {m, std::move(g), std::move(weight4), d, sum, yonemura};
}

} // namespace lct
