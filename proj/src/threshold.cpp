#include "lct/threshold.hpp"

#include "lct/error.hpp"

#include <array>
#include <functional>
#include <limits>
#include <numeric>

namespace lct {

ThresholdReport lct_candidate(const Polynomial& f, const Weight& w)
{
    if (f.is_zero())
        throw DomainError("threshold of the zero polynomial");
    if (f.arity() != w.size())
        throw DomainError("weight " + w.to_string() + " does not match the " + std::to_string(f.arity()) +
                          " variables of " + f.to_string());
    if (f.coefficient(Exponents(f.arity(), 0)) != 0)
        throw DomainError(f.to_string() + " does not vanish at the origin");
    long d = weighted_order(f, w);
    Rational sum(w.sum());
    Rational c = sum / Rational(d);
    c.canonicalize();
    return {w, d, c, sum - 1, Rational(-d)};
}

Rational discrepancy(const ThresholdReport& report, const Rational& t)
{
    return report.discrepancy_intercept + report.discrepancy_slope * t;
}

SearchResult weight_search(const Polynomial& f, long bound)
{
    if (bound < 1)
        throw DomainError("search bound must be >= 1");
    if (f.is_zero())
        throw DomainError("threshold of the zero polynomial");
    if (f.coefficient(Exponents(f.arity(), 0)) != 0)
        throw DomainError(f.to_string() + " does not vanish at the origin");

    const std::size_t n = f.arity();
    std::vector<Exponents> support;
    for (const auto& [e, c] : f.terms())
        support.push_back(e);

    std::optional<SearchResult> best;
    std::vector<long> w(n, 1);
    // Lexicographic enumeration; a strict improvement test keeps the
    // lexicographically first minimizer.
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long g) {
        if (i == n) {
            if (g != 1)
                return;
            long d = std::numeric_limits<long>::max();
            for (const auto& e : support) {
                long s = 0;
                for (std::size_t k = 0; k < n; ++k)
                    s += w[k] * e[k];
                d = std::min(d, s);
            }
            Rational c(std::accumulate(w.begin(), w.end(), 0L), d);
            c.canonicalize();
            if (!best || c < best->candidate)
                best = SearchResult{Weight(w), c};
            return;
        }
        for (long v = 1; v <= bound; ++v) {
            w[i] = v;
            rec(i + 1, std::gcd(g, v));
        }
    };
    rec(0, 0);
    return *best;
}

std::optional<long> standard_form(const Rational& c)
{
    if (c <= 0 || c >= 1)
        throw DomainError("standard form needs 0 < c < 1, got " + to_string(c));
    Rational m = 1 / (1 - c);
    if (!is_integer(m))
        return std::nullopt;
    return m.get_num().get_si();
}

std::optional<long> shokurov_form(const Rational& c)
{
    Rational half(1, 2);
    if (c <= half || c > 1)
        return std::nullopt;
    Rational n = 1 / (c - half);
    if (!is_integer(n) || n < 2)
        return std::nullopt;
    return n.get_num().get_si();
}

std::string to_string(VerdictKind kind)
{
    switch (kind) {
    case VerdictKind::LogCanonical:
        return "LogCanonical";
    case VerdictKind::NonExceptional:
        return "NonExceptional";
    case VerdictKind::Exceptional:
        return "Exceptional";
    }
    return "?";
}

namespace {

struct SamplePattern {
    const char* name;
    const char* support;
};

// Sample equations with c = 5/6 that are not exceptional, keyed by the
// resolution graph.
constexpr std::array<SamplePattern, 5> kNonExceptionalPatterns{{
    {"2A_{1*o}A_{4*o}", "z^3+y^4+x^2y^2+x^3z"},
    {"2A_{1*o}E_{6o}", "z^3+y^4+x^2y^2+x^5"},
    {"2A_{4*o}", "z^3+x^2y^2+x^3z+y^3z"},
    {"A_{4*o}E_{6o}", "z^3+x^2y^2+x^5+y^3z"},
    {"2E_{6o}", "z^3+x^2y^2+x^5+y^5"},
}};

std::string match_pattern(const Polynomial& f)
{
    for (const auto& p : kNonExceptionalPatterns) {
        Polynomial pat = parse_polynomial(p.support, f.variables());
        bool contained = true;
        for (const auto& [e, c] : pat.terms())
            if (f.coefficient(e) == 0)
                contained = false;
        if (contained)
            return p.name;
    }
    return {};
}

Verdict searched(const Polynomial& f, long bound, const std::string& why)
{
    SearchResult r = weight_search(f, bound);
    if (r.candidate >= 1)
        return {VerdictKind::LogCanonical, Rational(1),
                why + "; minimal candidate " + to_string(r.candidate) + " >= 1 at w=(" + r.weight.to_string() + ")",
                r.weight};
    return {VerdictKind::Exceptional, r.candidate,
            why + "; threshold certified by w=(" + r.weight.to_string() + ")", r.weight};
}

} // namespace

Verdict exceptionality_verdict(const Polynomial& f, long bound)
{
    if (f.is_zero() || f.coefficient(Exponents(f.arity(), 0)) != 0)
        throw DomainError("verdict needs a nonzero f vanishing at the origin");
    int mult = multiplicity(f);
    if (mult != 3 || f.arity() != 3)
        return searched(f, bound, "multiplicity " + std::to_string(mult));

    Polynomial f3 = homogeneous_part(f, 3);
    CubicFactorType type = ternary_cubic_repeated_factor(f3);
    if (type != CubicFactorType::Triple)
        return searched(f, bound, "f_3 = " + f3.to_string() + " is " + to_string(type));

    if (f3.term_count() != 1 || f3.terms().begin()->first != Exponents{0, 0, 3})
        throw DomainError("f_3 = " + f3.to_string() + " has a triple factor; normalize it to z^3 first");

    // With f_3 = z^3 the (3,3,4)-initial form is z^3 + f_4(x, y).
    Polynomial initial = weighted_part(f, Weight{3, 3, 4});
    std::string xy = f.variables().substr(0, 2);
    Polynomial f4(xy);
    for (const auto& [e, c] : initial.terms())
        if (e[2] == 0)
            f4.add_term({e[0], e[1]}, c);

    if (!f4.is_zero() && binary_form_max_multiplicity(f4) == 2) {
        std::string shape = match_pattern(f);
        std::string detail = "f_3 = z^3, f_4 = " + f4.to_string() + " has a double but no triple factor";
        if (!shape.empty())
            detail += "; sample shape " + shape;
        return {VerdictKind::NonExceptional, Rational(5, 6), detail, Weight{3, 3, 4}};
    }
    std::string f4_desc = f4.is_zero() ? "f_4 = 0"
                                       : "f_4 = " + f4.to_string() + " has max linear factor multiplicity " +
                                             std::to_string(binary_form_max_multiplicity(f4));
    return searched(f, bound, "f_3 = z^3, " + f4_desc);
}

} // namespace lct
