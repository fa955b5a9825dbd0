#pragma once

#include "lct/polynomial.hpp"
#include "lct/rational.hpp"
#include "lct/weight.hpp"

#include <optional>
#include <string>

namespace lct {

inline constexpr long kDefaultSearchBound = 30;

/// Data of the w-weighted blowup of a hypersurface {f = 0}.
///
/// `candidate` = sum(w) / ord_w(f) is an upper bound for the log canonical
/// threshold; it is the threshold itself when the weighted initial form is
/// lc outside the origin, which is not checked here. The discrepancy of the
/// exceptional divisor along t*F is intercept + slope * t.
struct ThresholdReport {
    Weight weight;
    long order;
    Rational candidate;
    Rational discrepancy_intercept;
    Rational discrepancy_slope;
};

/// Throws DomainError if f has a constant term, is zero, or the arity
/// does not match the weight.
ThresholdReport lct_candidate(const Polynomial& f, const Weight& w);

/// a(E, t F) = -1 + sum(w) - t * ord_w(f).
Rational discrepancy(const ThresholdReport& report, const Rational& t);

struct SearchResult {
    Weight weight;
    Rational candidate;
};

/// Minimizes the candidate over all primitive weights with entries in
/// [1, bound]; ties go to the lexicographically smallest weight.
SearchResult weight_search(const Polynomial& f, long bound);

/// m with c = 1 - 1/m, if any. Throws DomainError unless 0 < c < 1.
std::optional<long> standard_form(const Rational& c);

/// n >= 2 with c = 1/2 + 1/n, if any.
std::optional<long> shokurov_form(const Rational& c);

enum class VerdictKind { LogCanonical, NonExceptional, Exceptional };

std::string to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind;
    Rational threshold;
    std::string detail;
    std::optional<Weight> weight; ///< certifying weight for searched thresholds
};

/// Trichotomy for a sample-form elliptic hypersurface singularity. A triple
/// line in the cubic part must already be normalized to z^3; otherwise a
/// DomainError is thrown.
Verdict exceptionality_verdict(const Polynomial& f, long bound = kDefaultSearchBound);

} // namespace lct
