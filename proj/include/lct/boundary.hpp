#pragma once

#include "lct/error.hpp"
#include "lct/polynomial.hpp"
#include "lct/rational.hpp"
#include "lct/weights.hpp"

#include <array>
#include <string>
#include <vector>

namespace lct {

/// The exceptional plane S of the w-blowup with Diff_S(c F_Y) = c L + sum delta_i L_i,
/// L_i the coordinate lines and L = {ell = 0} written on the well-formed plane.
struct LogEnriquesRecord {
    WellFormedPlane plane;
    Rational c;
    std::array<Rational, 3> delta;
    std::array<bool, 3> contains_line;
    std::array<int, 3> line_multiplicity; ///< k_i: power of x_i dividing the initial form
    Polynomial residual_curve;
    long residual_degree;
    Rational balance_defect; ///< deg(K_S + Diff); zero means numerically trivial
    std::vector<std::string> warnings;

    /// All delta_i < 1.
    bool klt_coefficients() const;
};

/// Builds the record without judging the coefficients.
LogEnriquesRecord compute_record(const Polynomial& f, const Weight& w);

/// Raised by build_record when some delta_i >= 1; carries the record.
class NonKltCoefficientError : public Error {
public:
    explicit NonKltCoefficientError(LogEnriquesRecord record);
    const LogEnriquesRecord& record() const noexcept { return record_; }

private:
    LogEnriquesRecord record_;
};

/// compute_record, throwing NonKltCoefficientError if some delta_i >= 1.
LogEnriquesRecord build_record(const Polynomial& f, const Weight& w);

/// Recomputes c * deg(ell) + sum delta_i w'_i - sum w'_i from the record's
/// fields.
Rational balance_check(const LogEnriquesRecord& record);

} // namespace lct
