#pragma once

#include "lct/polynomial.hpp"
#include "lct/rational.hpp"
#include "lct/weight.hpp"

#include <optional>

namespace lct {

/// Cyclic degree-m cover t^m = -f of a hypersurface whose threshold
/// candidate is c = 1 - 1/m. Stored as g = f + t^m with weights
/// (w, d - sum w), for which sum(weights) = d.
struct K3CoverRecord {
    long m;
    Polynomial cover_poly;
    Weight weight4;
    long degree;
    Rational normalized_sum;
    std::optional<long> yonemura;
};

/// Throws DomainError when the candidate of (f, w) is not of standard form.
K3CoverRecord k3_cover(const Polynomial& f, const Weight& w, std::optional<long> yonemura = std::nullopt);

} // namespace lct
