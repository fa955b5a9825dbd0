#pragma once

#include "lct/polynomial.hpp"
#include "lct/weight.hpp"

#include <array>
#include <string>

namespace lct {

/// m_i = gcd(w_j, w_k) for {i,j,k} = {1,2,3}. Requires a primitive length-3
/// weight; the result is pairwise coprime.
std::array<long, 3> pair_gcds(const Weight& w);

/// A weighted projective plane P(w) together with its well-formed model
/// P(w'), w'_i = w_i / (m_j m_k).
struct WellFormedPlane {
    Weight original;
    std::array<long, 3> pair_gcds;
    Weight well_formed;
    long degree_divisor; ///< m_1 m_2 m_3

    /// "P(1,4,5)", or "P^2" for P(1,1,1). Coordinate order is kept.
    std::string display() const;
};

WellFormedPlane well_form(const Weight& w);

struct RewrittenForm {
    Polynomial form;
    long degree; ///< degree of `form` with respect to the well-formed weight
};

/// Moves a w-homogeneous form onto the well-formed coordinates by dividing
/// each exponent a_i by m_i. Throws DomainError if f is not w-homogeneous or
/// a division is not exact.
RewrittenForm rewrite_form(const Polynomial& f, const WellFormedPlane& plane);

} // namespace lct
