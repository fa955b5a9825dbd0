#pragma once

// Dense univariate polynomials over Q, used for squarefree decomposition of
// dehomogenized binary forms.

#include "lct/rational.hpp"

#include <utility>
#include <vector>

namespace lct::detail {

class UPoly {
public:
    UPoly() = default;
    /// coeffs[i] multiplies t^i.
    explicit UPoly(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& leading() const { return coeffs_.back(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& num, const UPoly& den);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

/// Exact quotient (asserts zero remainder).
UPoly exact_div(const UPoly& num, const UPoly& den);

struct SquarefreeFactor {
    UPoly factor;
    int multiplicity;
};

/// Yun's squarefree decomposition of a nonzero polynomial: returns the
/// non-constant factors a_i with f = lc * prod a_i^i.
std::vector<SquarefreeFactor> squarefree_decomposition(const UPoly& f);

} // namespace lct::detail
