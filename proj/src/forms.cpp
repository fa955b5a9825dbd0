#include "lct/error.hpp"
#include "lct/polynomial.hpp"

#include "univariate.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace lct {

namespace {

using detail::UPoly;

struct BinaryShape {
    int x_power;         // largest power of the first variable dividing f
    int y_power;         // largest power of the second variable dividing f
    UPoly dehomogenized; // f(t, 1)
};

BinaryShape binary_shape(const Polynomial& f)
{
    if (f.arity() != 2)
        throw DomainError("binary form expected, got arity " + std::to_string(f.arity()));
    if (f.is_zero())
        throw DomainError("binary form must be nonzero");
    if (homogeneous_part(f, f.total_degree()) != f)
        throw DomainError("binary form must be homogeneous: " + f.to_string());
    auto [core, k] = divide_out_coordinate_factors(f);
    std::vector<Rational> coeffs(f.total_degree() + 1);
    for (const auto& [e, c] : f.terms())
        coeffs[e[0]] = c;
    return {k[0], k[1], UPoly(std::move(coeffs))};
}

// Repeated linear factors (multiplicity >= 2) of a binary form, as coefficient
// pairs (a, b) meaning a*u + b*v.
std::vector<std::array<Rational, 2>> repeated_linear_factors(const Polynomial& f)
{
    BinaryShape s = binary_shape(f);
    std::vector<std::array<Rational, 2>> out;
    if (s.y_power >= 2)
        out.push_back({Rational(0), Rational(1)});
    for (const auto& [factor, mult] : detail::squarefree_decomposition(s.dehomogenized)) {
        if (mult < 2 || factor.degree() != 1)
            continue;
        // factor = c0 + c1 t  ->  c1 u + c0 v
        out.push_back({factor.coeffs()[1], factor.coeffs()[0]});
    }
    return out;
}

using Linear3 = std::array<Rational, 3>;

// Restriction of f to the plane x_drop = 0, as a binary form in the two
// remaining variables (order kept).
Polynomial restrict_to_plane(const Polynomial& f, std::size_t drop)
{
    std::string vars;
    for (std::size_t i = 0; i < 3; ++i)
        if (i != drop)
            vars += f.variables()[i];
    Polynomial out(vars);
    for (const auto& [e, c] : f.terms()) {
        if (e[drop] != 0)
            continue;
        Exponents r;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != drop)
                r.push_back(e[i]);
        out.add_term(r, c);
    }
    return out;
}

std::optional<Linear3> merge(const Linear3& a, const Linear3& b, std::size_t shared)
{
    if (a[shared] == 0 || b[shared] == 0)
        return std::nullopt;
    Rational scale = a[shared] / b[shared];
    Linear3 out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = a[i] != 0 ? a[i] : b[i] * scale;
    return out;
}

} // namespace

int binary_form_max_multiplicity(const Polynomial& f)
{
    BinaryShape s = binary_shape(f);
    int best = std::max(s.x_power, s.y_power);
    if (s.dehomogenized.degree() > 0)
        for (const auto& sf : detail::squarefree_decomposition(s.dehomogenized))
            best = std::max(best, sf.multiplicity);
    return best;
}

int linear_factor_multiplicity(const Polynomial& f, std::span<const Rational> coeffs)
{
    if (coeffs.size() != f.arity())
        throw DomainError("linear form has wrong length");
    auto pivot = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c != 0; });
    if (pivot == coeffs.end())
        throw DomainError("linear form is zero");
    std::size_t p = static_cast<std::size_t>(pivot - coeffs.begin());

    // New coordinates: slot p holds u = L, other slots unchanged.
    // x_p = (u - sum_{j != p} l_j x_j) / l_p.
    const std::string& vars = f.variables();
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < f.arity(); ++i) {
        if (i != p) {
            images.push_back(Polynomial::variable(vars, i));
            continue;
        }
        Polynomial xp = Polynomial::variable(vars, p);
        for (std::size_t j = 0; j < f.arity(); ++j)
            if (j != p && coeffs[j] != 0)
                xp -= Polynomial::variable(vars, j) * coeffs[j];
        images.push_back(xp * Rational(1 / coeffs[p]));
    }
    Polynomial g = f.substitute(images);
    if (g.is_zero())
        throw DomainError("multiplicity of a linear factor in zero");
    return divide_out_coordinate_factors(g).powers[p];
}

std::string to_string(CubicFactorType t)
{
    switch (t) {
    case CubicFactorType::Squarefree:
        return "squarefree";
    case CubicFactorType::Double:
        return "double";
    case CubicFactorType::Triple:
        return "triple";
    }
    return "?";
}

CubicFactorType ternary_cubic_repeated_factor(const Polynomial& f)
{
    if (f.arity() != 3)
        throw DomainError("ternary cubic expected, got arity " + std::to_string(f.arity()));
    if (f.is_zero() || f.total_degree() != 3 || homogeneous_part(f, 3) != f)
        throw DomainError("ternary cubic must be a nonzero homogeneous form of degree 3");

    // Coordinate factors first; the remaining core has no variable factor, so
    // each of its axis-plane restrictions is nonzero.
    auto [core, k] = divide_out_coordinate_factors(f);
    int best = *std::max_element(k.begin(), k.end());

    std::vector<Linear3> candidates;
    if (core.total_degree() >= 2) {
        std::array<std::vector<Linear3>, 3> per_plane;
        for (std::size_t drop = 0; drop < 3; ++drop) {
            Polynomial b = restrict_to_plane(core, drop);
            for (const auto& ab : repeated_linear_factors(b)) {
                Linear3 l{};
                std::size_t slot = 0;
                for (std::size_t i = 0; i < 3; ++i)
                    if (i != drop)
                        l[i] = ab[slot++];
                per_plane[drop].push_back(l);
                candidates.push_back(l);
            }
        }
        // A factor with three nonzero coefficients is seen on every plane;
        // glue pairs that agree on their shared coordinate.
        for (std::size_t p = 0; p < 3; ++p)
            for (std::size_t q = p + 1; q < 3; ++q) {
                std::size_t shared = 3 - p - q;
                for (const auto& a : per_plane[p])
                    for (const auto& b : per_plane[q])
                        if (auto m = merge(a, b, shared))
                            candidates.push_back(*m);
            }
    }
    for (const auto& l : candidates) {
        int nonzero = static_cast<int>(std::count_if(l.begin(), l.end(), [](const Rational& c) { return c != 0; }));
        if (nonzero < 2)
            continue; // coordinate variables were handled above
        best = std::max(best, linear_factor_multiplicity(f, l));
    }

    if (best >= 3)
        return CubicFactorType::Triple;
    if (best == 2)
        return CubicFactorType::Double;
    return CubicFactorType::Squarefree;
}

} // namespace lct
