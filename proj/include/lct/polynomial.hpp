#pragma once

#include "lct/rational.hpp"
#include "lct/weight.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lct {

/// Exponent vector of a monomial; one entry per variable.
using Exponents = std::vector<int>;

/// Graded lexicographic order, descending: higher total degree first, then
/// lexicographically larger exponent vectors first.
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in 2-4 named variables with rational coefficients.
///
/// Terms are kept in canonical form: no zero coefficients are stored, and
/// the term map is ordered by GrlexDescending, so structural equality is
/// polynomial equality.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexDescending>;

    /// The zero polynomial over `variables` (distinct letters, 2-4 of them).
    explicit Polynomial(std::string variables);

    static Polynomial constant(std::string variables, const Rational& value);
    static Polynomial variable(std::string variables, std::size_t index);
    static Polynomial monomial(std::string variables, Exponents exps, const Rational& coeff);

    std::size_t arity() const noexcept { return variables_.size(); }
    const std::string& variables() const noexcept { return variables_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Exponents& exps) const;
    /// Maximum total degree; -1 for the zero polynomial.
    int total_degree() const;

    /// Adds `coeff * monomial(exps)` in place, dropping the term if it cancels.
    void add_term(const Exponents& exps, const Rational& coeff);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial rhs) { return rhs *= s; }
    Polynomial operator-() const;

    Polynomial pow(unsigned exponent) const;

    Rational evaluate(std::span<const Rational> point) const;

    /// Composition: replaces variable i by images[i]. All images must share
    /// one variable list, which becomes the variable list of the result.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// Same terms over a different variable list of equal length.
    Polynomial rename(std::string variables) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.variables_ == b.variables_ && a.terms_ == b.terms_;
    }

    /// Canonical text: grlex-descending terms, explicit '^', no '*' between
    /// factors, integer or p/q coefficients. parse(to_string()) == *this.
    std::string to_string() const;

private:
    void check_compatible(const Polynomial& other) const;

    std::string variables_;
    TermMap terms_;
};

/// Parses the polynomial grammar
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := base ['^' uint]
///   base   := uint ['/' uint] | variable | '(' expr ')'
/// and returns the expanded canonical polynomial. Throws ParseError with the
/// byte offset of the problem.
Polynomial parse_polynomial(std::string_view text, std::string_view variables);

/// Minimum total degree over the terms. Throws DomainError on zero.
int multiplicity(const Polynomial& f);

/// Sum of the terms of total degree exactly m.
Polynomial homogeneous_part(const Polynomial& f, int m);

long weighted_degree(const Exponents& exps, const Weight& w);

/// min over terms of sum w_i a_i. Throws DomainError on zero or arity mismatch.
long weighted_order(const Polynomial& f, const Weight& w);

/// Terms attaining weighted_order(f, w).
Polynomial weighted_part(const Polynomial& f, const Weight& w);

bool is_weighted_homogeneous(const Polynomial& f, const Weight& w);

/// Chart `chart` of the w-weighted blowup: x_chart -> x_chart^{w_chart},
/// x_j -> x_chart^{w_j} x_j, then divide by x_chart^{ord_w f}.
Polynomial strict_transform_chart(const Polynomial& f, const Weight& w, std::size_t chart);

struct CoordinateFactorization {
    Polynomial core;
    Exponents powers;  ///< powers[i] = largest k with x_i^k | f
};

/// f = prod x_i^{powers_i} * core with no variable dividing core.
CoordinateFactorization divide_out_coordinate_factors(const Polynomial& f);

/// Largest multiplicity of a linear factor (over the algebraic closure) of a
/// nonzero binary form.
int binary_form_max_multiplicity(const Polynomial& f);

enum class CubicFactorType { Squarefree, Double, Triple };

std::string to_string(CubicFactorType t);

/// Highest multiplicity of a linear factor of a ternary cubic form.
CubicFactorType ternary_cubic_repeated_factor(const Polynomial& f);

/// Multiplicity of the linear form sum coeffs_i x_i as a factor of f.
int linear_factor_multiplicity(const Polynomial& f, std::span<const Rational> coeffs);

} // namespace lct
