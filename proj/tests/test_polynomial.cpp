#include "lct/error.hpp"
#include "lct/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace lct;

namespace {

Polynomial P(const char* text, const char* vars = "xyz") { return parse_polynomial(text, vars); }

// Evaluate at a point by hand-rolled Horner-free summation over the term map.
Rational eval_terms(const Polynomial& f, const std::vector<Rational>& pt)
{
    Rational s = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                t *= pt[i];
        s += t;
    }
    return s;
}

} // namespace

TEST_CASE("parse expands products and prints canonically")
{
    CHECK(P("z^2+x(x^4+y^3)").to_string() == "x^5+xy^3+z^2");
    CHECK(P("x^7+y^3+z^2").to_string() == "x^7+y^3+z^2");
    CHECK(P("0", "xy").is_zero());
    CHECK(P("0", "xy").to_string() == "0");
    CHECK(P("3/2x^2-2y*z").to_string() == "3/2x^2-2yz");
    CHECK(P("-x + 2 * y").to_string() == "-x+2y");
    CHECK(P("(x+y)^2").to_string() == "x^2+2xy+y^2");
    CHECK(P("x^0").to_string() == "1");
}

TEST_CASE("expansion agrees with the factored form at rational points")
{
    Polynomial f = P("(y+x^3)(y^2+x^7)+z^2");
    CHECK(f == P("y^3+x^7y+x^3y^2+x^10+z^2"));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int k = 0; k < 5; ++k) {
        Rational x = make_rational(d(rng), 7), y = make_rational(d(rng), 5), z = make_rational(d(rng), 3);
        Rational factored = (y + x * x * x) * (y * y + x * x * x * x * x * x * x) + z * z;
        CHECK(eval_terms(f, {x, y, z}) == factored);
        std::vector<Rational> pt{x, y, z};
        CHECK(f.evaluate(pt) == factored);
    }
}

TEST_CASE("parse errors carry offsets")
{
    auto offset_of = [](const char* text, const char* vars = "xyz") {
        try {
            parse_polynomial(text, vars);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return std::size_t(12345);
    };
    CHECK(offset_of("x+w") == 2);
    CHECK(offset_of("x^y") == 2);
    CHECK(offset_of("x+") == 2);
    CHECK(offset_of("(x+y") == 4);
    CHECK(offset_of("x^-1") == 2);
    CHECK(offset_of("x)") == 1);
    CHECK_THROWS_AS(parse_polynomial("1/0", "xyz"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x", "xx"), DomainError);
    CHECK_THROWS_AS(parse_polynomial("x", "x"), DomainError);
    CHECK_THROWS_AS(parse_polynomial("x", "xyzuv"), DomainError);
}

TEST_CASE("ring operations")
{
    Polynomial p = P("x+y"), q = P("x-y");
    CHECK(p * q == P("x^2-y^2"));
    CHECK((p - p).is_zero());
    CHECK(p.pow(3) == P("x^3+3x^2y+3xy^2+y^3"));
    CHECK(-p == P("-x-y"));
    CHECK(P("2x") * Rational(1, 2) == P("x"));
    CHECK(P("x^2y").coefficient({2, 1, 0}) == 1);
    CHECK(P("x^2y").coefficient({1, 1, 0}) == 0);
    CHECK(P("x^2y+z").total_degree() == 3);
    CHECK(P("0").total_degree() == -1);
    CHECK_THROWS_AS(P("x") + P("x", "xy"), DomainError);
}

TEST_CASE("substitute and rename")
{
    Polynomial f = P("x^2+yz");
    std::vector<Polynomial> images{P("x+1"), P("x"), P("z")};
    CHECK(f.substitute(images) == P("x^2+2x+1+xz"));
    CHECK(f.rename("abc").to_string() == "a^2+bc");
}

TEST_CASE("multiplicity")
{
    CHECK(multiplicity(P("x^7+y^3+z^2")) == 2);
    CHECK(multiplicity(P("x^4+y^4+z^3")) == 3);
    CHECK(multiplicity(P("1")) == 0);
    CHECK_THROWS_AS(multiplicity(P("0")), DomainError);
}

TEST_CASE("homogeneous parts")
{
    CHECK(homogeneous_part(P("z^3+x^2y^2+x^5+y^5"), 3) == P("z^3"));
    CHECK(homogeneous_part(P("x^4+y^2z+xz^2"), 3) == P("y^2z+xz^2"));
    CHECK(homogeneous_part(P("x^4+y^2z+xz^2"), 9).is_zero());
}

TEST_CASE("weighted order and part")
{
    CHECK(weighted_order(P("x^7+y^3+z^2"), Weight{6, 14, 21}) == 42);
    CHECK(weighted_order(P("z^3+y^4+x^2y^2+x^3z"), Weight{3, 3, 4}) == 12);
    CHECK(weighted_order(P("x"), Weight{1, 1, 1}) == 1);
    CHECK(weighted_part(P("z^3+y^4+x^2y^2+x^3z"), Weight{3, 3, 4}) == P("z^3+y^4+x^2y^2"));
    CHECK(weighted_part(P("z^2+(y^2+x^2)(x^3+y^4)"), Weight{4, 3, 9}) == P("z^2+x^3y^2+y^6"));
    Polynomial h = P("x^7+y^3+z^2");
    CHECK(weighted_part(h, Weight{6, 14, 21}) == h);
    CHECK(is_weighted_homogeneous(h, Weight{6, 14, 21}));
    CHECK_FALSE(is_weighted_homogeneous(h, Weight{1, 1, 1}));
    CHECK_THROWS_AS(weighted_order(P("0"), Weight{1, 1, 1}), DomainError);
    CHECK_THROWS_AS(weighted_order(h, Weight{1, 1}), DomainError);
}

TEST_CASE("strict transform charts")
{
    CHECK(strict_transform_chart(P("z^3+y^4+x^2y^2+x^3z"), Weight{1, 1, 1}, 0) == P("z^3+xy^4+xy^2+xz"));
    CHECK(strict_transform_chart(P("x"), Weight{1, 1, 1}, 0) == P("1"));

    // f(x^6 z^0 ..) identity on the z chart: f(z^6 x, z^14 y, z^21) = z^42 * chart.
    Polynomial f = P("x^7+y^3+z^2");
    Weight w{6, 14, 21};
    Polynomial chart = strict_transform_chart(f, w, 2);
    CHECK(multiplicity(chart) == 0);
    Polynomial z = P("z");
    std::vector<Polynomial> images{z.pow(6) * P("x"), z.pow(14) * P("y"), z.pow(21)};
    CHECK(f.substitute(images) == z.pow(42) * chart);
    CHECK_THROWS_AS(strict_transform_chart(f, w, 3), DomainError);
}

TEST_CASE("coordinate factors")
{
    auto [core, k] = divide_out_coordinate_factors(P("yz^2+x^3y+y^5"));
    CHECK(core == P("z^2+x^3+y^4"));
    CHECK(k == Exponents{0, 1, 0});
    auto [one, k2] = divide_out_coordinate_factors(P("x^2y^2"));
    CHECK(one == P("1"));
    CHECK(k2 == Exponents{2, 2, 0});
    auto [same, k3] = divide_out_coordinate_factors(P("z^2+x^3y^2+y^6"));
    CHECK(same == P("z^2+x^3y^2+y^6"));
    CHECK(k3 == Exponents{0, 0, 0});
}

TEST_CASE("binary form multiplicities")
{
    CHECK(binary_form_max_multiplicity(P("y^4+x^2y^2", "xy")) == 2);
    CHECK(binary_form_max_multiplicity(P("xy^3", "xy")) == 3);
    CHECK(binary_form_max_multiplicity(P("x^4+y^4", "xy")) == 1);
    CHECK(binary_form_max_multiplicity(P("(x-2y)^3(x+y)", "xy")) == 3);
    CHECK(binary_form_max_multiplicity(P("(x^2+y^2)^2", "xy")) == 2);
    CHECK_THROWS_AS(binary_form_max_multiplicity(P("x^2+y", "xy")), DomainError);
}

TEST_CASE("ternary cubic classification")
{
    CHECK(ternary_cubic_repeated_factor(P("z^3")) == CubicFactorType::Triple);
    CHECK(ternary_cubic_repeated_factor(P("yz^2")) == CubicFactorType::Double);
    CHECK(ternary_cubic_repeated_factor(P("y^3+xz^2")) == CubicFactorType::Squarefree);
    CHECK(ternary_cubic_repeated_factor(P("(y^2+xz)z")) == CubicFactorType::Squarefree);
    CHECK(ternary_cubic_repeated_factor(P("y^3+z^3")) == CubicFactorType::Squarefree);
    CHECK(ternary_cubic_repeated_factor(P("(x+y+z)^3")) == CubicFactorType::Triple);
    CHECK(ternary_cubic_repeated_factor(P("(x+2y-z)^2(3x-y)")) == CubicFactorType::Double);
    CHECK(ternary_cubic_repeated_factor(P("(x+y)(x-y)(x+z)")) == CubicFactorType::Squarefree);
    CHECK_THROWS_AS(ternary_cubic_repeated_factor(P("x^2")), DomainError);
    Rational coeffs[] = {1, 2, -1};
    CHECK(linear_factor_multiplicity(P("(x+2y-z)^2(3x-y)"), coeffs) == 2);
}
