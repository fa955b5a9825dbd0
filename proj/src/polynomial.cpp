#include "lct/polynomial.hpp"

#include "lct/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace lct {

namespace {

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

void validate_variables(const std::string& vars)
{
    if (vars.size() < 2 || vars.size() > 4)
        throw DomainError("polynomials take 2-4 variables, got '" + vars + "'");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!std::isalpha(static_cast<unsigned char>(vars[i])))
            throw DomainError("variable names must be letters, got '" + vars + "'");
        if (vars.find(vars[i], i + 1) != std::string::npos)
            throw DomainError("duplicate variable in '" + vars + "'");
    }
}

} // namespace

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const
{
    int da = degree_of(a), db = degree_of(b);
    if (da != db)
        return da > db;
    return a > b;
}

Polynomial::Polynomial(std::string variables) : variables_(std::move(variables))
{
    validate_variables(variables_);
}

Polynomial Polynomial::constant(std::string variables, const Rational& value)
{
    Polynomial p(std::move(variables));
    p.add_term(Exponents(p.arity(), 0), value);
    return p;
}

Polynomial Polynomial::variable(std::string variables, std::size_t index)
{
    Polynomial p(std::move(variables));
    if (index >= p.arity())
        throw DomainError("variable index out of range");
    Exponents e(p.arity(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::monomial(std::string variables, Exponents exps, const Rational& coeff)
{
    Polynomial p(std::move(variables));
    if (exps.size() != p.arity())
        throw DomainError("exponent vector length does not match arity");
    if (std::any_of(exps.begin(), exps.end(), [](int a) { return a < 0; }))
        throw DomainError("negative exponent");
    p.add_term(exps, coeff);
    return p;
}

Rational Polynomial::coefficient(const Exponents& exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const
{
    return terms_.empty() ? -1 : degree_of(terms_.begin()->first);
}

void Polynomial::add_term(const Exponents& exps, const Rational& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& other) const
{
    if (variables_ != other.variables_)
        throw DomainError("variable lists differ: '" + variables_ + "' vs '" + other.variables_ + "'");
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    check_compatible(rhs);
    TermMap product;
    Exponents e(arity());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            auto [it, inserted] = product.try_emplace(e, ca * cb);
            if (!inserted)
                it->second += ca * cb;
        }
    }
    std::erase_if(product, [](const auto& kv) { return kv.second == 0; });
    terms_ = std::move(product);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= scalar;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    return p *= Rational(-1);
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result = constant(variables_, 1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
    if (point.size() != arity())
        throw DomainError("evaluation point has wrong dimension");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
            mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
            t *= p;
        }
        total += t;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const
{
    if (images.size() != arity())
        throw DomainError("substitution needs one image per variable");
    const std::string& target = images.front().variables();
    for (const auto& img : images)
        if (img.variables() != target)
            throw DomainError("substitution images use different variable lists");

    // powers[i][k] = images[i]^k, built lazily
    std::vector<std::vector<Polynomial>> powers(arity());
    auto power = [&](std::size_t i, int k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty())
            cache.push_back(constant(target, 1));
        while (static_cast<int>(cache.size()) <= k)
            cache.push_back(cache.back() * images[i]);
        return cache[k];
    };

    Polynomial result(target);
    for (const auto& [e, c] : terms_) {
        Polynomial t = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                t *= power(i, e[i]);
        result += t;
    }
    return result;
}

Polynomial Polynomial::rename(std::string variables) const
{
    Polynomial p(std::move(variables));
    if (p.arity() != arity())
        throw DomainError("rename must keep the arity");
    p.terms_ = terms_;
    return p;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool is_const = degree_of(e) == 0;
        Rational mag = abs(c);
        if (c < 0)
            out += "-";
        else if (!first)
            out += "+";
        first = false;
        if (is_const || mag != 1)
            out += lct::to_string(mag);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            out += variables_[i];
            if (e[i] > 1)
                out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

int multiplicity(const Polynomial& f)
{
    if (f.is_zero())
        throw DomainError("multiplicity of the zero polynomial");
    // Grlex-descending: lowest degree is last.
    return degree_of(f.terms().rbegin()->first);
}

Polynomial homogeneous_part(const Polynomial& f, int m)
{
    Polynomial out(f.variables());
    for (const auto& [e, c] : f.terms())
        if (degree_of(e) == m)
            out.add_term(e, c);
    return out;
}

long weighted_degree(const Exponents& exps, const Weight& w)
{
    if (exps.size() != w.size())
        throw DomainError("weight length " + std::to_string(w.size()) + " does not match arity " +
                          std::to_string(exps.size()));
    long d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i)
        d += w[i] * exps[i];
    return d;
}

long weighted_order(const Polynomial& f, const Weight& w)
{
    if (f.is_zero())
        throw DomainError("weighted order of the zero polynomial");
    long best = std::numeric_limits<long>::max();
    for (const auto& [e, c] : f.terms())
        best = std::min(best, weighted_degree(e, w));
    return best;
}

Polynomial weighted_part(const Polynomial& f, const Weight& w)
{
    long d = weighted_order(f, w);
    Polynomial out(f.variables());
    for (const auto& [e, c] : f.terms())
        if (weighted_degree(e, w) == d)
            out.add_term(e, c);
    return out;
}

bool is_weighted_homogeneous(const Polynomial& f, const Weight& w)
{
    if (f.is_zero())
        return true;
    long d = weighted_order(f, w);
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const auto& kv) { return weighted_degree(kv.first, w) == d; });
}

Polynomial strict_transform_chart(const Polynomial& f, const Weight& w, std::size_t chart)
{
    if (w.size() != f.arity())
        throw DomainError("weight length does not match arity");
    if (chart >= f.arity())
        throw DomainError("chart index out of range");
    long d = weighted_order(f, w);
    Polynomial out(f.variables());
    for (const auto& [e, c] : f.terms()) {
        Exponents t = e;
        t[chart] = static_cast<int>(weighted_degree(e, w) - d);
        out.add_term(t, c);
    }
    return out;
}

CoordinateFactorization divide_out_coordinate_factors(const Polynomial& f)
{
    if (f.is_zero())
        throw DomainError("coordinate factors of the zero polynomial");
    Exponents k(f.arity(), std::numeric_limits<int>::max());
    for (const auto& [e, c] : f.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            k[i] = std::min(k[i], e[i]);
    Polynomial core(f.variables());
    for (const auto& [e, c] : f.terms()) {
        Exponents r = e;
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] -= k[i];
        core.add_term(r, c);
    }
    return {std::move(core), std::move(k)};
}

} // namespace lct
