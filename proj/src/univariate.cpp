#include "univariate.hpp"

#include "lct/error.hpp"

#include <cassert>

namespace lct::detail {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

UPoly UPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const
{
    if (is_zero())
        return {};
    std::vector<Rational> c = coeffs_;
    Rational lead = leading();
    for (auto& x : c)
        x /= lead;
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b)
{
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] -= b.coeffs_[i];
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& num, const UPoly& den)
{
    if (den.is_zero())
        throw DomainError("univariate division by zero");
    std::vector<Rational> rem = num.coeffs_;
    int dn = den.degree();
    if (num.degree() < dn)
        return {UPoly{}, num};
    std::vector<Rational> quot(num.degree() - dn + 1);
    for (int k = num.degree(); k >= dn; --k) {
        Rational q = rem[k] / den.leading();
        if (q == 0)
            continue;
        quot[k - dn] = q;
        for (int j = 0; j <= dn; ++j)
            rem[k - dn + j] -= q * den.coeffs_[j];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = UPoly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly exact_div(const UPoly& num, const UPoly& den)
{
    auto [q, r] = UPoly::divmod(num, den);
    assert(r.is_zero());
    return q;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UPoly& f)
{
    if (f.is_zero())
        throw DomainError("squarefree decomposition of zero");
    std::vector<SquarefreeFactor> out;
    UPoly fp = f.derivative();
    UPoly b = gcd(f, fp);
    UPoly c = exact_div(f, b);
    UPoly d = exact_div(fp, b) - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        UPoly a = gcd(c, d);
        if (a.degree() > 0)
            out.push_back({a, i});
        c = exact_div(c, a);
        d = exact_div(d, a) - c.derivative();
    }
    return out;
}

} // namespace lct::detail
