#include "lct/weights.hpp"

#include "lct/error.hpp"

#include <charconv>
#include <numeric>

namespace lct {

// --- Weight ---------------------------------------------------------------

namespace {

long gcd_of(std::span<const long> v)
{
    long g = 0;
    for (long x : v)
        g = std::gcd(g, x);
    return g;
}

void validate_shape(const std::vector<long>& e)
{
    if (e.size() < 2 || e.size() > 4)
        throw DomainError("weights have 2-4 entries, got " + std::to_string(e.size()));
    for (long x : e)
        if (x < 1)
            throw DomainError("weight entries must be positive, got " + std::to_string(x));
}

} // namespace

Weight::Weight(std::vector<long> entries) : entries_(std::move(entries))
{
    validate_shape(entries_);
    if (gcd_of(entries_) != 1)
        throw DomainError("weight " + to_string() + " is not primitive");
}

Weight Weight::reduced(std::vector<long> entries)
{
    validate_shape(entries);
    long g = gcd_of(entries);
    for (long& x : entries)
        x /= g;
    return Weight(std::move(entries));
}

long Weight::sum() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

std::string Weight::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(entries_[i]);
    }
    return s;
}

Weight parse_weight(std::string_view text)
{
    std::vector<long> entries;
    std::size_t pos = 0;
    while (true) {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
        long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc())
            throw ParseError("expected an integer weight entry", pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        entries.push_back(value);
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
        if (pos == text.size())
            break;
        if (text[pos] != ',')
            throw ParseError("expected ',' in weight", pos);
        ++pos;
    }
    return Weight(std::move(entries));
}

// --- well-forming ---------------------------------------------------------

std::array<long, 3> pair_gcds(const Weight& w)
{
    if (w.size() != 3)
        throw DomainError("pair gcds need a length-3 weight");
    return {std::gcd(w[1], w[2]), std::gcd(w[0], w[2]), std::gcd(w[0], w[1])};
}

WellFormedPlane well_form(const Weight& w)
{
    auto m = pair_gcds(w);
    std::vector<long> wf(3);
    for (std::size_t i = 0; i < 3; ++i) {
        long denom = m[(i + 1) % 3] * m[(i + 2) % 3];
        if (w[i] % denom != 0)
            throw DomainError("well-forming " + w.to_string() + " is not exact");
        wf[i] = w[i] / denom;
    }
    return {w, m, Weight(std::move(wf)), m[0] * m[1] * m[2]};
}

std::string WellFormedPlane::display() const
{
    if (well_formed == Weight{1, 1, 1})
        return "P^2";
    return "P(" + well_formed.to_string() + ")";
}

RewrittenForm rewrite_form(const Polynomial& f, const WellFormedPlane& plane)
{
    if (f.arity() != 3)
        throw DomainError("rewrite_form expects a form in three variables");
    if (f.is_zero())
        throw DomainError("rewrite_form of the zero polynomial");
    if (!is_weighted_homogeneous(f, plane.original))
        throw DomainError(f.to_string() + " is not homogeneous for weight " + plane.original.to_string());

    Polynomial out(f.variables());
    long degree = -1;
    for (const auto& [e, c] : f.terms()) {
        Exponents r(3);
        for (std::size_t i = 0; i < 3; ++i) {
            if (e[i] % plane.pair_gcds[i] != 0)
                throw DomainError("exponent " + std::to_string(e[i]) + " of " + f.to_string() +
                                  " is not divisible by m_" + std::to_string(i + 1) + " = " +
                                  std::to_string(plane.pair_gcds[i]));
            r[i] = static_cast<int>(e[i] / plane.pair_gcds[i]);
        }
        long d = weighted_degree(r, plane.well_formed);
        if (degree >= 0 && d != degree)
            throw DomainError("rewritten form is not homogeneous");
        degree = d;
        out.add_term(r, c);
    }
    return {std::move(out), degree};
}

} // namespace lct
