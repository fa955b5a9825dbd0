#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lct {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms; integers print without "/1".
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q" (surrounding whitespace tolerated).
/// Throws lct::ParseError on anything else.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace lct
