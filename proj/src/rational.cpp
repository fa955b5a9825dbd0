#include "lct/rational.hpp"

#include "lct/error.hpp"

#include <cctype>

namespace lct {

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    bool negative = false;
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");

    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(negative ? Integer(-n) : n, d);
    q.canonicalize();
    return q;
}

} // namespace lct
