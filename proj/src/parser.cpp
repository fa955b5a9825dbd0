#include "lct/error.hpp"
#include "lct/polynomial.hpp"

#include <cctype>

namespace lct {

namespace {

constexpr int kMaxExponent = 100000;

// Recursive-descent parser over the raw bytes; whitespace is skipped between
// tokens.
class Parser {
public:
    Parser(std::string_view text, std::string_view vars) : text_(text), vars_(vars) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor()
    {
        char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c));
    }

    Polynomial expr()
    {
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-')
                return acc;
            ++pos_;
            if (c == '+')
                acc += term();
            else
                acc -= term();
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                acc *= factor();
            } else if (starts_factor()) {
                acc *= factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor()
    {
        Polynomial b = base();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("exponent must be a non-negative integer literal");
            std::size_t at = pos_;
            Integer e = digits();
            if (e > kMaxExponent) {
                pos_ = at;
                fail("exponent too large");
            }
            b = b.pow(static_cast<unsigned>(e.get_ui()));
        }
        return b;
    }

    Polynomial base()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational value(digits());
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected denominator");
                std::size_t at = pos_;
                Integer den = digits();
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
                value /= Rational(den);
            }
            return Polynomial::constant(std::string(vars_), value);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            auto idx = vars_.find(c);
            if (idx == std::string_view::npos)
                fail(std::string("unknown variable '") + c + "'");
            ++pos_;
            return Polynomial::variable(std::string(vars_), idx);
        }
        if (c == '\0')
            fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    Integer digits()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::string_view vars_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, std::string_view variables)
{
    // Validates the variable list before any parsing.
    Polynomial probe{std::string(variables)};
    return Parser(text, variables).parse();
}

} // namespace lct
