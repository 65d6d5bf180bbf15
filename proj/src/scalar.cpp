#include "csf/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace csf {

std::string to_decimal(const Integer& value)
{
    return value.str();
}

std::string to_decimal(const Rational& value)
{
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        start = 1;
    if (start == text.size())
        throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
    }
    Integer value(std::string(text.substr(text[0] == '+' ? 1 : 0)));
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    Integer den = parse_integer(den_text, text);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

bool is_integral(const Rational& value)
{
    return boost::multiprecision::denominator(value) == 1;
}

Integer to_integer(const Rational& value)
{
    if (!is_integral(value))
        throw std::domain_error("expected an integer, got " + to_decimal(value));
    return boost::multiprecision::numerator(value);
}

Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

}  // namespace csf
