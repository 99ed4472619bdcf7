#include "parking/rational.hpp"

#include <stdexcept>

namespace parking {

std::string to_string(const Rational& value)
{
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view text)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    for (char c : digits)
        if (c < '0' || c > '9') throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    boost::multiprecision::cpp_int value{std::string(digits)};
    return text.front() == '-' ? boost::multiprecision::cpp_int(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

QParam::QParam(Rational value)
    : value_(std::move(value))
{
    if (*value_ < 0) throw std::domain_error("q must be non-negative");
}

const Rational& QParam::value() const
{
    if (!value_) throw std::domain_error("q is infinite");
    return *value_;
}

std::string QParam::to_string() const
{
    return value_ ? parking::to_string(*value_) : "inf";
}

QParam parse_q(std::string_view text)
{
    if (text == "inf" || text == "infinity") return QParam::infinity();
    Rational q = parse_rational(text);
    if (q < 0) throw std::invalid_argument("q must be non-negative");
    return QParam(q);
}

Rational q_integer(int j, const Rational& q)
{
    if (j < 1) throw std::domain_error("q-integer [j] needs j >= 1");
    Rational sum = 0;
    Rational power = 1;
    for (int k = 0; k < j; ++k) {
        sum += power;
        power *= q;
    }
    return sum;
}

Rational q_ratio(int i, int j, const QParam& q)
{
    if (i < 1 || j < 1) throw std::domain_error("q-integers need positive arguments");
    if (!q.is_infinite()) return q_integer(i, q.value()) / q_integer(j, q.value());
    if (i < j) return 0;
    if (i == j) return 1;
    throw std::domain_error("[i]/[j] diverges at q = inf for i > j");
}

} // namespace parking
