#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace parking {

// Always reduced, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// "num/den", denominator always written: 3 renders as "3/1".
std::string to_string(const Rational& value);

// Accepts "3", "-2", "1/2". Throws std::invalid_argument otherwise or on a
// zero denominator.
Rational parse_rational(std::string_view text);

// q in [0, +inf]; an empty value stands for +inf.
class QParam {
public:
    QParam() : value_(Rational(1)) {}
    QParam(Rational value);
    static QParam infinity() { return QParam(std::nullopt); }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& value() const;

    std::string to_string() const;

    bool operator==(const QParam&) const = default;

private:
    explicit QParam(std::nullopt_t) {}
    std::optional<Rational> value_;
};

// "inf" or a non-negative rational.
QParam parse_q(std::string_view text);

// [j] = 1 + q + ... + q^(j-1). Throws std::domain_error for j < 1.
Rational q_integer(int j, const Rational& q);

// [i]/[j]. At q = inf this is the limit: 0 for i < j, 1 for i == j;
// i > j diverges and throws std::domain_error.
Rational q_ratio(int i, int j, const QParam& q);

} // namespace parking
