#include "boolconv/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace boolconv {

using boost::multiprecision::gcd;

Rational::Rational(BigInt n, BigInt d) {
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    BigInt g = gcd(n < 0 ? BigInt(-n) : n, d);
    if (g > 1) { n /= g; d /= g; }
    num = std::move(n);
    den = std::move(d);
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) throw std::invalid_argument("rational: division by zero");
    return Rational(num * o.den, den * o.num);
}

std::string Rational::str() const {
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double Rational::approx() const {
    return num.convert_to<double>() / den.convert_to<double>();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text), 1);
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
}

}  // namespace boolconv
