#include "boolconv/dyadic.hpp"

#include <cstdio>

namespace boolconv {

Dyadic::Dyadic(BigInt numerator, uint32_t exponent) {
    if (numerator < 0) throw std::invalid_argument("dyadic: negative numerator");
    while (numerator != 0 && exponent > 0 && (numerator & 1) == 0) {
        numerator >>= 1;
        --exponent;
    }
    if (numerator == 0) exponent = 0;
    num = std::move(numerator);
    exp = exponent;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    uint32_t e = std::max(exp, o.exp);
    return Dyadic((num << (e - exp)) + (o.num << (e - o.exp)), e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
    uint32_t e = std::max(exp, o.exp);
    BigInt a = num << (e - exp);
    BigInt b = o.num << (e - o.exp);
    if (a < b) throw std::invalid_argument("dyadic: negative difference");
    return Dyadic(a - b, e);
}

bool Dyadic::operator<(const Dyadic& o) const {
    uint32_t e = std::max(exp, o.exp);
    return (num << (e - exp)) < (o.num << (e - o.exp));
}

Dyadic Dyadic::doubled() const {
    if (exp > 0) return Dyadic(num, exp - 1);
    return Dyadic(num << 1, 0);
}

Rational Dyadic::to_rational() const {
    return Rational(num, BigInt(1) << exp);
}

std::string Dyadic::str() const {
    if (exp == 0) return num.str();
    return num.str() + "/2^" + std::to_string(exp);
}

double Dyadic::approx() const {
    double n = num.convert_to<double>();
    return n / double(uint64_t(1) << std::min<uint32_t>(exp, 62)) /
           (exp > 62 ? double(uint64_t(1) << (exp - 62)) : 1.0);
}

}  // namespace boolconv
