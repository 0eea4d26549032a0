#ifndef BOOLCONV_DYADIC_HPP
#define BOOLCONV_DYADIC_HPP

#include "boolconv/rational.hpp"

#include <cstdint>
#include <string>

namespace boolconv {

// Dyadic rational num / 2^exp, canonical: num odd or exp == 0 (0 is 0/2^0).
// Carries every measure value in the project exactly; depth is capped at 24
// so numerators stay tiny, but the representation does not rely on that.
struct Dyadic {
    BigInt num = 0;      // >= 0
    uint32_t exp = 0;

    Dyadic() = default;
    Dyadic(BigInt numerator, uint32_t exponent);  // canonicalizes

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1, 0); }

    bool is_zero() const { return num == 0; }

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;  // requires *this >= o
    bool operator==(const Dyadic& o) const { return num == o.num && exp == o.exp; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }
    bool operator<(const Dyadic& o) const;
    bool operator<=(const Dyadic& o) const { return *this < o || *this == o; }
    bool operator>(const Dyadic& o) const { return o < *this; }
    bool operator>=(const Dyadic& o) const { return o <= *this; }

    Dyadic halved(uint32_t k = 1) const { return Dyadic(num, exp + k); }
    Dyadic doubled() const;

    Rational to_rational() const;
    std::string str() const;  // "num/2^exp", integers plain
    double approx() const;
};

}  // namespace boolconv

#endif
