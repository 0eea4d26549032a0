#ifndef BOOLCONV_RATIONAL_HPP
#define BOOLCONV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace boolconv {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction, denominator > 0. All solver arithmetic is exact; floating
// point only ever appears next to the fraction in rendered reports.
struct Rational {
    BigInt num = 0;
    BigInt den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(BigInt n, BigInt d);

    bool is_zero() const { return num == 0; }
    bool is_negative() const { return num < 0; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    // "p/q"; integers render without the "/q" part.
    std::string str() const;
    double approx() const;

    static Rational parse(const std::string& text);  // accepts "p" and "p/q"
};

}  // namespace boolconv

#endif
