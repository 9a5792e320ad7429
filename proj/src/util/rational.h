#ifndef UTIL_RATIONAL_H
#define UTIL_RATIONAL_H

#include <cassert>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace util {

/*
  Exact rational arithmetic on 64-bit integers, always kept normalized
  (gcd 1, positive denominator). Used wherever tie-breaking must be
  bit-stable: solution ranking, action priorities, score tables.
*/
class Rational {
    std::int64_t num;
    std::int64_t den;

    void normalize() {
        assert(den != 0);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

public:
    Rational() : num(0), den(1) {}
    Rational(std::int64_t value) : num(value), den(1) {}
    Rational(std::int64_t numerator, std::int64_t denominator)
        : num(numerator), den(denominator) {
        normalize();
    }

    std::int64_t numerator() const {return num;}
    std::int64_t denominator() const {return den;}

    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    Rational operator+(const Rational &other) const {
        return Rational(num * other.den + other.num * den, den * other.den);
    }
    Rational operator-(const Rational &other) const {
        return Rational(num * other.den - other.num * den, den * other.den);
    }
    Rational operator*(const Rational &other) const {
        return Rational(num * other.num, den * other.den);
    }
    Rational operator/(const Rational &other) const {
        assert(other.num != 0);
        return Rational(num * other.den, den * other.num);
    }
    Rational &operator+=(const Rational &other) {
        *this = *this + other;
        return *this;
    }

    bool operator==(const Rational &other) const {
        return num == other.num && den == other.den;
    }
    bool operator!=(const Rational &other) const {return !(*this == other);}
    bool operator<(const Rational &other) const {
        return num * other.den < other.num * den;
    }
    bool operator>(const Rational &other) const {return other < *this;}
    bool operator<=(const Rational &other) const {return !(other < *this);}
    bool operator>=(const Rational &other) const {return !(*this < other);}

    std::string to_string() const {
        if (den == 1)
            return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.to_string();
}

}

#endif
