#pragma once

#include <string>
#include <string_view>

#include "cantorp/natural.hpp"

namespace cantorp {

// Exact nonnegative rational, always held in lowest terms (zero is 0/1).
// All arithmetic is exact; subtraction that would go negative and division
// by zero throw std::domain_error.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(uint64_t n) : num_(n), den_(1) {}
    Rational(const Natural& n) : num_(n), den_(1) {}
    Rational(Natural num, Natural den);
    Rational(uint64_t num, uint64_t den) : Rational(Natural(num), Natural(den)) {}

    // Parses "a/b" or a plain integer "a".
    static Rational from_string(std::string_view s);
    std::string to_string() const;  // "a/b", or "a" when the denominator is 1

    const Natural& num() const { return num_; }
    const Natural& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    static int compare(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

private:
    Natural num_;
    Natural den_;
};

}  // namespace cantorp
