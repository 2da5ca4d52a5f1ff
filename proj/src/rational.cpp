#include "cantorp/rational.hpp"

#include <stdexcept>

namespace cantorp {

Rational::Rational(Natural num, Natural den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    if (num_.is_zero()) {
        den_ = Natural(1);
        return;
    }
    Natural g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(Natural::from_decimal(s));
    Natural n = Natural::from_decimal(s.substr(0, slash));
    Natural d = Natural::from_decimal(s.substr(slash + 1));
    if (d.is_zero()) throw std::invalid_argument("rational literal with zero denominator");
    return Rational(std::move(n), std::move(d));
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

int Rational::compare(const Rational& a, const Rational& b) {
    return Natural::compare(a.num_ * b.den_, b.num_ * a.den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    Natural lhs = a.num_ * b.den_;
    Natural rhs = b.num_ * a.den_;
    if (lhs < rhs) throw std::domain_error("rational subtraction would be negative");
    return Rational(lhs - rhs, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace cantorp
