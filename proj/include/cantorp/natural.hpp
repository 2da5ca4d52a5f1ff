#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cantorp {

struct DivMod;

// Arbitrary-precision natural number (nonnegative integer).
//
// Stored as base-2^32 limbs, little-endian, no trailing zero limbs (zero is
// the empty limb vector). There is no signed variant anywhere in this
// library: subtraction that would go negative throws std::domain_error.
class Natural {
public:
    Natural() = default;
    Natural(uint64_t v);

    static Natural from_decimal(std::string_view s);
    std::string to_decimal() const;

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    bool is_odd() const { return !is_even(); }

    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t to_u64() const;  // throws std::overflow_error if it does not fit

    // Number of significant bits; 0 for zero.
    size_t bit_length() const;
    bool bit(size_t i) const;

    static int compare(const Natural& a, const Natural& b);

    friend bool operator==(const Natural& a, const Natural& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Natural& a, const Natural& b) { return compare(a, b) != 0; }
    friend bool operator<(const Natural& a, const Natural& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Natural& a, const Natural& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Natural& a, const Natural& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Natural& a, const Natural& b) { return compare(a, b) >= 0; }

    friend Natural operator+(const Natural& a, const Natural& b);
    friend Natural operator-(const Natural& a, const Natural& b);  // throws if a < b
    friend Natural operator*(const Natural& a, const Natural& b);
    friend Natural operator/(const Natural& a, const Natural& b);
    friend Natural operator%(const Natural& a, const Natural& b);

    Natural& operator+=(const Natural& b) { return *this = *this + b; }
    Natural& operator-=(const Natural& b) { return *this = *this - b; }
    Natural& operator*=(const Natural& b) { return *this = *this * b; }

    Natural& operator<<=(size_t bits);
    Natural& operator>>=(size_t bits);

    // Knuth algorithm D; single-limb divisors take a short path.
    // Throws std::domain_error on division by zero.
    static DivMod divmod(const Natural& a, const Natural& b);

    // Checked in-place increment/decrement by a small value.
    Natural& add_u32(uint32_t v);
    // Multiply in place by a small value.
    Natural& mul_u32(uint32_t v);
    // Divide in place by a small nonzero value, returning the remainder.
    uint32_t divmod_u32(uint32_t v);

    size_t limb_count() const { return limbs_.size(); }
    uint32_t limb(size_t i) const { return i < limbs_.size() ? limbs_[i] : 0; }

private:
    std::vector<uint32_t> limbs_;

    void trim();
};

struct DivMod {
    Natural quotient;
    Natural remainder;
};

Natural gcd(Natural a, Natural b);  // gcd(0,0) = 0

// base^exp, exactly. Throws std::domain_error on 0^0.
Natural pow(const Natural& base, const Natural& exp);

// (base^exp) mod m, m > 1.
Natural powmod(const Natural& base, const Natural& exp, const Natural& m);

// Floor square root.
Natural isqrt(const Natural& n);
bool is_perfect_square(const Natural& n);

// Digits of v in the given base, most significant first; empty for v = 0.
// base must be >= 2 and fit in 64 bits.
std::vector<uint64_t> to_base_digits(const Natural& v, const Natural& base);

}  // namespace cantorp
