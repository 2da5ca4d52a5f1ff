#include "cantorp/natural.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cantorp {

namespace {
constexpr uint64_t kLimbBase = uint64_t(1) << 32;
}

Natural::Natural(uint64_t v) {
    if (v != 0) {
        limbs_.push_back(uint32_t(v));
        if (v >> 32) limbs_.push_back(uint32_t(v >> 32));
    }
}

void Natural::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Natural Natural::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    Natural r;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("invalid digit in integer literal");
        r.mul_u32(10);
        r.add_u32(uint32_t(c - '0'));
    }
    return r;
}

std::string Natural::to_decimal() const {
    if (is_zero()) return "0";
    // Peel 9 decimal digits at a time.
    Natural t = *this;
    std::string out;
    while (!t.is_zero()) {
        uint32_t chunk = t.divmod_u32(1000000000u);
        if (t.is_zero()) {
            out = std::to_string(chunk) + out;
        } else {
            std::string part = std::to_string(chunk);
            out = std::string(9 - part.size(), '0') + part + out;
        }
    }
    return out;
}

uint64_t Natural::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("Natural does not fit in 64 bits");
    uint64_t v = 0;
    if (limbs_.size() > 1) v = uint64_t(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

size_t Natural::bit_length() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool Natural::bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

int Natural::compare(const Natural& a, const Natural& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

Natural operator+(const Natural& a, const Natural& b) {
    Natural r;
    const auto& x = a.limbs_;
    const auto& y = b.limbs_;
    size_t n = std::max(x.size(), y.size());
    r.limbs_.resize(n);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < x.size()) s += x[i];
        if (i < y.size()) s += y[i];
        r.limbs_[i] = uint32_t(s);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(uint32_t(carry));
    return r;
}

Natural operator-(const Natural& a, const Natural& b) {
    if (a < b) throw std::domain_error("Natural subtraction would be negative");
    Natural r;
    r.limbs_.resize(a.limbs_.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        int64_t d = int64_t(a.limbs_[i]) - borrow - (i < b.limbs_.size() ? int64_t(b.limbs_[i]) : 0);
        if (d < 0) {
            d += int64_t(kLimbBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = uint32_t(d);
    }
    r.trim();
    return r;
}

Natural operator*(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero()) return Natural();
    Natural r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a.limbs_[i];
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t t = ai * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = uint32_t(t);
            carry = t >> 32;
        }
        r.limbs_[i + b.limbs_.size()] = uint32_t(carry);
    }
    r.trim();
    return r;
}

Natural& Natural::operator<<=(size_t bits) {
    if (is_zero() || bits == 0) return *this;
    size_t limb_shift = bits / 32;
    size_t bit_shift = bits % 32;
    size_t old = limbs_.size();
    limbs_.resize(old + limb_shift + 1, 0);
    for (size_t i = old; i-- > 0;) {
        uint64_t v = uint64_t(limbs_[i]) << bit_shift;
        limbs_[i + limb_shift + 1] |= uint32_t(v >> 32);
        limbs_[i + limb_shift] = uint32_t(v);
    }
    for (size_t i = 0; i < limb_shift; ++i) limbs_[i] = 0;
    trim();
    return *this;
}

Natural& Natural::operator>>=(size_t bits) {
    size_t limb_shift = bits / 32;
    size_t bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) {
        limbs_.clear();
        return *this;
    }
    limbs_.erase(limbs_.begin(), limbs_.begin() + ptrdiff_t(limb_shift));
    if (bit_shift) {
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t v = limbs_[i] >> bit_shift;
            if (i + 1 < limbs_.size())
                v |= uint64_t(limbs_[i + 1]) << (32 - bit_shift);
            limbs_[i] = uint32_t(v);
        }
    }
    trim();
    return *this;
}

Natural& Natural::add_u32(uint32_t v) {
    uint64_t carry = v;
    for (size_t i = 0; carry && i < limbs_.size(); ++i) {
        uint64_t s = uint64_t(limbs_[i]) + carry;
        limbs_[i] = uint32_t(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(uint32_t(carry));
    return *this;
}

Natural& Natural::mul_u32(uint32_t v) {
    if (v == 0) {
        limbs_.clear();
        return *this;
    }
    uint64_t carry = 0;
    for (auto& limb : limbs_) {
        uint64_t t = uint64_t(limb) * v + carry;
        limb = uint32_t(t);
        carry = t >> 32;
    }
    if (carry) limbs_.push_back(uint32_t(carry));
    return *this;
}

uint32_t Natural::divmod_u32(uint32_t v) {
    if (v == 0) throw std::domain_error("division by zero");
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = uint32_t(cur / v);
        rem = cur % v;
    }
    trim();
    return uint32_t(rem);
}

DivMod Natural::divmod(const Natural& a, const Natural& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a < b) return {Natural(), a};
    if (b.limbs_.size() == 1) {
        DivMod dm{a, Natural()};
        uint32_t r = dm.quotient.divmod_u32(b.limbs_[0]);
        dm.remainder = Natural(r);
        return dm;
    }

    // Knuth TAOCP vol. 2, algorithm D. Normalize so the divisor's top limb
    // has its high bit set.
    size_t shift = 32 - (b.bit_length() % 32);
    if (shift == 32) shift = 0;
    Natural u = a;
    Natural v = b;
    u <<= shift;
    v <<= shift;
    size_t n = v.limbs_.size();
    size_t m = u.limbs_.size() - n;
    u.limbs_.push_back(0);  // u has m+n+1 limbs

    Natural q;
    q.limbs_.assign(m + 1, 0);
    const uint64_t vtop = v.limbs_[n - 1];
    const uint64_t vnext = v.limbs_[n - 2];

    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (uint64_t(u.limbs_[j + n]) << 32) | u.limbs_[j + n - 1];
        uint64_t qhat = num / vtop;
        uint64_t rhat = num % vtop;
        while (qhat >= kLimbBase ||
               qhat * vnext > ((rhat << 32) | u.limbs_[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kLimbBase) break;
        }
        // Multiply-subtract qhat * v from u[j .. j+n].
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v.limbs_[i] + carry;
            carry = p >> 32;
            int64_t t = int64_t(u.limbs_[i + j]) - borrow - int64_t(uint32_t(p));
            if (t < 0) {
                t += int64_t(kLimbBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u.limbs_[i + j] = uint32_t(t);
        }
        int64_t t = int64_t(u.limbs_[j + n]) - borrow - int64_t(carry);
        if (t < 0) {
            // qhat was one too large: add v back.
            t += int64_t(kLimbBase);
            --qhat;
            uint64_t c = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = uint64_t(u.limbs_[i + j]) + v.limbs_[i] + c;
                u.limbs_[i + j] = uint32_t(s);
                c = s >> 32;
            }
            t += int64_t(c);
        }
        u.limbs_[j + n] = uint32_t(t);
        q.limbs_[j] = uint32_t(qhat);
    }
    q.trim();
    u.trim();
    u >>= shift;
    return {q, u};
}

Natural operator/(const Natural& a, const Natural& b) { return Natural::divmod(a, b).quotient; }
Natural operator%(const Natural& a, const Natural& b) { return Natural::divmod(a, b).remainder; }

Natural gcd(Natural a, Natural b) {
    while (!b.is_zero()) {
        if (a.fits_u64() && b.fits_u64()) {
            uint64_t x = a.to_u64(), y = b.to_u64();
            while (y) {
                uint64_t t = x % y;
                x = y;
                y = t;
            }
            return Natural(x);
        }
        Natural r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Natural pow(const Natural& base, const Natural& exp) {
    if (base.is_zero() && exp.is_zero()) throw std::domain_error("0^0 is undefined");
    if (exp.is_zero()) return Natural(1);
    if (base.is_zero()) return Natural();
    if (base.is_one()) return Natural(1);
    if (!exp.fits_u64()) throw std::length_error("exponent too large");
    uint64_t e = exp.to_u64();
    Natural result(1);
    Natural sq = base;
    while (e) {
        if (e & 1) result *= sq;
        e >>= 1;
        if (e) sq *= sq;
    }
    return result;
}

Natural powmod(const Natural& base, const Natural& exp, const Natural& m) {
    if (m <= Natural(1)) throw std::domain_error("modulus must exceed 1");
    Natural result(1);
    Natural sq = base % m;
    size_t bits = exp.bit_length();
    for (size_t i = 0; i < bits; ++i) {
        if (exp.bit(i)) result = result * sq % m;
        if (i + 1 < bits) sq = sq * sq % m;
    }
    return result;
}

Natural isqrt(const Natural& n) {
    if (n.is_zero()) return Natural();
    // Newton iteration with an over-estimate start: x = 2^ceil(bits/2).
    Natural x(1);
    x <<= (n.bit_length() + 1) / 2;
    while (true) {
        Natural y = (x + n / x);
        y >>= 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

bool is_perfect_square(const Natural& n) {
    Natural r = isqrt(n);
    return r * r == n;
}

std::vector<uint64_t> to_base_digits(const Natural& v, const Natural& base) {
    if (base < Natural(2)) throw std::domain_error("base must be at least 2");
    if (!base.fits_u64()) throw std::length_error("base too large for digit extraction");
    std::vector<uint64_t> digits;
    Natural t = v;
    Natural b = base;
    while (!t.is_zero()) {
        auto dm = Natural::divmod(t, b);
        digits.push_back(dm.remainder.to_u64());
        t = std::move(dm.quotient);
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace cantorp
