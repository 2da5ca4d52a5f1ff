#include "cantorp/primality.hpp"

#include <array>
#include <stdexcept>

namespace cantorp {

namespace {

constexpr std::array<uint32_t, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Primes below 100, used for cheap factor extraction before any
// strong-pseudoprime round.
constexpr std::array<uint32_t, 25> kSmallPrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return uint64_t((__uint128_t(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// One strong-pseudoprime round; true means "possibly prime".
bool sprp_u64(uint64_t n, uint64_t a) {
    a %= n;
    if (a == 0) return true;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool sprp_natural(const Natural& n, const Natural& a) {
    Natural amod = a % n;
    if (amod.is_zero()) return true;
    Natural n1 = n - Natural(1);
    Natural d = n1;
    size_t s = 0;
    while (d.is_even()) {
        d >>= 1;
        ++s;
    }
    Natural x = powmod(amod, d, n);
    if (x.is_one() || x == n1) return true;
    for (size_t r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n1) return true;
    }
    return false;
}

// Jacobi symbol (a/n) for odd n > 0, a reduced mod n. Small |a| callers only.
int jacobi(Natural a, Natural n) {
    int result = 1;
    while (!a.is_zero()) {
        while (a.is_even()) {
            a >>= 1;
            uint64_t r = (n % Natural(8)).to_u64();
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if ((a % Natural(4)).to_u64() == 3 && (n % Natural(4)).to_u64() == 3) result = -result;
        a = a % n;
    }
    return n.is_one() ? result : 0;
}

// Strong Lucas probable-prime test, Selfridge parameter selection.
// Assumes n odd, not a perfect square, no factor below 100.
bool strong_lucas_prp(const Natural& n) {
    // Find D in 5, -7, 9, -11, ... with Jacobi(D/n) = -1.
    int64_t d_abs = 5;
    int d_sign = 1;
    while (true) {
        Natural dmod = Natural(uint64_t(d_abs)) % n;
        if (d_sign < 0 && !dmod.is_zero()) dmod = n - dmod;
        int j = jacobi(dmod, n);
        if (j == -1) break;
        d_abs += 2;
        d_sign = -d_sign;
        if (d_abs > 1000) throw std::logic_error("Lucas parameter search failed");
    }
    // P = 1, Q = (1 - D) / 4, computed mod n.
    Natural q_mod;
    {
        // 1 - D = 1 - sign*d_abs
        int64_t one_minus_d = 1 - (d_sign > 0 ? d_abs : -d_abs);
        Natural t;
        bool neg = one_minus_d < 0;
        t = Natural(uint64_t(neg ? -one_minus_d : one_minus_d));
        // divide by 4 in the rationals: one_minus_d is divisible by 4 since
        // D = 1 (mod 4) for the Selfridge sequence
        t = t / Natural(4) % n;
        q_mod = (neg && !t.is_zero()) ? n - t : t;
    }
    Natural d_mod = Natural(uint64_t(d_abs)) % n;
    if (d_sign < 0 && !d_mod.is_zero()) d_mod = n - d_mod;

    // n - Jacobi(D/n) = n + 1; write n + 1 = t * 2^s with t odd.
    Natural np1 = n + Natural(1);
    Natural t = np1;
    size_t s = 0;
    while (t.is_even()) {
        t >>= 1;
        ++s;
    }

    // Compute U_t, V_t (mod n) by binary expansion of t, most significant
    // bit first, with U_1 = 1, V_1 = P = 1.
    Natural u(1), v(1), q_k = q_mod;
    auto half_mod = [&](Natural x) {
        if (x.is_odd()) x += n;
        x >>= 1;
        return x;
    };
    size_t bits = t.bit_length();
    for (size_t i = bits - 1; i-- > 0;) {
        // index doubling: U_{2k} = U_k V_k, V_{2k} = V_k^2 - 2 Q^k
        Natural u2 = u * v % n;
        Natural v2 = (v * v + (n - q_k) * Natural(2)) % n;
        Natural q2 = q_k * q_k % n;
        if (t.bit(i)) {
            // index +1: U_{2k+1} = (P U_{2k} + V_{2k})/2, V_{2k+1} = (D U_{2k} + P V_{2k})/2
            Natural u_next = half_mod((u2 + v2) % n);
            Natural v_next = half_mod((d_mod * u2 + v2) % n);
            u = std::move(u_next);
            v = std::move(v_next);
            q_k = q2 * q_mod % n;
        } else {
            u = std::move(u2);
            v = std::move(v2);
            q_k = std::move(q2);
        }
    }

    if (u.is_zero() || v.is_zero()) return true;
    for (size_t r = 1; r < s; ++r) {
        v = (v * v + (n - q_k) * Natural(2)) % n;
        if (v.is_zero()) return true;
        q_k = q_k * q_k % n;
    }
    return false;
}

}  // namespace {}

const Natural& deterministic_primality_bound() {
    // Sorenson & Webster: first 13 primes are a deterministic witness set
    // below this value.
    static const Natural bound = Natural::from_decimal("3317044064679887385961981");
    return bound;
}

PrimalityVerdict is_prime_u64(uint64_t n) {
    if (n < 2) return {Primality::Composite, std::nullopt};
    for (uint32_t p : kSmallPrimes) {
        if (n == p) return {Primality::Prime, std::nullopt};
        if (n % p == 0) return {Primality::Composite, Natural(p)};
    }
    for (uint32_t a : kWitnesses) {
        if (!sprp_u64(n, a)) return {Primality::Composite, std::nullopt};
    }
    return {Primality::Prime, std::nullopt};
}

PrimalityVerdict is_prime(const Natural& n) {
    if (n.fits_u64()) return is_prime_u64(n.to_u64());
    for (uint32_t p : kSmallPrimes) {
        if ((n % Natural(p)).is_zero()) return {Primality::Composite, Natural(p)};
    }
    if (n < deterministic_primality_bound()) {
        for (uint32_t a : kWitnesses) {
            if (!sprp_natural(n, Natural(a))) return {Primality::Composite, std::nullopt};
        }
        return {Primality::Prime, std::nullopt};
    }
    // Baillie-PSW beyond the proven witness bound.
    if (!sprp_natural(n, Natural(2))) return {Primality::Composite, std::nullopt};
    if (is_perfect_square(n)) return {Primality::Composite, isqrt(n)};
    if (!strong_lucas_prp(n)) return {Primality::Composite, std::nullopt};
    return {Primality::ProbablePrime, std::nullopt};
}

Natural multiplicative_order(const Natural& a, const Natural& m) {
    if (m <= Natural(1)) throw std::domain_error("multiplicative order needs modulus > 1");
    if (!gcd(a, m).is_one()) throw std::domain_error("multiplicative order needs gcd(a, m) = 1");
    if (m.fits_u64() && a.fits_u64()) {
        uint64_t mod = m.to_u64();
        uint64_t base = a.to_u64() % mod;
        uint64_t x = base;
        uint64_t t = 1;
        while (x != 1) {
            x = mulmod_u64(x, base, mod);
            ++t;
        }
        return Natural(t);
    }
    Natural base = a % m;
    Natural x = base;
    Natural t(1);
    while (!x.is_one()) {
        x = x * base % m;
        t.add_u32(1);
    }
    return t;
}

}  // namespace cantorp
