#include "cantorp/repunit.hpp"

#include <stdexcept>

#include "cantorp/primes.hpp"

namespace cantorp {

Natural repunit_value(const Natural& n, const Natural& q) {
    if (n < Natural(2)) throw std::domain_error("repunit base must be at least 2");
    if (q.is_zero()) throw std::domain_error("repunit exponent must be at least 1");
    Natural numerator = pow(n, q) - Natural(1);
    auto dm = Natural::divmod(numerator, n - Natural(1));
    return dm.quotient;  // the division is exact: n^q - 1 = (n-1)(n^{q-1} + ... + 1)
}

RepunitCandidate make_repunit_candidate(const Natural& n, const Natural& q) {
    Natural value = repunit_value(n, q);
    return {n, q, value, is_prime(value)};
}

std::vector<RepunitCandidate> enumerate_repunit_candidates(const Natural& n, uint64_t q_max) {
    std::vector<RepunitCandidate> out;
    for_each_prime(q_max, [&](uint64_t q) { out.push_back(make_repunit_candidate(n, Natural(q))); });
    return out;
}

std::vector<RepunitCandidate> enumerate_repunit_primes(const Natural& n, uint64_t q_max) {
    std::vector<RepunitCandidate> out;
    for (auto& c : enumerate_repunit_candidates(n, q_max))
        if (c.verdict.passed()) out.push_back(std::move(c));
    return out;
}

FactorizationWitness composite_q_factorization(const Natural& q, const Natural& r,
                                               const Natural& s) {
    if (r < Natural(2) || s < Natural(2)) throw std::invalid_argument("factors must be at least 2");
    if (r * s != q) throw std::invalid_argument("q must equal r*s");
    Natural three(3);
    Natural factor_a = (pow(three, r) - Natural(1)) / Natural(2);
    Natural step = pow(three, r);
    Natural factor_b;
    Natural term(1);
    if (!s.fits_u64()) throw std::length_error("s too large");
    uint64_t s_val = s.to_u64();
    for (uint64_t i = 0; i < s_val; ++i) {
        factor_b += term;
        if (i + 1 < s_val) term = term * step;
    }
    return {q, r, s, std::move(factor_a), std::move(factor_b)};
}

std::optional<Natural> solve_repunit_form(const Natural& p, const Natural& n) {
    if (p.is_zero()) throw std::invalid_argument("p must be at least 1");
    if (n < Natural(2)) throw std::domain_error("base must be at least 2");
    Natural v = (n - Natural(1)) * p + Natural(1);
    Natural q;
    while (!v.is_one()) {
        auto dm = Natural::divmod(v, n);
        if (!dm.remainder.is_zero()) return std::nullopt;
        v = std::move(dm.quotient);
        q.add_u32(1);
    }
    return q;
}

std::vector<Natural> base3_repunit_primes_up_to(const Natural& limit) {
    std::vector<Natural> out;
    Natural bound = limit * Natural(2) + Natural(1);
    for (uint64_t q = 2;; ++q) {
        Natural power = pow(Natural(3), Natural(q));
        if (power > bound) break;
        if (!is_prime_u64(q).passed()) continue;
        Natural p = (power - Natural(1)) / Natural(2);
        if (is_prime(p).passed()) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace cantorp
