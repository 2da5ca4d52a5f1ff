#include "cantorp/exclusion_sieve.hpp"

#include <stdexcept>

#include "cantorp/primality.hpp"

namespace cantorp {

std::optional<uint64_t> power_of_3_in(const OpenInterval& interval) {
    Natural power(1);
    uint64_t k = 0;
    // Smallest power strictly above lo, then check it is strictly below hi.
    while (power * interval.lo.den() <= interval.lo.num()) {
        power.mul_u32(3);
        ++k;
    }
    if (power * interval.hi.den() < interval.hi.num()) return k;
    return std::nullopt;
}

namespace {

void check_sieve_input(const Natural& p) {
    if (p <= Natural(3) || !is_prime(p).passed())
        throw std::invalid_argument("the exclusion sieve requires a prime p > 3");
}

}  // namespace

SieveTrace run_sieve(const Natural& p, const SieveOptions& options) {
    check_sieve_input(p);
    SieveTrace trace;
    trace.p = p;
    const Natural two_p = p * Natural(2);
    const Natural three_p = p * Natural(3);
    Natural d(1);
    uint64_t k1 = 0;
    uint64_t period = 0;
    for (uint64_t n = 1; n <= options.step_cap; ++n) {
        if (options.reject_on_large_d && d >= p) {
            trace.outcome = SieveReject{n};
            return trace;
        }
        OpenInterval interval(Rational(two_p, d), Rational(three_p, d));
        auto k = power_of_3_in(interval);
        if (!k) {
            trace.outcome = SieveReject{n};
            return trace;
        }
        d = pow(Natural(3), Natural(*k)) * d - two_p;
        if (n == 1) k1 = *k;
        period += *k;
        trace.steps.push_back({n, *k, d, std::move(interval)});
        if (d.is_one()) {
            trace.outcome = SieveAccept{k1, n, period};
            return trace;
        }
    }
    throw std::logic_error("exclusion sieve exceeded its step cap");
}

bool mod3_filter(const Natural& p) {
    check_sieve_input(p);
    return (p % Natural(3)).is_one();
}

}  // namespace cantorp
