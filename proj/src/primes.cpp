#include "cantorp/primes.hpp"

#include <algorithm>
#include <cmath>

namespace cantorp {

void for_each_prime(uint64_t limit, const std::function<void(uint64_t)>& fn) {
    if (limit < 2) return;
    const uint64_t segment_size = 1 << 18;
    uint64_t sqrt_limit = uint64_t(std::sqrt(double(limit))) + 1;
    while (sqrt_limit * sqrt_limit > limit + 1) --sqrt_limit;

    // Small primes up to sqrt(limit) by a plain sieve.
    std::vector<char> small(sqrt_limit + 1, 1);
    for (uint64_t i = 2; i * i <= sqrt_limit; ++i)
        if (small[i])
            for (uint64_t j = i * i; j <= sqrt_limit; j += i) small[j] = 0;
    std::vector<uint64_t> base_primes;
    for (uint64_t i = 2; i <= sqrt_limit; ++i)
        if (small[i]) base_primes.push_back(i);

    std::vector<char> sieve(segment_size);
    for (uint64_t low = 2; low <= limit; low += segment_size) {
        uint64_t high = std::min(low + segment_size - 1, limit);
        std::fill(sieve.begin(), sieve.end(), 1);
        for (uint64_t p : base_primes) {
            if (p * p > high) break;
            uint64_t start = std::max(p * p, (low + p - 1) / p * p);
            for (uint64_t j = start; j <= high; j += p) sieve[j - low] = 0;
        }
        for (uint64_t n = low; n <= high; ++n)
            if (sieve[n - low]) fn(n);
    }
}

std::vector<uint64_t> primes_up_to(uint64_t limit) {
    std::vector<uint64_t> out;
    for_each_prime(limit, [&](uint64_t p) { out.push_back(p); });
    return out;
}

}  // namespace cantorp
