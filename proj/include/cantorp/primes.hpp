#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace cantorp {

// Segmented sieve of Eratosthenes. Calls fn for every prime in [2, limit]
// in increasing order.
void for_each_prime(uint64_t limit, const std::function<void(uint64_t)>& fn);

std::vector<uint64_t> primes_up_to(uint64_t limit);

}  // namespace cantorp
