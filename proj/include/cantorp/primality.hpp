#pragma once

#include <optional>

#include "cantorp/natural.hpp"

namespace cantorp {

enum class Primality { Prime, ProbablePrime, Composite };

struct PrimalityVerdict {
    Primality kind = Primality::Composite;
    // A nontrivial factor, when one was found (trial division only).
    std::optional<Natural> witness;

    bool passed() const { return kind != Primality::Composite; }
    bool deterministic() const { return kind != Primality::ProbablePrime; }
};

// Deterministic strong-pseudoprime test with the 13-prime witness set
// {2,...,41} for n below 3,317,044,064,679,887,385,961,981; Baillie-PSW
// (strong base-2 + strong Lucas) above that bound, reported as
// ProbablePrime. Composite verdicts carry a factor when trial division
// found one.
PrimalityVerdict is_prime(const Natural& n);
PrimalityVerdict is_prime_u64(uint64_t n);

// Largest value (exclusive) for which is_prime is deterministic.
const Natural& deterministic_primality_bound();

// Smallest t >= 1 with a^t = 1 (mod m). Requires m > 1 and gcd(a, m) = 1;
// throws std::domain_error otherwise. Runs in O(t) modular multiplications.
Natural multiplicative_order(const Natural& a, const Natural& m);

}  // namespace cantorp
