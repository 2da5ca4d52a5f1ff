#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cantorp/cantor_set.hpp"

namespace cantorp {

// One successful step of the nested power-of-3 conditions for prime p:
// step n searched (2p/D_{n-1}, 3p/D_{n-1}), found 3^k strictly inside, and
// updated the running denominator to D_n = 3^k * D_{n-1} - 2p. D_n always
// lies strictly between 0 and p, and equals the long-division remainder of
// 1/p just after the n-th nonzero ternary digit (which the step certifies
// to be a 2).
struct SieveStep {
    uint64_t n = 0;
    uint64_t k = 0;
    Natural d_value;
    OpenInterval interval;
};

// D reached 1: the ternary period of 1/p closed using only the digits
// {0, 2}, so 1/p lies in C_3. q is the first step's exponent k_1; exactly
// when at_step == 1 this means 2p + 1 = 3^q (the base-3 repunit case).
// period is the sum of all k_n, the ternary period length of 1/p.
struct SieveAccept {
    uint64_t q = 0;
    uint64_t at_step = 0;
    uint64_t period = 0;
};

// The step's search interval contained no power of 3: the next nonzero
// ternary digit of 1/p is a 1, so 1/p falls in a removed middle third.
struct SieveReject {
    uint64_t at_step = 0;
};

struct SieveTrace {
    Natural p;
    std::vector<SieveStep> steps;
    std::variant<SieveAccept, SieveReject> outcome;

    bool accepted() const { return std::holds_alternative<SieveAccept>(outcome); }
    const SieveAccept& accept() const { return std::get<SieveAccept>(outcome); }
    const SieveReject& reject() const { return std::get<SieveReject>(outcome); }
};

// The unique k with lo < 3^k < hi when hi/lo <= 3 (all sieve intervals),
// otherwise the smallest such k. Exact integer comparisons throughout.
std::optional<uint64_t> power_of_3_in(const OpenInterval& interval);

struct SieveOptions {
    // Hard cap on steps; exceeding it throws std::logic_error, because the
    // procedure provably terminates within the ternary period of 1/p.
    uint64_t step_cap = 10000;
    // Reject immediately once D >= p. Provably unreachable (each found
    // power forces 0 < D < p); kept as a checked guard, and tests compare
    // both settings.
    bool reject_on_large_d = true;
};

// Runs the exclusion sieve for prime p > 3. Accept means 1/p is in C_3;
// Reject at step n means the n-th nonzero ternary digit of 1/p is a 1.
SieveTrace run_sieve(const Natural& p, const SieveOptions& options = {});

// p = 1 (mod 3), a necessary condition for acceptance; never sufficient.
bool mod3_filter(const Natural& p);

}  // namespace cantorp
