#pragma once

#include <optional>
#include <vector>

#include "cantorp/primality.hpp"

namespace cantorp {

// A base-N repunit (n^q - 1)/(n - 1) together with the primality verdict
// of its value.
struct RepunitCandidate {
    Natural base;      // N >= 2
    Natural exponent;  // q >= 1
    Natural value;     // (N^q - 1)/(N - 1); its base-N digits are q ones
    PrimalityVerdict verdict;
};

// Witness that (3^q - 1)/2 is composite when q = r*s is: the algebraic
// split (3^q - 1)/2 = ((3^r - 1)/2) * (3^{(s-1)r} + 3^{(s-2)r} + ... + 1).
struct FactorizationWitness {
    Natural q, r, s;
    Natural factor_a;  // (3^r - 1)/2
    Natural factor_b;  // sum of 3^{ir} for i = 0..s-1
    Natural product() const { return factor_a * factor_b; }
};

// (n^q - 1)/(n - 1), exactly; n >= 2, q >= 1.
Natural repunit_value(const Natural& n, const Natural& q);

RepunitCandidate make_repunit_candidate(const Natural& n, const Natural& q);

// Candidates for every prime q <= q_max, ascending in q, regardless of the
// value's primality. This is the unfiltered stream.
std::vector<RepunitCandidate> enumerate_repunit_candidates(const Natural& n, uint64_t q_max);

// The candidates above whose value is prime (or probable prime, flagged in
// the verdict).
std::vector<RepunitCandidate> enumerate_repunit_primes(const Natural& n, uint64_t q_max);

// The algebraic factorization witness; requires q = r*s with r, s >= 2.
FactorizationWitness composite_q_factorization(const Natural& q, const Natural& r,
                                               const Natural& s);

// The exponent q with (n-1)*p + 1 = n^q exactly, if one exists; found by
// repeated exact division by n. p >= 1, n >= 2.
std::optional<Natural> solve_repunit_form(const Natural& p, const Natural& n);

// Ascending primes p <= limit with 2p + 1 = 3^q and q prime (the closed
// form of the base-3 repunit primes, OEIS A076481). Note this is not the
// same set as the primes whose reciprocals lie in C_3: 757 belongs to the
// latter but not to this list.
std::vector<Natural> base3_repunit_primes_up_to(const Natural& limit);

}  // namespace cantorp
