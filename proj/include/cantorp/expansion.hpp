#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cantorp/rational.hpp"

namespace cantorp {

// Base-b positional expansion of a rational in [0, 1], split into the
// non-repeating prefix and the repeating block. Canonical form (as produced
// by expand): the period is primitive, the preperiod is minimal, a
// terminating expansion has an empty period and never ends in digit 0, and
// zero is the all-empty expansion.
struct DigitExpansion {
    Natural base;
    std::vector<uint64_t> preperiod;
    std::vector<uint64_t> period;

    bool terminating() const { return period.empty(); }

    friend bool operator==(const DigitExpansion& a, const DigitExpansion& b) {
        return a.base == b.base && a.preperiod == b.preperiod && a.period == b.period;
    }
};

// Canonical expansion of x in the given base, by long division with
// remainder-state cycle detection. Requires 0 <= x <= 1 and base >= 2;
// x = 1 yields the non-terminating form (empty preperiod, period [base-1]).
DigitExpansion expand(const Rational& x, const Natural& base);

// Exact value of an expansion; inverse of expand on canonical forms.
// Accepts non-canonical but well-formed input (all digits < base).
Rational reconstruct(const DigitExpansion& e);

// The non-terminating twin of a terminating expansion: decrement the last
// preperiod digit and append period [base-1]. Empty for non-terminating
// input and for zero.
std::optional<DigitExpansion> alternate_representation(const DigitExpansion& e);

// Expansion of 1/R for the base-N repunit R = (N^q - 1)/(N - 1): period of
// q-1 zeros followed by the digit N-1.
DigitExpansion repunit_reciprocal_expansion(const Natural& n, const Natural& q);

// Visits one full period of a purely periodic expansion (requires
// gcd(den(x), base) = 1 and 0 < x < 1), stopping early when visit returns
// false. Returns true iff the full period was visited.
bool visit_periodic_digits(const Rational& x, const Natural& base,
                           const std::function<bool(uint64_t)>& visit);

}  // namespace cantorp
