#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cantorp/rational.hpp"

namespace cantorp {

// One removed interval: open, with both endpoints in [0, 1].
struct OpenInterval {
    Rational lo, hi;

    OpenInterval(Rational l, Rational h);  // requires l < h
    bool contains(const Rational& x) const { return lo < x && x < hi; }

    friend bool operator==(const OpenInterval& a, const OpenInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

enum class Verdict { In, Out, Unknown };

struct MembershipVerdict {
    Verdict kind = Verdict::Unknown;
    uint64_t cycle_length = 0;            // In: orbit repeats after this many descents
    uint64_t stage = 0;                   // Out: construction stage of the removed interval
    std::optional<OpenInterval> removed;  // Out: the exact removed interval containing x
    uint64_t depth_reached = 0;           // Unknown: descents performed before giving up

    static MembershipVerdict in(uint64_t cycle_length);
    static MembershipVerdict out(uint64_t stage, OpenInterval removed);
    static MembershipVerdict unknown(uint64_t depth_reached);
};

inline constexpr uint64_t kDefaultDepthLimit = 10000;
inline constexpr uint64_t kNoDepthLimit = UINT64_MAX;
inline constexpr uint64_t kDefaultIntervalCap = uint64_t(1) << 20;

// The 2^(stage-1) open intervals removed at the given stage (>= 1) of the
// C_n construction, in increasing order. Throws std::length_error when the
// output would exceed cap entries.
std::vector<OpenInterval> removed_intervals(const Natural& n, uint64_t stage,
                                            uint64_t cap = kDefaultIntervalCap);

// The 2^depth closed cells surviving after `depth` removal rounds, in
// increasing order, as (lo, hi) pairs.
std::vector<std::pair<Rational, Rational>> surviving_cells(const Natural& n, uint64_t depth,
                                                           uint64_t cap = kDefaultIntervalCap);

// Decides x in C_n by iterating the interval orbit. Gap endpoints survive
// (the cells are closed); a position equal to (n-1)/(2n) descends left, one
// equal to (n+1)/(2n) descends right. For n in {2, 3} the rescale factor is
// an integer, orbit positions live on a fixed denominator grid, and the
// procedure always decides (depth_limit is not consulted). For n >= 4 the
// verdict is Unknown once depth_limit descents pass without a removal or an
// exact orbit repeat.
MembershipVerdict membership(const Rational& x, const Natural& n,
                             uint64_t depth_limit = kDefaultDepthLimit);

// Digit characterization, valid only for n in {2, 3}: true iff some base-s
// representation of x, s = 2n/(n-1), uses only the digits {0, s-1}. Checks
// the canonical expansion and, for terminating ones, the alternate form.
bool digit_membership(const Rational& x, const Natural& n);

// Orbit prefix with full state, for inspection: position normalized to the
// current cell, the cell in absolute coordinates, and the depth. The trace
// stops after max_steps descents or when the position falls in the gap.
struct OrbitState {
    Rational position;
    Rational cell_lo;
    Rational cell_hi;
    uint64_t depth = 0;
};
std::vector<OrbitState> orbit_trace(const Rational& x, const Natural& n, uint64_t max_steps);

}  // namespace cantorp
