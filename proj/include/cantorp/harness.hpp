#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "cantorp/cantor_set.hpp"
#include "cantorp/exclusion_sieve.hpp"

namespace cantorp {

// The four independent decisions for one prime p: ternary digit
// characterization of 1/p, geometric orbit membership of 1/p in C_3,
// exclusion-sieve acceptance, and the closed form 2p + 1 = 3^q with q
// prime. The first three compute set membership and always agree; the
// closed form is strictly stronger (p = 757 is a member without it).
struct OracleRow {
    uint64_t p = 0;
    bool digit = false;
    bool geometric = false;
    bool sieve_accept = false;
    bool closed_form = false;
    uint64_t q = 0;  // closed-form exponent when closed_form holds

    bool agreed() const {
        return digit == geometric && digit == sieve_accept && digit == closed_form;
    }
    bool member() const { return digit; }
};

struct VerificationReport {
    uint64_t p_max = 0;
    uint64_t primes_checked = 0;
    std::vector<std::pair<uint64_t, uint64_t>> cantor_primes;  // (p, q), all four agreeing
    std::vector<OracleRow> disagreements;
    std::chrono::milliseconds elapsed{0};
    std::vector<OracleRow> rows;  // per-prime rows, only when requested

    bool clean() const { return disagreements.empty(); }
};

// Cross-checks all four oracles for every prime 3 < p <= p_max, sharded
// over `jobs` workers (0 = hardware concurrency) with a deterministic
// ordered merge. keep_rows retains one row per prime for CSV export.
VerificationReport verify_theorem(uint64_t p_max, unsigned jobs = 0, bool keep_rows = false);

struct ClaimResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReproduceReport {
    std::vector<ClaimResult> claims;
    bool all_pass = true;
};

// Re-derives every concrete number cited for the construction: both
// exclusion lists, the Mersenne-reciprocal removals from C_2, the removals
// of 1/5 from C_4 and 1/31 from C_5, 1/4 in C_3, and the small repunit
// values with their primality.
ReproduceReport reproduce_construction_facts();

struct ConjectureScanRow {
    uint64_t n = 0;
    uint64_t q = 0;
    Natural value;
    bool repunit_prime = false;
    bool probable = false;
    MembershipVerdict membership;
};

// Reverse-direction probe: a prime denominator d that is not a base-n
// repunit prime, with the verdict for 1/d.
struct ReverseProbeRow {
    uint64_t d = 0;
    MembershipVerdict membership;
};

struct ConjectureScan {
    uint64_t n = 0;
    uint64_t q_max = 0;
    uint64_t depth_limit = 0;
    uint64_t reverse_bound = 0;
    std::vector<ConjectureScanRow> rows;
    std::vector<ReverseProbeRow> reverse_probe;
};

inline constexpr uint64_t kDefaultReverseBound = 200;

// For each prime q <= q_max with (n^q - 1)/(n - 1) prime, decides whether
// the reciprocal of that repunit lies in C_n; rows with verdict Out are
// counterexamples to "repunit prime implies membership" for that n. The
// reverse probe lists prime d <= reverse_bound that are not repunit primes
// yet get In (or Unknown) verdicts.
ConjectureScan scan_conjecture(uint64_t n, uint64_t q_max, uint64_t depth_limit,
                               uint64_t reverse_bound = kDefaultReverseBound);

}  // namespace cantorp
