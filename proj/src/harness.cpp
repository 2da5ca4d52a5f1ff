#include "cantorp/harness.hpp"

#include <algorithm>
#include <thread>

#include "cantorp/expansion.hpp"
#include "cantorp/primality.hpp"
#include "cantorp/primes.hpp"
#include "cantorp/repunit.hpp"

namespace cantorp {

namespace {

OracleRow evaluate_prime(uint64_t p) {
    OracleRow row;
    row.p = p;
    Rational x(1, p);
    row.digit = digit_membership(x, Natural(3));
    row.geometric = membership(x, Natural(3), kNoDepthLimit).kind == Verdict::In;
    SieveTrace trace = run_sieve(Natural(p));
    row.sieve_accept = trace.accepted();
    auto q = solve_repunit_form(Natural(p), Natural(3));
    if (q && is_prime(*q).passed()) {
        row.closed_form = true;
        row.q = q->to_u64();
    }
    return row;
}

}  // namespace

VerificationReport verify_theorem(uint64_t p_max, unsigned jobs, bool keep_rows) {
    auto start = std::chrono::steady_clock::now();
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    std::vector<uint64_t> primes;
    for_each_prime(p_max, [&](uint64_t p) {
        if (p > 3) primes.push_back(p);
    });

    VerificationReport report;
    report.p_max = p_max;
    report.primes_checked = primes.size();

    size_t chunk_count = std::min<size_t>(jobs, std::max<size_t>(primes.size(), 1));
    std::vector<std::vector<OracleRow>> chunk_rows(chunk_count);
    std::vector<std::thread> workers;
    size_t per_chunk = (primes.size() + chunk_count - 1) / chunk_count;
    for (size_t c = 0; c < chunk_count; ++c) {
        workers.emplace_back([&, c] {
            size_t begin = c * per_chunk;
            size_t end = std::min(primes.size(), begin + per_chunk);
            auto& local = chunk_rows[c];
            local.reserve(end - begin);
            for (size_t i = begin; i < end; ++i) local.push_back(evaluate_prime(primes[i]));
        });
    }
    for (auto& w : workers) w.join();

    for (auto& local : chunk_rows) {
        for (auto& row : local) {
            if (!row.agreed()) {
                report.disagreements.push_back(row);
            } else if (row.member()) {
                report.cantor_primes.emplace_back(row.p, row.q);
            }
            if (keep_rows) report.rows.push_back(row);
        }
    }
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

namespace {

void add_claim(ReproduceReport& report, std::string name, bool pass, std::string detail = "") {
    report.all_pass = report.all_pass && pass;
    report.claims.push_back({std::move(name), pass, std::move(detail)});
}

bool out_at(const Rational& x, uint64_t n, uint64_t stage, const Rational& lo, const Rational& hi) {
    MembershipVerdict v = membership(x, Natural(n), kNoDepthLimit);
    return v.kind == Verdict::Out && v.stage == stage && v.removed &&
           v.removed->lo == lo && v.removed->hi == hi;
}

}  // namespace

ReproduceReport reproduce_construction_facts() {
    ReproduceReport report;

    for (uint64_t p : {5, 7, 17, 19, 23, 41, 43, 47}) {
        Natural pn(p);
        bool no_power = !power_of_3_in(OpenInterval(Rational(2 * p), Rational(3 * p))).has_value();
        SieveTrace t = run_sieve(pn);
        bool pass = no_power && !t.accepted() && t.reject().at_step == 1;
        add_claim(report, "first-stage exclusion p=" + std::to_string(p), pass,
                  "no power of 3 in (2p, 3p)");
    }

    for (uint64_t p : {37, 113, 331, 337, 353, 991, 997, 1009}) {
        SieveTrace t = run_sieve(Natural(p));
        bool pass = !t.accepted() && t.steps.size() == 1 && t.reject().at_step == 2;
        add_claim(report, "second-stage exclusion p=" + std::to_string(p), pass,
                  "passes (2p, 3p) but fails the nested condition");
    }

    struct MersenneCase {
        uint64_t p, stage;
        Rational lo, hi;
    };
    const MersenneCase mersenne[] = {
        {3, 1, Rational(1, 4), Rational(3, 4)},
        {7, 2, Rational(1, 16), Rational(3, 16)},
        {31, 3, Rational(1, 64), Rational(3, 64)},
        {127, 4, Rational(1, 256), Rational(3, 256)},
    };
    for (const auto& c : mersenne) {
        bool removed = out_at(Rational(1, c.p), 2, c.stage, c.lo, c.hi);
        bool digit_out = !digit_membership(Rational(1, c.p), Natural(2));
        add_claim(report, "1/" + std::to_string(c.p) + " removed from C_2 at stage " +
                              std::to_string(c.stage),
                  removed && digit_out,
                  "(" + c.lo.to_string() + ", " + c.hi.to_string() + ")");
    }

    add_claim(report, "1/5 removed from C_4 at stage 2",
              out_at(Rational(1, 5), 4, 2, Rational(9, 64), Rational(15, 64)), "(9/64, 15/64)");
    add_claim(report, "1/31 removed from C_5 at stage 4",
              out_at(Rational(1, 31), 5, 4, Rational(16, 625), Rational(24, 625)),
              "(16/625, 24/625)");

    {
        MembershipVerdict v = membership(Rational(1, 4), Natural(3), kNoDepthLimit);
        add_claim(report, "1/4 is in C_3", v.kind == Verdict::In && v.cycle_length == 2,
                  "orbit 1/4 -> 3/4 -> 1/4; 2*4 + 1 = 3^2");
    }

    struct RepunitCase {
        uint64_t n, q, value;
        bool prime;
    };
    const RepunitCase repunits[] = {
        {2, 5, 31, true}, {3, 2, 4, false}, {5, 3, 31, true}, {4, 2, 5, true}};
    for (const auto& c : repunits) {
        Natural v = repunit_value(Natural(c.n), Natural(c.q));
        bool pass = v == Natural(c.value) &&
                    (is_prime(v).kind == Primality::Prime) == c.prime;
        add_claim(report,
                  "repunit value (" + std::to_string(c.n) + ", " + std::to_string(c.q) + ")",
                  pass, "value " + std::to_string(c.value));
    }

    const std::pair<uint64_t, uint64_t> accepts[] = {{13, 3}, {1093, 7}};
    for (auto [p, q] : accepts) {
        SieveTrace t = run_sieve(Natural(p));
        bool pass = t.accepted() && t.accept().q == q && t.accept().at_step == 1;
        add_claim(report, "sieve accepts p=" + std::to_string(p), pass,
                  "2p + 1 = 3^" + std::to_string(q));
    }

    return report;
}

ConjectureScan scan_conjecture(uint64_t n, uint64_t q_max, uint64_t depth_limit,
                               uint64_t reverse_bound) {
    if (n < 2) throw std::domain_error("Cantor set parameter must be at least 2");
    ConjectureScan scan;
    scan.n = n;
    scan.q_max = q_max;
    scan.depth_limit = depth_limit;
    scan.reverse_bound = reverse_bound;

    for (const auto& c : enumerate_repunit_primes(Natural(n), q_max)) {
        ConjectureScanRow row;
        row.n = n;
        row.q = c.exponent.to_u64();
        row.value = c.value;
        row.repunit_prime = true;
        row.probable = c.verdict.kind == Primality::ProbablePrime;
        row.membership = membership(Rational(Natural(1), c.value), Natural(n), depth_limit);
        scan.rows.push_back(std::move(row));
    }

    for_each_prime(reverse_bound, [&](uint64_t d) {
        auto q = solve_repunit_form(Natural(d), Natural(n));
        if (q && is_prime(*q).passed()) return;  // a repunit prime: not a reverse probe
        MembershipVerdict v = membership(Rational(1, d), Natural(n), depth_limit);
        if (v.kind == Verdict::Out) return;
        scan.reverse_probe.push_back({d, std::move(v)});
    });

    return scan;
}

}  // namespace cantorp
