#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorp/harness.hpp"
#include "cantorp/json_io.hpp"

using cantorp::Natural;
using cantorp::Rational;
using cantorp::Verdict;

TEST_CASE("verify_theorem on tiny ranges") {
    auto report = cantorp::verify_theorem(12, 1);
    CHECK(report.primes_checked == 3);  // 5, 7, 11
    CHECK(report.cantor_primes.empty());
    CHECK(report.clean());

    report = cantorp::verify_theorem(13, 1);
    REQUIRE(report.cantor_primes.size() == 1);
    CHECK(report.cantor_primes[0].first == 13);
    CHECK(report.cantor_primes[0].second == 3);
    CHECK(report.clean());
}

TEST_CASE("verify_theorem surfaces the genuine disagreement at 757") {
    auto report = cantorp::verify_theorem(2000, 2);
    REQUIRE(report.cantor_primes.size() == 2);
    CHECK(report.cantor_primes[0] == std::pair<uint64_t, uint64_t>{13, 3});
    CHECK(report.cantor_primes[1] == std::pair<uint64_t, uint64_t>{1093, 7});
    REQUIRE(report.disagreements.size() == 1);
    const auto& row = report.disagreements[0];
    CHECK(row.p == 757);
    CHECK(row.digit);
    CHECK(row.geometric);
    CHECK(row.sieve_accept);
    CHECK_FALSE(row.closed_form);
}

TEST_CASE("the three membership oracles always agree; the closed form is one-sided") {
    auto report = cantorp::verify_theorem(30000, 0, true);
    for (const auto& row : report.rows) {
        CHECK(row.digit == row.geometric);
        CHECK(row.digit == row.sieve_accept);
        if (row.closed_form) CHECK(row.digit);
    }
}

TEST_CASE("reports are deterministic across worker counts") {
    auto a = cantorp::verify_theorem(10000, 1);
    auto b = cantorp::verify_theorem(10000, 3);
    auto ja = cantorp::to_json(a, false);
    auto jb = cantorp::to_json(b, false);
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("reproduce_construction_facts passes every claim") {
    auto report = cantorp::reproduce_construction_facts();
    for (const auto& claim : report.claims) {
        CAPTURE(claim.name);
        CHECK(claim.pass);
    }
    CHECK(report.all_pass);
    CHECK(report.claims.size() >= 26);
}

TEST_CASE("scan_conjecture worked examples") {
    auto scan = cantorp::scan_conjecture(4, 2, 100, 0);
    REQUIRE(scan.rows.size() == 1);
    CHECK(scan.rows[0].q == 2);
    CHECK(scan.rows[0].value == Natural(5));
    CHECK(scan.rows[0].repunit_prime);
    CHECK_FALSE(scan.rows[0].probable);
    CHECK(scan.rows[0].membership.kind == Verdict::Out);
    CHECK(scan.rows[0].membership.stage == 2);

    scan = cantorp::scan_conjecture(5, 3, 100, 0);
    REQUIRE(scan.rows.size() == 1);
    CHECK(scan.rows[0].value == Natural(31));
    CHECK(scan.rows[0].membership.kind == Verdict::Out);
    CHECK(scan.rows[0].membership.stage == 4);

    scan = cantorp::scan_conjecture(3, 13, 100, 0);
    REQUIRE(scan.rows.size() == 3);
    for (const auto& row : scan.rows) CHECK(row.membership.kind == Verdict::In);
}

TEST_CASE("base-3 repunit-prime reciprocals are never removed") {
    auto scan = cantorp::scan_conjecture(3, 19, 64, 0);
    for (const auto& row : scan.rows) {
        CHECK(row.membership.kind != Verdict::Out);
        CHECK(row.membership.kind == Verdict::In);
    }
}

TEST_CASE("reverse probe lists members that are not repunit primes") {
    auto scan = cantorp::scan_conjecture(3, 3, 200, 20);
    bool found3 = false;
    for (const auto& row : scan.reverse_probe) {
        CHECK(row.membership.kind != Verdict::Out);
        if (row.d == 3) found3 = true;  // 1/3 is the cell endpoint, a member
        CHECK(row.d != 13);             // 13 is a repunit prime, excluded
    }
    CHECK(found3);
}

TEST_CASE("unknown verdicts stay unknown in scan rows") {
    auto scan = cantorp::scan_conjecture(10, 2, 8, 0);
    REQUIRE(scan.rows.size() == 1);
    CHECK(scan.rows[0].value == Natural(11));
    CHECK(scan.rows[0].membership.kind == Verdict::Unknown);
}
