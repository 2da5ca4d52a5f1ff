#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cantorp/cantor_set.hpp"
#include "cantorp/expansion.hpp"
#include "cantorp/repunit.hpp"

using cantorp::MembershipVerdict;
using cantorp::Natural;
using cantorp::OpenInterval;
using cantorp::Rational;
using cantorp::Verdict;

TEST_CASE("removed_intervals worked examples") {
    auto iv = cantorp::removed_intervals(Natural(3), 1);
    REQUIRE(iv.size() == 1);
    CHECK(iv[0] == OpenInterval(Rational(1, 3), Rational(2, 3)));

    iv = cantorp::removed_intervals(Natural(3), 2);
    REQUIRE(iv.size() == 2);
    CHECK(iv[0] == OpenInterval(Rational(1, 9), Rational(2, 9)));
    CHECK(iv[1] == OpenInterval(Rational(7, 9), Rational(8, 9)));

    iv = cantorp::removed_intervals(Natural(4), 2);
    REQUIRE(iv.size() == 2);
    CHECK(iv[0] == OpenInterval(Rational(9, 64), Rational(15, 64)));
    CHECK(iv[1] == OpenInterval(Rational(49, 64), Rational(55, 64)));

    iv = cantorp::removed_intervals(Natural(2), 2);
    REQUIRE(iv.size() == 2);
    CHECK(iv[0] == OpenInterval(Rational(1, 16), Rational(3, 16)));
    CHECK(iv[1] == OpenInterval(Rational(13, 16), Rational(15, 16)));

    CHECK_THROWS_AS(cantorp::removed_intervals(Natural(3), 0), std::domain_error);
    CHECK_THROWS_AS(cantorp::removed_intervals(Natural(1), 1), std::domain_error);
    CHECK_THROWS_AS(cantorp::removed_intervals(Natural(3), 40), std::length_error);
}

TEST_CASE("membership worked examples") {
    MembershipVerdict v = cantorp::membership(Rational(1, 4), Natural(3));
    CHECK(v.kind == Verdict::In);
    CHECK(v.cycle_length == 2);

    v = cantorp::membership(Rational(1, 5), Natural(4), 100);
    CHECK(v.kind == Verdict::Out);
    CHECK(v.stage == 2);
    CHECK(*v.removed == OpenInterval(Rational(9, 64), Rational(15, 64)));

    v = cantorp::membership(Rational(1, 31), Natural(5), 100);
    CHECK(v.kind == Verdict::Out);
    CHECK(v.stage == 4);
    CHECK(*v.removed == OpenInterval(Rational(16, 625), Rational(24, 625)));

    for (uint64_t n : {2, 3, 4, 5}) {
        v = cantorp::membership(Rational(0), Natural(n), 10);
        CHECK(v.kind == Verdict::In);
        CHECK(v.cycle_length == 1);
        v = cantorp::membership(Rational(1), Natural(n), 10);
        CHECK(v.kind == Verdict::In);
        CHECK(v.cycle_length == 1);
    }

    v = cantorp::membership(Rational(1, 3), Natural(2), 5);
    CHECK(v.kind == Verdict::Out);
    CHECK(v.stage == 1);
    CHECK(*v.removed == OpenInterval(Rational(1, 4), Rational(3, 4)));

    CHECK_THROWS_AS(cantorp::membership(Rational(5, 4), Natural(3)), std::domain_error);
    CHECK_THROWS_AS(cantorp::membership(Rational(1, 2), Natural(1)), std::domain_error);
}

TEST_CASE("the classical endpoints survive") {
    for (auto x : {Rational(1, 3), Rational(2, 3), Rational(1, 9), Rational(2, 9),
                   Rational(7, 9), Rational(8, 9)}) {
        CHECK(cantorp::membership(x, Natural(3)).kind == Verdict::In);
        CHECK(cantorp::digit_membership(x, Natural(3)));
    }
}

TEST_CASE("digit_membership worked examples") {
    CHECK(cantorp::digit_membership(Rational(1, 13), Natural(3)));
    CHECK_FALSE(cantorp::digit_membership(Rational(1, 2), Natural(3)));
    CHECK(cantorp::digit_membership(Rational(1, 3), Natural(3)));
    CHECK_FALSE(cantorp::digit_membership(Rational(1, 7), Natural(2)));
    CHECK_THROWS_AS(cantorp::digit_membership(Rational(1, 5), Natural(4)), std::domain_error);
    CHECK_THROWS_AS(cantorp::digit_membership(Rational(1, 5), Natural(5)), std::domain_error);
}

TEST_CASE("757 is a member: digit and orbit agree") {
    // 757 * 26 = 3^9 - 1, and 26 = (222) in base 3, so 1/757 repeats
    // 000000222 and avoids the digit 1 entirely.
    CHECK(cantorp::digit_membership(Rational(1, 757), Natural(3)));
    MembershipVerdict v = cantorp::membership(Rational(1, 757), Natural(3));
    CHECK(v.kind == Verdict::In);
    CHECK(v.cycle_length == 9);
}

TEST_CASE("digit and geometric oracles agree for every a/d with d <= 150") {
    for (uint64_t n : {2, 3}) {
        for (uint64_t d = 1; d <= 150; ++d) {
            for (uint64_t a = 0; a <= d; ++a) {
                Rational x(a, d);
                bool digit = cantorp::digit_membership(x, Natural(n));
                bool geometric = cantorp::membership(x, Natural(n)).kind == Verdict::In;
                if (digit != geometric) {
                    CAPTURE(n);
                    CAPTURE(a);
                    CAPTURE(d);
                    CHECK(digit == geometric);
                }
            }
        }
    }
    CHECK(true);
}

TEST_CASE("out certificates name a real removed interval containing x") {
    for (uint64_t n : {2, 3, 4, 5}) {
        Rational gap_width(1, n);
        Rational cell_ratio(Natural(n) - Natural(1), Natural(n) * Natural(2));
        for (uint64_t d = 1; d <= 60; ++d) {
            for (uint64_t a = 0; a <= d; ++a) {
                Rational x(a, d);
                MembershipVerdict v = cantorp::membership(x, Natural(n), 64);
                if (v.kind != Verdict::Out) continue;
                REQUIRE(v.removed.has_value());
                CHECK(v.removed->contains(x));
                if (v.stage <= 12) {
                    // shallow stages: the certificate is literally one of the
                    // enumerated removed intervals
                    auto stage_intervals = cantorp::removed_intervals(Natural(n), v.stage);
                    CHECK(std::count(stage_intervals.begin(), stage_intervals.end(), *v.removed) ==
                          1);
                } else {
                    // deeper stages: check the certificate's exact width, the
                    // middle-piece gap of a stage-(s-1) cell
                    Rational width(1);
                    for (uint64_t i = 0; i + 1 < v.stage; ++i) width = width * cell_ratio;
                    CHECK(v.removed->hi - v.removed->lo == width * gap_width);
                }
            }
        }
    }
}

TEST_CASE("verdicts are stable as the depth limit grows") {
    for (uint64_t n : {4, 5, 6}) {
        for (uint64_t d = 1; d <= 40; ++d) {
            for (uint64_t a = 0; a <= d; ++a) {
                Rational x(a, d);
                MembershipVerdict shallow = cantorp::membership(x, Natural(n), 6);
                if (shallow.kind == Verdict::Unknown) continue;
                for (uint64_t limit : {30, 200}) {
                    MembershipVerdict deep = cantorp::membership(x, Natural(n), limit);
                    CHECK(deep.kind == shallow.kind);
                    CHECK(deep.stage == shallow.stage);
                    CHECK(deep.cycle_length == shallow.cycle_length);
                    if (shallow.removed) CHECK(*deep.removed == *shallow.removed);
                }
            }
        }
    }
}

TEST_CASE("every surviving cell endpoint is a member") {
    for (uint64_t n = 2; n <= 6; ++n) {
        for (uint64_t depth = 0; depth <= 6; ++depth) {
            for (const auto& [lo, hi] : cantorp::surviving_cells(Natural(n), depth)) {
                CHECK(cantorp::membership(lo, Natural(n), 500).kind == Verdict::In);
                CHECK(cantorp::membership(hi, Natural(n), 500).kind == Verdict::In);
            }
        }
    }
}

TEST_CASE("removed intervals across stages are pairwise disjoint") {
    for (uint64_t n = 2; n <= 6; ++n) {
        std::vector<OpenInterval> all;
        for (uint64_t stage = 1; stage <= 8; ++stage) {
            auto batch = cantorp::removed_intervals(Natural(n), stage);
            all.insert(all.end(), batch.begin(), batch.end());
        }
        std::sort(all.begin(), all.end(),
                  [](const OpenInterval& a, const OpenInterval& b) { return a.lo < b.lo; });
        for (size_t i = 0; i + 1 < all.size(); ++i) {
            CHECK(all[i].hi <= all[i + 1].lo);
        }
    }
}

TEST_CASE("membership is symmetric under x -> 1 - x") {
    for (uint64_t n : {2, 3}) {
        for (uint64_t d = 1; d <= 200; ++d) {
            for (uint64_t a = 0; a <= d; ++a) {
                auto v1 = cantorp::membership(Rational(a, d), Natural(n));
                auto v2 = cantorp::membership(Rational(d - a, d), Natural(n));
                CHECK(v1.kind == v2.kind);
                if (v1.kind == Verdict::Out) CHECK(v1.stage == v2.stage);
            }
        }
    }
    for (uint64_t n : {4, 5}) {
        for (uint64_t d = 1; d <= 60; ++d) {
            for (uint64_t a = 0; a <= d; ++a) {
                auto v1 = cantorp::membership(Rational(a, d), Natural(n), 300);
                auto v2 = cantorp::membership(Rational(d - a, d), Natural(n), 300);
                CHECK(v1.kind == v2.kind);
                if (v1.kind == Verdict::Out) CHECK(v1.stage == v2.stage);
            }
        }
    }
}

TEST_CASE("orbit trace tracks the cell exactly") {
    std::mt19937_64 rng(55);
    for (uint64_t n : {2, 3, 4, 5}) {
        for (int i = 0; i < 25; ++i) {
            uint64_t d = 1 + rng() % 400;
            uint64_t a = rng() % (d + 1);
            Rational x(a, d);
            auto trace = cantorp::orbit_trace(x, Natural(n), 18);
            REQUIRE(!trace.empty());
            Rational ratio(Natural(n) - Natural(1), Natural(n) * Natural(2));
            Rational width(1);
            for (const auto& state : trace) {
                CHECK(state.cell_hi - state.cell_lo == width);
                CHECK(state.position * (state.cell_hi - state.cell_lo) + state.cell_lo == x);
                width = width * ratio;
            }
        }
    }
}

TEST_CASE("membership through the generic big-number path") {
    // 1/R for the composite repunit R = (3^50 - 1)/2: the expansion repeats
    // 49 zeros then 2, so 1/R is a member even though R is composite. The
    // denominator exceeds machine words, exercising the raw-fraction orbit.
    Natural r = cantorp::repunit_value(Natural(3), Natural(50));
    MembershipVerdict v = cantorp::membership(Rational(Natural(1), r), Natural(3));
    CHECK(v.kind == Verdict::In);
    CHECK(v.cycle_length == 50);
    CHECK(cantorp::digit_membership(Rational(Natural(1), r), Natural(3)));
}

TEST_CASE("unknown is reported honestly for n >= 4") {
    MembershipVerdict v = cantorp::membership(Rational(1, 11), Natural(10), 10);
    CHECK(v.kind == Verdict::Unknown);
    CHECK(v.depth_reached == 10);
}
