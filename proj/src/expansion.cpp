#include "cantorp/expansion.hpp"

#include <stdexcept>

namespace cantorp {

namespace {

void check_expand_args(const Rational& x, const Natural& base) {
    if (base < Natural(2)) throw std::domain_error("base must be at least 2");
    if (!base.fits_u64()) throw std::length_error("base too large for digit storage");
    if (x > Rational(1)) throw std::domain_error("expansion requires x in [0, 1]");
}

// Long-division digit machine over machine words.
struct WordDivision {
    uint64_t base, den;
    uint64_t next(uint64_t r) const { return r * base % den; }
    uint64_t digit(uint64_t r) const { return r * base / den; }
};

// Same machine over Naturals, for denominators or bases beyond words.
struct BigDivision {
    Natural base, den;
    Natural next(const Natural& r) const { return r * base % den; }
    uint64_t digit(const Natural& r) const { return (r * base / den).to_u64(); }
};

// Floyd cycle detection on the remainder map; fills the canonical
// preperiod/period digit lists. The remainder sequence enters its cycle
// exactly at the minimal digit preperiod, and its minimal cycle length is
// the primitive digit period, so the canonical form falls out directly.
// Gives up (returns false) once the map has been applied step_budget times,
// for callers probing whether an expansion is short.
template <class Div, class State>
bool fill_digits(const Div& f, State r0, std::vector<uint64_t>& pre, std::vector<uint64_t>& per,
                 uint64_t step_budget) {
    // The budget applies to the meeting phase: once tortoise and hare meet,
    // the remaining phases are bounded by mu + lambda and always finish.
    uint64_t budget = step_budget;
    State tort = f.next(r0);
    State hare = f.next(tort);
    while (tort != hare) {
        if (budget == 0) return false;
        --budget;
        tort = f.next(tort);
        hare = f.next(f.next(hare));
    }
    size_t mu = 0;
    tort = r0;
    while (tort != hare) {
        tort = f.next(tort);
        hare = f.next(hare);
        ++mu;
    }
    size_t lambda = 1;
    hare = f.next(tort);
    while (tort != hare) {
        hare = f.next(hare);
        ++lambda;
    }
    State r = r0;
    pre.reserve(mu);
    per.reserve(lambda);
    for (size_t i = 0; i < mu; ++i) {
        pre.push_back(f.digit(r));
        r = f.next(r);
    }
    for (size_t i = 0; i < lambda; ++i) {
        per.push_back(f.digit(r));
        r = f.next(r);
    }
    return true;
}

// The all-zero one-digit period marks a finite expansion (the remainder hit
// the zero fixed point); no other cycle can consist of zero digits.
void canonicalize_terminating(std::vector<uint64_t>& pre, std::vector<uint64_t>& per) {
    if (per.size() == 1 && per[0] == 0) {
        per.clear();
        while (!pre.empty() && pre.back() == 0) pre.pop_back();
    }
}

Natural horner(const std::vector<uint64_t>& digits, const Natural& base) {
    Natural v;
    for (uint64_t d : digits) {
        v = v * base + Natural(d);
    }
    return v;
}

// Smallest-denominator rational in the closed interval [lo, hi]
// (Stern-Brocot walk).
Rational simplest_between(Rational lo, Rational hi) {
    std::vector<Natural> terms;
    Rational final_value;
    while (true) {
        Natural fl = lo.num() / lo.den();
        Natural ceil_lo = lo.is_integer() ? fl : fl + Natural(1);
        if (Rational(ceil_lo) <= hi) {
            final_value = Rational(ceil_lo);
            break;
        }
        terms.push_back(fl);
        Rational lo_frac = lo - Rational(fl);
        Rational hi_frac = hi - Rational(fl);
        lo = Rational(1) / hi_frac;
        hi = Rational(1) / lo_frac;
    }
    for (size_t i = terms.size(); i-- > 0;) {
        final_value = Rational(terms[i]) + Rational(1) / final_value;
    }
    return final_value;
}

}  // namespace

namespace {

std::optional<DigitExpansion> expand_bounded(const Rational& x, const Natural& base,
                                             uint64_t step_budget) {
    check_expand_args(x, base);
    DigitExpansion e{base, {}, {}};
    if (x.is_zero()) return e;
    if (x == Rational(1)) {
        e.period.push_back((base - Natural(1)).to_u64());
        return e;
    }
    const Natural& den = x.den();
    uint64_t b = base.to_u64();
    bool done;
    if (den.fits_u64() && den.to_u64() <= UINT64_MAX / b) {
        WordDivision f{b, den.to_u64()};
        done = fill_digits(f, x.num().to_u64(), e.preperiod, e.period, step_budget);
    } else {
        BigDivision f{base, den};
        done = fill_digits(f, x.num(), e.preperiod, e.period, step_budget);
    }
    if (!done) return std::nullopt;
    canonicalize_terminating(e.preperiod, e.period);
    return e;
}

}  // namespace

DigitExpansion expand(const Rational& x, const Natural& base) {
    return *expand_bounded(x, base, UINT64_MAX);
}

Rational reconstruct(const DigitExpansion& e) {
    if (e.base < Natural(2)) throw std::domain_error("base must be at least 2");
    if (!e.base.fits_u64()) throw std::length_error("base too large for digit storage");
    uint64_t b = e.base.to_u64();
    for (uint64_t d : e.preperiod)
        if (d >= b) throw std::domain_error("malformed digit");
    for (uint64_t d : e.period)
        if (d >= b) throw std::domain_error("malformed digit");

    size_t m = e.preperiod.size();
    if (m + e.period.size() == 0) return Rational();

    if (!e.period.empty()) {
        // Fast path: locate the value as the simplest rational consistent
        // with a digit prefix, then confirm by re-expansion. Succeeds for
        // canonical input once the prefix length exceeds roughly twice the
        // digit count of the true denominator, so the cost stays linear in
        // the period length however long the period is.
        // A wrong candidate can have an astronomically long expansion, so
        // the confirming re-expansion runs under a step budget sized for
        // the true answer and gives up quickly on impostors.
        const uint64_t budget = 4 * uint64_t(m + e.period.size()) + 64;
        for (size_t k = 32; k <= 256; k *= 2) {
            Natural a;
            for (size_t i = 0; i < k; ++i) {
                uint64_t d = i < m ? e.preperiod[i] : e.period[(i - m) % e.period.size()];
                a = a * e.base + Natural(d);
            }
            Natural scale = pow(e.base, Natural(k));
            Rational lo(a, scale);
            Rational hi(a + Natural(1), scale);
            Rational candidate = simplest_between(lo, hi);
            if (candidate > Rational(1)) continue;
            auto confirmed = expand_bounded(candidate, e.base, budget);
            if (confirmed && *confirmed == e) return candidate;
        }
    }

    // General path (all finite expansions, and periodic input that is not
    // canonical): evaluate the geometric sum directly. Cost grows with the
    // square of the digit count.
    Natural a = horner(e.preperiod, e.base);
    Natural bm = pow(e.base, Natural(uint64_t(m)));
    if (e.period.empty()) return Rational(a, bm);
    Natural p = horner(e.period, e.base);
    Natural cycle = pow(e.base, Natural(uint64_t(e.period.size()))) - Natural(1);
    return Rational(a * cycle + p, bm * cycle);
}

std::optional<DigitExpansion> alternate_representation(const DigitExpansion& e) {
    if (!e.period.empty() || e.preperiod.empty()) return std::nullopt;
    if (e.preperiod.back() == 0) return std::nullopt;  // not a canonical form
    DigitExpansion alt = e;
    alt.preperiod.back() -= 1;
    alt.period.push_back((e.base - Natural(1)).to_u64());
    return alt;
}

DigitExpansion repunit_reciprocal_expansion(const Natural& n, const Natural& q) {
    if (n < Natural(2)) throw std::domain_error("repunit base must be at least 2");
    if (q.is_zero()) throw std::domain_error("repunit exponent must be at least 1");
    if (!n.fits_u64()) throw std::length_error("base too large for digit storage");
    if (!q.fits_u64() || q.to_u64() > 10'000'000) throw std::length_error("exponent too large");
    DigitExpansion e{n, {}, {}};
    e.period.assign(q.to_u64() - 1, 0);
    e.period.push_back((n - Natural(1)).to_u64());
    return e;
}

bool visit_periodic_digits(const Rational& x, const Natural& base,
                           const std::function<bool(uint64_t)>& visit) {
    check_expand_args(x, base);
    if (x.is_zero() || x == Rational(1) || !gcd(x.den(), base).is_one())
        throw std::domain_error("not a purely periodic expansion");
    const Natural& den = x.den();
    uint64_t b = base.to_u64();
    if (den.fits_u64() && den.to_u64() <= UINT64_MAX / b) {
        WordDivision f{b, den.to_u64()};
        uint64_t start = x.num().to_u64();
        uint64_t r = start;
        do {
            if (!visit(f.digit(r))) return false;
            r = f.next(r);
        } while (r != start);
        return true;
    }
    BigDivision f{base, den};
    const Natural& start = x.num();
    Natural r = start;
    do {
        if (!visit(f.digit(r))) return false;
        r = f.next(r);
    } while (r != start);
    return true;
}

}  // namespace cantorp
