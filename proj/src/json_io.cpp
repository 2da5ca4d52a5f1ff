#include "cantorp/json_io.hpp"

namespace cantorp {

const char* primality_label(Primality kind) {
    switch (kind) {
        case Primality::Prime: return "prime";
        case Primality::ProbablePrime: return "probable_prime";
        case Primality::Composite: return "composite";
    }
    return "composite";
}

const char* verdict_label(Verdict kind) {
    switch (kind) {
        case Verdict::In: return "in";
        case Verdict::Out: return "out";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

Json to_json(const DigitExpansion& e) {
    Json j;
    if (e.base.fits_u64())
        j["base"] = e.base.to_u64();
    else
        j["base"] = e.base.to_decimal();
    j["preperiod"] = e.preperiod;
    j["period"] = e.period;
    return j;
}

Json to_json(const OpenInterval& interval) {
    return Json::array({interval.lo.to_string(), interval.hi.to_string()});
}

Json to_json(const MembershipVerdict& v) {
    Json j;
    j["kind"] = verdict_label(v.kind);
    switch (v.kind) {
        case Verdict::In:
            j["cycle_length"] = v.cycle_length;
            break;
        case Verdict::Out:
            j["stage"] = v.stage;
            j["interval"] = to_json(*v.removed);
            break;
        case Verdict::Unknown:
            j["depth_reached"] = v.depth_reached;
            break;
    }
    return j;
}

Json to_json(const SieveTrace& trace) {
    Json j;
    j["p"] = trace.p.to_decimal();
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        Json step;
        step["n"] = s.n;
        step["k"] = s.k;
        step["D"] = s.d_value.to_decimal();
        step["interval"] = to_json(s.interval);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    if (trace.accepted()) {
        const auto& a = trace.accept();
        j["outcome"] = Json{{"accept_q", a.q}, {"at_step", a.at_step}, {"period", a.period}};
    } else {
        j["outcome"] = Json{{"reject_at", trace.reject().at_step}};
    }
    return j;
}

Json to_json(const RepunitCandidate& candidate) {
    Json j;
    j["N"] = candidate.base.fits_u64() ? Json(candidate.base.to_u64())
                                       : Json(candidate.base.to_decimal());
    j["q"] = candidate.exponent.to_u64();
    j["value"] = candidate.value.to_decimal();
    j["primality"] = primality_label(candidate.verdict.kind);
    if (candidate.verdict.witness) j["factor"] = candidate.verdict.witness->to_decimal();
    return j;
}

Json to_json(const OracleRow& row) {
    Json j;
    j["p"] = std::to_string(row.p);
    j["digit"] = row.digit;
    j["geometric"] = row.geometric;
    j["sieve"] = row.sieve_accept;
    j["closed_form"] = row.closed_form;
    return j;
}

Json to_json(const VerificationReport& report, bool include_rows) {
    Json j;
    j["p_max"] = report.p_max;
    j["primes_checked"] = report.primes_checked;
    Json found = Json::array();
    for (const auto& [p, q] : report.cantor_primes)
        found.push_back(Json{{"p", std::to_string(p)}, {"q", q}});
    j["cantor_primes"] = std::move(found);
    Json dis = Json::array();
    for (const auto& row : report.disagreements) dis.push_back(to_json(row));
    j["disagreements"] = std::move(dis);
    if (include_rows) {
        Json rows = Json::array();
        for (const auto& row : report.rows) rows.push_back(to_json(row));
        j["rows"] = std::move(rows);
    }
    j["elapsed_ms"] = report.elapsed.count();
    return j;
}

Json to_json(const ReproduceReport& report) {
    Json j;
    Json claims = Json::array();
    for (const auto& c : report.claims) {
        Json claim;
        claim["name"] = c.name;
        claim["pass"] = c.pass;
        if (!c.detail.empty()) claim["detail"] = c.detail;
        claims.push_back(std::move(claim));
    }
    j["claims"] = std::move(claims);
    j["all_pass"] = report.all_pass;
    return j;
}

Json to_json(const ConjectureScan& scan) {
    Json j;
    j["N"] = scan.n;
    j["q_max"] = scan.q_max;
    j["depth_limit"] = scan.depth_limit;
    Json rows = Json::array();
    for (const auto& row : scan.rows) {
        Json r;
        r["N"] = row.n;
        r["q"] = row.q;
        r["value"] = row.value.to_decimal();
        r["repunit_prime"] = row.repunit_prime;
        r["probable"] = row.probable;
        r["membership"] = to_json(row.membership);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    Json reverse;
    reverse["bound"] = scan.reverse_bound;
    Json rrows = Json::array();
    for (const auto& row : scan.reverse_probe) {
        Json r;
        r["d"] = std::to_string(row.d);
        r["membership"] = to_json(row.membership);
        rrows.push_back(std::move(r));
    }
    reverse["rows"] = std::move(rrows);
    j["reverse_probe"] = std::move(reverse);
    return j;
}

}  // namespace cantorp
