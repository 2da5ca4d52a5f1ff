#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cantorp/json_io.hpp"
#include "cantorp/primality.hpp"

namespace {

using cantorp::Json;
using cantorp::Natural;
using cantorp::Rational;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitUndecided = 3;

enum class Format { Json, Csv, Plain };

struct GlobalOptions {
    Format format = Format::Json;
    uint64_t depth_limit = cantorp::kDefaultDepthLimit;
    unsigned jobs = 0;
};

uint64_t env_depth_limit() {
    const char* env = std::getenv("CANTOR_DEPTH_LIMIT");
    if (!env) return cantorp::kDefaultDepthLimit;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw CLI::ValidationError("CANTOR_DEPTH_LIMIT", "must be a positive integer");
    return v;
}

void emit(const Json& payload) {
    Json j;
    j["schema"] = 1;
    j.update(payload);
    std::cout << j.dump() << "\n";
}

std::string plain_verdict(const cantorp::MembershipVerdict& v) {
    using cantorp::Verdict;
    switch (v.kind) {
        case Verdict::In:
            return "in cycle_length=" + std::to_string(v.cycle_length);
        case Verdict::Out:
            return "out stage=" + std::to_string(v.stage) + " interval=(" +
                   v.removed->lo.to_string() + ", " + v.removed->hi.to_string() + ")";
        case Verdict::Unknown:
            return "unknown depth_reached=" + std::to_string(v.depth_reached);
    }
    return "unknown";
}

int run_expand(const GlobalOptions& g, const std::string& x_str, uint64_t base) {
    Rational x = Rational::from_string(x_str);
    cantorp::DigitExpansion e = cantorp::expand(x, Natural(base));
    if (g.format == Format::Csv)
        throw CLI::ValidationError("--format", "csv is not available for expand");
    if (g.format == Format::Plain) {
        std::cout << "x=" << x.to_string() << " base=" << base << " preperiod=[";
        for (size_t i = 0; i < e.preperiod.size(); ++i)
            std::cout << (i ? "," : "") << e.preperiod[i];
        std::cout << "] period=[";
        for (size_t i = 0; i < e.period.size(); ++i) std::cout << (i ? "," : "") << e.period[i];
        std::cout << "]\n";
        return kExitOk;
    }
    Json j;
    j["x"] = x.to_string();
    j.update(cantorp::to_json(e));
    emit(j);
    return kExitOk;
}

int run_member(const GlobalOptions& g, const std::string& x_str, uint64_t n) {
    Rational x = Rational::from_string(x_str);
    cantorp::MembershipVerdict v = cantorp::membership(x, Natural(n), g.depth_limit);
    if (g.format == Format::Csv)
        throw CLI::ValidationError("--format", "csv is not available for member");
    if (g.format == Format::Plain) {
        std::cout << "x=" << x.to_string() << " N=" << n << " " << plain_verdict(v) << "\n";
        return kExitOk;
    }
    Json j;
    j["x"] = x.to_string();
    j["n"] = n;
    j.update(cantorp::to_json(v));
    emit(j);
    return kExitOk;
}

int run_repunit(const GlobalOptions& g, uint64_t n, uint64_t q_max, bool include_composite) {
    auto candidates = include_composite ? cantorp::enumerate_repunit_candidates(Natural(n), q_max)
                                        : cantorp::enumerate_repunit_primes(Natural(n), q_max);
    if (g.format == Format::Csv) {
        std::cout << "N,q,value,primality\n";
        for (const auto& c : candidates)
            std::cout << c.base.to_decimal() << "," << c.exponent.to_decimal() << ","
                      << c.value.to_decimal() << "," << cantorp::primality_label(c.verdict.kind)
                      << "\n";
        return kExitOk;
    }
    if (g.format == Format::Plain) {
        for (const auto& c : candidates)
            std::cout << "R(" << n << "," << c.exponent.to_decimal() << ") = "
                      << c.value.to_decimal() << " " << cantorp::primality_label(c.verdict.kind)
                      << "\n";
        return kExitOk;
    }
    Json j;
    j["N"] = n;
    j["q_max"] = q_max;
    Json rows = Json::array();
    for (const auto& c : candidates) rows.push_back(cantorp::to_json(c));
    j["rows"] = std::move(rows);
    emit(j);
    return kExitOk;
}

int run_sieve_cmd(const GlobalOptions& g, const std::string& p_str) {
    Natural p = Natural::from_decimal(p_str);
    cantorp::SieveTrace trace = cantorp::run_sieve(p);
    if (g.format == Format::Csv)
        throw CLI::ValidationError("--format", "csv is not available for sieve");
    if (g.format == Format::Plain) {
        std::cout << "p=" << p.to_decimal();
        for (const auto& s : trace.steps)
            std::cout << " step" << s.n << "(k=" << s.k << ",D=" << s.d_value.to_decimal() << ")";
        if (trace.accepted())
            std::cout << " accept q=" << trace.accept().q << " at_step=" << trace.accept().at_step
                      << " period=" << trace.accept().period << "\n";
        else
            std::cout << " reject at_step=" << trace.reject().at_step << "\n";
        return kExitOk;
    }
    emit(cantorp::to_json(trace));
    return kExitOk;
}

int run_verify(const GlobalOptions& g, uint64_t p_max) {
    bool keep_rows = g.format == Format::Csv;
    cantorp::VerificationReport report = cantorp::verify_theorem(p_max, g.jobs, keep_rows);
    if (g.format == Format::Csv) {
        std::cout << "p,digit,geometric,sieve,closed_form,q\n";
        for (const auto& row : report.rows)
            std::cout << row.p << "," << row.digit << "," << row.geometric << ","
                      << row.sieve_accept << "," << row.closed_form << ","
                      << (row.closed_form ? std::to_string(row.q) : "") << "\n";
    } else if (g.format == Format::Plain) {
        std::cout << "p_max=" << report.p_max << " primes_checked=" << report.primes_checked
                  << "\n";
        for (const auto& [p, q] : report.cantor_primes)
            std::cout << "cantor_prime p=" << p << " q=" << q << "\n";
        for (const auto& row : report.disagreements)
            std::cout << "disagreement p=" << row.p << " digit=" << row.digit
                      << " geometric=" << row.geometric << " sieve=" << row.sieve_accept
                      << " closed_form=" << row.closed_form << "\n";
    } else {
        emit(cantorp::to_json(report, false));
    }
    if (!report.clean()) {
        std::cerr << "verify: " << report.disagreements.size()
                  << " oracle disagreement(s) found\n";
        return kExitDisagreement;
    }
    return kExitOk;
}

int run_reproduce(const GlobalOptions& g) {
    cantorp::ReproduceReport report = cantorp::reproduce_construction_facts();
    if (g.format == Format::Csv)
        throw CLI::ValidationError("--format", "csv is not available for reproduce");
    if (g.format == Format::Plain) {
        for (const auto& c : report.claims)
            std::cout << (c.pass ? "pass " : "FAIL ") << c.name << "\n";
    } else {
        emit(cantorp::to_json(report));
    }
    if (!report.all_pass) {
        std::cerr << "reproduce: at least one claim failed\n";
        return kExitDisagreement;
    }
    return kExitOk;
}

int run_scan(const GlobalOptions& g, uint64_t n, uint64_t q_max, uint64_t reverse_bound,
             bool require_decided) {
    cantorp::ConjectureScan scan = cantorp::scan_conjecture(n, q_max, g.depth_limit, reverse_bound);
    if (g.format == Format::Csv) {
        std::cout << "N,q,value,repunit_prime,probable,verdict,stage,cycle_length,depth_reached\n";
        for (const auto& row : scan.rows) {
            const auto& m = row.membership;
            std::cout << row.n << "," << row.q << "," << row.value.to_decimal() << ","
                      << row.repunit_prime << "," << row.probable << ","
                      << cantorp::verdict_label(m.kind) << "," << m.stage << "," << m.cycle_length
                      << "," << m.depth_reached << "\n";
        }
    } else if (g.format == Format::Plain) {
        for (const auto& row : scan.rows)
            std::cout << "N=" << row.n << " q=" << row.q << " value=" << row.value.to_decimal()
                      << " " << plain_verdict(row.membership) << "\n";
        for (const auto& row : scan.reverse_probe)
            std::cout << "reverse d=" << row.d << " " << plain_verdict(row.membership) << "\n";
    } else {
        emit(cantorp::to_json(scan));
    }
    if (require_decided) {
        bool any_decided = false;
        for (const auto& row : scan.rows)
            any_decided = any_decided || row.membership.kind != cantorp::Verdict::Unknown;
        if (!scan.rows.empty() && !any_decided) {
            std::cerr << "scan: every membership verdict is unknown at depth limit "
                      << g.depth_limit << "\n";
            return kExitUndecided;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for generalized Cantor set membership and repunit primes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::simple);

    GlobalOptions g;
    std::map<std::string, Format> format_map{
        {"json", Format::Json}, {"csv", Format::Csv}, {"plain", Format::Plain}};
    app.add_option("--format", g.format, "output format")
        ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case))
        ->default_str("json");
    bool depth_given = false;
    app.add_option("--depth-limit", g.depth_limit, "orbit descent limit for N >= 4")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { depth_given = true; });
    app.add_option("--jobs", g.jobs, "worker threads for the verification sweep");

    std::string x_str, p_str;
    uint64_t base = 0, n_value = 0, q_max = 0, p_max = 0;
    uint64_t reverse_bound = cantorp::kDefaultReverseBound;
    bool include_composite = false, require_decided = false;

    CLI::App* expand = app.add_subcommand("expand", "base-b expansion of a rational in [0, 1]");
    expand->add_option("--x", x_str, "rational a/b")->required();
    expand->add_option("--base", base, "expansion base >= 2")->required()->check(CLI::PositiveNumber);

    CLI::App* member = app.add_subcommand("member", "membership of a rational in C_N");
    member->add_option("--x", x_str, "rational a/b")->required();
    member->add_option("--n", n_value, "Cantor set parameter N >= 2")->required();

    CLI::App* repunit = app.add_subcommand("repunit", "base-N repunit primes with prime exponent");
    repunit->add_option("--n", n_value, "repunit base N >= 2")->required();
    repunit->add_option("--q-max", q_max, "largest exponent to test")->required();
    repunit->add_flag("--include-composite", include_composite,
                      "also list candidates whose value is composite");

    CLI::App* sieve = app.add_subcommand("sieve", "nested power-of-3 exclusion sieve for a prime");
    sieve->add_option("--p", p_str, "prime p > 3")->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check digit, geometric, sieve and closed-form oracles over a prime range");
    verify->add_option("--p-max", p_max, "sweep bound")->required();

    app.add_subcommand("reproduce", "re-derive the documented construction facts");

    CLI::App* scan = app.add_subcommand("scan", "probe C_N membership of repunit-prime reciprocals");
    scan->add_option("--n", n_value, "Cantor set parameter N >= 2")->required();
    scan->add_option("--q-max", q_max, "largest exponent to test")->required();
    scan->add_option("--reverse-bound", reverse_bound,
                     "denominator bound for the reverse-direction probe");
    scan->add_flag("--require-decided", require_decided,
                   "exit 3 when every forward verdict is unknown");

    try {
        app.parse(argc, argv);
        if (!depth_given) g.depth_limit = env_depth_limit();

        if (app.got_subcommand(expand)) return run_expand(g, x_str, base);
        if (app.got_subcommand(member)) return run_member(g, x_str, n_value);
        if (app.got_subcommand(repunit)) return run_repunit(g, n_value, q_max, include_composite);
        if (app.got_subcommand(sieve)) return run_sieve_cmd(g, p_str);
        if (app.got_subcommand(verify)) return run_verify(g, p_max);
        if (app.got_subcommand("reproduce")) return run_reproduce(g);
        if (app.got_subcommand(scan))
            return run_scan(g, n_value, q_max, reverse_bound, require_decided);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
