// Command-line front end: `verify` campaigns, the exact `identities` suite,
// and `two-squares`.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "dncheck/campaign.hpp"
#include "dncheck/errors.hpp"
#include "dncheck/exact.hpp"
#include "dncheck/ntheory.hpp"

namespace {

constexpr int kUsageExit = 2;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

dncheck::CampaignConfig build_config(const std::string& statements, const std::string& xs,
                                     const std::string& format) {
    dncheck::CampaignConfig cfg;
    for (const auto& name : split_commas(statements)) {
        if (name == "ALL") {
            cfg.statements.assign(dncheck::kAllStatements.begin(), dncheck::kAllStatements.end());
            continue;
        }
        auto id = dncheck::parse_statement(name);
        if (!id) throw dncheck::UsageError("unknown statement " + name);
        cfg.statements.push_back(*id);
    }
    for (const auto& text : split_commas(xs)) {
        auto x = dncheck::SmallRational::parse(text);
        if (!x) throw dncheck::UsageError("bad rational " + text);
        cfg.xs.push_back(*x);
    }
    auto f = dncheck::parse_format(format);
    if (!f) throw dncheck::UsageError("unknown format " + format);
    cfg.format = *f;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of congruences for sums of squared Delannoy polynomials"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Check statements over a prime range");
    std::string statements, xs, format = "jsonl";
    dncheck::CampaignConfig cfg;
    verify->add_option("--statements", statements, "Comma-separated statement ids, or ALL")->required();
    verify->add_option("--pmin", cfg.pmin, "Smallest prime considered")->required();
    verify->add_option("--pmax", cfg.pmax, "Largest prime considered")->required();
    verify->add_option("--x", xs, "Comma-separated rationals a/b for DSQUARE_X and SUN_ALTERNATING");
    verify->add_option("--threads", cfg.threads, "Worker threads");
    verify->add_option("--format", format, "jsonl, csv or human");
    verify->add_option("--out", cfg.out_path, "Output file (default stdout)");
    verify->add_flag("--fail-fast", cfg.fail_fast, "Stop dispatching after the first failure");
    verify->add_option("--chunk-size", cfg.chunk_size, "Primes per work unit");

    auto* identities = app.add_subcommand("identities", "Run the exact identity suite");
    long nmax = 20, jmax = 50, mmax = 60;
    identities->add_option("--nmax", nmax, "Largest n for Guo's identity");
    identities->add_option("--jmax", jmax, "Largest j for the product identities");
    identities->add_option("--mmax", mmax, "Largest m for Chu-Vandermonde");

    auto* squares = app.add_subcommand("two-squares", "Print x y with p = x^2 + y^2, x = 1 (mod 4)");
    std::uint64_t p = 0;
    squares->add_option("--p", p, "Prime congruent to 1 mod 4")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageExit;
    }

    try {
        if (*verify) {
            dncheck::CampaignConfig parsed = build_config(statements, xs, format);
            parsed.pmin = cfg.pmin;
            parsed.pmax = cfg.pmax;
            parsed.threads = cfg.threads;
            parsed.out_path = cfg.out_path;
            parsed.fail_fast = cfg.fail_fast;
            parsed.chunk_size = cfg.chunk_size;
            dncheck::validate(parsed);
            const auto summary = dncheck::run_campaign(parsed);
            std::cerr << dncheck::format_summary(summary);
            return dncheck::exit_code(summary);
        }
        if (*identities) {
            bool all_ok = true;
            for (const auto& check : dncheck::run_identity_suite(nmax, jmax, mmax)) {
                std::cout << (check.ok() ? "PASS " : "FAIL ") << check.name << " (" << check.passed << "/"
                          << check.cases << ")\n";
                all_ok = all_ok && check.ok();
            }
            return all_ok ? 0 : 1;
        }
        if (*squares) {
            const auto ts = dncheck::two_squares(p);
            std::cout << ts.x << " " << ts.y << "\n";
            return 0;
        }
    } catch (const dncheck::UsageError& e) {
        std::cerr << e.what() << "\n";
        return kUsageExit;
    } catch (const dncheck::WrongResidueClass& e) {
        std::cerr << e.what() << "\n";
        return kUsageExit;
    } catch (const dncheck::NotPrime& e) {
        std::cerr << e.what() << "\n";
        return kUsageExit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
