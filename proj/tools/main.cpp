// fanolines -- verification suite for the intersection calculus of the
// variety of lines on a cubic fourfold.
//
//   fanolines list                 print the check catalog
//   fanolines verify [flags]      run checks and report
//
// Exit codes of `verify`: 0 all selected checks pass, 1 at least one failure,
// 2 no failure but something inconclusive, 3 bad usage or unknown name.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fanolines/checks.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the line-family intersection calculus"};
    app.require_subcommand(1);

    fanolines::SuiteConfig config;
    config.suites.clear();
    bool json = false;

    CLI::App* verify = app.add_subcommand("verify", "run checks");
    verify->add_option("--suite", config.suites,
                       "suite to run: schubert, chow, hurwitz, local, all (repeatable)");
    verify->add_option("--only", config.only, "run a single check id (repeatable)");
    verify->add_flag("--json", json, "machine-readable report");
    verify->add_option("--seed", config.seed, "seed for the randomized property checks");
    verify->add_option("--samples", config.samples,
                       "branch samples for the normalisation suite (0 skips them)");
    verify->add_option("--power-bound", config.power_bound,
                       "largest pure power tried in radical-membership certificates");
    verify->add_option("--step-budget", config.step_budget,
                       "reduction step budget per check before giving up as inconclusive");

    CLI::App* list = app.add_subcommand("list", "print the check catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;  // --help exits 0; any parse failure is a usage error
    }

    if (list->parsed()) {
        std::fputs(fanolines::catalog_text().c_str(), stdout);
        return 0;
    }

    if (config.suites.empty()) config.suites = {"all"};
    try {
        const fanolines::SuiteReport report = fanolines::run_checks(config);
        const std::string out = json ? fanolines::report_json(report, config)
                                     : fanolines::report_text(report);
        std::fputs(out.c_str(), stdout);
        return fanolines::exit_code(report);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
}
