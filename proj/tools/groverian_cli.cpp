// Command-line surface: measure | evolve | groups | verify.
//
// Exit codes: 0 success, 1 property failure, 2 I/O or parse error,
// 3 invalid configuration.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "groverian/closed_form.hpp"
#include "groverian/errors.hpp"
#include "groverian/grover.hpp"
#include "groverian/io.hpp"
#include "groverian/report.hpp"
#include "groverian/verify.hpp"

namespace {

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("GROVERIAN_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw groverian::config_error("GROVERIAN_SEED is not an integer");
        }
    }
    return 42;
}

struct MeasureArgs {
    std::string file;
    std::string method = "all";
    int qubit = 0; // 0 = all qubits
    std::optional<std::uint64_t> seed;
    int starts = 128;
    std::string format = "json";
};

int run_measure(const MeasureArgs& args)
{
    groverian::StateVector state = groverian::load_state_json(args.file);
    groverian::MeasureOptions opt;
    opt.method = args.method;
    if (args.qubit != 0)
        opt.qubit = args.qubit;
    opt.numeric_cfg.starts = args.starts;
    opt.numeric_cfg.seed = args.seed ? *args.seed : default_seed();
    groverian::MeasureReport rep = groverian::build_measure_report(state, args.file, opt);
    for (const auto& w : rep.warnings)
        std::cerr << "warning: " << w << '\n';
    if (args.format == "csv")
        std::cout << groverian::measure_report_csv(rep);
    else
        std::cout << groverian::measure_report_json(rep).dump(2) << '\n';
    return 0;
}

struct EvolveArgs {
    int n = 3;
    std::optional<std::uint64_t> marked;
    std::optional<int> iterations;
    std::string format = "csv";
    bool paper_compare = false;
    std::optional<std::uint64_t> seed;
    int starts = 128;
};

int run_evolve(const EvolveArgs& args)
{
    if (args.n < 1 || args.n > groverian::max_qubits)
        throw groverian::config_error("evolve: n out of range");
    std::uint64_t marked = args.marked ? *args.marked : (std::uint64_t{1} << args.n) - 1;
    int iterations = args.iterations ? *args.iterations : groverian::optimal_iterations(args.n);
    if (iterations < 0)
        throw groverian::config_error("evolve: iterations must be >= 0");
    groverian::NumericConfig cfg;
    cfg.starts = args.starts;
    cfg.seed = args.seed ? *args.seed : default_seed();
    groverian::TraceReport rep =
        groverian::build_trace_report(args.n, marked, iterations, cfg, args.paper_compare);
    if (args.format == "json")
        std::cout << groverian::trace_report_json(rep).dump(2) << '\n';
    else
        std::cout << groverian::trace_report_csv(rep);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Groverian entanglement measure toolkit"};
    app.require_subcommand(1);

    MeasureArgs margs;
    CLI::App* measure = app.add_subcommand("measure", "measure one state from a JSON file");
    measure->add_option("state-file", margs.file, "state JSON file")->required();
    measure->add_option("--method", margs.method, "closed|numeric|grid|all")
        ->check(CLI::IsMember({"closed", "numeric", "grid", "all"}));
    measure->add_option("--qubit", margs.qubit, "entropy qubit (default: all)");
    measure->add_option("--seed", margs.seed, "numeric maximizer seed");
    measure->add_option("--starts", margs.starts, "numeric maximizer starts");
    measure->add_option("--format", margs.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    EvolveArgs eargs;
    CLI::App* evolve = app.add_subcommand("evolve", "trace a search run and measure every half-step");
    evolve->add_option("--n", eargs.n, "qubit count")->required();
    evolve->add_option("--marked", eargs.marked, "marked basis index (default: all-ones)");
    evolve->add_option("--iterations", eargs.iterations, "full iterations (default: optimal)");
    evolve->add_option("--format", eargs.format, "csv|json")
        ->check(CLI::IsMember({"json", "csv"}));
    evolve->add_flag("--paper-compare", eargs.paper_compare,
                     "embed published table values and deltas (n = 3 or 5)");
    evolve->add_option("--seed", eargs.seed, "numeric maximizer seed");
    evolve->add_option("--starts", eargs.starts, "numeric maximizer starts");

    int groups_n = 3;
    CLI::App* groups = app.add_subcommand("groups", "print the sign-group expression");
    groups->add_option("--n", groups_n, "qubit count (1..6)")->required();

    groverian::VerifyOptions vopts;
    std::optional<std::uint64_t> vseed;
    CLI::App* verify = app.add_subcommand("verify", "run the property suite");
    verify->add_option("--samples", vopts.samples, "random samples per sweep");
    verify->add_option("--seed", vseed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 3;
    }

    try {
        if (*measure)
            return run_measure(margs);
        if (*evolve)
            return run_evolve(eargs);
        if (*groups) {
            std::cout << groverian::render_groups(groups_n);
            return 0;
        }
        if (*verify) {
            vopts.seed = vseed ? *vseed : default_seed();
            groverian::VerifyReport rep = groverian::run_verify(vopts);
            std::cout << groverian::verify_report_json(rep).dump(2) << '\n';
            return rep.all_pass ? 0 : 1;
        }
    } catch (const groverian::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const groverian::config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 3;
}
