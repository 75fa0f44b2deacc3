// hardychain_main.cpp
// Command-line entry point. Exit codes: 0 success, 1 verification mismatch or
// runtime failure, 2 usage error, 3 resource cap exceeded.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hardychain/cli.hpp"

namespace {

using hardychain::cli::run_config;

void add_output_options(CLI::App* cmd, run_config& cfg) {
    cmd->add_option("--format", cfg.format, "output format: json, csv, or text-table")
        ->check(CLI::IsMember({"json", "csv", "text-table"}))
        ->capture_default_str();
    cmd->add_option("--out", cfg.out_path,
                    "output file (relative paths resolve under $HARDYCHAIN_OUT_DIR)");
    cmd->add_option("--seed", cfg.seed, "seed for randomized runs")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chain of CH-Hardy local-reality inequalities for n qubits: LHV bounds, "
                 "Bell-operator spectra, and Hardy-type violation search"};
    app.set_config("--config", "", "key = value configuration file; flags take precedence");
    app.require_subcommand(1);

    run_config cfg;
    std::string n_text;
    std::string indices_text;

    auto parse_indices = [&cfg, &indices_text] {
        cfg.indices.clear();
        if (indices_text.empty()) return;
        std::istringstream is(indices_text);
        std::string piece;
        while (std::getline(is, piece, ','))
            cfg.indices.push_back(std::stoi(piece));
    };

    auto* bounds = app.add_subcommand("lhv-bounds",
                                      "exhaustive LHV bounds for chain members, checked "
                                      "against the closed forms");
    bounds->add_option("--member", cfg.member, "X, Xij, Xijk, or Xijkl")
        ->capture_default_str();
    bounds->add_option("--indices", indices_text, "comma-separated member indices");
    bounds->add_option("--n", n_text, "qubit count or range, e.g. 5 or 2..10")->required();
    bounds->add_option("--cap", cfg.cap, "enumeration cap on n")->capture_default_str();
    add_output_options(bounds, cfg);

    auto* tables = app.add_subcommand("tables",
                                      "reproduce the reference eigenvalue tables (1 = X, "
                                      "2 = Xij) and compare digits");
    tables->add_option("--which", cfg.which, "table number: 1 or 2")->required();
    tables->add_option("--n", n_text, "qubit count or range (default: the table's range)");
    tables->add_flag("--exact", cfg.exact, "also check the exact closed forms");
    add_output_options(tables, cfg);

    auto* hardy = app.add_subcommand("hardy", "Hardy-type constraint checks and maximization");
    hardy->require_subcommand(1);

    auto* hmax = hardy->add_subcommand("max", "maximize the violation probability");
    hmax->add_option("--variant", cfg.variant, "std, i, ii, or iii")->capture_default_str();
    hmax->add_option("--indices", indices_text, "variant indices, e.g. 1,2");
    hmax->add_option("--n", n_text, "qubit count")->required();
    hmax->add_option("--starts", cfg.optimizer.starts, "number of multi-starts")
        ->capture_default_str();
    hmax->add_option("--max-evals", cfg.optimizer.max_evaluations_per_stage,
                     "simplex evaluations per penalty stage")
        ->capture_default_str();
    hmax->add_option("--residual-tol", cfg.optimizer.residual_tolerance,
                     "feasibility tolerance on constraint probabilities")
        ->capture_default_str();
    hmax->add_flag("--complex", cfg.optimizer.complex_amplitudes,
                   "search complex amplitudes instead of real ones");
    add_output_options(hmax, cfg);

    auto* hcheck = hardy->add_subcommand("check", "evaluate the constraints on a given state");
    hcheck->add_option("--variant", cfg.variant, "std, i, ii, or iii")->capture_default_str();
    hcheck->add_option("--indices", indices_text, "variant indices");
    hcheck->add_option("--state", cfg.state_file, "state vector JSON file")->required();
    hcheck->add_option("--frame", cfg.frame_file, "measurement frame JSON file")->required();
    hcheck->add_option("--tau", cfg.tau, "zero tolerance for premises")->capture_default_str();
    add_output_options(hcheck, cfg);

    auto* hscan = hardy->add_subcommand("scan-n3",
                                        "scan the three-qubit stationary surface");
    hscan->add_option("--resolution", cfg.resolution, "grid resolution (>= 100)")
        ->capture_default_str();
    add_output_options(hscan, cfg);

    auto* verify = app.add_subcommand("verify", "run the invariant property suite");
    verify->add_option("--only", cfg.only, "run a single named property");
    verify->add_option("--n-max", cfg.n_max, "largest qubit count exercised")
        ->capture_default_str();
    verify->add_option("--samples", cfg.samples, "random samples per property")
        ->capture_default_str();
    add_output_options(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        parse_indices();
        if (!n_text.empty()) hardychain::cli::parse_n_range(n_text, cfg.n_lo, cfg.n_hi);
        if (bounds->parsed()) return hardychain::cli::cmd_lhv_bounds(cfg, std::cout);
        if (tables->parsed()) return hardychain::cli::cmd_tables(cfg, std::cout);
        if (hardy->parsed()) {
            if (hmax->parsed()) return hardychain::cli::cmd_hardy_max(cfg, std::cout);
            if (hcheck->parsed()) return hardychain::cli::cmd_hardy_check(cfg, std::cout);
            if (hscan->parsed()) return hardychain::cli::cmd_hardy_scan(cfg, std::cout);
        }
        if (verify->parsed()) return hardychain::cli::cmd_verify(cfg, std::cout);
        std::cerr << "no command selected\n";
        return 2;
    } catch (const hardychain::resource_limit_error& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return 3;
    } catch (const hardychain::invalid_member_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const hardychain::validation_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const hardychain::dimension_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
