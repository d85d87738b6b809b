// Command-line front end: bounds, constructions, verification, exact search,
// catalog fixtures, and guarantee simulation over code files.
//
// Exit codes: 0 success/valid, 1 invalid code or guarantee failure,
// 2 usage or input-file error, 3 exact search stopped by budget.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mccac/mccac.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void print_bound(const mccac::BoundResult& result) {
    std::cout << result.value << "\n";
    std::cout << "case: " << result.formula_case << "\n";
    if (result.construction_claim) {
        std::cout << "construction-series value: " << *result.construction_claim
                  << " (disagrees with the case table; both reported)\n";
    }
}

int run_bound(int weight, int channels, int length, bool restricted) {
    try {
        if (restricted) {
            print_bound(mccac::bound_restricted(channels, length, weight));
        } else if (weight == 3) {
            print_bound(mccac::bound_weight3(channels, length));
        } else {
            mccac::BoundResult table = mccac::bound_weight4(channels, length);
            mccac::BoundResult derived = mccac::bound_weight4_derived(channels, length);
            print_bound(table);
            if (derived.value != table.value)
                std::cout << "indicator-form value: " << derived.value
                          << " (disagrees with the case table; both reported)\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_construct(int channels, int length, int weight, const std::string& out_path) {
    std::optional<mccac::Composition> composition;
    std::string how;
    try {
        composition = mccac::compose_optimal(channels, length, weight);
        how = "compose";
    } catch (const mccac::ConstructionUnavailableError& e) {
        // fall back to the explicit even-length family when it applies
        if (channels == 4 && weight == 3 && length % 2 == 0) {
            try {
                composition = mccac::family_4_2t(length / 2);
                how = "family-4x2t";
            } catch (const mccac::HypothesisNotMetError& family_error) {
                std::cerr << "error: " << e.what() << "\n";
                std::cerr << "error: " << family_error.what() << "\n";
                return kExitInvalid;
            }
        } else {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInvalid;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const mccac::Code& code = composition->code;
    mccac::VerificationReport check = mccac::verify_code(code);
    if (!check.valid) {
        std::cerr << "error: constructed code failed verification\n";
        return kExitInvalid;
    }
    std::string provenance = how + " M=" + std::to_string(channels) + " L=" +
                             std::to_string(length) + " w=" + std::to_string(weight) +
                             " case=" + composition->certificate.construction_case;
    mccac::save_code(code, out_path, false, provenance);

    std::cout << "codewords: " << code.size() << "\n";
    std::cout << "construction: " << composition->certificate.construction_case
              << " (gbrd: " << composition->certificate.gbrd_source << ")\n";
    std::cout << "bound: " << composition->certificate.bound_value << " ("
              << composition->certificate.bound_case << ")\n";
    if (composition->certificate.bound_construction_claim)
        std::cout << "construction-series value: "
                  << *composition->certificate.bound_construction_claim
                  << " (disagrees with the case table; both reported)\n";
    std::cout << "meets-bound: " << (composition->certificate.meets_bound ? "yes" : "no") << "\n";
    std::cout << "verify: ok\n";
    std::cout << "wrote: " << out_path << "\n";
    return kExitOk;
}

int run_verify(const std::string& path, bool restricted_flag) {
    mccac::CodeFile file;
    try {
        file = mccac::load_code(path);
    } catch (const mccac::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mccac::CodeValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const bool restricted = restricted_flag || file.restricted;
    mccac::VerificationReport report = mccac::verify_code(file.code, restricted);
    if (report.valid) {
        std::cout << "valid\n";
        std::cout << "codewords: " << file.code.size() << "\n";
        return kExitOk;
    }
    std::cout << "invalid\n";
    for (int k : report.weight_violations)
        std::cout << "weight violation: pattern " << k << "\n";
    for (int k : report.restricted_violations)
        std::cout << "restricted violation: pattern " << k << " uses a slot twice\n";
    for (const auto& c : report.conflicts)
        std::cout << "conflict: patterns " << c.pattern_a << "," << c.pattern_b << " cell ("
                  << c.channel_a << "," << c.channel_b << ") difference " << c.difference
                  << "\n";
    return kExitInvalid;
}

int run_search(int channels, int length, int weight, bool exact, bool restricted,
               std::uint64_t node_budget, double time_limit, int jobs,
               const std::string& out_path) {
    mccac::CodeParams params{channels, length, weight};
    mccac::SolverOptions options;
    options.node_budget = node_budget;
    options.time_limit_seconds = time_limit;
    options.jobs = jobs;
    if ((weight == 3 || weight == 4) && channels >= weight && length >= channels &&
        !restricted) {
        try {
            options.seed = mccac::compose_optimal(channels, length, weight).code;
        } catch (const std::exception&) {
            // no seed; search starts from the greedy incumbent
        }
    }

    mccac::SearchOutcome outcome;
    try {
        outcome = mccac::max_code(params, restricted, options);
    } catch (const mccac::InstanceTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    mccac::CertificationReport cert = mccac::certify(outcome);

    std::string provenance = "search M=" + std::to_string(channels) + " L=" +
                             std::to_string(length) + " w=" + std::to_string(weight) +
                             (restricted ? " restricted" : "");
    mccac::save_code(outcome.best_code, out_path, restricted, provenance);

    std::cout << "size: " << outcome.size << "\n";
    std::cout << "status: "
              << (outcome.status == mccac::SolveStatus::Optimal ? "optimal" : "lower-bound-only")
              << "\n";
    std::cout << "nodes: " << outcome.nodes_explored << "\n";
    if (cert.bound) {
        std::cout << "bound: " << *cert.bound << "\n";
        std::cout << "gap: " << (cert.gap_is_exact ? "" : ">= ")
                  << (*cert.bound - outcome.size) << "\n";
    }
    std::cout << "wrote: " << out_path << "\n";
    if (exact && outcome.status != mccac::SolveStatus::Optimal) return kExitBudget;
    return kExitOk;
}

int run_simulate(const std::string& path, int active, long long trials, std::uint64_t seed,
                 int jobs) {
    mccac::CodeFile file;
    try {
        file = mccac::load_code(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    mccac::VerificationReport report = mccac::verify_code(file.code, file.restricted);
    if (!report.valid) {
        std::cerr << "error: code file does not verify; simulate refuses to claim anything\n";
        return kExitInvalid;
    }
    mccac::TrialSummary summary;
    try {
        summary = mccac::random_trials(file.code, trials, seed, active, file.restricted, jobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (summary.status == mccac::GuaranteeStatus::NotClaimed) {
        std::cout << "guarantee-not-claimed: " << summary.note << "\n";
        return kExitOk;
    }
    std::cout << "trials: " << summary.trials << "\n";
    std::cout << "pass: " << summary.passes << "\n";
    std::cout << "fail: " << summary.failures << "\n";
    std::cout << "worst-delay: " << summary.worst_delay << "\n";
    std::cout << "active: " << summary.active_count << "\n";
    std::cout << "horizon: " << summary.horizon_per_trial << "\n";
    std::cout << "seed: " << summary.seed << "\n";
    return summary.failures == 0 ? kExitOk : kExitInvalid;
}

int run_catalog(const std::string& name, const std::string& out_path) {
    mccac::Code code;
    try {
        code = mccac::catalog::as_code(name);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "known fixtures:";
        for (const auto& known : mccac::catalog::names()) std::cerr << " " << known;
        std::cerr << "\n";
        return kExitUsage;
    }
    mccac::save_code(code, out_path, false, "catalog " + name);
    std::cout << "codewords: " << code.size() << "\n";
    std::cout << "wrote: " << out_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multichannel conflict-avoiding code toolkit"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for search and trials")->default_val(1);

    int weight = 3, channels = 3, length = 5, active = 1;
    bool restricted = false, exact = false;
    std::uint64_t node_budget = 100'000'000;
    double time_limit = 0.0;
    long long trials = 1000;
    std::uint64_t seed = 1;
    std::string file_path, out_path, name;

    CLI::App* bound = app.add_subcommand("bound", "closed-form upper bound on the code size");
    bound->add_option("--weight", weight)->required()->check(CLI::IsMember({3, 4}));
    bound->add_option("--channels", channels)->required();
    bound->add_option("--length", length)->required();
    bound->add_flag("--restricted", restricted, "one transmitter per slot");

    CLI::App* construct = app.add_subcommand("construct", "compose an optimal code");
    construct->add_option("--channels", channels)->required();
    construct->add_option("--length", length)->required();
    construct->add_option("--weight", weight)->required()->check(CLI::IsMember({3, 4}));
    construct->add_option("--out", out_path)->required();

    CLI::App* verify = app.add_subcommand("verify", "verify a code file");
    verify->add_option("file", file_path)->required();
    verify->add_flag("--restricted", restricted, "also require one transmitter per slot");

    CLI::App* search = app.add_subcommand("search", "exact maximum-code search");
    search->add_option("--channels", channels)->required();
    search->add_option("--length", length)->required();
    search->add_option("--weight", weight)->required();
    search->add_flag("--exact", exact, "exit 3 unless optimality was certified");
    search->add_flag("--restricted", restricted, "one transmitter per slot");
    search->add_option("--node-budget", node_budget);
    search->add_option("--time-limit", time_limit, "seconds, 0 for no limit");
    search->add_option("--out", out_path)->required();

    CLI::App* simulate = app.add_subcommand("simulate", "randomized guarantee trials");
    simulate->add_option("file", file_path)->required();
    simulate->add_option("--active", active)->required();
    simulate->add_option("--trials", trials)->required();
    simulate->add_option("--seed", seed)->required();

    CLI::App* catalog = app.add_subcommand("catalog", "write a reference object as a code file");
    catalog->add_option("name", name)->required();
    catalog->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bound->parsed()) return run_bound(weight, channels, length, restricted);
        if (construct->parsed()) return run_construct(channels, length, weight, out_path);
        if (verify->parsed()) return run_verify(file_path, restricted);
        if (search->parsed())
            return run_search(channels, length, weight, exact, restricted, node_budget,
                              time_limit, jobs, out_path);
        if (simulate->parsed()) return run_simulate(file_path, active, trials, seed, jobs);
        if (catalog->parsed()) return run_catalog(name, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
