#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "mccac/catalog.hpp"
#include "mccac/compose.hpp"
#include "mccac/enumerate.hpp"
#include "mccac/conflict_graph.hpp"
#include "mccac/solver.hpp"

using namespace mccac;

namespace {

long long binomial(int n, int k) {
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

TEST_CASE("enumerate_patterns counts shift classes") {
    PatternUniverse u1 = enumerate_patterns({1, 5, 3}, false);
    CHECK(u1.patterns.size() == 2);  // {0,1,2} and {0,1,3} classes

    PatternUniverse u2 = enumerate_patterns({3, 5, 3}, false);
    CHECK(u2.patterns.size() == 91);  // C(15,3)/5

    PatternUniverse u3 = enumerate_patterns({1, 3, 3}, false);
    CHECK(u3.patterns.size() == 1);  // the full row only
}

TEST_CASE("orbit sizes recount the full universe") {
    for (CodeParams params : {CodeParams{3, 5, 3}, CodeParams{2, 6, 3}, CodeParams{2, 4, 4},
                              CodeParams{1, 12, 3}, CodeParams{4, 4, 2}}) {
        PatternUniverse u = enumerate_patterns(params, false);
        long long total = std::accumulate(u.orbit_sizes.begin(), u.orbit_sizes.end(), 0LL);
        CHECK(total == binomial(params.channels * params.length, params.weight));
        for (std::size_t i = 0; i < u.patterns.size(); ++i) {
            CHECK(canonicalize(u.patterns[i], params.length) == u.patterns[i]);
            CHECK(params.length % u.orbit_sizes[i] == 0);
        }
    }
}

TEST_CASE("restricted enumeration drops multi-packet slots") {
    PatternUniverse all = enumerate_patterns({2, 3, 2}, false);
    PatternUniverse restricted = enumerate_patterns({2, 3, 2}, true);
    CHECK(all.patterns.size() > restricted.patterns.size());
    for (const auto& p : restricted.patterns) CHECK(p.single_transmission_per_slot());
}

TEST_CASE("enumeration cap rejects oversized instances") {
    CHECK_THROWS_AS(enumerate_patterns({8, 9, 3}, false), InstanceTooLargeError);
    CHECK_THROWS_AS(enumerate_patterns({2, 4, 5}, false), InstanceTooLargeError);
    EnumerationLimits wide;
    wide.max_cells = 80;
    CHECK_NOTHROW(enumerate_patterns({8, 9, 2}, false, wide));
}

TEST_CASE("conflict graph matches the reference code") {
    Code example = catalog::example1();
    PatternUniverse u = enumerate_patterns(example.params(), false);
    ConflictGraph graph = build_conflict_graph(u.patterns, example.params());

    // the eight reference codewords are pairwise compatible
    std::vector<int> indices;
    for (const auto& pattern : example.patterns()) {
        auto it = std::lower_bound(u.patterns.begin(), u.patterns.end(), pattern);
        REQUIRE(it != u.patterns.end());
        REQUIRE(*it == pattern);
        indices.push_back(static_cast<int>(it - u.patterns.begin()));
    }
    for (int a : indices) {
        for (int b : indices) {
            if (a != b) CHECK_FALSE(graph.edge(a, b));
        }
    }

    // same-channel rows with a shared difference clash
    SchedulingPattern row1{{0, 0}, {0, 1}, {0, 2}};
    SchedulingPattern row2{{0, 0}, {0, 2}, {0, 4}};
    auto at = [&](const SchedulingPattern& p) {
        return static_cast<int>(
            std::lower_bound(u.patterns.begin(), u.patterns.end(), p) - u.patterns.begin());
    };
    CHECK(graph.edge(at(row1), at(row2)));

    ConflictGraph lone = build_conflict_graph({row1}, example.params());
    CHECK(lone.degree(0) == 0);
}

TEST_CASE("max_code certifies the small reference instances") {
    SearchOutcome best = max_code({3, 5, 3}, false);
    CHECK(best.size == 8);
    CHECK(best.status == SolveStatus::Optimal);
    CHECK(verify_code(best.best_code).valid);

    SearchOutcome single_channel = max_code({1, 13, 3}, false);
    CHECK(single_channel.size == 3);
    CHECK(single_channel.status == SolveStatus::Optimal);
}

TEST_CASE("A(2,3,2) by exhaustion agrees with brute force over all subsets") {
    PatternUniverse u = enumerate_patterns({2, 3, 2}, false);
    CHECK(u.patterns.size() == 5);

    // brute-force oracle: test every subset of shift classes definitionally
    int brute_best = 0;
    for (unsigned mask = 0; mask < (1u << u.patterns.size()); ++mask) {
        std::vector<SchedulingPattern> chosen;
        for (std::size_t i = 0; i < u.patterns.size(); ++i) {
            if (mask & (1u << i)) chosen.push_back(u.patterns[i]);
        }
        Code candidate(u.params, chosen);
        if (verify_definitional(candidate).valid)
            brute_best = std::max(brute_best, static_cast<int>(chosen.size()));
    }

    SearchOutcome best = max_code({2, 3, 2}, false);
    CHECK(best.status == SolveStatus::Optimal);
    CHECK(best.size == brute_best);
    CHECK(best.size == 5);
}

TEST_CASE("certify re-verifies and reports the bound gap") {
    SearchOutcome best = max_code({3, 5, 3}, false);
    CertificationReport report = certify(best);
    CHECK(report.verified);
    REQUIRE(report.bound.has_value());
    CHECK(*report.bound == 8);
    CHECK(report.gap == 0);
    CHECK(report.gap_is_exact);
}

TEST_CASE("seeding with the composed (3,13,3) code certifies 22 at gap zero") {
    SolverOptions options;
    options.seed = compose_optimal(3, 13, 3).code;
    SearchOutcome outcome = max_code({3, 13, 3}, false, options);
    CHECK(outcome.size == 22);
    CHECK(outcome.status == SolveStatus::Optimal);
    CertificationReport report = certify(outcome);
    CHECK(report.verified);
    CHECK(report.gap == 0);
}

TEST_CASE("search is deterministic and accepts a seed") {
    SolverOptions options;
    SearchOutcome a = max_code({3, 5, 3}, false, options);
    SearchOutcome b = max_code({3, 5, 3}, false, options);
    CHECK(a.best_code == b.best_code);
    CHECK(a.size == b.size);

    options.seed = compose_optimal(3, 5, 3).code;
    SearchOutcome seeded = max_code({3, 5, 3}, false, options);
    CHECK(seeded.size == 8);
    CHECK(seeded.status == SolveStatus::Optimal);
}

TEST_CASE("parallel search matches the single-threaded size") {
    SolverOptions two;
    two.jobs = 2;
    SearchOutcome parallel = max_code({3, 5, 3}, false, two);
    CHECK(parallel.size == 8);
    CHECK(parallel.status == SolveStatus::Optimal);
}

TEST_CASE("budget exhaustion downgrades the status") {
    // M = 1 keeps the closed-form bounds out of play, so the solver cannot
    // stop early by meeting a bound and must hit the budget
    SolverOptions tiny;
    tiny.node_budget = 0;
    SearchOutcome outcome = max_code({1, 13, 3}, false, tiny);
    CHECK(outcome.status == SolveStatus::LowerBoundOnly);
    CHECK(verify_code(outcome.best_code).valid);  // incumbent still sound
    CertificationReport report = certify(outcome);
    CHECK(report.verified);
    CHECK_FALSE(report.gap_is_exact);
}

TEST_CASE("restricted search respects the slot restriction") {
    SearchOutcome outcome = max_code({3, 5, 3}, true);
    CHECK(outcome.status == SolveStatus::Optimal);
    CHECK(verify_code(outcome.best_code, true).valid);
    CHECK(outcome.size <= bound_restricted(3, 5, 3).value);
}
