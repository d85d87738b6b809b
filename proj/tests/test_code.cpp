#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "mccac/catalog.hpp"
#include "mccac/code.hpp"
#include "mccac/rng.hpp"

using namespace mccac;

namespace {

Code two_overlapping_rows() {
    return Code({1, 5, 3}, {SchedulingPattern{{0, 0}, {0, 1}, {0, 2}},
                            SchedulingPattern{{0, 0}, {0, 2}, {0, 4}}});
}

Code random_code(CounterRng& rng) {
    int M = 1 + rng.below(4);
    int L = 1 + rng.below(12);
    int w = 1 + rng.below(4);
    while (w > M * L) w = 1 + rng.below(4);
    CodeParams params{M, L, w};
    int count = rng.below(6);
    std::vector<SchedulingPattern> patterns;
    for (int k = 0; k < count; ++k) {
        // mostly weight w, sometimes corrupted sizes
        int size = w;
        if (rng.below(5) == 0) size = std::max(1, std::min(M * L, w + (rng.below(2) ? 1 : -1)));
        std::set<Slot> entries;
        while (static_cast<int>(entries.size()) < size)
            entries.insert({rng.below(M), rng.below(L)});
        patterns.emplace_back(std::vector<Slot>(entries.begin(), entries.end()));
    }
    return Code(params, std::move(patterns));
}

}  // namespace

TEST_CASE("verify_code accepts the reference code and reports clashes") {
    Code example = catalog::example1();
    VerificationReport ok = verify_code(example);
    CHECK(ok.valid);
    CHECK(ok.conflicts.empty());

    VerificationReport bad = verify_code(two_overlapping_rows());
    CHECK_FALSE(bad.valid);
    bool found = false;
    for (const auto& c : bad.conflicts) {
        if (c.channel_a == 0 && c.channel_b == 0 && c.difference == 2) found = true;
    }
    CHECK(found);
}

TEST_CASE("restricted verification rejects multi-packet slots") {
    Code example = catalog::example1();
    VerificationReport report = verify_code(example, true);
    CHECK_FALSE(report.valid);
    // the all-channels-at-slot-0 codeword is the only offender
    CHECK(report.restricted_violations == std::vector<int>{3});

    std::vector<SchedulingPattern> subset;
    for (int k = 0; k < example.size(); ++k) {
        if (k != 3) subset.push_back(example.patterns()[k]);
    }
    CHECK(verify_code(Code(example.params(), subset), true).valid);
}

TEST_CASE("cross_correlation matches the worked examples") {
    Code example = catalog::example1();
    for (int tau = 0; tau < 5; ++tau) CHECK(cross_correlation(example, 0, 1, tau) == 0);
    CHECK(cross_correlation(example, 3, 4, 0) == 1);

    Code overlap = two_overlapping_rows();
    CHECK(cross_correlation(overlap, 0, 1, 0) == 2);

    CHECK_THROWS_AS(cross_correlation(example, 2, 2, 0), InvalidPairError);
}

TEST_CASE("both verifier paths agree on randomized codes") {
    CounterRng rng(2024, 0);
    int invalid_seen = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Code code = random_code(rng);
        bool by_differences = verify_code(code).valid;
        bool by_correlation = verify_definitional(code).valid;
        if (!by_differences) ++invalid_seen;
        REQUIRE(by_differences == by_correlation);
    }
    CHECK(invalid_seen > 100);  // the generator must actually produce corrupt codes
}

TEST_CASE("type_census buckets the reference codes") {
    Census census = type_census(catalog::example1());
    CHECK(census_total(census) == 8);
    CHECK(census[{PatternTypeTag::W3_I, {0}}] == 1);
    CHECK(census[{PatternTypeTag::W3_I, {1}}] == 1);
    CHECK(census[{PatternTypeTag::W3_I, {2}}] == 1);
    CHECK(census[{PatternTypeTag::W3_II, {0, 1, 2}}] == 5);
    for (const auto& [key, count] : census) CHECK(key.type != PatternTypeTag::W3_III);

    Census empty = type_census(Code({3, 5, 3}, {}));
    CHECK(census_total(empty) == 0);

    CHECK_THROWS_AS(type_census(Code({2, 3, 2}, {})), UnsupportedWeightError);

    Census six = type_census(catalog::example6());
    int same_channel = 0, three_distinct = 0;
    for (const auto& [key, count] : six) {
        if (key.type == PatternTypeTag::W3_I) same_channel += count;
        if (key.type == PatternTypeTag::W3_II) three_distinct += count;
    }
    CHECK(same_channel == 8);
    CHECK(three_distinct == 20);
    CHECK(census_total(six) == 28);
}

namespace {

// census-based packing inequalities that every valid weight-3 code satisfies
void check_weight3_counting(const Code& code) {
    const int M = code.params().channels;
    const int L = code.params().length;
    Census census = type_census(code);

    for (int alpha = 0; alpha < M; ++alpha) {
        for (int beta = alpha + 1; beta < M; ++beta) {
            long long total = 2 * census[{PatternTypeTag::W3_III, {alpha, beta}}] +
                              2 * census[{PatternTypeTag::W3_III, {beta, alpha}}];
            for (int c = 0; c < M; ++c) {
                if (c == alpha || c == beta) continue;
                std::vector<int> key{alpha, beta, c};
                std::sort(key.begin(), key.end());
                total += census[{PatternTypeTag::W3_II, key}];
            }
            CHECK(total <= L);
        }
    }

    for (int alpha = 0; alpha < M; ++alpha) {
        int diagonal_total = 0;
        for (const auto& pattern : code.patterns())
            diagonal_total += difference_set(pattern, alpha, alpha, L).size();
        CHECK(diagonal_total <= L - 1);
    }
}

}  // namespace

TEST_CASE("valid codes satisfy the pair and diagonal counting budgets") {
    check_weight3_counting(catalog::example1());
    check_weight3_counting(catalog::example6());
}
