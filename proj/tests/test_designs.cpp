#include <catch2/catch_amalgamated.hpp>

#include "mccac/catalog.hpp"
#include "mccac/difference_matrix.hpp"
#include "mccac/gbrd.hpp"

using namespace mccac;

TEST_CASE("prime multiplication table is a difference matrix") {
    DifferenceMatrix m = difference_matrix_prime(3, 13);
    CHECK(m.rows == catalog::example3().rows);
    CHECK(verify_difference_matrix(m));

    DifferenceMatrix single = difference_matrix_prime(1, 5);
    CHECK(single.rows == std::vector<std::vector<int>>{{0, 0, 0, 0, 0}});
    CHECK(verify_difference_matrix(single));

    CHECK_THROWS_AS(difference_matrix_prime(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(difference_matrix_prime(6, 5), std::invalid_argument);  // k > p
}

TEST_CASE("verify_difference_matrix rejects repeats and gaps") {
    DifferenceMatrix bad;
    bad.length = 4;
    bad.rows = {{0, 0, 0, 0}, {0, 1, 2, 2}};  // difference vector repeats 2, misses 3
    CHECK_FALSE(verify_difference_matrix(bad));

    DifferenceMatrix one_row;
    one_row.length = 6;
    one_row.rows = {{5, 4, 3, 2, 1, 0}};
    CHECK(verify_difference_matrix(one_row));  // no row pairs to violate
}

TEST_CASE("explicit 4 x 4t family reproduces the reference design") {
    Gbrd family = gbrd_4x4t(5);
    Gbrd reference = catalog::example4();
    REQUIRE(family.column_count() == 20);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 20; ++c) {
            INFO("row " << r << " column " << c);
            CHECK(family.cells[r][c] == reference.cells[r][c]);
        }
    }
    CHECK(verify_gbrd(family, 10, 3));
}

TEST_CASE("explicit 4 x 4t family verifies at several sizes") {
    for (int t : {1, 2, 3, 7, 11}) {
        INFO("t=" << t);
        CHECK(verify_gbrd(gbrd_4x4t(t), 2 * t, 3));
    }
}

TEST_CASE("verify_gbrd catches a blanked cell") {
    Gbrd damaged = catalog::example4();
    damaged.cells[0][0] = std::nullopt;
    CHECK_FALSE(verify_gbrd(damaged, 10, 3));
}

TEST_CASE("a difference matrix is a fully-filled design") {
    Gbrd full = gbrd_from_difference_matrix(difference_matrix_prime(3, 5));
    CHECK(verify_gbrd(full, 5, 3));
}

TEST_CASE("design search finds small instances") {
    GbrdSearchResult r35 = search_gbrd(3, 5, 3);
    REQUIRE(r35.status == SearchStatus::Found);
    CHECK(verify_gbrd(*r35.gbrd, 5, 3));

    GbrdSearchResult r4t = search_gbrd(4, 10, 3);
    REQUIRE(r4t.status == SearchStatus::Found);
    CHECK(verify_gbrd(*r4t.gbrd, 10, 3));
    CHECK(r4t.gbrd->column_count() == 20);
}

TEST_CASE("design search reports a starved budget distinctly") {
    GbrdSearchResult r = search_gbrd(4, 10, 3, 1);
    CHECK(r.status == SearchStatus::BudgetExhausted);
    CHECK_FALSE(r.gbrd.has_value());
}

TEST_CASE("design search shape handling") {
    // 3 rows, weight 3, length 4: 4*3*2/6 = 4 columns, so the shape is fine,
    // but no design exists (difference-vector sums over Z_4 obstruct it)
    GbrdSearchResult r = search_gbrd(3, 4, 3, 2'000'000);
    CHECK(r.status == SearchStatus::ProvenNonexistent);

    CHECK_THROWS_AS(search_gbrd(5, 7, 3), ShapeInfeasibleError);  // 7*20/6 is no integer
}
