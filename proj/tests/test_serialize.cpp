#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <set>
#include <string>

#include "mccac/catalog.hpp"
#include "mccac/rng.hpp"
#include "mccac/serialize.hpp"

using namespace mccac;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("save then load round-trips the reference code") {
    Code code = catalog::example1();
    std::string path = temp_path("mccac_roundtrip.json");
    save_code(code, path, false, "catalog example1");
    CodeFile file = load_code(path);
    CHECK(file.code == code);
    CHECK(file.restricted == false);
    CHECK(file.provenance == "catalog example1");
    CHECK(file.schema_version == kCodeFileSchemaVersion);
    std::remove(path.c_str());
}

TEST_CASE("round trip holds for random codes") {
    CounterRng rng(99, 0);
    for (int trial = 0; trial < 50; ++trial) {
        int M = 1 + rng.below(4), L = 1 + rng.below(10);
        int w = 1 + rng.below(std::min(4, M * L));
        std::vector<SchedulingPattern> patterns;
        int count = rng.below(5);
        for (int k = 0; k < count; ++k) {
            std::set<Slot> entries;
            while (static_cast<int>(entries.size()) < w)
                entries.insert({rng.below(M), rng.below(L)});
            patterns.emplace_back(std::vector<Slot>(entries.begin(), entries.end()));
        }
        Code code({M, L, w}, patterns);
        CodeFile file = code_from_json(code_to_json(code, false, "t"));
        CHECK(file.code == code);
    }
}

TEST_CASE("serialization output is deterministic") {
    Code code = catalog::example6();
    CHECK(code_to_json(code, false, "x") == code_to_json(code, false, "x"));
}

TEST_CASE("load rejects malformed and mismatched files") {
    CHECK_THROWS_AS(code_from_json("{ not json"), ParseError);
    CHECK_THROWS_AS(code_from_json("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(code_from_json("{\"schema_version\": 99}"), ParseError);

    // a weight-4 pattern in a weight-3 file
    std::string bad_weight = R"({
      "schema_version": 1, "channels": 1, "length": 5, "weight": 3,
      "restricted": false,
      "patterns": [[[0,0],[0,1],[0,2],[0,3]]],
      "provenance": ""
    })";
    CHECK_THROWS_AS(code_from_json(bad_weight), CodeValidationError);

    // entry outside the channel range
    std::string bad_range = R"({
      "schema_version": 1, "channels": 1, "length": 5, "weight": 3,
      "patterns": [[[1,0],[0,1],[0,2]]]
    })";
    CHECK_THROWS_AS(code_from_json(bad_range), CodeValidationError);

    // duplicate entry inside one pattern
    std::string dup_entry = R"({
      "schema_version": 1, "channels": 1, "length": 5, "weight": 3,
      "patterns": [[[0,0],[0,0],[0,2]]]
    })";
    CHECK_THROWS_AS(code_from_json(dup_entry), CodeValidationError);

    CHECK_THROWS_AS(load_code("/nonexistent/path/code.json"), ParseError);
}

TEST_CASE("loaded patterns come out canonicalized") {
    std::string shifted = R"({
      "schema_version": 1, "channels": 1, "length": 5, "weight": 3,
      "patterns": [[[0,3],[0,4],[0,0]]]
    })";
    CodeFile file = code_from_json(shifted);
    CHECK(file.code.patterns()[0] == SchedulingPattern{{0, 0}, {0, 1}, {0, 2}});
}
