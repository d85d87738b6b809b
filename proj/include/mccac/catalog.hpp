#ifndef MCCAC_CATALOG_HPP
#define MCCAC_CATALOG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "mccac/cac.hpp"
#include "mccac/code.hpp"
#include "mccac/difference_matrix.hpp"
#include "mccac/gbrd.hpp"

namespace mccac {
namespace catalog {

// Reference objects embedded as data so conformance tests cannot drift with
// the construction code.

/// The 8-codeword MC-CAC(3,5,3).
inline Code example1() {
    std::vector<SchedulingPattern> patterns = {
        {{0, 0}, {0, 1}, {0, 2}},
        {{1, 0}, {1, 1}, {1, 2}},
        {{2, 0}, {2, 1}, {2, 2}},
        {{0, 0}, {1, 0}, {2, 0}},
        {{0, 0}, {1, 1}, {2, 2}},
        {{0, 0}, {1, 2}, {2, 4}},
        {{0, 0}, {1, 3}, {2, 1}},
        {{0, 0}, {1, 4}, {2, 3}},
    };
    return Code({3, 5, 3}, std::move(patterns));
}

/// The equi-difference tight CAC(13,3) with generators 1, 3, 4.
inline Cac example2() {
    Cac cac;
    cac.length = 13;
    cac.weight = 3;
    cac.patterns = {{0, 1, 2}, {0, 3, 6}, {0, 4, 8}};
    cac.equi_difference = true;
    cac.generators = std::vector<int>{1, 3, 4};
    return cac;
}

/// The 3 x 13 difference matrix over Z_13 (mod-13 multiplication table).
inline DifferenceMatrix example3() {
    DifferenceMatrix matrix;
    matrix.length = 13;
    matrix.rows = {
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
        {0, 2, 4, 6, 8, 10, 12, 1, 3, 5, 7, 9, 11},
    };
    return matrix;
}

/// The 4 x 20 GBRD over Z_10 with three filled cells per column.
inline Gbrd example4() {
    const int E = -1;  // empty cell marker
    const int raw[4][20] = {
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, E, E, E, E, E},
        {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, E, E, E, E, E, 0, 0, 0, 0, 0},
        {0, 2, 4, 6, 8, E, E, E, E, E, 1, 3, 5, 7, 9, 5, 6, 7, 8, 9},
        {E, E, E, E, E, 5, 4, 3, 2, 1, 6, 7, 8, 9, 0, 1, 3, 5, 7, 9},
    };
    Gbrd design;
    design.rows = 4;
    design.length = 10;
    design.weight = 3;
    design.cells.assign(4, std::vector<std::optional<int>>(20));
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 20; ++c) {
            if (raw[r][c] != E) design.cells[r][c] = raw[r][c];
        }
    }
    return design;
}

/// The 28-codeword MC-CAC(4,10,3): the 20 GBRD columns plus two codewords
/// per channel ({0,1,2} and {0,3,6} copies).
inline Code example6() {
    std::vector<SchedulingPattern> patterns = {
        {{0, 0}, {1, 0}, {2, 0}}, {{0, 0}, {1, 1}, {2, 2}},
        {{0, 0}, {1, 2}, {2, 4}}, {{0, 0}, {1, 3}, {2, 6}},
        {{0, 0}, {1, 4}, {2, 8}}, {{0, 0}, {1, 5}, {3, 5}},
        {{0, 0}, {1, 6}, {3, 4}}, {{0, 0}, {1, 7}, {3, 3}},
        {{0, 0}, {1, 8}, {3, 2}}, {{0, 0}, {1, 9}, {3, 1}},
        {{0, 0}, {2, 1}, {3, 6}}, {{0, 0}, {2, 3}, {3, 7}},
        {{0, 0}, {2, 5}, {3, 8}}, {{0, 0}, {2, 7}, {3, 9}},
        {{0, 0}, {2, 9}, {3, 0}}, {{1, 0}, {2, 5}, {3, 1}},
        {{1, 0}, {2, 6}, {3, 3}}, {{1, 0}, {2, 7}, {3, 5}},
        {{1, 0}, {2, 8}, {3, 7}}, {{1, 0}, {2, 9}, {3, 9}},
    };
    for (int channel = 0; channel < 4; ++channel) {
        patterns.push_back({{channel, 0}, {channel, 1}, {channel, 2}});
        patterns.push_back({{channel, 0}, {channel, 3}, {channel, 6}});
    }
    return Code({4, 10, 3}, std::move(patterns));
}

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> list = {"example1", "example2", "example3", "example4",
                                                  "example6"};
    return list;
}

/// Fixture by name, converted to a Code where needed (single-channel CACs as
/// M=1 codes, designs as their column patterns).
inline Code as_code(const std::string& name) {
    if (name == "example1") return example1();
    if (name == "example2") return cac_to_code(example2());
    if (name == "example3") {
        DifferenceMatrix matrix = example3();
        return Code({matrix.row_count(), matrix.length, matrix.row_count()},
                    gbrd_to_patterns(gbrd_from_difference_matrix(matrix)));
    }
    if (name == "example4") {
        Gbrd design = example4();
        return Code({design.rows, design.length, design.weight}, gbrd_to_patterns(design));
    }
    if (name == "example6") return example6();
    throw std::invalid_argument("catalog: unknown fixture '" + name + "'");
}

}  // namespace catalog
}  // namespace mccac

#endif  // MCCAC_CATALOG_HPP
