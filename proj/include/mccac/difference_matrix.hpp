#ifndef MCCAC_DIFFERENCE_MATRIX_HPP
#define MCCAC_DIFFERENCE_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "mccac/numtheory.hpp"
#include "mccac/zl_set.hpp"

namespace mccac {

/// k x L matrix over Z_L in which the difference vector of any two distinct
/// rows contains every element of Z_L exactly once.
struct DifferenceMatrix {
    int length = 0;                       // L, also the column count
    std::vector<std::vector<int>> rows;   // entries in Z_L

    int row_count() const { return static_cast<int>(rows.size()); }
};

/// The k x p multiplication table (i*j mod p) for prime p.
inline DifferenceMatrix difference_matrix_prime(int k, int p) {
    if (!is_prime(p)) throw std::invalid_argument("difference_matrix_prime: " +
                                                  std::to_string(p) + " is not prime");
    if (k < 1 || k > p)
        throw std::invalid_argument("difference_matrix_prime: need 1 <= k <= p");
    DifferenceMatrix matrix;
    matrix.length = p;
    matrix.rows.assign(k, std::vector<int>(p, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < p; ++j) matrix.rows[i][j] = static_cast<int>(
            (static_cast<long long>(i) * j) % p);
    }
    return matrix;
}

inline bool verify_difference_matrix(const DifferenceMatrix& matrix) {
    const int L = matrix.length;
    if (L < 1) return false;
    for (const auto& row : matrix.rows) {
        if (static_cast<int>(row.size()) != L) return false;
        for (int v : row) {
            if (v < 0 || v >= L) return false;
        }
    }
    for (int i = 0; i < matrix.row_count(); ++i) {
        for (int j = i + 1; j < matrix.row_count(); ++j) {
            ZlSet seen(L);
            for (int c = 0; c < L; ++c) {
                int d = matrix.rows[i][c] - matrix.rows[j][c];
                if (seen.contains(d)) return false;
                seen.insert(d);
            }
            if (seen.size() != L) return false;
        }
    }
    return true;
}

}  // namespace mccac

#endif  // MCCAC_DIFFERENCE_MATRIX_HPP
