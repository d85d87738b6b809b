#ifndef MCCAC_BOUNDS_HPP
#define MCCAC_BOUNDS_HPP

#include <optional>
#include <string>

#include "mccac/errors.hpp"

namespace mccac {

struct BoundAssumptions {
    int weight = 0;
    int min_channels = 0;
    bool restricted = false;
};

/// Value of a closed-form upper bound on the code size A(M,L,w), together
/// with the residue case that produced it.
///
/// For weight 3 and L = +-2 (mod 12) the even-length composition series
/// claims a smaller optimal size than this table value (constant -6 instead
/// of 0 in the formula). That claimed value is reported in
/// construction_claim so callers can surface the disagreement; the table
/// value is authoritative as an upper bound.
struct BoundResult {
    long long value = 0;
    std::string formula_case;
    BoundAssumptions assumptions;
    std::optional<long long> construction_claim;
};

namespace detail {

inline long long floor_div(long long num, long long den) {
    long long q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

}  // namespace detail

/// Indicator sum [2|L] + 2[3|L] + 2[4|L] + 2[5|L] used by the weight-4 bound.
inline int divisibility_indicator(int length) {
    if (length < 1) throw std::invalid_argument("divisibility_indicator: length must be >= 1");
    int j = 0;
    if (length % 2 == 0) j += 1;
    if (length % 3 == 0) j += 2;
    if (length % 4 == 0) j += 2;
    if (length % 5 == 0) j += 2;
    return j;
}

/// Upper bound on A(M,L,3) via the residue-case table keyed on L mod 12.
/// Requires M >= 3.
inline BoundResult bound_weight3(int channels, int length) {
    if (length < 1) throw std::invalid_argument("bound_weight3: length must be >= 1");
    if (channels < 3)
        throw BoundNotApplicableError("bound_weight3: requires at least 3 channels, got " +
                                      std::to_string(channels));
    const long long M = channels, L = length;
    const int r = length % 12;

    long long constant;
    std::string label;
    if (r == 0 || r == 6) {
        constant = 6;
        label = "L = 0,6 mod 12";
    } else if (r == 3 || r == 9) {
        constant = 3;
        label = "L = +-3 mod 12";
    } else if (r == 2 || r == 4 || r == 8 || r == 10) {
        constant = 0;
        label = "L = +-2,+-4 mod 12";
    } else {
        constant = -3;
        label = "L = +-1,+-5 mod 12";
    }

    BoundResult result;
    result.value = detail::floor_div(M * (2 * M * L + L + constant), 12);
    result.formula_case = label;
    result.assumptions = {3, 3, false};
    if (r == 2 || r == 10) {
        // size achieved by the optimal even-length family; differs from the table
        result.construction_claim = detail::floor_div(M * (2 * M * L + L - 6), 12);
    }
    return result;
}

/// Same bound computed from the single closed form
/// floor(M/12 * (2ML + L - 3 + 3[2|L] + 6[3|L])); must agree with the table.
inline long long bound_weight3_closed_form(int channels, int length) {
    if (length < 1) throw std::invalid_argument("bound_weight3_closed_form: length must be >= 1");
    if (channels < 3)
        throw BoundNotApplicableError("bound_weight3_closed_form: requires at least 3 channels");
    const long long M = channels, L = length;
    long long constant = -3;
    if (length % 2 == 0) constant += 3;
    if (length % 3 == 0) constant += 6;
    return detail::floor_div(M * (2 * M * L + L + constant), 12);
}

/// Upper bound on A(M,L,4) via the residue-case table keyed on L mod 60.
/// Requires M >= 4.
inline BoundResult bound_weight4(int channels, int length) {
    if (length < 1) throw std::invalid_argument("bound_weight4: length must be >= 1");
    if (channels < 4)
        throw BoundNotApplicableError("bound_weight4: requires at least 4 channels, got " +
                                      std::to_string(channels));
    const long long M = channels, L = length;
    const int r = length % 60;
    auto in = [r](std::initializer_list<int> residues) {
        for (int x : residues) {
            if (r == x || r == (60 - x) % 60) return true;
        }
        return false;
    };

    BoundResult result;
    result.assumptions = {4, 4, false};
    if (r == 0) {
        result.value = detail::floor_div(M * (M * L + L), 12) + 1;
        result.formula_case = "L = 0 mod 60";
    } else if (in({12, 20, 24, 30})) {
        result.value = detail::floor_div(M * (M * L + L + 8), 12);
        result.formula_case = "L = +-12,+-20,+-24,30 mod 60";
    } else if (in({15})) {
        result.value = detail::floor_div(M * (M * L + L + 6), 12);
        result.formula_case = "L = +-15 mod 60";
    } else if (in({4, 6, 8, 10, 16, 18, 28})) {
        result.value = detail::floor_div(M * (M * L + L + 4), 12);
        result.formula_case = "L = +-4,+-6,+-8,+-10,+-16,+-18,+-28 mod 60";
    } else if (in({3, 5, 9, 21, 25, 27})) {
        result.value = detail::floor_div(M * (M * L + L + 2), 12);
        result.formula_case = "L = +-3,+-5,+-9,+-21,+-25,+-27 mod 60";
    } else if (in({2, 14, 22, 26})) {
        result.value = detail::floor_div(M * (M * L + L), 12);
        result.formula_case = "L = +-2,+-14,+-22,+-26 mod 60";
    } else {
        result.value = detail::floor_div(M * (M * L + L - 2), 12);
        result.formula_case = "gcd(L,60) = 1";
    }
    return result;
}

/// Weight-4 bound in indicator form: floor(M/12 * (ML + L - 2 + 2J)).
/// Equals bound_weight4 for every L except L = 0 (mod 60), where the table
/// carries a tighter "+1" constant.
inline BoundResult bound_weight4_derived(int channels, int length) {
    if (length < 1) throw std::invalid_argument("bound_weight4_derived: length must be >= 1");
    if (channels < 4)
        throw BoundNotApplicableError("bound_weight4_derived: requires at least 4 channels");
    const long long M = channels, L = length;
    const long long J = divisibility_indicator(length);
    BoundResult result;
    result.value = detail::floor_div(M * (M * L + L - 2 + 2 * J), 12);
    result.formula_case = "indicator form, J = " + std::to_string(J);
    result.assumptions = {4, 4, false};
    return result;
}

/// Upper bound under the one-transmitter-per-slot restriction.
/// w = 3: floor(M/12 * ((2M+1)(L-1) + 3[2|L] + 6[3|L]))
/// w = 4: floor(M/12 * ((M+1)(L-1) + 2J))
inline BoundResult bound_restricted(int channels, int length, int weight) {
    if (length < 1) throw std::invalid_argument("bound_restricted: length must be >= 1");
    if (weight != 3 && weight != 4)
        throw UnsupportedWeightError("bound_restricted: only weights 3 and 4, got " +
                                     std::to_string(weight));
    if (channels < weight)
        throw BoundNotApplicableError("bound_restricted: requires at least w channels");
    const long long M = channels, L = length;
    BoundResult result;
    result.assumptions = {weight, weight, true};
    if (weight == 3) {
        long long extra = 0;
        if (length % 2 == 0) extra += 3;
        if (length % 3 == 0) extra += 6;
        result.value = detail::floor_div(M * ((2 * M + 1) * (L - 1) + extra), 12);
        result.formula_case = "restricted, w = 3";
    } else {
        const long long J = divisibility_indicator(length);
        result.value = detail::floor_div(M * ((M + 1) * (L - 1) + 2 * J), 12);
        result.formula_case = "restricted, w = 4";
    }
    return result;
}

}  // namespace mccac

#endif  // MCCAC_BOUNDS_HPP
