#ifndef MCCAC_COMPOSE_HPP
#define MCCAC_COMPOSE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mccac/bounds.hpp"
#include "mccac/cac.hpp"
#include "mccac/code.hpp"
#include "mccac/errors.hpp"
#include "mccac/gbrd.hpp"
#include "mccac/numtheory.hpp"

namespace mccac {

struct OptimalityCertificate {
    std::string construction_case;   // which exceptional-generator case fired
    std::string gbrd_source;         // "explicit-4x4t", "multiplication-table", "search"
    long long formula_count = 0;     // closed-form codeword count for the case
    long long bound_value = 0;       // case-table bound for (M,L,w)
    std::string bound_case;
    bool meets_bound = false;        // code size equals the table bound
    std::optional<long long> bound_construction_claim;  // series value when it disagrees
};

struct Composition {
    Code code;
    Cac cac;          // single-channel ingredient
    Gbrd gbrd;        // cross-channel ingredient
    OptimalityCertificate certificate;
};

namespace detail {

inline Code assemble(const CodeParams& params, const Gbrd& gbrd, const Cac& cac) {
    std::vector<SchedulingPattern> patterns = gbrd_to_patterns(gbrd);
    for (int channel = 0; channel < params.channels; ++channel) {
        for (const auto& times : cac.patterns) {
            std::vector<Slot> entries;
            entries.reserve(times.size());
            for (int t : times) entries.push_back({channel, t});
            patterns.emplace_back(std::move(entries));
        }
    }
    return Code(params, std::move(patterns));
}

struct ExceptionalProfile {
    bool third = false;   // generator L/3 (weight 3)
    bool quarter = false; // generator L/4
    bool fifth = false;   // generator class {+-L/5, +-2L/5} (weight 4)
};

inline ExceptionalProfile exceptional_profile(const Cac& cac) {
    ExceptionalProfile profile;
    if (!cac.generators) return profile;
    const int L = cac.length;
    for (int g : *cac.generators) {
        if (cac.weight == 3) {
            if (L % 3 == 0 && g == normalize_generator(L / 3, L)) profile.third = true;
            if (L % 4 == 0 && g == L / 4) profile.quarter = true;
        } else {
            if (L % 4 == 0 && g == L / 4) profile.quarter = true;
            if (L % 5 == 0 && (g == L / 5 || g == normalize_generator(2 * L / 5, L)))
                profile.fifth = true;
        }
    }
    return profile;
}

inline std::pair<std::string, long long> case_formula(int M, int L, int w,
                                                      const ExceptionalProfile& p) {
    long long constant;
    std::string label;
    if (w == 3) {
        if (!p.third && !p.quarter) { constant = -3; label = "a: no exceptional generators"; }
        else if (p.third && !p.quarter) { constant = 3; label = "b: generator L/3 only"; }
        else if (!p.third && p.quarter) { constant = 0; label = "c: generator L/4 only"; }
        else { constant = 6; label = "d: generators L/3 and L/4"; }
        long long numerator =
            static_cast<long long>(M) * (2LL * M * L + L + constant);
        if (numerator % 12 != 0)
            throw std::logic_error("compose: case formula is not an integer");
        return {label, numerator / 12};
    }
    if (!p.quarter && !p.fifth) { constant = -2; label = "a: no exceptional generators"; }
    else if (p.quarter && !p.fifth) { constant = 4; label = "b: generator L/4 only"; }
    else if (!p.quarter && p.fifth) { constant = 2; label = "c: generator L/5 only"; }
    else { constant = 8; label = "d: generators L/4 and L/5"; }
    long long numerator = static_cast<long long>(M) * (static_cast<long long>(M) * L + L + constant);
    if (numerator % 12 != 0) throw std::logic_error("compose: case formula is not an integer");
    return {label, numerator / 12};
}

}  // namespace detail

/// Composes an optimal MC-CAC(M,L,w) from an equi-difference tight CAC(L,w)
/// and an M-row GBRD over Z_L: the GBRD columns become cross-channel
/// codewords and each CAC codeword is replicated once per channel.
///
/// GBRD acquisition order: the explicit 4 x 4t family, the prime
/// multiplication table, then exact search. Throws
/// ConstructionUnavailableError naming the missing ingredient.
inline Composition compose_optimal(int channels, int length, int weight,
                                   std::uint64_t cac_budget = 50'000'000,
                                   std::uint64_t gbrd_budget = 50'000'000) {
    if (weight != 3 && weight != 4)
        throw UnsupportedWeightError("compose_optimal: weight must be 3 or 4");
    if (channels < weight)
        throw std::invalid_argument("compose_optimal: need channels >= weight");
    if (length < channels)
        throw std::invalid_argument("compose_optimal: need length >= channels");

    CacSearchResult cac_search = search_equi_diff_tight_cac(length, weight, cac_budget);
    if (cac_search.status == SearchStatus::ProvenNonexistent)
        throw ConstructionUnavailableError(
            "equi-difference tight CAC",
            "none exists for length " + std::to_string(length) + ", weight " +
                std::to_string(weight));
    if (cac_search.status == SearchStatus::BudgetExhausted)
        throw ConstructionUnavailableError("equi-difference tight CAC", "search budget exhausted");
    Cac cac = *cac_search.cac;

    Gbrd gbrd;
    std::string gbrd_source;
    if (channels == 4 && weight == 3 && length % 2 == 0) {
        gbrd = gbrd_4x4t(length / 2);
        gbrd_source = "explicit-4x4t";
    } else if (channels == weight && is_prime(length) && length >= channels) {
        gbrd = gbrd_from_difference_matrix(difference_matrix_prime(channels, length));
        gbrd_source = "multiplication-table";
    } else {
        GbrdSearchResult gbrd_search = search_gbrd(channels, length, weight, gbrd_budget);
        if (gbrd_search.status == SearchStatus::ProvenNonexistent)
            throw ConstructionUnavailableError("GBRD", "none exists for M=" +
                                               std::to_string(channels) + ", L=" +
                                               std::to_string(length) + ", w=" +
                                               std::to_string(weight));
        if (gbrd_search.status == SearchStatus::BudgetExhausted)
            throw ConstructionUnavailableError("GBRD", "search budget exhausted");
        gbrd = *gbrd_search.gbrd;
        gbrd_source = "search";
    }
    if (!verify_gbrd(gbrd, length, weight))
        throw std::logic_error("compose_optimal: GBRD ingredient failed verification");

    CodeParams params{channels, length, weight};
    Code code = detail::assemble(params, gbrd, cac);
    if (!verify_code(code).valid)
        throw std::logic_error("compose_optimal: composed code failed verification");

    auto [case_label, formula] =
        detail::case_formula(channels, length, weight, detail::exceptional_profile(cac));
    if (formula != code.size())
        throw std::logic_error("compose_optimal: codeword count does not match the case formula");

    BoundResult bound =
        weight == 3 ? bound_weight3(channels, length) : bound_weight4(channels, length);

    Composition out{std::move(code), std::move(cac), std::move(gbrd), {}};
    out.certificate.construction_case = case_label;
    out.certificate.gbrd_source = gbrd_source;
    out.certificate.formula_count = formula;
    out.certificate.bound_value = bound.value;
    out.certificate.bound_case = bound.formula_case;
    out.certificate.meets_bound = (formula == bound.value);
    out.certificate.bound_construction_claim = bound.construction_claim;
    return out;
}

/// The even-length family: MC-CAC(4,2t,3) with 6t-2 codewords, from the
/// explicit 4 x 4t GBRD plus four per-channel copies of a CAC(2t,3) with
/// (t-1)/2 codewords. Requires the same hypothesis on t as momihara_cac.
inline Composition family_4_2t(int t, std::uint64_t cac_budget = 50'000'000) {
    Cac cac = momihara_cac(t, cac_budget);  // throws HypothesisNotMetError
    Gbrd gbrd = gbrd_4x4t(t);
    const int length = 2 * t;
    if (!verify_gbrd(gbrd, length, 3))
        throw std::logic_error("family_4_2t: GBRD failed verification");

    CodeParams params{4, length, 3};
    Code code = detail::assemble(params, gbrd, cac);
    if (!verify_code(code).valid)
        throw std::logic_error("family_4_2t: composed code failed verification");
    const long long expected = 6LL * t - 2;
    if (code.size() != expected)
        throw std::logic_error("family_4_2t: codeword count is not 6t-2");

    BoundResult bound = bound_weight3(4, length);
    Composition out{std::move(code), std::move(cac), std::move(gbrd), {}};
    out.certificate.construction_case = "even-length family, 6t-2 codewords";
    out.certificate.gbrd_source = "explicit-4x4t";
    out.certificate.formula_count = expected;
    out.certificate.bound_value = bound.value;
    out.certificate.bound_case = bound.formula_case;
    out.certificate.meets_bound = (expected == bound.value);
    out.certificate.bound_construction_claim = bound.construction_claim;
    return out;
}

}  // namespace mccac

#endif  // MCCAC_COMPOSE_HPP
