#ifndef MCCAC_ENUMERATE_HPP
#define MCCAC_ENUMERATE_HPP

#include <string>
#include <vector>

#include "mccac/errors.hpp"
#include "mccac/pattern.hpp"

namespace mccac {

struct EnumerationLimits {
    long long max_cells = 64;  // cap on M*L
    int max_weight = 4;
};

/// All weight-w patterns reduced to canonical shift representatives, in
/// lexicographic order, with the size of each pattern's shift orbit.
struct PatternUniverse {
    CodeParams params;
    bool restricted = false;
    std::vector<SchedulingPattern> patterns;
    std::vector<int> orbit_sizes;
};

inline PatternUniverse enumerate_patterns(const CodeParams& params, bool restricted,
                                          const EnumerationLimits& limits = {}) {
    params.validate();
    const long long cells = static_cast<long long>(params.channels) * params.length;
    if (cells > limits.max_cells)
        throw InstanceTooLargeError("enumerate_patterns: M*L = " + std::to_string(cells) +
                                    " exceeds cap " + std::to_string(limits.max_cells));
    if (params.weight > limits.max_weight)
        throw InstanceTooLargeError("enumerate_patterns: w = " + std::to_string(params.weight) +
                                    " exceeds cap " + std::to_string(limits.max_weight));

    PatternUniverse universe;
    universe.params = params;
    universe.restricted = restricted;

    const int n = static_cast<int>(cells);
    const int w = params.weight;
    auto slot_of = [&](int cell) {
        return Slot{cell / params.length, cell % params.length};
    };

    std::vector<int> combo(w);
    for (int i = 0; i < w; ++i) combo[i] = i;
    while (true) {
        std::vector<Slot> entries;
        entries.reserve(w);
        for (int cell : combo) entries.push_back(slot_of(cell));
        SchedulingPattern pattern(std::move(entries));
        bool keep = !restricted || pattern.single_transmission_per_slot();
        if (keep && canonicalize(pattern, params.length) == pattern) {
            universe.orbit_sizes.push_back(shift_orbit_size(pattern, params.length));
            universe.patterns.push_back(std::move(pattern));
        }
        // next combination
        int i = w - 1;
        while (i >= 0 && combo[i] == n - w + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < w; ++j) combo[j] = combo[j - 1] + 1;
    }
    return universe;
}

}  // namespace mccac

#endif  // MCCAC_ENUMERATE_HPP
