#ifndef MCCAC_CODE_HPP
#define MCCAC_CODE_HPP

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "mccac/errors.hpp"
#include "mccac/pattern.hpp"

namespace mccac {

/// A multichannel code: parameters plus an ordered list of scheduling patterns.
///
/// Patterns are stored in canonical shift form. Construction checks that all
/// entries fit the parameter box; weight conformance and pairwise disjointness
/// are the verifier's job, so ill-formed codes can be represented and reported.
class Code {
public:
    Code() = default;

    Code(CodeParams params, std::vector<SchedulingPattern> patterns)
        : params_(params) {
        params_.validate();
        patterns_.reserve(patterns.size());
        for (auto& p : patterns) {
            if (!p.fits(params_))
                throw CodeValidationError("Code: pattern entry outside channels x length");
            if (p.empty()) throw CodeValidationError("Code: empty pattern");
            patterns_.push_back(canonicalize(p, params_.length));
        }
    }

    const CodeParams& params() const { return params_; }
    const std::vector<SchedulingPattern>& patterns() const { return patterns_; }
    int size() const { return static_cast<int>(patterns_.size()); }

    friend bool operator==(const Code&, const Code&) = default;

private:
    CodeParams params_;
    std::vector<SchedulingPattern> patterns_;
};

/// One disjointness failure: patterns a and b both place difference d in cell (i1,i2).
struct Conflict {
    int pattern_a = 0;
    int pattern_b = 0;
    int channel_a = 0;
    int channel_b = 0;
    int difference = 0;

    friend bool operator==(const Conflict&, const Conflict&) = default;
};

/// A cross-correlation value above 1, found by the definitional verifier.
struct CorrelationViolation {
    int pattern_a = 0;
    int pattern_b = 0;
    int shift = 0;
    int value = 0;

    friend bool operator==(const CorrelationViolation&, const CorrelationViolation&) = default;
};

struct VerificationReport {
    bool valid = false;
    std::vector<int> weight_violations;        // pattern indices with |S| != w
    std::vector<int> restricted_violations;    // patterns with two packets in one slot
    std::vector<Conflict> conflicts;           // difference-set clashes (all of them)
    std::vector<CorrelationViolation> correlation_violations;
    std::string method;                        // "difference-array" or "cross-correlation"
};

/// Disjointness verifier: valid iff every pattern has weight w and, for every
/// ordered channel pair, the difference sets of all patterns are pairwise
/// disjoint. With restricted=true, patterns must also use each time slot at
/// most once. Violations are collected, never thrown.
inline VerificationReport verify_code(const Code& code, bool restricted = false) {
    const CodeParams& params = code.params();
    VerificationReport report;
    report.method = "difference-array";

    for (int k = 0; k < code.size(); ++k) {
        if (code.patterns()[k].weight() != params.weight) report.weight_violations.push_back(k);
        if (restricted && !code.patterns()[k].single_transmission_per_slot())
            report.restricted_violations.push_back(k);
    }

    std::vector<DifferenceArray> arrays;
    arrays.reserve(code.size());
    for (const auto& p : code.patterns()) arrays.push_back(difference_array(p, params));

    for (int a = 0; a < code.size(); ++a) {
        for (int b = a + 1; b < code.size(); ++b) {
            for (int i1 = 0; i1 < params.channels; ++i1) {
                for (int i2 = 0; i2 < params.channels; ++i2) {
                    const ZlSet& ca = arrays[a].cell(i1, i2);
                    const ZlSet& cb = arrays[b].cell(i1, i2);
                    if (!ca.intersects(cb)) continue;
                    for (int d = 0; d < params.length; ++d) {
                        if (ca.contains(d) && cb.contains(d))
                            report.conflicts.push_back({a, b, i1, i2, d});
                    }
                }
            }
        }
    }

    report.valid = report.weight_violations.empty() && report.restricted_violations.empty() &&
                   report.conflicts.empty();
    return report;
}

/// Hamming cross-correlation of codewords k and l at time shift tau:
/// the number of positions (i,j) occupied by k whose tau-shift is occupied by l.
inline int cross_correlation(const Code& code, int k, int l, int tau) {
    if (k == l) throw InvalidPairError("cross_correlation: k and l must differ");
    if (k < 0 || l < 0 || k >= code.size() || l >= code.size())
        throw std::out_of_range("cross_correlation: codeword index out of range");
    const int length = code.params().length;
    const SchedulingPattern& a = code.patterns()[k];
    const SchedulingPattern& b = code.patterns()[l];
    int count = 0;
    for (const Slot& e : a.entries()) {
        int t = (e.time + tau) % length;
        if (t < 0) t += length;
        if (b.contains({e.channel, t})) ++count;
    }
    return count;
}

/// Definitional verifier: weight-w codewords whose pairwise cross-correlation
/// is at most 1 for every shift. Agrees with verify_code on the valid bit.
inline VerificationReport verify_definitional(const Code& code) {
    const CodeParams& params = code.params();
    VerificationReport report;
    report.method = "cross-correlation";

    for (int k = 0; k < code.size(); ++k) {
        if (code.patterns()[k].weight() != params.weight) report.weight_violations.push_back(k);
    }
    for (int k = 0; k < code.size(); ++k) {
        for (int l = k + 1; l < code.size(); ++l) {
            for (int tau = 0; tau < params.length; ++tau) {
                int value = cross_correlation(code, k, l, tau);
                if (value > 1) report.correlation_violations.push_back({k, l, tau, value});
            }
        }
    }
    report.valid = report.weight_violations.empty() && report.correlation_violations.empty();
    return report;
}

/// Key of one channel-occupancy census bucket. The channel list is ordered the
/// way the bucket is indexed: sorted for symmetric buckets, and (host, guests)
/// order for the asymmetric splits (2+1, 1+3, 2+1+1).
struct CensusKey {
    PatternTypeTag type;
    std::vector<int> channels;

    auto operator<=>(const CensusKey&) const = default;
};

using Census = std::map<CensusKey, int>;

/// Counts codewords per channel-occupancy bucket (weights 3 and 4 only).
inline Census type_census(const Code& code) {
    const int w = code.params().weight;
    if (w != 3 && w != 4)
        throw UnsupportedWeightError("type_census: only weights 3 and 4, got " +
                                     std::to_string(w));
    Census census;
    for (const auto& pattern : code.patterns()) {
        std::map<int, int> per_channel;
        for (const Slot& e : pattern.entries()) ++per_channel[e.channel];
        PatternType type = classify(pattern);

        std::vector<int> key_channels;
        switch (type.tag) {
            case PatternTypeTag::W3_I:
            case PatternTypeTag::W4_I:
                key_channels.push_back(per_channel.begin()->first);
                break;
            case PatternTypeTag::W3_II:
            case PatternTypeTag::W4_II:
            case PatternTypeTag::W4_IV:
                for (const auto& [channel, count] : per_channel) key_channels.push_back(channel);
                break;
            case PatternTypeTag::W3_III: {
                // host channel (2 packets) first, then the single-packet channel
                int host = -1, guest = -1;
                for (const auto& [channel, count] : per_channel)
                    (count == 2 ? host : guest) = channel;
                key_channels = {host, guest};
                break;
            }
            case PatternTypeTag::W4_III: {
                // single-packet channel first, then the 3-packet channel
                int single = -1, triple = -1;
                for (const auto& [channel, count] : per_channel)
                    (count == 1 ? single : triple) = channel;
                key_channels = {single, triple};
                break;
            }
            case PatternTypeTag::W4_V: {
                int host = -1;
                std::vector<int> guests;
                for (const auto& [channel, count] : per_channel) {
                    if (count == 2) host = channel;
                    else guests.push_back(channel);
                }
                key_channels.push_back(host);
                key_channels.insert(key_channels.end(), guests.begin(), guests.end());
                break;
            }
        }
        ++census[CensusKey{type.tag, std::move(key_channels)}];
    }
    return census;
}

inline int census_total(const Census& census) {
    int total = 0;
    for (const auto& [key, count] : census) total += count;
    return total;
}

}  // namespace mccac

#endif  // MCCAC_CODE_HPP
