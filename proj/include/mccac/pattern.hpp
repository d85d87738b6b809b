#ifndef MCCAC_PATTERN_HPP
#define MCCAC_PATTERN_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mccac/errors.hpp"
#include "mccac/zl_set.hpp"

namespace mccac {

/// Parameters of a multichannel code: M channels, period L, codeword weight w.
struct CodeParams {
    int channels = 0;  // M
    int length = 0;    // L, slots per period
    int weight = 0;    // w, packets per codeword

    void validate() const {
        if (channels < 1) throw std::invalid_argument("CodeParams: channels must be >= 1");
        if (length < 1) throw std::invalid_argument("CodeParams: length must be >= 1");
        if (weight < 1) throw std::invalid_argument("CodeParams: weight must be >= 1");
        if (static_cast<long long>(weight) > static_cast<long long>(channels) * length)
            throw std::invalid_argument("CodeParams: weight exceeds channels*length");
    }

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// One transmission position: channel index and time index within the period.
struct Slot {
    int channel = 0;
    int time = 0;

    auto operator<=>(const Slot&) const = default;
};

/// A codeword's set of transmission positions, kept sorted by (channel, time).
class SchedulingPattern {
public:
    SchedulingPattern() = default;

    explicit SchedulingPattern(std::vector<Slot> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end());
        auto dup = std::adjacent_find(entries_.begin(), entries_.end());
        if (dup != entries_.end())
            throw std::invalid_argument("SchedulingPattern: duplicate entry (" +
                                        std::to_string(dup->channel) + "," +
                                        std::to_string(dup->time) + ")");
    }

    SchedulingPattern(std::initializer_list<Slot> entries)
        : SchedulingPattern(std::vector<Slot>(entries)) {}

    const std::vector<Slot>& entries() const { return entries_; }
    int weight() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    bool contains(Slot s) const {
        return std::binary_search(entries_.begin(), entries_.end(), s);
    }

    /// All entries shifted by tau slots (mod length), channels untouched.
    SchedulingPattern shifted(int tau, int length) const {
        std::vector<Slot> out;
        out.reserve(entries_.size());
        for (const Slot& e : entries_) {
            int t = (e.time + tau) % length;
            if (t < 0) t += length;
            out.push_back({e.channel, t});
        }
        return SchedulingPattern(std::move(out));
    }

    int max_channel() const {
        int m = -1;
        for (const Slot& e : entries_) m = std::max(m, e.channel);
        return m;
    }

    int max_time() const {
        int t = -1;
        for (const Slot& e : entries_) t = std::max(t, e.time);
        return t;
    }

    bool fits(const CodeParams& params) const {
        for (const Slot& e : entries_) {
            if (e.channel < 0 || e.channel >= params.channels) return false;
            if (e.time < 0 || e.time >= params.length) return false;
        }
        return true;
    }

    /// True when no two entries share a time index (one transmitter per slot).
    bool single_transmission_per_slot() const {
        std::vector<int> times;
        times.reserve(entries_.size());
        for (const Slot& e : entries_) times.push_back(e.time);
        std::sort(times.begin(), times.end());
        return std::adjacent_find(times.begin(), times.end()) == times.end();
    }

    auto operator<=>(const SchedulingPattern&) const = default;

private:
    std::vector<Slot> entries_;
};

/// Lexicographically least pattern among all L cyclic time shifts.
/// Idempotent; all shifts of a pattern map to the same representative.
inline SchedulingPattern canonicalize(const SchedulingPattern& pattern, int length) {
    if (pattern.empty()) throw std::invalid_argument("canonicalize: empty pattern");
    if (length < 1) throw std::invalid_argument("canonicalize: length must be >= 1");
    SchedulingPattern best = pattern.shifted(0, length);
    for (int tau = 1; tau < length; ++tau) {
        SchedulingPattern candidate = pattern.shifted(tau, length);
        if (candidate < best) best = candidate;
    }
    return best;
}

/// Number of distinct time shifts of the pattern (divides L).
inline int shift_orbit_size(const SchedulingPattern& pattern, int length) {
    for (int tau = 1; tau < length; ++tau) {
        if (pattern.shifted(tau, length) == pattern) return tau;
    }
    return length;
}

/// Set of slot differences t1 - t2 (mod L) between channel-i1 and channel-i2
/// entries of the pattern, with 0 removed when i1 == i2.
inline ZlSet difference_set(const SchedulingPattern& pattern, int i1, int i2, int length) {
    if (i1 < 0 || i2 < 0)
        throw std::out_of_range("difference_set: channel index out of range");
    if (length < 1) throw std::invalid_argument("difference_set: length must be >= 1");
    ZlSet out(length);
    for (const Slot& a : pattern.entries()) {
        if (a.channel != i1) continue;
        for (const Slot& b : pattern.entries()) {
            if (b.channel != i2) continue;
            out.insert(a.time - b.time);
        }
    }
    if (i1 == i2) out.erase(0);
    return out;
}

/// M x M grid of difference sets of one pattern.
class DifferenceArray {
public:
    DifferenceArray(int channels, int length)
        : channels_(channels), length_(length), cells_(channels * channels, ZlSet(length)) {
        if (channels < 1) throw std::invalid_argument("DifferenceArray: channels must be >= 1");
    }

    int channels() const { return channels_; }
    int length() const { return length_; }

    const ZlSet& cell(int i1, int i2) const {
        check(i1);
        check(i2);
        return cells_[i1 * channels_ + i2];
    }

    ZlSet& cell(int i1, int i2) {
        check(i1);
        check(i2);
        return cells_[i1 * channels_ + i2];
    }

    /// Entry-wise intersection test against another array of the same shape.
    bool intersects(const DifferenceArray& other) const {
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (cells_[i].intersects(other.cells_[i])) return true;
        }
        return false;
    }

    int total_size() const {
        int n = 0;
        for (const auto& c : cells_) n += c.size();
        return n;
    }

    friend bool operator==(const DifferenceArray&, const DifferenceArray&) = default;

private:
    void check(int i) const {
        if (i < 0 || i >= channels_)
            throw std::out_of_range("DifferenceArray: channel index out of range");
    }

    int channels_ = 0;
    int length_ = 0;
    std::vector<ZlSet> cells_;
};

inline DifferenceArray difference_array(const SchedulingPattern& pattern,
                                        const CodeParams& params) {
    params.validate();
    if (!pattern.fits(params))
        throw std::out_of_range("difference_array: pattern entry outside channels x length");
    DifferenceArray out(params.channels, params.length);
    for (int i1 = 0; i1 < params.channels; ++i1) {
        for (int i2 = 0; i2 < params.channels; ++i2) {
            out.cell(i1, i2) = difference_set(pattern, i1, i2, params.length);
        }
    }
    return out;
}

/// Channel-occupancy classification of weight-3 and weight-4 patterns.
enum class PatternTypeTag {
    W3_I,    // all three packets in one channel
    W3_II,   // three distinct channels
    W3_III,  // two packets in one channel, one in another
    W4_I,    // all four packets in one channel
    W4_II,   // four distinct channels
    W4_III,  // 3 + 1 split over two channels
    W4_IV,   // 2 + 2 split over two channels
    W4_V,    // 2 + 1 + 1 split over three channels
};

inline const char* to_string(PatternTypeTag tag) {
    switch (tag) {
        case PatternTypeTag::W3_I: return "W3-I";
        case PatternTypeTag::W3_II: return "W3-II";
        case PatternTypeTag::W3_III: return "W3-III";
        case PatternTypeTag::W4_I: return "W4-I";
        case PatternTypeTag::W4_II: return "W4-II";
        case PatternTypeTag::W4_III: return "W4-III";
        case PatternTypeTag::W4_IV: return "W4-IV";
        case PatternTypeTag::W4_V: return "W4-V";
    }
    return "?";
}

struct PatternType {
    PatternTypeTag tag;
    std::vector<int> occupancy;  // packets per occupied channel, descending

    friend bool operator==(const PatternType&, const PatternType&) = default;
};

/// Packets per occupied channel, sorted descending.
inline std::vector<int> occupancy_partition(const SchedulingPattern& pattern) {
    std::map<int, int> per_channel;
    for (const Slot& e : pattern.entries()) ++per_channel[e.channel];
    std::vector<int> out;
    out.reserve(per_channel.size());
    for (const auto& [channel, count] : per_channel) out.push_back(count);
    std::sort(out.rbegin(), out.rend());
    return out;
}

inline PatternType classify(const SchedulingPattern& pattern) {
    const int w = pattern.weight();
    if (w != 3 && w != 4)
        throw UnsupportedWeightError("classify: only weights 3 and 4 are classified, got " +
                                     std::to_string(w));
    std::vector<int> part = occupancy_partition(pattern);
    PatternTypeTag tag;
    if (w == 3) {
        if (part == std::vector<int>{3}) tag = PatternTypeTag::W3_I;
        else if (part == std::vector<int>{1, 1, 1}) tag = PatternTypeTag::W3_II;
        else tag = PatternTypeTag::W3_III;
    } else {
        if (part == std::vector<int>{4}) tag = PatternTypeTag::W4_I;
        else if (part == std::vector<int>{1, 1, 1, 1}) tag = PatternTypeTag::W4_II;
        else if (part == std::vector<int>{3, 1}) tag = PatternTypeTag::W4_III;
        else if (part == std::vector<int>{2, 2}) tag = PatternTypeTag::W4_IV;
        else tag = PatternTypeTag::W4_V;
    }
    return PatternType{tag, std::move(part)};
}

/// Sizes |D_S(i1,i2)| for every ordered channel pair.
inline std::map<std::pair<int, int>, int> difference_profile(const SchedulingPattern& pattern,
                                                             const CodeParams& params) {
    DifferenceArray array = difference_array(pattern, params);
    std::map<std::pair<int, int>, int> out;
    for (int i1 = 0; i1 < params.channels; ++i1) {
        for (int i2 = 0; i2 < params.channels; ++i2) {
            out[{i1, i2}] = array.cell(i1, i2).size();
        }
    }
    return out;
}

}  // namespace mccac

#endif  // MCCAC_PATTERN_HPP
