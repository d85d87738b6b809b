#ifndef MCCAC_ZL_SET_HPP
#define MCCAC_ZL_SET_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mccac {

/// Subset of the cyclic group Z_L, stored as a bitset.
class ZlSet {
public:
    ZlSet() : modulus_(0) {}

    explicit ZlSet(int modulus) : modulus_(modulus), bits_((modulus + 63) / 64, 0) {
        if (modulus < 1) throw std::invalid_argument("ZlSet: modulus must be positive");
    }

    int modulus() const { return modulus_; }

    /// Inserts x mod L (negative x allowed).
    void insert(long long x) {
        const int v = reduce(x);
        bits_[v >> 6] |= (std::uint64_t{1} << (v & 63));
    }

    void erase(long long x) {
        const int v = reduce(x);
        bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    bool contains(long long x) const {
        const int v = reduce(x);
        return (bits_[v >> 6] >> (v & 63)) & 1;
    }

    int size() const {
        int n = 0;
        for (auto word : bits_) n += std::popcount(word);
        return n;
    }

    bool empty() const {
        for (auto word : bits_) {
            if (word) return false;
        }
        return true;
    }

    bool intersects(const ZlSet& other) const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] & other.bits_[i]) return true;
        }
        return false;
    }

    void merge(const ZlSet& other) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
    }

    void subtract(const ZlSet& other) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~other.bits_[i];
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (int v = 0; v < modulus_; ++v) {
            if (contains(v)) out.push_back(v);
        }
        return out;
    }

    /// Smallest element, or -1 if empty.
    int first() const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i]) return static_cast<int>(i * 64 + std::countr_zero(bits_[i]));
        }
        return -1;
    }

    friend bool operator==(const ZlSet& a, const ZlSet& b) {
        return a.modulus_ == b.modulus_ && a.bits_ == b.bits_;
    }

private:
    int reduce(long long x) const {
        long long v = x % modulus_;
        if (v < 0) v += modulus_;
        return static_cast<int>(v);
    }

    int modulus_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace mccac

#endif  // MCCAC_ZL_SET_HPP
