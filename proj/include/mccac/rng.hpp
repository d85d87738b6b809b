#ifndef MCCAC_RNG_HPP
#define MCCAC_RNG_HPP

#include <cstdint>
#include <stdexcept>

namespace mccac {

/// Small counter-based generator (splitmix64). Streams are derived from a
/// (seed, stream) pair, so trial k of a run can be replayed in isolation and
/// results do not depend on evaluation order. Not for cryptographic use.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(seed + 0x9E3779B97F4A7C15ULL * (stream + 1))) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform integer in [0, n), unbiased via rejection.
    int below(int n) {
        if (n <= 0) throw std::invalid_argument("CounterRng::below: n must be positive");
        const std::uint64_t bound = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
        std::uint64_t x = next();
        while (x > bound) x = next();
        return static_cast<int>(x % n);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace mccac

#endif  // MCCAC_RNG_HPP
