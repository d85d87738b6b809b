#ifndef MCCAC_NUMTHEORY_HPP
#define MCCAC_NUMTHEORY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mccac {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline long long mod_pow(long long base, long long exp, long long mod) {
    long long result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

/// True iff a is a nonzero square modulo the odd prime p (Euler's criterion).
inline bool quadratic_residue(long long a, long long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("quadratic_residue: modulus must be an odd prime");
    long long r = a % p;
    if (r < 0) r += p;
    if (r == 0) return false;
    return mod_pow(r, (p - 1) / 2, p) == 1;
}

/// Smallest e >= 1 with 2^e = 1 (mod n); n must be odd and > 1.
inline int multiplicative_order_of_two(long long n) {
    if (n <= 1 || n % 2 == 0)
        throw std::invalid_argument("multiplicative_order_of_two: n must be odd and > 1");
    long long value = 2 % n;
    int e = 1;
    while (value != 1) {
        value = value * 2 % n;
        ++e;
    }
    return e;
}

inline std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Sufficient condition for an equi-difference tight weight-3 CAC of length L:
/// every prime factor p of L satisfies p = 5 (mod 8), or p = 1 (mod 8) with
/// the multiplicative order of 2 mod p divisible by 4.
inline bool tight_cac3_length_feasible(int length) {
    if (length < 2) return false;
    for (long long p : prime_factors(length)) {
        bool ok = (p % 8 == 5) || (p % 8 == 1 && multiplicative_order_of_two(p) % 4 == 0);
        if (!ok) return false;
    }
    return true;
}

}  // namespace mccac

#endif  // MCCAC_NUMTHEORY_HPP
