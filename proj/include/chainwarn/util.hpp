#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace chainwarn {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an operation would exceed its stated enumeration budget.
/// Carries the computed size so callers can report it.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, const std::string& computed_size)
        : std::runtime_error(what + " (computed size " + computed_size + ")"),
          size(computed_size) {}
    std::string size;
};

inline std::string u128_str(u128 x) {
    if (x == 0) return "0";
    std::string s;
    while (x > 0) {
        s.insert(s.begin(), char('0' + int(x % 10)));
        x /= 10;
    }
    return s;
}

/// p^e as a 128-bit integer; throws on overflow past 2^64 by default
/// (coefficient moduli must stay multipliable inside u128).
inline u128 pow_u128(u64 base, int exp, u128 limit) {
    u128 r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > limit / base)
            throw BudgetError("power exceeds supported coefficient range",
                              std::to_string(base) + "^" + std::to_string(exp));
        r *= base;
    }
    return r;
}

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Deterministic seeded generator: splitmix64. We avoid std distributions
/// so sweep instances are byte-identical across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(u64 seed) : state_(seed) {}
    u64 next() {
        u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d4a663335bb9e7ULL;
        return z ^ (z >> 31);
    }
    /// Uniform-ish integer in [0, n); n must be positive.
    u64 below(u64 n) { return next() % n; }

private:
    u64 state_;
};

}  // namespace chainwarn
