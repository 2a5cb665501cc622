#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace blockfuse {

// Enumeration or search exceeded a configured cap (CLI exit code 3).
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee failed (uniqueness, conjugacy, ...). This is a bug
// or a falsification event, never a user error; carries a witness dump.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline constexpr std::uint64_t kDefaultOrderCap = 3628800;  // 10!
inline constexpr std::uint64_t kDefaultSylowCap = 128;      // 2^7

// Largest e with p^e dividing n.
inline unsigned p_valuation(std::uint64_t n, unsigned p) {
    unsigned e = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

// p^e with overflow guard.
inline std::uint64_t p_power_value(unsigned p, unsigned e) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (v > UINT64_MAX / p) throw cap_exceeded("p-power exceeds 64 bits");
        v *= p;
    }
    return v;
}

inline bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace blockfuse
