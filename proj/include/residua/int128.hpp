#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace residua {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    char buf[48];
    int pos = 48;
    while (v > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    return std::string(buf + pos, buf + 48);
}

inline std::string to_string_i128(i128 v) {
    if (v < 0) return "-" + to_string_u128(static_cast<u128>(-v));
    return to_string_u128(static_cast<u128>(v));
}

/// Parses a decimal string into u128. Throws std::invalid_argument on
/// malformed input or overflow.
inline u128 parse_u128(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    u128 v = 0;
    constexpr u128 max = ~static_cast<u128>(0);
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
        unsigned d = static_cast<unsigned>(c - '0');
        if (v > (max - d) / 10) throw std::invalid_argument("integer literal overflows 128 bits");
        v = v * 10 + d;
    }
    return v;
}

inline i128 parse_i128(std::string_view s) {
    if (!s.empty() && s[0] == '-') {
        u128 mag = parse_u128(s.substr(1));
        if (mag > (static_cast<u128>(1) << 127)) throw std::invalid_argument("integer literal overflows");
        return -static_cast<i128>(mag);
    }
    u128 mag = parse_u128(s);
    if (mag >= (static_cast<u128>(1) << 127)) throw std::invalid_argument("integer literal overflows");
    return static_cast<i128>(mag);
}

inline int bit_length(u128 v) {
    if (v == 0) return 0;
    u64 hi = static_cast<u64>(v >> 64);
    if (hi != 0) return 128 - __builtin_clzll(hi);
    return 64 - __builtin_clzll(static_cast<u64>(v));
}

inline u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

inline u128 isqrt_u128(u128 n) {
    if (n <= ~static_cast<u64>(0)) return isqrt_u64(static_cast<u64>(n));
    // strict over-estimate: sqrt(n) < (isqrt(n >> 64) + 1) << 32, so the
    // Newton sequence decreases monotonically to the floor
    u128 r = (static_cast<u128>(isqrt_u64(static_cast<u64>(n >> 64))) + 1) << 32;
    while (true) {
        const u128 next = (r + n / r) >> 1;
        if (next >= r) break;
        r = next;
    }
    while (r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

inline bool is_perfect_square(u128 n, u128* root = nullptr) {
    // quick filter mod 64 before the full root
    static constexpr u64 kSquareMask64 = []() {
        u64 m = 0;
        for (u64 i = 0; i < 64; ++i) m |= static_cast<u64>(1) << ((i * i) & 63);
        return m;
    }();
    if (!((kSquareMask64 >> (static_cast<u64>(n) & 63)) & 1)) return false;
    u128 r = isqrt_u128(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

}  // namespace residua
