#include <doctest.h>

#include <random>

#include "residua/errors.hpp"
#include "residua/int128.hpp"
#include "residua/rational.hpp"

using namespace residua;

TEST_CASE("parse_rational forms") {
    CHECK(parse_rational("0.3").num == 3);
    CHECK(parse_rational("0.3").den == 10);
    CHECK(parse_rational("1/2").num == 1);
    CHECK(parse_rational("1/2").den == 2);
    CHECK(parse_rational("2/4").num == 1);
    CHECK(parse_rational("2/4").den == 2);
    CHECK(parse_rational("0.25").den == 4);
    CHECK(parse_rational("1").den == 1);
    CHECK(parse_rational("0.5000").num == 1);
    CHECK_THROWS_AS(parse_rational("0.33333"), domain_error);  // 5 places
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
    CHECK_THROWS_AS(parse_rational("1/20001"), domain_error);
}

TEST_CASE("pow_less exact comparisons") {
    CHECK(pow_less(2, 10, 3, 7));         // 1024 < 2187
    CHECK_FALSE(pow_less(3, 7, 2, 10));
    CHECK_FALSE(pow_less(4, 3, 8, 2));    // 64 == 64, strict
    CHECK_FALSE(pow_less(8, 2, 4, 3));
    CHECK(pow_less(1, 100, 2, 1));
    CHECK_FALSE(pow_less(2, 1, 1, 100));
    CHECK_FALSE(pow_less(5, 0, 1, 3));    // 1 < 1 is false

    // cross-check against plain double arithmetic away from boundaries
    std::mt19937_64 rng(99);
    for (int i = 0; i < 5000; ++i) {
        const u64 x = 2 + rng() % 1000000;
        const u64 y = 2 + rng() % 1000000;
        const u64 a = 1 + rng() % 20;
        const u64 b = 1 + rng() % 20;
        const long double lhs = a * log2l((long double)x);
        const long double rhs = b * log2l((long double)y);
        if (lhs < rhs - 0.001L) CHECK(pow_less(x, a, y, b));
        if (lhs > rhs + 0.001L) CHECK_FALSE(pow_less(x, a, y, b));
    }

    // near-boundary cases that force the exact big-integer path
    const u128 big = (static_cast<u128>(1) << 90) - 1;
    CHECK(pow_less(big, 2, static_cast<u128>(1) << 60, 3));        // (2^90-1)^2 < 2^180
    CHECK_FALSE(pow_less(static_cast<u128>(1) << 60, 3, big, 2));  // 2^180 > (2^90-1)^2
    CHECK(pow_less((static_cast<u128>(1) << 64) - 1, 2, static_cast<u128>(1) << 64, 2));
}

TEST_CASE("floor_pow exact at boundaries") {
    CHECK(floor_pow(1000000, 3, 4, 1000000) == 31622);  // 10^4.5
    CHECK(floor_pow(1000, 1, 3, 1000000) == 10);        // exact cube root
    CHECK(floor_pow(999, 1, 3, 1000000) == 9);          // just below the boundary
    CHECK(floor_pow(1024, 1, 2, 1000000) == 32);
    CHECK(floor_pow(1023, 1, 2, 1000000) == 31);
    CHECK(floor_pow(1ull << 40, 1, 8, 1000000) == 32);
    CHECK(floor_pow((1ull << 40) - 1, 1, 8, 1000000) == 31);
    CHECK(floor_pow(7, 1, 28, 1000000) == 1);
    CHECK(floor_pow(1000000, 1, 1, 50) == 50);  // clamped
    CHECK_THROWS_AS(floor_pow(10, 0, 3, 100), domain_error);
}

TEST_CASE("u128 string round-trips") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const u128 v = (static_cast<u128>(rng()) << 64 | rng()) >> (rng() % 128);
        CHECK(parse_u128(to_string_u128(v)) == v);
    }
    CHECK(to_string_u128(0) == "0");
    const u128 max = ~static_cast<u128>(0);
    CHECK(to_string_u128(max) == "340282366920938463463374607431768211455");
    CHECK(parse_u128("340282366920938463463374607431768211455") == max);
    CHECK_THROWS(parse_u128("340282366920938463463374607431768211456"));
    CHECK_THROWS(parse_u128(""));
    CHECK_THROWS(parse_u128("12x"));
    CHECK(parse_i128("-5") == -5);
}

TEST_CASE("isqrt_u128 across magnitudes") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 5000; ++i) {
        // keep v below 2^126 so (r+1)^2 cannot wrap
        const u128 v = (static_cast<u128>(rng()) << 64 | rng()) >> (2 + rng() % 126);
        const u128 r = isqrt_u128(v);
        CHECK(r * r <= v);
        CHECK((r + 1) * (r + 1) > v);
    }
    for (int bits = 60; bits <= 100; ++bits) {
        const u128 v = static_cast<u128>(1) << bits;
        const u128 r = isqrt_u128(v);
        CHECK(r * r <= v);
        CHECK((r + 1) * (r + 1) > v);
        u128 root = 0;
        CHECK(is_perfect_square(r * r, &root));
        CHECK(root == r);
    }
}
