#pragma once

#include <optional>
#include <string>
#include <vector>

#include "residua/construct.hpp"

namespace residua {

/// Result of the quantitative Nagell-bound scan over primes
/// p ≡ 1 (mod 3), 7 < p <= max_p.
struct NagellReport {
    u64 primes_checked = 0;
    u64 violations = 0;    // r3(p) >= 2*sqrt(p)
    u64 lm_failures = 0;   // least prime factor of LM fails bound or oracle
    double max_ratio = 0.0;  // max r3(p)/sqrt(p)
    u64 argmax_p = 0;
    std::vector<u64> violating_primes;
};

/// Verifies r3(p) < 2√p by oracle scan and the LM-divisor construction
/// for every prime p ≡ 1 (mod 3) in (7, max_p]. Requires max_p >= 13.
NagellReport verify_nagell(u64 max_p);

struct SurveyRow {
    u64 p = 0;
    int k = 0;
    Rational epsilon;
    u64 cert_count = 0;
    double threshold = 0.0;
    u128 min_q = 0;
    u128 max_q = 0;
    u64 r_k = 0;
    std::optional<double> nagell_bound;  // 2√p, cubic only
    std::optional<u64> qr_count;         // direct prime-QR scan, k = 2 only
    u64 elapsed_ms = 0;
};

/// One row per qualifying prime in [min_p, max_p], default pipeline
/// parameters derived from epsilon. Rows ascend by p regardless of the
/// parallel completion order.
std::vector<SurveyRow> survey(u64 min_p, u64 max_p, int k, Rational epsilon);

std::string survey_csv_header();
std::string survey_csv_row(const SurveyRow& row);

}  // namespace residua
