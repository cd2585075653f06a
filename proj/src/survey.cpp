#include "residua/survey.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>

#include "residua/errors.hpp"
#include "residua/parallel.hpp"
#include "residua/reciprocity.hpp"

namespace residua {

NagellReport verify_nagell(u64 max_p) {
    if (max_p < 13) throw domain_error("verify-nagell requires max_p >= 13");
    const std::vector<u64> primes = primes_up_to(max_p);

    NagellReport report;
    std::mutex merge_mutex;
    parallel_chunks(0, primes.size(), [&](u64 lo, u64 hi) {
        NagellReport local;
        for (u64 i = lo; i < hi; ++i) {
            const u64 p = primes[i];
            if (p <= 7 || p % 3 != 1) continue;
            const PrimeModulus pm(p);
            ++local.primes_checked;

            const u64 r3 = smallest_prime_residue(pm, 3);
            if (!(static_cast<u128>(r3) * r3 < static_cast<u128>(4) * p)) {
                ++local.violations;
                local.violating_primes.push_back(p);
            }
            const double ratio = static_cast<double>(r3) / std::sqrt(static_cast<double>(p));
            if (ratio > local.max_ratio) {
                local.max_ratio = ratio;
                local.argmax_p = p;
            }

            // Nagell's construction: the least prime factor of LM is an
            // oracle-verified cubic residue below 2*sqrt(p)
            const Representation rep = represent_cubic(pm);
            const u128 lm = static_cast<u128>(rep.L) * rep.M;
            bool ok = lm > 1;
            if (ok) {
                const u64 q0 = static_cast<u64>(factorize(lm).factors.front().first);
                ok = static_cast<u128>(q0) * q0 < static_cast<u128>(4) * p &&
                     euler_oracle(static_cast<i128>(q0 % p), pm, 3) && r3 <= q0;
            }
            if (!ok) {
                ++local.lm_failures;
                local.violating_primes.push_back(p);
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        report.primes_checked += local.primes_checked;
        report.violations += local.violations;
        report.lm_failures += local.lm_failures;
        if (local.max_ratio > report.max_ratio) {
            report.max_ratio = local.max_ratio;
            report.argmax_p = local.argmax_p;
        }
        report.violating_primes.insert(report.violating_primes.end(), local.violating_primes.begin(),
                                       local.violating_primes.end());
    });
    std::sort(report.violating_primes.begin(), report.violating_primes.end());
    return report;
}

std::vector<SurveyRow> survey(u64 min_p, u64 max_p, int k, Rational epsilon) {
    if (min_p > max_p) throw domain_error("survey requires min_p <= max_p");
    if (k != 2 && k != 3 && k != 4) throw domain_error("k must be 2, 3, or 4");
    const Rational eps = normalize(epsilon);

    const std::vector<u64> primes = primes_up_to(max_p);
    std::vector<u64> selected;
    for (u64 p : primes) {
        if (p < min_p) continue;
        const bool qualifies = k == 2 ? p > 2 : (k == 3 ? p % 3 == 1 : p % 4 == 1);
        if (qualifies) selected.push_back(p);
    }

    std::vector<SurveyRow> rows(selected.size());
    parallel_chunks(0, selected.size(), [&](u64 lo, u64 hi) {
        for (u64 i = lo; i < hi; ++i) {
            const u64 p = selected[i];
            const auto start = std::chrono::steady_clock::now();
            SurveyRow row;
            row.p = p;
            row.k = k;
            row.epsilon = eps;

            PipelineConfig config;
            config.p = p;
            config.k = k == 2 ? PipelineKind::Quadratic : (k == 3 ? PipelineKind::Cubic : PipelineKind::Quartic);
            config.epsilon = eps;
            const PipelineResult result = run_pipeline(config);
            const CountReport report = count_report(result, config);
            row.cert_count = report.cert_count;
            row.threshold = report.threshold;
            row.min_q = report.min_q;
            row.max_q = report.max_q;

            const PrimeModulus pm(p);
            row.r_k = smallest_prime_residue(pm, k);
            if (k == 3) row.nagell_bound = 2.0 * std::sqrt(static_cast<double>(p));
            if (k == 2) row.qr_count = prime_qr_count_below(pm, primes);

            row.elapsed_ms = static_cast<u64>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                  std::chrono::steady_clock::now() - start)
                                                  .count());
            rows[i] = std::move(row);
        }
    });
    return rows;
}

std::string survey_csv_header() {
    return "p,k,epsilon,cert_count,threshold,min_q,max_q,r_k,nagell_bound,qr_count,elapsed_ms";
}

std::string survey_csv_row(const SurveyRow& row) {
    std::ostringstream out;
    out << row.p << ',' << row.k << ',' << row.epsilon.str() << ',' << row.cert_count << ',';
    out.precision(6);
    out << row.threshold << ',';
    if (row.cert_count > 0) out << to_string_u128(row.min_q);
    out << ',';
    if (row.cert_count > 0) out << to_string_u128(row.max_q);
    out << ',' << row.r_k << ',';
    if (row.nagell_bound) out << *row.nagell_bound;
    out << ',';
    if (row.qr_count) out << *row.qr_count;
    out << ',' << row.elapsed_ms;
    return out.str();
}

}  // namespace residua
