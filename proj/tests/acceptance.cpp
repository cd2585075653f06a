// Acceptance suite: each criterion prints one PASS/FAIL line and the
// binary exits nonzero if any ran criterion failed. `--only N` restricts
// the run (repeatable).

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "residua/certificate_io.hpp"
#include "residua/construct.hpp"
#include "residua/parallel.hpp"
#include "residua/reciprocity.hpp"
#include "residua/survey.hpp"

using namespace residua;

namespace {

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return std::string(buf);
}

// next prime >= start in the residue class rem (mod mod_), skipping p itself
u64 next_class_prime(u64 start, u64 mod_, u64 rem) {
    u64 c = start;
    while (c % mod_ != rem || !is_prime(c)) ++c;
    return c;
}

std::vector<u64> sample_class_primes(u64 count, u64 lo, u64 hi, u64 mod_, u64 rem, u64 seed) {
    std::mt19937_64 rng(seed);
    std::set<u64> chosen;
    while (chosen.size() < count) {
        const u64 x = lo + rng() % (hi - lo);
        chosen.insert(next_class_prime(x, mod_, rem));
    }
    return std::vector<u64>(chosen.begin(), chosen.end());
}

// --- criterion 1: Nagell bound over p <= 10^6 ---
bool run_nagell(std::string& detail) {
    const NagellReport report = verify_nagell(1000000);
    detail = fmt("%llu primes, %llu violations, %llu lm-failures, max r3/sqrt(p) = %.4f at p = %llu",
                 (unsigned long long)report.primes_checked, (unsigned long long)report.violations,
                 (unsigned long long)report.lm_failures, report.max_ratio,
                 (unsigned long long)report.argmax_p);
    return report.violations == 0 && report.lm_failures == 0;
}

// --- criterion 2: criterion-oracle equivalence ---
bool run_equivalence(std::string& detail) {
    const std::vector<u64> qs = primes_up_to(499);
    const std::vector<u64> ps = primes_up_to(1999);
    std::atomic<u64> cubic_pairs{0}, quartic_pairs{0}, disagreements{0};

    parallel_chunks(0, ps.size(), [&](u64 lo, u64 hi) {
        for (u64 i = lo; i < hi; ++i) {
            const u64 p = ps[i];
            const PrimeModulus pm(p);
            if (p % 3 == 1) {
                const Representation rep = represent_cubic(pm);
                for (u64 q : qs) {
                    if (q == 2 || q == 3 || q == p) continue;
                    const bool crit = cubic_criterion(q, rep).holds;
                    const bool orac = euler_oracle(static_cast<i128>(q), pm, 3);
                    ++cubic_pairs;
                    if (crit != orac) ++disagreements;
                }
            }
            if (p % 4 == 1) {
                const Representation rep = represent_quartic(pm);
                for (u64 q : qs) {
                    if (q == 2 || q == p) continue;
                    const bool crit = quartic_criterion(q, rep).holds;
                    const bool orac = euler_oracle(signed_prime(q).q_star, pm, 4);
                    ++quartic_pairs;
                    if (crit != orac) ++disagreements;
                }
            }
        }
    });
    detail = fmt("%llu cubic + %llu quartic pairs, %llu disagreements",
                 (unsigned long long)cubic_pairs.load(), (unsigned long long)quartic_pairs.load(),
                 (unsigned long long)disagreements.load());
    return disagreements == 0;
}

// --- criterion 3: representation correctness to 10^5 ---
bool run_representations(std::string& detail) {
    const std::vector<u64> ps = primes_up_to(100000);
    std::atomic<u64> cubic_count{0}, quartic_count{0}, mismatches{0};
    parallel_chunks(0, ps.size(), [&](u64 lo, u64 hi) {
        for (u64 i = lo; i < hi; ++i) {
            const u64 p = ps[i];
            if (p % 3 == 1) {
                ++cubic_count;
                const auto want = oracle::representations_exhaustive(p, true);
                const auto rep = represent_cubic(PrimeModulus(p));
                if (want.size() != 1 || rep.L != want[0].first || rep.M != want[0].second ||
                    static_cast<u128>(4) * p !=
                        static_cast<u128>(rep.L) * rep.L + static_cast<u128>(27) * rep.M * rep.M)
                    ++mismatches;
            }
            if (p % 4 == 1) {
                ++quartic_count;
                const auto want = oracle::representations_exhaustive(p, false);
                const auto rep = represent_quartic(PrimeModulus(p));
                if (want.size() != 1 || rep.L != want[0].first || rep.M != want[0].second ||
                    static_cast<u128>(p) !=
                        static_cast<u128>(rep.L) * rep.L + static_cast<u128>(4) * rep.M * rep.M)
                    ++mismatches;
            }
        }
    });
    detail = fmt("%llu cubic + %llu quartic representations, %llu mismatches",
                 (unsigned long long)cubic_count.load(), (unsigned long long)quartic_count.load(),
                 (unsigned long long)mismatches.load());
    return mismatches == 0;
}

// --- criterion 4: pipeline soundness on 200 random primes per class ---
bool run_pipeline_soundness(std::string& detail) {
    struct ClassSpec {
        PipelineKind k;
        u64 mod_, rem, seed;
        const char* name;
    };
    const std::vector<ClassSpec> classes = {
        {PipelineKind::Cubic, 3, 1, 1001, "cubic"},
        {PipelineKind::Quartic, 4, 1, 2002, "quartic"},
        {PipelineKind::Quadratic, 2, 1, 3003, "quadratic"},
    };
    u64 total_records = 0, total_failures = 0;
    std::string parts;
    for (const auto& spec : classes) {
        const auto primes = sample_class_primes(200, 100000, 1000000000, spec.mod_, spec.rem, spec.seed);
        std::atomic<u64> records{0}, failures{0};
        std::mutex log_mutex;
        parallel_chunks(0, primes.size(), [&](u64 lo, u64 hi) {
            for (u64 i = lo; i < hi; ++i) {
                PipelineConfig config;
                config.p = primes[i];
                config.k = spec.k;
                config.epsilon = Rational{3, 10};
                config.enum_cap = 10000;
                config.rough_z = 1;
                const PipelineResult result = run_pipeline(config);
                for (const auto& cert : result.certificates) {
                    ++records;
                    const auto outcome = check_line(format_certificate(cert));
                    if (!outcome.ok) {
                        ++failures;
                        std::lock_guard<std::mutex> lock(log_mutex);
                        std::printf("    check failure: %s\n      %s\n",
                                    format_certificate(cert).c_str(), outcome.reason.c_str());
                    }
                }
                for (const auto& nc : result.nagell) {
                    ++records;
                    const auto outcome = check_line(format_nagell(nc));
                    if (!outcome.ok) {
                        ++failures;
                        std::lock_guard<std::mutex> lock(log_mutex);
                        std::printf("    check failure: %s\n      %s\n", format_nagell(nc).c_str(),
                                    outcome.reason.c_str());
                    }
                }
            }
        });
        parts += fmt("%s %llu/%llu ", spec.name, (unsigned long long)(records - failures),
                     (unsigned long long)records.load());
        total_records += records;
        total_failures += failures;
    }
    detail = parts + fmt("(total %llu records, %llu failures)", (unsigned long long)total_records,
                         (unsigned long long)total_failures);
    return total_failures == 0 && total_records > 0;
}

// --- criterion 5: root-count bounds ---
bool run_root_bounds(std::string& detail) {
    const std::vector<u64> qs = primes_up_to(100);
    std::atomic<u64> sampled{0}, violations{0};

    auto check_poly = [&](const SievePolynomial& poly) {
        for (u64 q : qs) {
            const u64 roots = root_count(poly, q);
            u64 allowed = 0;
            switch (poly.kind) {
                case PipelineKind::Cubic: allowed = q == 2 ? 0 : (q == 3 ? 2 : 3); break;
                case PipelineKind::Quartic: allowed = q < 5 ? 0 : 4; break;
                case PipelineKind::Quadratic: allowed = 2; break;
            }
            if (roots > allowed) ++violations;
        }
    };

    for (u64 mod_ : {3ull, 4ull}) {
        const auto primes = sample_class_primes(60, 100000, 100000000, mod_, 1, 4004 + mod_);
        parallel_chunks(0, primes.size(), [&](u64 lo, u64 hi) {
            for (u64 i = lo; i < hi; ++i) {
                const PrimeModulus pm(primes[i]);
                ++sampled;
                if (mod_ == 3) {
                    check_poly(build_cubic_poly(represent_cubic(pm)));
                } else {
                    check_poly(build_quartic_poly(represent_quartic(pm)));
                    check_poly(build_quadratic_poly(pm, QuadBranch::Shift));
                }
            }
        });
    }
    {
        const auto primes = sample_class_primes(60, 100000, 100000000, 4, 3, 5005);
        parallel_chunks(0, primes.size(), [&](u64 lo, u64 hi) {
            for (u64 i = lo; i < hi; ++i) {
                const PrimeModulus pm(primes[i]);
                ++sampled;
                check_poly(build_quadratic_poly(pm, QuadBranch::Form));
                check_poly(build_quadratic_poly(pm, QuadBranch::Effective));
            }
        });
    }
    detail = fmt("%llu sampled p, primes q <= 100, %llu violations",
                 (unsigned long long)sampled.load(), (unsigned long long)violations.load());
    return violations == 0 && sampled >= 150;
}

// --- criterion 6: form machinery to 10^4 ---
bool run_forms(std::string& detail) {
    std::atomic<u64> checked{0}, mismatches{0};
    const std::vector<u64> ps = primes_up_to(10000);
    parallel_chunks(0, ps.size(), [&](u64 lo, u64 hi) {
        for (u64 i = lo; i < hi; ++i) {
            const u64 p = ps[i];
            if (p % 4 != 3) continue;
            ++checked;
            const auto forms = reduced_forms(PrimeModulus(p));
            std::set<oracle::FormTriple> got;
            bool bad = false;
            for (const auto& f : forms) {
                const u64 babs = static_cast<u64>(f.b < 0 ? -f.b : f.b);
                if (static_cast<i64>(f.b) * f.b -
                        4 * static_cast<i64>(f.a) * static_cast<i64>(f.c) !=
                    -static_cast<i64>(p))
                    bad = true;
                if (babs > f.a || f.a > f.c || f.a * f.c * 3 > p) bad = true;
                if ((babs == f.a || f.a == f.c) && f.b < 0) bad = true;
                got.insert({f.a, f.b, f.c});
            }
            const auto want = oracle::reduced_forms_divisor_scan(p);
            if (bad || got != std::set<oracle::FormTriple>(want.begin(), want.end())) ++mismatches;
        }
    });
    const bool spots = reduced_forms(PrimeModulus(7)).size() == 1 &&
                       reduced_forms(PrimeModulus(23)).size() == 3 &&
                       reduced_forms(PrimeModulus(47)).size() == 5;
    detail = fmt("%llu discriminants, %llu mismatches, spot h(-7)=1 h(-23)=3 h(-47)=5: %s",
                 (unsigned long long)checked.load(), (unsigned long long)mismatches.load(),
                 spots ? "ok" : "FAIL");
    return mismatches == 0 && spots;
}

// --- criterion 7: p^(1/9) prime quadratic residue count ---
bool run_remark_count(std::string& detail) {
    const std::vector<u64> ps = primes_up_to(100000);
    std::atomic<u64> checked{0}, violations{0};
    std::atomic<u64> min_margin_p{0};
    parallel_chunks(0, ps.size(), [&](u64 lo, u64 hi) {
        for (u64 i = lo; i < hi; ++i) {
            const u64 p = ps[i];
            if (p <= 100) continue;
            ++checked;
            const u64 count = prime_qr_count_below(PrimeModulus(p), ps);
            // exact: count > p^(1/9) iff p < count^9
            if (!pow_less(p, 1, count, 9)) {
                ++violations;
                min_margin_p = p;
            }
        }
    });
    detail = fmt("%llu primes in (100, 10^5], %llu violations", (unsigned long long)checked.load(),
                 (unsigned long long)violations.load());
    return violations == 0;
}

// --- criterion 8: shift/scale identity and parity invariants ---
bool run_shift_scale(std::string& detail) {
    std::atomic<u64> polys_checked{0}, violations{0};

    auto check_poly = [&](const SievePolynomial& poly) {
        ++polys_checked;
        for (u64 n = 0; n <= 100; ++n) {
            const i128 lhs = static_cast<i128>(poly.removed) * poly.eval_f(n);
            if (lhs != poly.eval_f0(poly.stride * n + poly.n0)) ++violations;
            const i128 v = poly.eval_f(n);
            const u128 mag = v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v);
            switch (poly.kind) {
                case PipelineKind::Cubic:
                    if (mag % 2 == 0) ++violations;
                    break;
                case PipelineKind::Quartic:
                    if (mag % 2 == 0 || mag % 3 == 0) ++violations;
                    break;
                case PipelineKind::Quadratic:
                    if (poly.branch == QuadBranch::Form && mag % 2 == 0) ++violations;
                    break;
            }
        }
    };

    for (u64 mod_ : {3ull, 4ull}) {
        const auto primes = sample_class_primes(60, 100000, 1000000000, mod_, 1, 6006 + mod_);
        parallel_chunks(0, primes.size(), [&](u64 lo, u64 hi) {
            for (u64 i = lo; i < hi; ++i) {
                const PrimeModulus pm(primes[i]);
                if (mod_ == 3) {
                    check_poly(build_cubic_poly(represent_cubic(pm)));
                } else {
                    check_poly(build_quartic_poly(represent_quartic(pm)));
                    check_poly(build_quadratic_poly(pm, QuadBranch::Shift));
                }
            }
        });
    }
    {
        const auto primes = sample_class_primes(60, 100000, 1000000000, 4, 3, 7007);
        parallel_chunks(0, primes.size(), [&](u64 lo, u64 hi) {
            for (u64 i = lo; i < hi; ++i) {
                const PrimeModulus pm(primes[i]);
                check_poly(build_quadratic_poly(pm, QuadBranch::Form));
                check_poly(build_quadratic_poly(pm, QuadBranch::Effective));
            }
        });
    }
    detail = fmt("%llu polynomial instances, n = 0..100, %llu violations",
                 (unsigned long long)polys_checked.load(), (unsigned long long)violations.load());
    return violations == 0 && polys_checked >= 200;
}

struct Criterion {
    int id;
    const char* name;
    bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "nagell-bound r3(p) < 2*sqrt(p) for p <= 10^6", run_nagell},
    {2, "criterion-oracle equivalence (p < 2000, q < 500)", run_equivalence},
    {3, "representation correctness vs exhaustive search (p <= 10^5)", run_representations},
    {4, "pipeline soundness: 200 random p per class, re-validated", run_pipeline_soundness},
    {5, "root-count bounds (<=3 cubic, <=4 quartic, <=2 quadratic)", run_root_bounds},
    {6, "form machinery vs independent enumeration (p <= 10^4)", run_forms},
    {7, "prime quadratic residues below p exceed p^(1/9) (100 < p <= 10^5)", run_remark_count},
    {8, "shift/scale identity and parity invariants", run_shift_scale},
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only.insert(std::atoi(argv[++i]));
    }

    int failed = 0, ran = 0;
    for (const Criterion& c : kCriteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("[%d/8] %s ... %s (%s, %lld ms)\n", c.id, c.name, ok ? "PASS" : "FAIL",
                    detail.c_str(), (long long)ms);
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    if (ran == 0) {
        std::printf("no criteria selected\n");
        return 1;
    }
    std::printf("RESULT: %d/%d criteria passed\n", ran - failed, ran);
    return failed == 0 ? 0 : 1;
}
