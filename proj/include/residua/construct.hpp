#pragma once

#include <optional>
#include <vector>

#include "residua/arith.hpp"
#include "residua/rational.hpp"
#include "residua/represent.hpp"

namespace residua {

enum class PipelineKind { Quadratic = 2, Cubic = 3, Quartic = 4 };
enum class QuadBranch { Shift, Form, Effective };

int kind_power(PipelineKind k);

/// A constructed pair (f0, f) with f(x) = f0(stride·x + n0) / removed,
/// the fixed prime divisors of f0 eliminated by the substitution.
struct SievePolynomial {
    std::vector<i64> base_coeffs;     // f0, ascending degree
    u64 stride = 1;
    u64 n0 = 0;
    u64 removed = 1;                  // 2^e, or 2^v 3^v' for the quartic
    std::vector<i64> shifted_coeffs;  // f, ascending degree
    PipelineKind kind = PipelineKind::Cubic;
    std::optional<QuadBranch> branch;

    i128 eval_f0(u64 m) const;
    i128 eval_f(u64 n) const;
};

SievePolynomial build_cubic_poly(const Representation& rep);
SievePolynomial build_quartic_poly(const Representation& rep);
SievePolynomial build_quadratic_poly(const PrimeModulus& p, QuadBranch branch);

/// Number of x in [0, q) with f(x) ≡ 0 (mod q), by direct evaluation.
/// q must be prime and at most 10^7.
u64 root_count(const SievePolynomial& poly, u64 q);

struct PipelineConfig {
    u64 p = 0;
    PipelineKind k = PipelineKind::Cubic;
    Rational epsilon{3, 10};
    u64 enum_cap = 0;  // 0 = default cap from epsilon, subject to the hard ceiling
    u64 rough_z = 0;   // 0 or 1 disables the roughness filter
    std::optional<QuadBranch> branch;  // quadratic only: restrict to one branch
};

constexpr u64 kEnumHardCeiling = 1000000;

/// Default enumeration depth: ⌊p^(ε/4)⌋ (cubic) or ⌊p^(ε/5)⌋ (quartic,
/// quadratic), clamped to [1, kEnumHardCeiling].
u64 default_enum_cap(u64 p, PipelineKind k, Rational eps);

/// Default roughness threshold: ⌊p^(ε/28)⌋ (cubic), ⌊p^(ε/46)⌋ (quartic),
/// ⌊p^(ε/25)⌋ (quadratic); near 1 for desk-scale p.
u64 default_rough_z(u64 p, PipelineKind k, Rational eps);

enum class Statement { QResidue, QStarResidue };

/// One verified small prime power residue: q divides f0(m) with
/// m = stride·n + n0, the reciprocity criterion holds at witness_x, and
/// the Euler oracle confirms the statement mod p.
struct ResidueCertificate {
    u64 p = 0;
    PipelineKind k = PipelineKind::Cubic;
    u128 q = 0;
    Statement statement = Statement::QResidue;
    u64 n = 0;
    u64 m = 0;
    u128 witness_x = 0;
    u128 value = 0;  // f0(m)
    bool uses_form = false;  // true: (fa, fb, fc) quadratic parameters; false: (L, M)
    u64 L = 0;
    u64 M = 0;
    i64 fa = 0;
    i64 fb = 0;
    i64 fc = 0;
    bool bound_ok = false;  // q < p^(1/2 + ε)
    bool criterion_ok = false;
    bool oracle_ok = false;
    Rational epsilon;
    std::optional<QuadBranch> branch;
};

/// A prime divisor of L·M for the cubic representation: a cubic residue
/// below 2√p. Criterion evaluation applies only for q outside {2, 3}.
struct NagellCertificate {
    u64 p = 0;
    u64 q = 0;
    u64 L = 0;
    u64 M = 0;
    bool divides_m = false;  // q | M (witness x = 1); otherwise q | L (x = 0)
    bool bound_ok = false;   // q < 2√p
    bool criterion_checked = false;
    bool criterion_ok = false;
    bool oracle_ok = false;
};

struct PipelineResult {
    std::vector<ResidueCertificate> certificates;  // ascending q
    std::vector<NagellCertificate> nagell;         // cubic pipelines only
    u64 resolved_cap = 0;
    u64 resolved_z = 0;
};

/// Enumerates f(n) for n = 1..cap, filters z-rough values, factors them
/// completely, and certifies every prime in the collected set (minus the
/// excluded divisors). A criterion or oracle failure raises
/// integrity_error: the mathematics guarantees both checks pass.
PipelineResult run_pipeline(const PipelineConfig& config);

struct CountReport {
    u64 cert_count = 0;
    double threshold = 0.0;  // p^(ε/30), p^(ε/50), or p^(ε/25)
    i64 threshold_num = 0;   // exponent of the threshold as a fraction
    i64 threshold_den = 1;
    bool met = false;        // cert_count > threshold, compared exactly
    u128 min_q = 0;
    u128 max_q = 0;
    u64 nagell_count = 0;
    std::optional<double> p19_threshold;  // quadratic: p^(1/9)
    std::optional<u64> qr_scan_count;     // quadratic, p <= 10^7: direct scan
    std::optional<bool> p19_met;
};

/// Informational count summary; the asymptotic lower bounds hold for
/// p beyond an unquantified cutoff, so met-flags are reported, never
/// asserted.
CountReport count_report(const PipelineResult& result, const PipelineConfig& config);

}  // namespace residua
