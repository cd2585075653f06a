#include "residua/construct.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "residua/errors.hpp"
#include "residua/montgomery.hpp"
#include "residua/parallel.hpp"
#include "residua/reciprocity.hpp"

namespace residua {

int kind_power(PipelineKind k) { return static_cast<int>(k); }

namespace {

constexpr u128 kMagLimit = static_cast<u128>(1) << 120;
constexpr u64 kSieveBound = 4096;
constexpr u64 kSmallCapCutoff = 1024;
constexpr u64 kRoughLimit = 1000000;

u128 magnitude(i128 v) { return v < 0 ? static_cast<u128>(0) - static_cast<u128>(v) : static_cast<u128>(v); }

i128 checked_mul(i128 a, i128 b) {
    if (a == 0 || b == 0) return 0;
    const u128 ua = magnitude(a), ub = magnitude(b);
    if (ua > kMagLimit / ub)
        throw domain_error("polynomial value exceeds the supported 128-bit range; reduce the cap");
    const u128 prod = ua * ub;
    return (a < 0) != (b < 0) ? -static_cast<i128>(prod) : static_cast<i128>(prod);
}

i128 checked_add(i128 a, i128 b) {
    const i128 s = a + b;  // |a|, |b| <= 2^120, no i128 overflow possible
    if (magnitude(s) > kMagLimit)
        throw domain_error("polynomial value exceeds the supported 128-bit range; reduce the cap");
    return s;
}

i128 eval_poly(const std::vector<i64>& coeffs, u64 arg) {
    i128 acc = 0;
    const i128 x = static_cast<i128>(arg);
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = checked_add(checked_mul(acc, x), coeffs[i]);
    }
    return acc;
}

int val2(u128 v) {
    int e = 0;
    while (v != 0 && (v & 1) == 0) {
        v >>= 1;
        ++e;
    }
    return e;
}

int val3(u128 v) {
    int e = 0;
    while (v != 0 && v % 3 == 0) {
        v /= 3;
        ++e;
    }
    return e;
}

// f(x) = f0(stride·x + n0) / removed, expanded by the binomial theorem
std::vector<i64> substitute(const std::vector<i64>& f0, u64 stride, u64 n0, u64 removed) {
    static constexpr i64 kBinom[5][5] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
    std::vector<i128> acc(f0.size(), 0);
    for (size_t i = 0; i < f0.size(); ++i) {
        i128 shift_pow = 1;  // n0^(i-j), built from j = i downward
        for (size_t j = i + 1; j-- > 0;) {
            i128 term = checked_mul(f0[i], kBinom[i][j]);
            term = checked_mul(term, shift_pow);
            i128 stride_pow = 1;
            for (size_t s = 0; s < j; ++s) stride_pow = checked_mul(stride_pow, static_cast<i128>(stride));
            acc[j] = checked_add(acc[j], checked_mul(term, stride_pow));
            shift_pow = checked_mul(shift_pow, static_cast<i128>(n0));
        }
    }
    std::vector<i64> out(f0.size());
    for (size_t j = 0; j < acc.size(); ++j) {
        if (acc[j] % static_cast<i128>(removed) != 0)
            throw integrity_error("removed power does not divide a shifted coefficient");
        const i128 c = acc[j] / static_cast<i128>(removed);
        if (magnitude(c) > static_cast<u128>(~static_cast<u64>(0) >> 1))
            throw domain_error("shifted coefficient exceeds 64 bits");
        out[j] = static_cast<i64>(c);
    }
    return out;
}

}  // namespace

i128 SievePolynomial::eval_f0(u64 m) const { return eval_poly(base_coeffs, m); }
i128 SievePolynomial::eval_f(u64 n) const { return eval_poly(shifted_coeffs, n); }

SievePolynomial build_cubic_poly(const Representation& rep) {
    if (rep.kind != RepKind::Cubic4p27) throw domain_error("cubic polynomial needs a Cubic4p27 representation");
    const i64 big_l = static_cast<i64>(rep.L), big_m = static_cast<i64>(rep.M);
    SievePolynomial poly;
    poly.kind = PipelineKind::Cubic;
    poly.base_coeffs = {-big_l, -9 * big_m, big_l, big_m};  // M(x^3-9x) + L(x^2-1)
    poly.stride = 32;
    // n0 in {0,1} with 2^5 not dividing f0(n0); f0(0) = -L, f0(1) = -8M
    int e0 = val2(static_cast<u128>(rep.L));
    if (e0 < 5) {
        poly.n0 = 0;
    } else {
        poly.n0 = 1;
        e0 = 3 + val2(static_cast<u128>(rep.M));
        if (e0 >= 5) throw integrity_error("no valid n0 for cubic instance");
    }
    poly.removed = static_cast<u64>(1) << e0;
    poly.shifted_coeffs = substitute(poly.base_coeffs, poly.stride, poly.n0, poly.removed);
    return poly;
}

SievePolynomial build_quartic_poly(const Representation& rep) {
    if (rep.kind != RepKind::Quartic4) throw domain_error("quartic polynomial needs a Quartic4 representation");
    const i64 big_l = static_cast<i64>(rep.L), big_m = static_cast<i64>(rep.M);
    SievePolynomial poly;
    poly.kind = PipelineKind::Quartic;
    poly.base_coeffs = {big_m, -2 * big_l, -6 * big_m, 2 * big_l, big_m};  // M(x^4-6x^2+1) + 2L(x^3-x)
    poly.stride = 72;
    const u64 m_sel = rep.M % 8 == 0 ? 2 : 0;
    const u64 mp_sel = rep.M % 9 == 0 ? 2 : 0;
    u64 n0 = 0;
    for (u64 cand = 1; cand <= 72; ++cand) {
        if (cand % 8 == m_sel && cand % 9 == mp_sel) {
            n0 = cand;
            break;
        }
    }
    poly.n0 = n0;
    const u128 at_n0 = magnitude(eval_poly(poly.base_coeffs, n0));
    const int v = val2(at_n0);
    const int vp = val3(at_n0);
    if (v > 2 || vp > 1) throw integrity_error("quartic fixed-divisor valuations out of range");
    poly.removed = (static_cast<u64>(1) << v) * (vp == 1 ? 3 : 1);
    poly.shifted_coeffs = substitute(poly.base_coeffs, poly.stride, poly.n0, poly.removed);
    return poly;
}

SievePolynomial build_quadratic_poly(const PrimeModulus& p, QuadBranch branch) {
    const u64 pv = p.value();
    SievePolynomial poly;
    poly.kind = PipelineKind::Quadratic;
    poly.branch = branch;
    switch (branch) {
        case QuadBranch::Shift: {
            if (pv % 4 != 1) throw domain_error("shift branch requires p = 1 (mod 4)");
            const u64 r = isqrt_u64(pv);
            poly.base_coeffs = {static_cast<i64>(r * r) - static_cast<i64>(pv),
                                static_cast<i64>(2 * r), 1};  // (x+r)^2 - p
            poly.stride = 1;
            poly.n0 = 0;
            poly.removed = 1;
            break;
        }
        case QuadBranch::Form: {
            if (pv % 4 != 3) throw domain_error("form branch requires p = 3 (mod 4)");
            const QuadraticForm form = max_a_form(p);
            poly.base_coeffs = {static_cast<i64>(form.c), form.b, static_cast<i64>(form.a)};
            poly.stride = 4;
            u64 n0 = 3;
            for (u64 cand = 0; cand < 3; ++cand) {
                if (magnitude(eval_poly(poly.base_coeffs, cand)) % 4 != 0) {
                    n0 = cand;
                    break;
                }
            }
            if (n0 == 3) throw integrity_error("no valid n0 in {0,1,2} for form instance");
            poly.n0 = n0;
            const int e = val2(magnitude(eval_poly(poly.base_coeffs, n0)));
            if (e > 1) throw integrity_error("form instance valuation out of range");
            poly.removed = static_cast<u64>(1) << e;
            break;
        }
        case QuadBranch::Effective: {
            if (pv % 4 != 3) throw domain_error("effective branch requires p = 3 (mod 4)");
            poly.base_coeffs = {static_cast<i64>((1 + pv) / 4), 1, 1};  // x^2 + x + (1-p*)/4
            poly.stride = 1;
            poly.n0 = 0;
            poly.removed = 1;
            break;
        }
    }
    poly.shifted_coeffs = substitute(poly.base_coeffs, poly.stride, poly.n0, poly.removed);
    return poly;
}

u64 root_count(const SievePolynomial& poly, u64 q) {
    if (q > 10000000) throw domain_error("root_count is brute force; q must be at most 10^7");
    if (!is_prime(q)) throw domain_error("root_count requires prime q");
    std::vector<u64> cmod(poly.shifted_coeffs.size());
    for (size_t i = 0; i < cmod.size(); ++i) {
        i64 c = poly.shifted_coeffs[i] % static_cast<i64>(q);
        cmod[i] = c < 0 ? static_cast<u64>(c + static_cast<i64>(q)) : static_cast<u64>(c);
    }
    u64 count = 0;
    for (u64 x = 0; x < q; ++x) {
        u64 acc = 0;
        for (size_t i = cmod.size(); i-- > 0;) acc = (mulmod_u64(acc, x, q) + cmod[i]) % q;
        if (acc == 0) ++count;
    }
    return count;
}

u64 default_enum_cap(u64 p, PipelineKind k, Rational eps) {
    const i64 divisor = k == PipelineKind::Cubic ? 4 : 5;
    return floor_pow(p, eps.num, eps.den * divisor, kEnumHardCeiling);
}

u64 default_rough_z(u64 p, PipelineKind k, Rational eps) {
    const i64 divisor = k == PipelineKind::Cubic ? 28 : (k == PipelineKind::Quartic ? 46 : 25);
    return floor_pow(p, eps.num, eps.den * divisor, kRoughLimit);
}

namespace {

struct BranchContext {
    SievePolynomial poly;
    std::optional<Representation> rep;
    std::optional<QuadraticForm> form;
    int priority = 0;
};

struct QEntry {
    u64 n = 0;
    int branch = 0;
};

// roots of f mod q by direct evaluation (q small)
void append_roots(const SievePolynomial& poly, u64 q, std::vector<std::pair<u64, u64>>& out) {
    u64 cmod[8];
    const size_t deg1 = poly.shifted_coeffs.size();
    for (size_t i = 0; i < deg1; ++i) {
        i64 c = poly.shifted_coeffs[i] % static_cast<i64>(q);
        cmod[i] = c < 0 ? static_cast<u64>(c + static_cast<i64>(q)) : static_cast<u64>(c);
    }
    for (u64 x = 0; x < q; ++x) {
        u64 acc = 0;
        for (size_t i = deg1; i-- > 0;) acc = (mulmod_u64(acc, x, q) + cmod[i]) % q;
        if (acc == 0) out.emplace_back(q, x);
    }
}

// factors of `value` that pass the roughness filter, merged into qmap
void merge_primes(std::map<u128, QEntry>& qmap, u128 q, u64 n, int branch) {
    auto [it, inserted] = qmap.try_emplace(q, QEntry{n, branch});
    if (!inserted && n < it->second.n) it->second = QEntry{n, branch};
}

// enumeration + roughness filter + complete factorization for one branch
std::map<u128, QEntry> collect_branch(const BranchContext& ctx, u64 cap, u64 z, int branch_idx) {
    std::map<u128, QEntry> qmap;
    const SievePolynomial& poly = ctx.poly;

    if (cap < kSmallCapCutoff) {
        for (u64 n = 1; n <= cap; ++n) {
            const i128 value = poly.eval_f(n);
            if (value <= 1) continue;
            const Factorization fact = factorize(static_cast<u128>(value));
            if (z > 1 && !fact.factors.empty() && fact.factors.front().first < z) continue;
            for (const auto& pf : fact.factors) merge_primes(qmap, pf.first, n, branch_idx);
        }
        return qmap;
    }

    // stride sieve: roots of f modulo each small prime
    std::vector<std::pair<u64, u64>> roots;
    for (u64 q : primes_up_to(kSieveBound)) append_roots(poly, q, roots);
    const std::vector<u64> extended =
        z > kSieveBound + 1 ? primes_up_to(z - 1) : std::vector<u64>{};

    std::mutex merge_mutex;
    parallel_chunks(1, cap + 1, [&](u64 lo, u64 hi) {
        const size_t len = static_cast<size_t>(hi - lo);
        std::vector<u128> cof(len);
        std::vector<u64> min_small(len, 0);
        std::vector<char> live(len);
        std::vector<std::pair<u32, u64>> hits;
        for (u64 n = lo; n < hi; ++n) {
            const i128 value = poly.eval_f(n);
            live[n - lo] = value > 1;
            cof[n - lo] = value > 1 ? static_cast<u128>(value) : 1;
        }
        for (const auto& [q, root] : roots) {
            u64 n = lo + ((root + q - lo % q) % q);
            for (; n < hi; n += q) {
                const size_t idx = static_cast<size_t>(n - lo);
                if (live[idx] && cof[idx] % q == 0) {
                    hits.emplace_back(static_cast<u32>(idx), q);
                    do {
                        cof[idx] /= q;
                    } while (cof[idx] % q == 0);
                    if (min_small[idx] == 0) min_small[idx] = q;
                }
            }
        }

        // roughness filter: keep positions whose value has no prime factor < z
        std::vector<char> pass(len);
        for (size_t idx = 0; idx < len; ++idx) {
            pass[idx] = live[idx];
            if (!pass[idx] || z <= 1) continue;
            if (min_small[idx] != 0 && min_small[idx] < z) {
                pass[idx] = 0;
            } else if (z > kSieveBound + 1 && cof[idx] > 1) {
                for (u64 t : extended) {
                    if (t <= kSieveBound) continue;
                    if (cof[idx] % t == 0) {
                        pass[idx] = 0;
                        break;
                    }
                }
            }
        }

        std::map<u128, QEntry> local;
        const u64 rough_bound = std::max(kSieveBound, z > 1 ? z - 1 : kSieveBound);
        for (size_t idx = 0; idx < len; ++idx) {
            if (!pass[idx] || cof[idx] <= 1) continue;
            const Factorization fact = factorize_rough(cof[idx], rough_bound);
            for (const auto& pf : fact.factors) merge_primes(local, pf.first, lo + idx, branch_idx);
        }
        for (const auto& [idx, q] : hits) {
            if (pass[idx]) merge_primes(local, q, lo + idx, branch_idx);
        }

        std::lock_guard<std::mutex> lock(merge_mutex);
        for (const auto& [q, entry] : local) merge_primes(qmap, q, entry.n, entry.branch);
    });
    return qmap;
}

bool branch_excludes(const BranchContext& ctx, u64 p, u128 q) {
    if (q == p) return true;
    auto divides = [&](u64 v) { return v != 0 && q <= v && v % static_cast<u64>(q) == 0; };
    switch (ctx.poly.kind) {
        case PipelineKind::Cubic:
            return q == 2 || q == 3 || divides(ctx.rep->L) || divides(ctx.rep->M);
        case PipelineKind::Quartic:
            return q == 2 || divides(ctx.rep->L) || divides(ctx.rep->M);
        case PipelineKind::Quadratic:
            if (q == 2) return true;
            if (*ctx.poly.branch == QuadBranch::Form) return divides(ctx.form->a);
            return false;
    }
    return false;
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config) {
    const PrimeModulus pm(config.p);
    const u64 p = pm.value();
    const Rational eps = normalize(config.epsilon);
    if (eps.num <= 0 || 2 * eps.num > eps.den)
        throw domain_error("epsilon must lie in (0, 1/2]");
    if (config.rough_z > kRoughLimit + 1)
        throw domain_error("roughness threshold supported up to 10^6");

    if (config.branch && config.k != PipelineKind::Quadratic)
        throw domain_error("branch selection applies to the quadratic pipeline only");
    switch (config.k) {
        case PipelineKind::Cubic:
            if (p % 3 != 1) throw domain_error("cubic pipeline requires p = 1 (mod 3)");
            break;
        case PipelineKind::Quartic:
            if (p % 4 != 1) throw domain_error("quartic pipeline requires p = 1 (mod 4)");
            break;
        case PipelineKind::Quadratic:
            if (p == 2) throw domain_error("quadratic pipeline requires odd p");
            break;
    }

    const u64 cap = std::min(config.enum_cap != 0 ? config.enum_cap : default_enum_cap(p, config.k, eps),
                             kEnumHardCeiling);
    const u64 z = std::max<u64>(config.rough_z != 0 ? config.rough_z : default_rough_z(p, config.k, eps), 1);

    std::vector<BranchContext> branches;
    if (config.k == PipelineKind::Cubic) {
        BranchContext ctx;
        ctx.rep = represent_cubic(pm);
        ctx.poly = build_cubic_poly(*ctx.rep);
        branches.push_back(std::move(ctx));
    } else if (config.k == PipelineKind::Quartic) {
        BranchContext ctx;
        ctx.rep = represent_quartic(pm);
        ctx.poly = build_quartic_poly(*ctx.rep);
        branches.push_back(std::move(ctx));
    } else {
        std::vector<QuadBranch> selected;
        if (config.branch) {
            selected = {*config.branch};
        } else if (p % 4 == 1) {
            selected = {QuadBranch::Shift};
        } else {
            selected = {QuadBranch::Form, QuadBranch::Effective};
        }
        int prio = 0;
        for (QuadBranch b : selected) {
            BranchContext ctx;
            ctx.poly = build_quadratic_poly(pm, b);
            if (b == QuadBranch::Form) ctx.form = max_a_form(pm);
            ctx.priority = prio++;
            branches.push_back(std::move(ctx));
        }
    }

    // per-branch collection with per-branch exclusions, then merge:
    // a q found at several n is certified once, at the least n
    std::map<u128, QEntry> merged;
    for (size_t b = 0; b < branches.size(); ++b) {
        std::map<u128, QEntry> part = collect_branch(branches[b], cap, z, static_cast<int>(b));
        for (const auto& [q, entry] : part) {
            if (branch_excludes(branches[b], p, q)) continue;
            auto [it, inserted] = merged.try_emplace(q, entry);
            if (!inserted) {
                const bool better =
                    entry.n < it->second.n ||
                    (entry.n == it->second.n &&
                     branches[entry.branch].priority < branches[it->second.branch].priority);
                if (better) it->second = entry;
            }
        }
    }

    // exact bound comparison q < p^((den+2num)/(2den))
    i64 bnum = eps.den + 2 * eps.num, bden = 2 * eps.den;
    const i64 bg = std::gcd(bnum, bden);
    bnum /= bg;
    bden /= bg;

    PipelineResult result;
    result.resolved_cap = cap;
    result.resolved_z = z;
    const i64 p_star = p % 4 == 1 ? static_cast<i64>(p) : -static_cast<i64>(p);

    for (const auto& [q, entry] : merged) {
        const BranchContext& ctx = branches[static_cast<size_t>(entry.branch)];
        const SievePolynomial& poly = ctx.poly;
        ResidueCertificate cert;
        cert.p = p;
        cert.k = config.k;
        cert.q = q;
        cert.n = entry.n;
        cert.m = poly.stride * entry.n + poly.n0;
        cert.epsilon = eps;
        cert.branch = poly.branch;

        const i128 value = poly.eval_f0(cert.m);
        if (value <= 0) throw integrity_error("nonpositive certificate value");
        cert.value = static_cast<u128>(value);
        if (cert.value % q != 0) throw integrity_error("collected prime does not divide f0(m)");
        if (static_cast<u128>(poly.eval_f(entry.n)) * poly.removed != cert.value)
            throw integrity_error("shift/scale identity violated at certificate");

        cert.bound_ok = pow_less(q, static_cast<u64>(bden), p, static_cast<u64>(bnum));

        if (config.k == PipelineKind::Cubic || config.k == PipelineKind::Quartic) {
            cert.uses_form = false;
            cert.L = ctx.rep->L;
            cert.M = ctx.rep->M;
            cert.witness_x = (q - cert.m % q) % q;  // x = -m mod q
            if (config.k == PipelineKind::Cubic) {
                cert.statement = Statement::QResidue;
                cert.criterion_ok = cubic_criterion_at(q, *ctx.rep, cert.witness_x);
                cert.oracle_ok = euler_oracle(static_cast<i128>(q % p), pm, 3);
            } else {
                cert.statement = Statement::QStarResidue;
                cert.criterion_ok = quartic_criterion_at(q, *ctx.rep, cert.witness_x);
                const i128 q_star = q % 4 == 1 ? static_cast<i128>(q % p) : -static_cast<i128>(q % p);
                cert.oracle_ok = euler_oracle(q_star, pm, 4);
            }
        } else {
            cert.statement = Statement::QResidue;
            cert.uses_form = true;
            cert.fa = poly.base_coeffs[2];
            cert.fb = poly.base_coeffs[1];
            cert.fc = poly.base_coeffs[0];
            // witness with witness^2 ≡ p* (mod q)
            if (*poly.branch == QuadBranch::Shift) {
                const u64 r = static_cast<u64>(poly.base_coeffs[1]) / 2;
                cert.witness_x = (static_cast<u128>(cert.m) + r) % q;
            } else {
                const i128 t = 2 * static_cast<i128>(cert.fa) * cert.m + cert.fb;
                i128 red = t % static_cast<i128>(q);
                if (red < 0) red += static_cast<i128>(q);
                cert.witness_x = static_cast<u128>(red);
            }
            i128 p_star_red = p_star % static_cast<i128>(q);
            if (p_star_red < 0) p_star_red += static_cast<i128>(q);
            if (mulmod_u128_slow(cert.witness_x, cert.witness_x, q) != static_cast<u128>(p_star_red))
                throw integrity_error("quadratic witness identity violated");
            cert.criterion_ok = jacobi(p_star, q) == 1;
            cert.oracle_ok = euler_oracle(static_cast<i128>(q % p), pm, 2);
        }

        if (!cert.criterion_ok || !cert.oracle_ok)
            throw integrity_error("criterion/oracle rejected q = " + to_string_u128(q) +
                                  " for p = " + std::to_string(p));
        result.certificates.push_back(std::move(cert));
    }

    // Nagell construction: prime divisors of L·M are cubic residues
    if (config.k == PipelineKind::Cubic) {
        const Representation& rep = *branches.front().rep;
        const u128 lm = static_cast<u128>(rep.L) * rep.M;
        if (lm > 1) {
            for (const auto& [qf, e] : factorize(lm).factors) {
                NagellCertificate nc;
                nc.p = p;
                nc.q = static_cast<u64>(qf);
                nc.L = rep.L;
                nc.M = rep.M;
                nc.divides_m = rep.M % nc.q == 0;
                nc.bound_ok = static_cast<u128>(nc.q) * nc.q < static_cast<u128>(4) * p;
                if (!nc.bound_ok) throw integrity_error("Nagell bound violated by a divisor of LM");
                nc.criterion_checked = nc.q > 3;
                if (nc.criterion_checked) {
                    nc.criterion_ok = cubic_criterion_at(nc.q, rep, nc.divides_m ? 1 : 0);
                    if (!nc.criterion_ok) throw integrity_error("criterion rejected a divisor of LM");
                }
                nc.oracle_ok = euler_oracle(static_cast<i128>(nc.q % p), pm, 3);
                if (!nc.oracle_ok) throw integrity_error("oracle rejected a divisor of LM");
                result.nagell.push_back(nc);
            }
        }
    }

    return result;
}

CountReport count_report(const PipelineResult& result, const PipelineConfig& config) {
    const Rational eps = normalize(config.epsilon);
    CountReport report;
    report.cert_count = result.certificates.size();
    report.nagell_count = result.nagell.size();

    const i64 divisor = config.k == PipelineKind::Cubic ? 30 : (config.k == PipelineKind::Quartic ? 50 : 25);
    i64 tnum = eps.num, tden = eps.den * divisor;
    const i64 g = std::gcd(tnum, tden);
    tnum /= g;
    tden /= g;
    report.threshold_num = tnum;
    report.threshold_den = tden;
    report.threshold = std::pow(static_cast<double>(config.p), static_cast<double>(tnum) / static_cast<double>(tden));
    // count > p^(tnum/tden) compared exactly
    report.met = pow_less(config.p, static_cast<u64>(tnum), report.cert_count, static_cast<u64>(tden));

    if (!result.certificates.empty()) {
        report.min_q = result.certificates.front().q;
        report.max_q = result.certificates.back().q;
    }

    if (config.k == PipelineKind::Quadratic) {
        report.p19_threshold = std::pow(static_cast<double>(config.p), 1.0 / 9.0);
        if (config.p <= 10000000) {
            const PrimeModulus pm(config.p);
            const u64 count = prime_qr_count_below(pm);
            report.qr_scan_count = count;
            report.p19_met = pow_less(config.p, 1, count, 9);
        }
    }
    return report;
}

}  // namespace residua
