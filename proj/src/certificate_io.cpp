#include "residua/certificate_io.hpp"

#include <numeric>
#include <sstream>
#include <vector>

#include "residua/errors.hpp"
#include "residua/montgomery.hpp"
#include "residua/reciprocity.hpp"

namespace residua {

namespace {

const char* statement_name(Statement s) {
    return s == Statement::QResidue ? "QResidue" : "QStarResidue";
}

Statement statement_from(const std::string& name) {
    if (name == "QResidue") return Statement::QResidue;
    if (name == "QStarResidue") return Statement::QStarResidue;
    throw domain_error("unknown statement " + name);
}

// "key=value" tokens in fixed order
class FieldReader {
  public:
    explicit FieldReader(const std::string& line) {
        std::istringstream in(line);
        std::string tok;
        while (in >> tok) tokens_.push_back(tok);
    }

    bool starts_with(const std::string& tag) const {
        return !tokens_.empty() && tokens_[0] == tag;
    }
    void skip_tag() { ++pos_; }

    std::string get(const std::string& key) {
        if (pos_ >= tokens_.size()) throw domain_error("missing field " + key);
        const std::string& tok = tokens_[pos_++];
        auto eq = tok.find('=');
        if (eq == std::string::npos || tok.substr(0, eq) != key)
            throw domain_error("expected field " + key + ", found " + tok);
        return tok.substr(eq + 1);
    }

    std::string peek_key() const {
        if (pos_ >= tokens_.size()) return "";
        auto eq = tokens_[pos_].find('=');
        return eq == std::string::npos ? "" : tokens_[pos_].substr(0, eq);
    }

    void done() const {
        if (pos_ != tokens_.size()) throw domain_error("trailing fields in record");
    }

  private:
    std::vector<std::string> tokens_;
    size_t pos_ = 0;
};

u64 get_u64(FieldReader& r, const std::string& key) {
    return std::stoull(r.get(key));
}
i64 get_i64(FieldReader& r, const std::string& key) {
    return std::stoll(r.get(key));
}
bool get_bool(FieldReader& r, const std::string& key) {
    const std::string v = r.get(key);
    if (v == "1") return true;
    if (v == "0") return false;
    throw domain_error("field " + key + " must be 0 or 1");
}

u128 residue_of(i128 v, u128 q) {
    i128 r = v % static_cast<i128>(q);
    if (r < 0) r += static_cast<i128>(q);
    return static_cast<u128>(r);
}

}  // namespace

std::string format_certificate(const ResidueCertificate& cert) {
    std::ostringstream out;
    out << "p=" << cert.p << " k=" << kind_power(cert.k) << " q=" << to_string_u128(cert.q)
        << " statement=" << statement_name(cert.statement) << " n=" << cert.n << " m=" << cert.m
        << " witness_x=" << to_string_u128(cert.witness_x) << " value=" << to_string_u128(cert.value);
    if (cert.uses_form) {
        out << " a=" << cert.fa << " b=" << cert.fb << " c=" << cert.fc;
    } else {
        out << " L=" << cert.L << " M=" << cert.M;
    }
    out << " bound_ok=" << (cert.bound_ok ? 1 : 0) << " criterion_ok=" << (cert.criterion_ok ? 1 : 0)
        << " oracle_ok=" << (cert.oracle_ok ? 1 : 0) << " epsilon=" << cert.epsilon.str();
    return out.str();
}

std::string format_nagell(const NagellCertificate& cert) {
    std::ostringstream out;
    out << "nagell p=" << cert.p << " q=" << cert.q << " L=" << cert.L << " M=" << cert.M
        << " divides=" << (cert.divides_m ? "M" : "L") << " bound_ok=" << (cert.bound_ok ? 1 : 0)
        << " criterion_ok=";
    if (cert.criterion_checked) {
        out << (cert.criterion_ok ? 1 : 0);
    } else {
        out << "-";
    }
    out << " oracle_ok=" << (cert.oracle_ok ? 1 : 0);
    return out.str();
}

ResidueCertificate parse_certificate(const std::string& line) {
    FieldReader r(line);
    ResidueCertificate cert;
    cert.p = get_u64(r, "p");
    const u64 k = get_u64(r, "k");
    if (k != 2 && k != 3 && k != 4) throw domain_error("k must be 2, 3, or 4");
    cert.k = static_cast<PipelineKind>(k);
    cert.q = parse_u128(r.get("q"));
    cert.statement = statement_from(r.get("statement"));
    cert.n = get_u64(r, "n");
    cert.m = get_u64(r, "m");
    cert.witness_x = parse_u128(r.get("witness_x"));
    cert.value = parse_u128(r.get("value"));
    if (r.peek_key() == "a") {
        cert.uses_form = true;
        cert.fa = get_i64(r, "a");
        cert.fb = get_i64(r, "b");
        cert.fc = get_i64(r, "c");
    } else {
        cert.uses_form = false;
        cert.L = get_u64(r, "L");
        cert.M = get_u64(r, "M");
    }
    cert.bound_ok = get_bool(r, "bound_ok");
    cert.criterion_ok = get_bool(r, "criterion_ok");
    cert.oracle_ok = get_bool(r, "oracle_ok");
    cert.epsilon = parse_rational(r.get("epsilon"));
    r.done();
    return cert;
}

NagellCertificate parse_nagell(const std::string& line) {
    FieldReader r(line);
    if (!r.starts_with("nagell")) throw domain_error("not a nagell record");
    r.skip_tag();
    NagellCertificate cert;
    cert.p = get_u64(r, "p");
    cert.q = get_u64(r, "q");
    cert.L = get_u64(r, "L");
    cert.M = get_u64(r, "M");
    const std::string div = r.get("divides");
    if (div != "L" && div != "M") throw domain_error("divides must be L or M");
    cert.divides_m = div == "M";
    cert.bound_ok = get_bool(r, "bound_ok");
    const std::string crit = r.get("criterion_ok");
    if (crit == "-") {
        cert.criterion_checked = false;
        cert.criterion_ok = false;
    } else if (crit == "1" || crit == "0") {
        cert.criterion_checked = true;
        cert.criterion_ok = crit == "1";
    } else {
        throw domain_error("criterion_ok must be 0, 1, or -");
    }
    cert.oracle_ok = get_bool(r, "oracle_ok");
    r.done();
    return cert;
}

namespace {

CheckOutcome fail(const std::string& reason) { return CheckOutcome{false, reason}; }

CheckOutcome check_certificate_impl(const ResidueCertificate& cert) {
    const PrimeModulus pm(cert.p);  // throws if composite
    const u64 p = cert.p;
    const Rational eps = normalize(cert.epsilon);
    if (eps.num <= 0 || 2 * eps.num > eps.den) return fail("epsilon outside (0, 1/2]");

    if (!cert.criterion_ok || !cert.oracle_ok)
        return fail("record carries a failed criterion or oracle flag");
    if ((cert.statement == Statement::QStarResidue) != (cert.k == PipelineKind::Quartic))
        return fail("statement does not match k");
    if (!is_prime_u128(cert.q)) return fail("q is not prime");
    if (cert.q == p) return fail("q = p is not certifiable");
    if (cert.value == 0) return fail("zero value");
    if (cert.value % cert.q != 0) return fail("q does not divide value");
    if (cert.n == 0) return fail("enumeration index must be positive");

    // rebuild the sieve polynomial from the recorded parameters
    SievePolynomial poly;
    std::optional<Representation> rep;
    if (cert.k == PipelineKind::Cubic) {
        if (cert.uses_form) return fail("cubic record must carry (L, M)");
        rep = make_representation(pm, RepKind::Cubic4p27, cert.L, cert.M);
        poly = build_cubic_poly(*rep);
        if (cert.m != poly.stride * cert.n + poly.n0) return fail("m != stride*n + n0");
    } else if (cert.k == PipelineKind::Quartic) {
        if (cert.uses_form) return fail("quartic record must carry (L, M)");
        rep = make_representation(pm, RepKind::Quartic4, cert.L, cert.M);
        poly = build_quartic_poly(*rep);
        if (cert.m != poly.stride * cert.n + poly.n0) return fail("m != stride*n + n0");
    } else {
        if (!cert.uses_form) return fail("quadratic record must carry (a, b, c)");
        // a record must match one canonical branch polynomial, both in
        // coefficients and in the stride/offset arithmetic (the effective
        // and form polynomials coincide when h(-p) = 1)
        const std::vector<QuadBranch> candidates =
            p % 4 == 1 ? std::vector<QuadBranch>{QuadBranch::Shift}
                       : std::vector<QuadBranch>{QuadBranch::Form, QuadBranch::Effective};
        bool matched = false;
        for (QuadBranch b : candidates) {
            SievePolynomial cand = build_quadratic_poly(pm, b);
            if (cand.base_coeffs[2] == cert.fa && cand.base_coeffs[1] == cert.fb &&
                cand.base_coeffs[0] == cert.fc && cert.m == cand.stride * cert.n + cand.n0) {
                poly = std::move(cand);
                matched = true;
                break;
            }
        }
        if (!matched) return fail("record matches no canonical quadratic branch");
    }
    const i128 recomputed = poly.eval_f0(cert.m);
    if (recomputed <= 0 || static_cast<u128>(recomputed) != cert.value)
        return fail("value does not equal f0(m)");

    // criterion at the recorded witness and the independent Euler oracle
    const u128 q = cert.q;
    if (cert.k == PipelineKind::Cubic) {
        if (cert.witness_x != (q - cert.m % q) % q) return fail("cubic witness is not -m mod q");
        if (q == 2 || q == 3) return fail("cubic certificate with q in {2, 3}");
        if (!cubic_criterion_at(q, *rep, cert.witness_x)) return fail("cubic criterion fails at witness");
        if (!euler_oracle(static_cast<i128>(q % p), pm, 3)) return fail("euler oracle rejects q");
    } else if (cert.k == PipelineKind::Quartic) {
        if (cert.witness_x != (q - cert.m % q) % q) return fail("quartic witness is not -m mod q");
        if (q == 2) return fail("quartic certificate with q = 2");
        if (!quartic_criterion_at(q, *rep, cert.witness_x)) return fail("quartic criterion fails at witness");
        const i128 q_star = q % 4 == 1 ? static_cast<i128>(q % p) : -static_cast<i128>(q % p);
        if (!euler_oracle(q_star, pm, 4)) return fail("euler oracle rejects q*");
    } else {
        if (q == 2) return fail("quadratic certificate with q = 2");
        const i128 p_star = p % 4 == 1 ? static_cast<i128>(p) : -static_cast<i128>(p);
        u128 expected_witness;
        if (p % 4 == 1) {
            const u64 r = static_cast<u64>(poly.base_coeffs[1]) / 2;
            expected_witness = (static_cast<u128>(cert.m) + r) % q;
        } else {
            expected_witness = residue_of(2 * static_cast<i128>(cert.fa) * cert.m + cert.fb, q);
        }
        if (cert.witness_x != expected_witness) return fail("quadratic witness mismatch");
        if (mulmod_u128_slow(cert.witness_x, cert.witness_x, q) != residue_of(p_star, q))
            return fail("witness^2 != p* mod q");
        if (jacobi(p_star, q) != 1) return fail("legendre criterion rejects p* mod q");
        if (!euler_oracle(static_cast<i128>(q % p), pm, 2)) return fail("euler oracle rejects q");
    }

    // recorded bound flag must equal the exact comparison q < p^(1/2+eps)
    i64 bnum = eps.den + 2 * eps.num, bden = 2 * eps.den;
    const i64 g = std::gcd(bnum, bden);
    const bool bound = pow_less(q, static_cast<u64>(bden / g), p, static_cast<u64>(bnum / g));
    if (bound != cert.bound_ok) return fail("bound_ok flag does not match q vs p^(1/2+eps)");

    return CheckOutcome{};
}

CheckOutcome check_nagell_impl(const NagellCertificate& cert) {
    const PrimeModulus pm(cert.p);
    const Representation rep = make_representation(pm, RepKind::Cubic4p27, cert.L, cert.M);
    if (!is_prime(cert.q)) return fail("q is not prime");
    if (cert.divides_m ? rep.M % cert.q != 0 : rep.L % cert.q != 0)
        return fail("q does not divide the recorded component");
    if (!cert.bound_ok || !(static_cast<u128>(cert.q) * cert.q < static_cast<u128>(4) * cert.p))
        return fail("q is not below 2*sqrt(p)");
    if (cert.criterion_checked != (cert.q > 3)) return fail("criterion applicability mismatch");
    if (cert.criterion_checked) {
        if (!cert.criterion_ok) return fail("record carries a failed criterion flag");
        if (!cubic_criterion_at(cert.q, rep, cert.divides_m ? 1 : 0))
            return fail("criterion fails at the canonical witness");
    }
    if (!cert.oracle_ok) return fail("record carries a failed oracle flag");
    if (!euler_oracle(static_cast<i128>(cert.q % cert.p), pm, 3)) return fail("euler oracle rejects q");
    return CheckOutcome{};
}

}  // namespace

CheckOutcome check_certificate(const ResidueCertificate& cert) {
    try {
        return check_certificate_impl(cert);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

CheckOutcome check_nagell(const NagellCertificate& cert) {
    try {
        return check_nagell_impl(cert);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

CheckOutcome check_line(const std::string& line) {
    try {
        FieldReader probe(line);
        if (probe.starts_with("nagell")) return check_nagell(parse_nagell(line));
        return check_certificate(parse_certificate(line));
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}

}  // namespace residua
