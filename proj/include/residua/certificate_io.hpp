#pragma once

#include <string>

#include "residua/construct.hpp"

namespace residua {

/// One self-contained record per line:
///   p=.. k=.. q=.. statement=.. n=.. m=.. witness_x=.. value=..
///   L=.. M=..            (cubic, quartic)
///   a=.. b=.. c=..       (quadratic: coefficients of f0)
///   bound_ok=.. criterion_ok=.. oracle_ok=.. epsilon=..
/// Nagell records carry a leading "nagell" token.
std::string format_certificate(const ResidueCertificate& cert);
std::string format_nagell(const NagellCertificate& cert);

ResidueCertificate parse_certificate(const std::string& line);
NagellCertificate parse_nagell(const std::string& line);

struct CheckOutcome {
    bool ok = true;
    std::string reason;
};

/// Re-validates a parsed record from its fields alone: rebuilds the
/// sieve polynomial, recomputes q | f0(m), the criterion at the
/// recorded witness, the Euler oracle, and the size bound.
CheckOutcome check_certificate(const ResidueCertificate& cert);
CheckOutcome check_nagell(const NagellCertificate& cert);

/// Dispatches one line (certificate or nagell record).
CheckOutcome check_line(const std::string& line);

}  // namespace residua
