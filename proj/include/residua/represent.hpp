#pragma once

#include <vector>

#include "residua/arith.hpp"

namespace residua {

enum class RepKind { Cubic4p27, Quartic4 };

/// The positive solution of 4p = L^2 + 27M^2 (Cubic4p27) or
/// p = L^2 + 4M^2 (Quartic4); unique up to sign, normalized L, M > 0.
struct Representation {
    u64 p = 0;
    RepKind kind = RepKind::Cubic4p27;
    u64 L = 0;
    u64 M = 0;
};

/// Reduced positive definite binary quadratic form of discriminant
/// b^2 - 4ac = -p: |b| <= a <= c, b >= 0 when |b| = a or a = c.
struct QuadraticForm {
    u64 a = 0;
    i64 b = 0;
    u64 c = 0;
    i64 discriminant = 0;
};

/// Solves 4p = L^2 + 27M^2 for p ≡ 1 (mod 3).
Representation represent_cubic(const PrimeModulus& p);

/// Solves p = L^2 + 4M^2 for p ≡ 1 (mod 4).
Representation represent_quartic(const PrimeModulus& p);

/// Validates a caller-supplied (L, M) pair against the defining equation;
/// used when reconstructing from certificate records.
Representation make_representation(const PrimeModulus& p, RepKind kind, u64 big_l, u64 big_m);

/// The complete list of reduced forms of discriminant -p, for
/// p ≡ 3 (mod 4); ascending by (a, b, c). Length equals h(-p).
std::vector<QuadraticForm> reduced_forms(const PrimeModulus& p);

/// Reduced form of discriminant -p maximizing a; ties broken by larger
/// b, then larger c.
QuadraticForm max_a_form(const PrimeModulus& p);

}  // namespace residua
