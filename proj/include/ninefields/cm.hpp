// Curves with complex multiplication by O_K of odd prime power conductor:
// fixed base curves per field, admissibility congruences for the quadratic /
// quartic / sextic twist families, Kummer-extension ramification tests at 2
// and 3, and catalog generation with full local verification.
#pragma once

#include "ninefields/records.hpp"

namespace ninefields {

struct CmBaseCurve {
    const FieldCtx* F;
    WeierstrassModel model;
    std::string label;
    Int cm_j; // rational j-invariant (integer)
};

const CmBaseCurve& cm_base_curve(const FieldCtx& F);

// pi = u^2 sqrt(-d) (mod 4) for some odd u (d = 2: pi = u^2 (1+sqrt(-2)));
// only for d not in {1, 3}
bool quad_cm_admissible(const QuadInt& pi);
// pi = -1 +- 2i (mod 8); only over Q(i)
bool quartic_cm_admissible(const QuadInt& pi);
// pi = sqrt(-3) * square (mod 4) and pi = +-4 (mod sqrt(-3)^3); only d = 3
bool sextic_cm_admissible(const QuadInt& pi);

// is K(alpha^(1/degree))/K unramified at 2 (degree 2, 4) or at 2 and 3
// (degree 6)?  alpha must be a unit at the primes involved.
bool unramified_kummer_test(const QuadInt& alpha, int degree);

// does some generator of (P) satisfy the admissibility congruence?  If so,
// reports the generator.
bool cm_admissible_prime(const PrimeElement& P, const FieldCtx& F, QuadInt* gen_out = nullptr);

// the twisted curve of conductor P^2 attached to an admissible generator
WeierstrassModel cm_twist_curve(const FieldCtx& F, const QuadInt& gen);

// every admissible prime of norm <= bound, with records verified to have
// conductor exactly (pi)^2
std::vector<CurveRecord> cm_catalog(const FieldCtx& F, const Int& bound, int workers = 0);

struct CmDensity {
    long admissible = 0;
    long total = 0;
    double fraction() const { return total ? double(admissible) / double(total) : 0.0; }
};
CmDensity cm_density(const FieldCtx& F, const Int& bound);

// For a rational CM curve attached to the field of discriminant -d_cm viewed
// over L: the twist parameter making it good at the bad prime, when the
// completions match; nullopt otherwise.  L = K returns 1 (the same-field
// catalog handles that case).
std::optional<QuadInt> cross_field_cm_twist(int d_cm, const FieldCtx& L);

} // namespace ninefields
