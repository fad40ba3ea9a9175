// Local reduction data at a prime of O_K: Kodaira type, conductor exponent,
// minimal discriminant valuation.  At primes above 2 and 3 this runs the full
// step-by-step algorithm with residue-field root finding done by exhaustive
// enumeration (those residue fields have at most 9 elements).  At primes of
// residue characteristic >= 5 the reduction is tame and the type follows from
// the valuations of (c4, c6, disc) of a minimal pair, plus one square test
// for the split/nonsplit distinction.
#pragma once

#include "ninefields/curve.hpp"

#include <map>

namespace ninefields {

enum class Reduction { good, mult_split, mult_nonsplit, additive };

struct LocalData {
    PrimeElement prime;
    Reduction reduction = Reduction::good;
    int f = 0;           // conductor exponent
    long v_min_disc = 0; // valuation of the minimal discriminant
    long scalings = 0;   // number of pi-rescalings from the input model
    std::string kodaira = "I0";
};

LocalData tate_local(const WeierstrassModel& E, const PrimeElement& P);

struct ConductorData {
    std::vector<LocalData> bad;  // nontrivial local data (f > 0), sorted by norm
    QuadInt disc_min;            // exact minimal discriminant
    Int conductor_norm{1};
};

// Local data at every prime dividing disc(E).  When support_hint is nonempty
// it must contain every bad prime (it may contain more); this avoids
// factoring large discriminant norms.
ConductorData conductor(const WeierstrassModel& E,
                        const std::vector<PrimeElement>& support_hint = {});

// N(disc_min) <= N(conductor)^6
bool szpiro_check(const ConductorData& cd);
bool szpiro_check(const WeierstrassModel& E);

// A global minimal model (exists: class number one).  Also reports the
// scaling element u with c4_min = c4/u^4 up to a unit.
WeierstrassModel global_minimal_model(const WeierstrassModel& E, const ConductorData& cd);

// true when E has good reduction at every prime over 2 and the reduced curve
// is supersingular at some of them
bool supersingular_at_two(const WeierstrassModel& E);

// square test in the residue field of P (P odd)
bool is_residue_square(const QuadInt& z, const PrimeElement& P);

} // namespace ninefields
