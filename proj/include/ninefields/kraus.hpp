// Local criterion at a prime over 2 for (c4, c6) to be the invariants of an
// integral Weierstrass model, by cases on v(c4), together with an independent
// brute-force oracle that searches residue classes for a completed model.
#pragma once

#include "ninefields/tate.hpp"

namespace ninefields {

struct PreconditionViolated : std::runtime_error {
    PreconditionViolated() : std::runtime_error("c4^3 - c6^2 is not 1728 times an integer") {}
};

struct KrausResult {
    bool ok = false;
    int case_used = 0;                 // 1, 2, or 3 (by v(c4))
    std::optional<QuadInt> a1_witness; // cases 1, 2
    std::optional<QuadInt> a3_witness; // cases 2, 3
};

// true iff an integral model with invariants exactly (c4, c6) exists over the
// completion at q (a prime dividing 2)
KrausResult kraus_criterion(const QuadInt& c4, const QuadInt& c6, const PrimeElement& q);

// independent check: enumerate residue classes of (b2, a1, a3) and test the
// exact divisibilities that complete a model with these invariants
bool kraus_oracle(const QuadInt& c4, const QuadInt& c6, const PrimeElement& q);

} // namespace ninefields
