// Prime ideals of O_K: splitting of rational primes via the Kronecker symbol
// of the field discriminant, factorization of elements (trial division plus
// Pollard rho on the rational norm), prime enumeration by norm, and exact
// square / cube roots.
#pragma once

#include "ninefields/field.hpp"
#include "ninefields/lattice.hpp"

#include <map>
#include <vector>

namespace ninefields {

struct PrimeElement {
    QuadInt gen;   // canonical generator of the prime ideal
    Int p;         // rational prime below
    enum class Kind { split, inert, ramified } kind;
    Int norm; // p or p^2

    bool operator==(const PrimeElement& o) const { return gen == o.gen; }
};

// field discriminant: -4d (d = 1,2 mod 4) or -d (d = 3 mod 4)
Int field_discriminant(const FieldCtx& F);

// all primes of O_K above the rational prime p, canonical generators,
// deterministic order
std::vector<PrimeElement> split_rational_prime(const Int& p, const FieldCtx& F);

// one entry per prime ideal of norm <= bound, nondecreasing norm
std::vector<PrimeElement> primes_up_to(const FieldCtx& F, const Int& bound);

// rational integer factorization (trial division below 10^6, Pollard rho
// above), exponents sorted by prime
std::vector<std::pair<Int, unsigned>> factor_int(Int n);
bool is_probable_prime(const Int& n);

struct Factorization {
    QuadInt unit;                                        // leftover unit
    std::vector<std::pair<PrimeElement, unsigned>> parts; // sorted by norm
    bool is_unit_only() const { return parts.empty(); }
};

// q = unit * prod gen_i^e_i, exactly.  q must be nonzero.
Factorization factor(const QuadInt& q);

// valuation of q at a prime (q nonzero)
long valuation(const QuadInt& q, const PrimeElement& P);
// remove all factors of P.gen from q
QuadInt remove_prime(QuadInt q, const PrimeElement& P, long& v_out);

// exact roots in O_K
std::optional<QuadInt> sqrt_exact(const QuadInt& q);
std::vector<QuadInt> cbrt_all(const QuadInt& q); // all cube roots in O_K

// k-th power (or unit-times-square) residue test modulo m, with witness
enum class ResidueKind { square, cube, fourth_power, unit_times_square };
std::optional<QuadInt> residue_test(const QuadInt& q, const QuadInt& m, ResidueKind kind);

// all divisors of q up to associates (canonical representatives)
std::vector<QuadInt> divisors_up_to_units(const QuadInt& q);

} // namespace ninefields
