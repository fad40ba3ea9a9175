// Rank-2 integer lattices inside O_K: Hermite forms, Gauss-Lagrange reduction
// under the norm form, principal generators of ideals, ideal gcd, and complete
// residue systems modulo an element.
//
// The Euclidean algorithm is never used: O_K is not norm-Euclidean for
// d >= 19, but a shortest nonzero vector of an ideal lattice always generates
// it here (its norm equals the ideal norm because every ideal is principal
// and the shortest vectors of O_K itself are the units).
#pragma once

#include "ninefields/field.hpp"

#include <functional>
#include <vector>

namespace ninefields {

struct ZeroIdeal : std::runtime_error {
    ZeroIdeal() : std::runtime_error("ideal generated by zeros only") {}
};

// Basis of a finite-index sublattice of O_K in lower-triangular Hermite form:
//   col1 = (h11, h21), col2 = (0, h22),  h11, h22 > 0.
struct Hnf2 {
    Int h11, h21, h22;
    Int det() const { return h11 * h22; }
};

// Hermite form of the span of the given coordinate vectors (as columns).
Hnf2 hnf_from_vectors(const std::vector<std::pair<Int, Int>>& vecs);

// Shortest nonzero vector of the lattice spanned by (v1, v2) under the norm
// form of F (two-dimensional Gauss-Lagrange reduction).
QuadInt shortest_vector(QuadInt v1, QuadInt v2);

// Generator of the ideal (gens...), canonicalized.  Throws ZeroIdeal.
QuadInt ideal_generator(const std::vector<QuadInt>& gens);

// Ideal gcd: generator of (a, b), canonicalized.  gcd(0,0) throws.
QuadInt gcd(const QuadInt& a, const QuadInt& b);

// Complete residue system modulo a nonzero element m, with a canonical
// representative map.  |system| = N(m).
class ResidueSystem {
  public:
    ResidueSystem(const QuadInt& m);
    const QuadInt& modulus() const { return m_; }
    Int size() const { return hnf_.det(); }
    QuadInt reduce(const QuadInt& z) const; // canonical representative
    bool congruent(const QuadInt& a, const QuadInt& b) const;
    // iterate all representatives (use only for small moduli)
    void for_each(const std::function<void(const QuadInt&)>& fn) const;
    std::vector<QuadInt> all() const;

  private:
    QuadInt m_;
    Hnf2 hnf_;
};

// a = b (mod m)
bool congruent_mod(const QuadInt& a, const QuadInt& b, const QuadInt& m);

} // namespace ninefields
