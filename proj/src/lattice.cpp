#include "ninefields/lattice.hpp"

namespace ninefields {

namespace {

// floor division for mpz
Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// nearest integer to a/b, b > 0 (ties toward +inf; any tie rule works here)
Int round_div(const Int& a, const Int& b) { return fdiv(2 * a + b, 2 * b); }

// twice the inner product associated with the norm form:
// 2*B(u,v) = N(u+v) - N(u) - N(v)
Int dot2(const QuadInt& u, const QuadInt& v) { return norm(u + v) - norm(u) - norm(v); }

} // namespace

Hnf2 hnf_from_vectors(const std::vector<std::pair<Int, Int>>& vecs) {
    // Maintain two columns (a1,b1), (a2,b2); merge each vector in turn.
    Int a1 = 0, b1 = 0, a2 = 0, b2 = 0; // start with the zero lattice
    auto merge = [&](Int ax, Int bx) {
        // Insert column (ax,bx): first clear its top entry against column 1
        // by a gcd step, then fold the remainder into column 2.
        if (ax != 0) {
            if (a1 == 0) {
                std::swap(a1, ax);
                std::swap(b1, bx);
            } else {
                // extended gcd on top entries
                Int g, s, t;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a1.get_mpz_t(),
                           ax.get_mpz_t());
                Int na = g;
                Int nb = s * b1 + t * bx;
                // the discarded combination has top entry 0:
                Int u = a1 / g, v = ax / g;
                Int rb = u * bx - v * b1; // (a1/g)*colx - (ax/g)*col1 has top 0
                a1 = na;
                b1 = nb;
                ax = 0;
                bx = rb;
            }
        }
        if (bx != 0) {
            if (b2 == 0)
                b2 = bx;
            else {
                Int g;
                mpz_gcd(g.get_mpz_t(), b2.get_mpz_t(), bx.get_mpz_t());
                b2 = g;
            }
        }
    };
    for (const auto& [a, b] : vecs) merge(Int(a), Int(b));
    if (a1 == 0 || b2 == 0) throw ZeroIdeal();
    if (a1 < 0) {
        a1 = -a1;
        b1 = -b1;
    }
    if (b2 < 0) b2 = -b2;
    // normalize b1 into [0, b2)
    Int k = fdiv(b1, b2);
    b1 -= k * b2;
    return Hnf2{a1, b1, b2};
}

QuadInt shortest_vector(QuadInt v1, QuadInt v2) {
    // Gauss-Lagrange: reduce until the projection coefficient vanishes.
    if (norm(v1) < norm(v2)) std::swap(v1, v2);
    // invariant: N(v2) <= N(v1) after each swap
    while (true) {
        if (v2.is_zero()) return v1;
        Int t = round_div(dot2(v1, v2), 2 * norm(v2));
        v1 = v1 - QuadInt(t * v2.x, t * v2.y, *v2.F);
        if (norm(v1) >= norm(v2)) return v2;
        std::swap(v1, v2);
    }
}

QuadInt ideal_generator(const std::vector<QuadInt>& gens) {
    const FieldCtx* F = nullptr;
    std::vector<std::pair<Int, Int>> vecs;
    for (const auto& g : gens) {
        if (!F) F = g.F;
        if (g.is_zero()) continue;
        QuadInt gw = g * g.F->omega;
        vecs.push_back({g.x, g.y});
        vecs.push_back({gw.x, gw.y});
    }
    if (!F || vecs.empty()) throw ZeroIdeal();
    Hnf2 h = hnf_from_vectors(vecs);
    QuadInt v1 = F->make(h.h11, h.h21);
    QuadInt v2 = F->make(0, h.h22);
    QuadInt s = shortest_vector(v1, v2);
    // class number one: the shortest vector attains the ideal norm
    if (norm(s) != h.det())
        throw std::logic_error("shortest lattice vector does not generate the ideal");
    return canonical_associate(s);
}

QuadInt gcd(const QuadInt& a, const QuadInt& b) {
    if (a.is_zero() && b.is_zero()) throw ZeroIdeal();
    if (a.is_zero()) return canonical_associate(b);
    if (b.is_zero()) return canonical_associate(a);
    return ideal_generator({a, b});
}

ResidueSystem::ResidueSystem(const QuadInt& m) : m_(m) {
    if (m.is_zero()) throw DivisionByZero();
    QuadInt mw = m * m.F->omega;
    hnf_ = hnf_from_vectors({{m.x, m.y}, {mw.x, mw.y}});
}

QuadInt ResidueSystem::reduce(const QuadInt& z) const {
    Int k1 = fdiv(z.x, hnf_.h11);
    Int x = z.x - k1 * hnf_.h11;
    Int y = z.y - k1 * hnf_.h21;
    Int k2 = fdiv(y, hnf_.h22);
    y -= k2 * hnf_.h22;
    return QuadInt(std::move(x), std::move(y), *m_.F);
}

bool ResidueSystem::congruent(const QuadInt& a, const QuadInt& b) const {
    return reduce(a - b).is_zero();
}

void ResidueSystem::for_each(const std::function<void(const QuadInt&)>& fn) const {
    for (Int x = 0; x < hnf_.h11; ++x)
        for (Int y = 0; y < hnf_.h22; ++y) fn(QuadInt(x, y, *m_.F));
}

std::vector<QuadInt> ResidueSystem::all() const {
    std::vector<QuadInt> out;
    for_each([&](const QuadInt& r) { out.push_back(r); });
    return out;
}

bool congruent_mod(const QuadInt& a, const QuadInt& b, const QuadInt& m) {
    return divides(m, a - b);
}

} // namespace ninefields
