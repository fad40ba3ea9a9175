#include "ninefields/primes.hpp"

#include <algorithm>

namespace ninefields {

Int field_discriminant(const FieldCtx& F) {
    return F.half_basis ? Int(-F.d) : Int(-4 * F.d);
}

namespace {

// square root of a mod p (p odd prime), or -1 if none; Tonelli-Shanks
Int sqrt_mod_p(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return -1;
    Int r;
    if (p % 4 == 3) {
        Int e = (p + 1) / 4;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Int m(s), c, t, x;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Int e = (q + 1) / 2;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    while (t != 1) {
        Int tt = t;
        long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (long j = 0; j < m.get_si() - i - 1; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

} // namespace

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's cycle-finding variant
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xdecafbadUL);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 1) + 1;
        Int m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = r - k;
                if (m < lim) lim = m;
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * ((x - y) % n + n) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int diff = ((x - ys) % n + n) % n;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_int_rec(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n]++;
        return;
    }
    Int g = pollard_rho(n);
    factor_int_rec(g, out);
    factor_int_rec(n / g, out);
}

} // namespace

std::vector<std::pair<Int, unsigned>> factor_int(Int n) {
    if (n < 0) n = -n;
    std::map<Int, unsigned> acc;
    if (n == 0) throw std::invalid_argument("factor_int(0)");
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            acc[Int(p)]++;
            n /= p;
        }
    }
    // trial division below 10^6
    for (Int p = 17; p * p <= n && p < 1000000; p += 2) {
        while (n % p == 0) {
            acc[p]++;
            n /= p;
        }
    }
    if (n > 1) factor_int_rec(n, acc);
    std::vector<std::pair<Int, unsigned>> out(acc.begin(), acc.end());
    return out;
}

std::vector<PrimeElement> split_rational_prime(const Int& p, const FieldCtx& F) {
    Int disc = field_discriminant(F);
    std::vector<PrimeElement> out;
    auto make_prime = [&](const QuadInt& gen, PrimeElement::Kind k) {
        PrimeElement P;
        P.gen = canonical_associate(gen);
        P.p = p;
        P.kind = k;
        P.norm = (k == PrimeElement::Kind::inert) ? p * p : p;
        return P;
    };
    int kro = mpz_kronecker(disc.get_mpz_t(), p.get_mpz_t());
    if (kro == -1) {
        out.push_back(make_prime(F.make(p, 0), PrimeElement::Kind::inert));
        return out;
    }
    // need a root r of the minimal polynomial of w modulo p
    // half basis: x^2 - x + c;  otherwise: x^2 + d
    std::vector<Int> roots;
    if (p == 2) {
        for (Int r = 0; r < 2; ++r) {
            Int val = F.half_basis ? Int(r * r - r + F.wconst) : Int(r * r + F.wconst);
            if (val % 2 == 0) roots.push_back(r);
        }
    } else if (F.half_basis) {
        // 2x = 1 +- sqrt(1-4c) = 1 +- sqrt(disc)
        Int s = sqrt_mod_p(disc, p);
        if (s < 0) throw std::logic_error("split/ramified prime without a root");
        Int inv2;
        Int two = 2;
        mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), p.get_mpz_t());
        roots.push_back((1 + s) % p * inv2 % p);
        roots.push_back(((1 - s) % p + p) % p * inv2 % p);
    } else {
        Int s = sqrt_mod_p(Int(-F.d), p);
        if (s < 0) throw std::logic_error("split/ramified prime without a root");
        roots.push_back(s);
        roots.push_back((p - s) % p);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (kro == 0) {
        QuadInt gen = ideal_generator({F.make(p, 0), F.omega - F.make(roots[0], 0)});
        out.push_back(make_prime(gen, PrimeElement::Kind::ramified));
        return out;
    }
    for (const Int& r : roots) {
        QuadInt gen = ideal_generator({F.make(p, 0), F.omega - F.make(r, 0)});
        out.push_back(make_prime(gen, PrimeElement::Kind::split));
    }
    std::sort(out.begin(), out.end(),
              [](const PrimeElement& a, const PrimeElement& b) { return quad_less(a.gen, b.gen); });
    return out;
}

std::vector<PrimeElement> primes_up_to(const FieldCtx& F, const Int& bound) {
    std::vector<PrimeElement> out;
    if (bound < 2) return out;
    // sieve rational primes up to bound
    unsigned long nb = bound.get_ui();
    std::vector<bool> comp(nb + 1, false);
    for (unsigned long p = 2; p <= nb; ++p) {
        if (comp[p]) continue;
        for (unsigned long q = p * p; q <= nb; q += p) comp[q] = true;
        for (auto& P : split_rational_prime(Int(p), F))
            if (P.norm <= bound) out.push_back(P);
    }
    std::stable_sort(out.begin(), out.end(), [](const PrimeElement& a, const PrimeElement& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return quad_less(a.gen, b.gen);
    });
    return out;
}

long valuation(const QuadInt& q, const PrimeElement& P) {
    if (q.is_zero()) throw std::invalid_argument("valuation of zero");
    if (P.kind == PrimeElement::Kind::inert) {
        // fast path: min p-adic valuation of the coordinates
        long vx = q.x == 0 ? -1 : (long)mpz_remove(Int().get_mpz_t(), q.x.get_mpz_t(), P.p.get_mpz_t());
        long vy = q.y == 0 ? -1 : (long)mpz_remove(Int().get_mpz_t(), q.y.get_mpz_t(), P.p.get_mpz_t());
        if (vx < 0) return vy;
        if (vy < 0) return vx;
        return std::min(vx, vy);
    }
    long v = 0;
    QuadInt cur = q;
    while (true) {
        auto d = try_exact_div(cur, P.gen);
        if (!d) return v;
        cur = *d;
        ++v;
    }
}

QuadInt remove_prime(QuadInt q, const PrimeElement& P, long& v_out) {
    v_out = 0;
    while (true) {
        auto d = try_exact_div(q, P.gen);
        if (!d) return q;
        q = *d;
        ++v_out;
    }
}

Factorization factor(const QuadInt& q) {
    if (q.is_zero()) throw std::invalid_argument("factor(0)");
    const FieldCtx& F = *q.F;
    Factorization out;
    QuadInt rest = q;
    for (auto& [p, e] : factor_int(norm(q))) {
        (void)e;
        for (auto& P : split_rational_prime(p, F)) {
            long v = 0;
            rest = remove_prime(rest, P, v);
            if (v > 0) out.parts.push_back({P, (unsigned)v});
        }
    }
    if (!F.is_unit(rest)) throw std::logic_error("factor: nonunit remainder");
    out.unit = rest;
    std::sort(out.parts.begin(), out.parts.end(), [](const auto& a, const auto& b) {
        if (a.first.norm != b.first.norm) return a.first.norm < b.first.norm;
        return quad_less(a.first.gen, b.first.gen);
    });
    return out;
}

std::optional<QuadInt> sqrt_exact(const QuadInt& q) {
    const FieldCtx& F = *q.F;
    if (q.is_zero()) return F.zero;
    Int n = norm(q);
    if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    auto fac = factor(q);
    QuadInt r = F.one;
    for (auto& [P, e] : fac.parts) {
        if (e % 2) return std::nullopt;
        r = r * pow(P.gen, e / 2);
    }
    // leftover unit must be a square of a unit
    for (const auto& u : F.units) {
        if (u * u == fac.unit) return u * r;
    }
    return std::nullopt;
}

std::vector<QuadInt> cbrt_all(const QuadInt& q) {
    const FieldCtx& F = *q.F;
    std::vector<QuadInt> out;
    if (q.is_zero()) {
        out.push_back(F.zero);
        return out;
    }
    auto fac = factor(q);
    QuadInt r = F.one;
    for (auto& [P, e] : fac.parts) {
        if (e % 3) return out;
        r = r * pow(P.gen, e / 3);
    }
    for (const auto& u : F.units) {
        if (u * u * u == fac.unit) out.push_back(u * r);
    }
    // distinct values only
    std::sort(out.begin(), out.end(), quad_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<QuadInt> residue_test(const QuadInt& q, const QuadInt& m, ResidueKind kind) {
    if (m.is_zero()) throw DivisionByZero();
    const FieldCtx& F = *q.F;
    ResidueSystem rs(m);
    std::optional<QuadInt> found;
    rs.for_each([&](const QuadInt& w) {
        if (found) return;
        switch (kind) {
        case ResidueKind::square:
            if (rs.congruent(w * w, q)) found = w;
            break;
        case ResidueKind::cube:
            if (rs.congruent(w * w * w, q)) found = w;
            break;
        case ResidueKind::fourth_power:
            if (rs.congruent(pow(w, 4), q)) found = w;
            break;
        case ResidueKind::unit_times_square:
            for (const auto& u : F.units)
                if (rs.congruent(u * w * w, q)) {
                    found = w;
                    return;
                }
            break;
        }
    });
    return found;
}

std::vector<QuadInt> divisors_up_to_units(const QuadInt& q) {
    auto fac = factor(q);
    std::vector<QuadInt> out = {q.F->one};
    for (auto& [P, e] : fac.parts) {
        std::vector<QuadInt> next;
        QuadInt pk = q.F->one;
        for (unsigned k = 0; k <= e; ++k) {
            for (const auto& d : out) next.push_back(d * pk);
            if (k < e) pk = pk * P.gen;
        }
        out = std::move(next);
    }
    for (auto& d : out) d = canonical_associate(d);
    std::sort(out.begin(), out.end(), quad_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace ninefields
