#include "ninefields/tate.hpp"

#include <algorithm>
#include <cassert>
#include <climits>

namespace ninefields {

namespace {

// Residue field O_K/P for P over 2 or 3 (size at most 9).  Elements are
// encoded as small integers: x (prime field) or x + p*y (inert, F_{p^2}).
class SmallResidueField {
  public:
    SmallResidueField(const FieldCtx& F, const PrimeElement& P) : F_(&F) {
        p_ = P.p.get_si();
        quad_ = (P.kind == PrimeElement::Kind::inert);
        q_ = quad_ ? p_ * p_ : p_;
        if (!quad_) {
            r_ = -1;
            for (long r = 0; r < p_; ++r) {
                if (divides(P.gen, F.omega - F.from_int(r))) {
                    r_ = r;
                    break;
                }
            }
            assert(r_ >= 0);
        }
    }

    long q() const { return q_; }
    long characteristic() const { return p_; }

    long reduce(const QuadInt& z) const {
        if (quad_) return mod(z.x) + p_ * mod(z.y);
        Int t = z.x + r_ * z.y;
        return (long)mpz_fdiv_ui(t.get_mpz_t(), (unsigned long)p_);
    }
    QuadInt lift(long e) const {
        if (quad_) return F_->make(e % p_, e / p_);
        return F_->from_int(e);
    }

    long add(long a, long b) const {
        if (!quad_) return (a + b) % p_;
        return (a % p_ + b % p_) % p_ + p_ * ((a / p_ + b / p_) % p_);
    }
    long neg(long a) const {
        if (!quad_) return (p_ - a) % p_;
        return (p_ - a % p_) % p_ + p_ * ((p_ - a / p_) % p_);
    }
    long mul(long a, long b) const {
        if (!quad_) return (a * b) % p_;
        long ax = a % p_, ay = a / p_, bx = b % p_, by = b / p_;
        long yy = ay * by % p_;
        long cross = (ax * by + ay * bx) % p_;
        long c = (long)mpz_fdiv_ui(F_->wconst.get_mpz_t(), (unsigned long)p_);
        long x, y;
        if (F_->half_basis) { // w^2 = w - c
            x = (ax * bx + (p_ - c) * yy) % p_;
            y = (cross + yy) % p_;
        } else { // w^2 = -c
            x = (ax * bx + (p_ - c) * yy) % p_;
            y = cross;
        }
        return x + p_ * y;
    }
    long inv(long a) const {
        for (long b = 1; b < q_; ++b)
            if (mul(a, b) == 1) return b;
        throw std::logic_error("residue inverse of zero");
    }

    long sqrt2(long a) const { // char 2: inverse Frobenius, always unique
        for (long b = 0; b < q_; ++b)
            if (mul(b, b) == a) return b;
        throw std::logic_error("char-2 square root missing");
    }
    long cbrt3(long a) const { // char 3: unique cube root
        for (long b = 0; b < q_; ++b)
            if (mul(b, mul(b, b)) == a) return b;
        throw std::logic_error("char-3 cube root missing");
    }

    bool quadratic_has_root(long b, long c) const { // X^2 + bX + c
        for (long x = 0; x < q_; ++x)
            if (add(add(mul(x, x), mul(b, x)), c) == 0) return true;
        return false;
    }

  private:
    long mod(const Int& v) const { return (long)mpz_fdiv_ui(v.get_mpz_t(), (unsigned long)p_); }
    const FieldCtx* F_;
    long p_, q_, r_ = 0;
    bool quad_;
};

long val_or_inf(const QuadInt& z, const PrimeElement& P) {
    return z.is_zero() ? LONG_MAX / 4 : valuation(z, P);
}

QuadInt div_pow(const QuadInt& z, const QuadInt& pi, long k) {
    QuadInt r = z;
    for (long i = 0; i < k; ++i) r = exact_div(r, pi);
    return r;
}

// full algorithm at residue characteristic 2 or 3
LocalData tate_small_char(WeierstrassModel E, const PrimeElement& P) {
    const FieldCtx& F = *E.F;
    SmallResidueField R(F, P);
    const long p = R.characteristic();
    const QuadInt& pi = P.gen;
    QuadInt pi2 = pi * pi, pi3 = pi2 * pi;

    LocalData out;
    out.prime = P;
    long scalings = 0;

    auto finish = [&](Reduction red, long n, long f, std::string ks) {
        out.reduction = red;
        out.f = (int)f;
        out.v_min_disc = n;
        out.kodaira = std::move(ks);
        out.scalings = scalings;
        return out;
    };

    while (true) {
        Invariants I = invariants(E);
        long n = val_or_inf(I.disc, P);
        if (n == 0) return finish(Reduction::good, 0, 0, "I0");

        // translate the singular point of the reduction to (0,0)
        {
            QuadInt r = F.zero, t = F.zero;
            auto fval = [&](const QuadInt& x) {
                return ((x + E.a2()) * x + E.a4()) * x + E.a6();
            };
            if (p == 2) {
                if (val_or_inf(I.b2, P) > 0)
                    r = R.lift(R.sqrt2(R.reduce(E.a4())));
                else
                    r = R.lift(R.mul(R.reduce(E.a3()), R.inv(R.reduce(E.a1()))));
                t = R.lift(R.sqrt2(R.reduce(fval(r))));
            } else { // p == 3
                if (val_or_inf(I.b2, P) > 0)
                    r = R.lift(R.cbrt3(R.reduce(-I.b6)));
                else
                    r = R.lift(R.mul(R.reduce(-I.b4), R.inv(R.reduce(I.b2))));
                t = R.lift(R.reduce(E.a1() * r + E.a3()));
            }
            E = rst_transform(E, r, F.zero, t);
            I = invariants(E);
            assert(val_or_inf(E.a3(), P) >= 1 && val_or_inf(E.a4(), P) >= 1 &&
                   val_or_inf(E.a6(), P) >= 1);
        }

        if (val_or_inf(I.c4, P) == 0) {
            bool split = R.quadratic_has_root(R.reduce(E.a1()), R.reduce(-E.a2()));
            return finish(split ? Reduction::mult_split : Reduction::mult_nonsplit, n, 1,
                          "I" + std::to_string(n));
        }
        if (val_or_inf(E.a6(), P) < 2) return finish(Reduction::additive, n, n, "II");
        if (val_or_inf(I.b8, P) < 3) return finish(Reduction::additive, n, n - 1, "III");
        if (val_or_inf(I.b6, P) < 3) return finish(Reduction::additive, n, n - 2, "IV");

        // normalize: pi | a1, a2;  pi^2 | a3, a4;  pi^3 | a6
        {
            QuadInt s, t;
            if (p == 2) {
                s = R.lift(R.sqrt2(R.reduce(E.a2())));
                t = pi * R.lift(R.sqrt2(R.reduce(div_pow(E.a6(), pi, 2))));
            } else {
                s = R.lift(R.reduce(E.a1()));
                // unique t mod pi^3 with 2t = -a3
                ResidueSystem rs(pi3);
                QuadInt target = rs.reduce(-E.a3());
                bool done = false;
                rs.for_each([&](const QuadInt& cand) {
                    if (done && false) return;
                    if (!done && rs.reduce(2 * cand - target).is_zero()) {
                        t = cand;
                        done = true;
                    }
                });
                assert(done);
            }
            E = rst_transform(E, F.zero, s, t);
        }
        assert(val_or_inf(E.a1(), P) >= 1 && val_or_inf(E.a2(), P) >= 1);
        assert(val_or_inf(E.a3(), P) >= 2 && val_or_inf(E.a4(), P) >= 2);
        assert(val_or_inf(E.a6(), P) >= 3);

        // cubic T^3 + A T^2 + B T + C over the residue field
        long A = R.reduce(div_pow(E.a2(), pi, 1));
        long B = R.reduce(div_pow(E.a4(), pi, 2));
        long C = R.reduce(div_pow(E.a6(), pi, 3));
        long best_root = -1;
        int best_mult = 0;
        for (long z = 0; z < R.q(); ++z) {
            long z2 = R.mul(z, z);
            long val = R.add(R.mul(z2, z), R.add(R.mul(A, z2), R.add(R.mul(B, z), C)));
            if (val != 0) continue;
            long c2 = R.add(A, R.add(z, R.add(z, z)));                               // A + 3z
            long c1 = R.add(R.add(z2, R.add(z2, z2)),
                            R.add(R.add(R.mul(A, z), R.mul(A, z)), B));              // 3z^2+2Az+B
            int mult = 1;
            if (c1 == 0) mult = (c2 == 0) ? 3 : 2;
            if (mult > best_mult) {
                best_mult = mult;
                best_root = z;
            }
        }

        if (best_mult <= 1) return finish(Reduction::additive, n, n - 4, "I0*");

        if (best_mult == 2) {
            E = rst_transform(E, pi * R.lift(best_root), F.zero, F.zero);
            long m = 1;
            QuadInt mx = pi2, my = pi2;
            while (true) {
                // Y^2 + (a3/my) Y - a6/(mx my):  disc = b^2 + 4 a6t
                long b = R.reduce(exact_div(E.a3(), my));
                long a6r = R.reduce(exact_div(E.a6(), mx * my));
                long disc = R.add(R.mul(b, b), R.add(R.add(a6r, a6r), R.add(a6r, a6r)));
                if (disc != 0) break;
                long y0 = (p == 2) ? R.sqrt2(a6r)
                                   : R.mul(R.neg(b), R.inv(R.reduce(F.from_int(2))));
                E = rst_transform(E, F.zero, F.zero, my * R.lift(y0));
                my = my * pi;
                ++m;
                // (a2/pi) X^2 + (a4/(pi mx)) X + a6/(mx my):  disc = qb^2 - 4 qa qc
                long qa = R.reduce(exact_div(E.a2(), pi));
                long qb = R.reduce(exact_div(E.a4(), pi * mx));
                long qc = R.reduce(exact_div(E.a6(), mx * my));
                long fourqa = R.add(R.add(qa, qa), R.add(qa, qa));
                long disc2 = R.add(R.mul(qb, qb), R.neg(R.mul(fourqa, qc)));
                if (disc2 != 0) break;
                long x0 = (p == 2) ? R.sqrt2(R.mul(qc, R.inv(qa)))
                                   : R.mul(R.neg(qb), R.inv(R.add(qa, qa)));
                E = rst_transform(E, mx * R.lift(x0), F.zero, F.zero);
                mx = mx * pi;
                ++m;
            }
            return finish(Reduction::additive, n, n - m - 4, "I" + std::to_string(m) + "*");
        }

        // triple root
        E = rst_transform(E, pi * R.lift(best_root), F.zero, F.zero);
        {
            // Y^2 + (a3/pi^2) Y - a6/pi^4
            long b = R.reduce(div_pow(E.a3(), pi, 2));
            long a6r = R.reduce(div_pow(E.a6(), pi, 4));
            long disc = R.add(R.mul(b, b), R.add(R.add(a6r, a6r), R.add(a6r, a6r)));
            if (disc != 0) return finish(Reduction::additive, n, n - 6, "IV*");
            long y0 = (p == 2) ? R.sqrt2(a6r) : R.mul(R.neg(b), R.inv(R.reduce(F.from_int(2))));
            E = rst_transform(E, F.zero, F.zero, pi2 * R.lift(y0));
        }
        if (val_or_inf(E.a4(), P) < 4) return finish(Reduction::additive, n, n - 7, "III*");
        if (val_or_inf(E.a6(), P) < 6) return finish(Reduction::additive, n, n - 8, "II*");

        auto scaled = u_scale(E, pi);
        if (!scaled) throw std::logic_error("tate: rescale failed");
        E = *scaled;
        ++scalings;
    }
}

// square test in F_{p^2} = O_K/(p), p an inert odd rational prime
bool square_in_fp2(const QuadInt& z, const Int& p) {
    const FieldCtx& F = *z.F;
    auto red = [&](QuadInt v) {
        Int x = v.x % p, y = v.y % p;
        if (x < 0) x += p;
        if (y < 0) y += p;
        return F.make(x, y);
    };
    QuadInt base = red(z);
    if (base.is_zero()) return true;
    Int ee = (p * p - 1) / 2;
    QuadInt acc = F.one;
    QuadInt b = base;
    while (ee > 0) {
        if (mpz_odd_p(ee.get_mpz_t())) acc = red(acc * b);
        b = red(b * b);
        ee /= 2;
    }
    return acc == F.one;
}

// tame case: residue characteristic >= 5
LocalData tate_tame(const WeierstrassModel& E0, const PrimeElement& P) {
    Invariants I = invariants(E0);
    LocalData out;
    out.prime = P;
    long vc4 = val_or_inf(I.c4, P);
    long vc6 = val_or_inf(I.c6, P);
    long vd = val_or_inf(I.disc, P);
    long k = 0;
    while (vc4 >= 4 && vc6 >= 6 && vd >= 12) {
        vc4 -= 4;
        vc6 -= 6;
        vd -= 12;
        ++k;
    }
    out.scalings = k;
    out.v_min_disc = vd;
    if (vd == 0) {
        out.reduction = Reduction::good;
        out.f = 0;
        out.kodaira = "I0";
        return out;
    }
    if (vc4 == 0) {
        out.f = 1;
        out.kodaira = "I" + std::to_string(vd);
        QuadInt c6min = div_pow(I.c6, P.gen, 6 * k);
        out.reduction =
            is_residue_square(-c6min, P) ? Reduction::mult_split : Reduction::mult_nonsplit;
        return out;
    }
    out.reduction = Reduction::additive;
    out.f = 2;
    switch (vd) {
    case 2: out.kodaira = "II"; break;
    case 3: out.kodaira = "III"; break;
    case 4: out.kodaira = "IV"; break;
    case 6: out.kodaira = "I0*"; break;
    case 8: out.kodaira = (vc4 == 2) ? "I2*" : "IV*"; break;
    case 9: out.kodaira = (vc4 == 2) ? "I3*" : "III*"; break;
    case 10: out.kodaira = (vc4 == 2) ? "I4*" : "II*"; break;
    default:
        if (vd >= 7 && vc4 == 2)
            out.kodaira = "I" + std::to_string(vd - 6) + "*";
        else
            throw std::logic_error("impossible tame additive valuation profile");
    }
    return out;
}

} // namespace

bool is_residue_square(const QuadInt& z, const PrimeElement& P) {
    if (P.kind == PrimeElement::Kind::inert) return square_in_fp2(z, P.p);
    const FieldCtx& F = *z.F;
    Int p = P.p;
    Int r = -1;
    for (Int cand = 0; cand < p; ++cand) {
        if (divides(P.gen, F.omega - F.make(cand, 0))) {
            r = cand;
            break;
        }
    }
    if (r < 0) throw std::logic_error("no residue root for split/ramified prime");
    Int t = (z.x + r * z.y) % p;
    if (t < 0) t += p;
    if (t == 0) return true;
    return mpz_legendre(t.get_mpz_t(), p.get_mpz_t()) == 1;
}

LocalData tate_local(const WeierstrassModel& E, const PrimeElement& P) {
    if (P.p == 2 || P.p == 3) return tate_small_char(E, P);
    return tate_tame(E, P);
}

ConductorData conductor(const WeierstrassModel& E, const std::vector<PrimeElement>& support_hint) {
    QuadInt disc = discriminant(E);
    if (disc.is_zero()) throw SingularModel();
    std::vector<PrimeElement> primes;
    if (!support_hint.empty()) {
        QuadInt rest = disc;
        for (const auto& P : support_hint) {
            long v;
            rest = remove_prime(rest, P, v);
            if (v > 0) primes.push_back(P);
        }
        if (!E.F->is_unit(rest)) {
            primes.clear();
            for (auto& [P, e] : factor(disc).parts) primes.push_back(P);
        }
    } else {
        for (auto& [P, e] : factor(disc).parts) primes.push_back(P);
    }
    std::sort(primes.begin(), primes.end(), [](const PrimeElement& a, const PrimeElement& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return quad_less(a.gen, b.gen);
    });
    ConductorData cd;
    cd.disc_min = disc;
    for (const auto& P : primes) {
        LocalData ld = tate_local(E, P);
        long vmodel = valuation(disc, P);
        for (long i = 0; i < vmodel - ld.v_min_disc; ++i)
            cd.disc_min = exact_div(cd.disc_min, P.gen);
        if (ld.f > 0) {
            for (int i = 0; i < ld.f; ++i) cd.conductor_norm *= P.norm;
            cd.bad.push_back(ld);
        }
    }
    return cd;
}

bool szpiro_check(const ConductorData& cd) {
    Int nd = norm(cd.disc_min);
    Int n2 = cd.conductor_norm * cd.conductor_norm;
    return nd <= n2 * n2 * n2;
}

bool szpiro_check(const WeierstrassModel& E) { return szpiro_check(conductor(E)); }

WeierstrassModel global_minimal_model(const WeierstrassModel& E, const ConductorData& cd) {
    const FieldCtx& F = *E.F;
    QuadInt disc = discriminant(E);
    std::vector<PrimeElement> primes;
    {
        QuadInt rest = disc;
        for (const auto& ld : cd.bad) {
            long v;
            rest = remove_prime(rest, ld.prime, v);
            if (v > 0) primes.push_back(ld.prime);
        }
        if (!F.is_unit(rest))
            for (auto& [P, e] : factor(rest).parts) primes.push_back(P);
    }
    QuadInt u = F.one;
    for (const auto& P : primes) {
        LocalData ld = tate_local(E, P);
        for (long i = 0; i < ld.scalings; ++i) u = u * P.gen;
    }
    Invariants I = invariants(E);
    QuadInt c4m = exact_div(I.c4, pow(u, 4));
    QuadInt c6m = exact_div(I.c6, pow(u, 6));
    for (const auto& w : F.units) {
        auto M = model_from_c4c6(pow(w, 4) * c4m, pow(w, 6) * c6m);
        if (M) return *M;
    }
    throw std::logic_error("no global minimal model found");
}

bool supersingular_at_two(const WeierstrassModel& E) {
    const FieldCtx& F = *E.F;
    for (const auto& P : split_rational_prime(Int(2), F)) {
        LocalData ld = tate_local(E, P);
        if (ld.f != 0) return false;
    }
    ConductorData cd = conductor(E);
    WeierstrassModel M = global_minimal_model(E, cd);
    for (const auto& P : split_rational_prime(Int(2), F)) {
        SmallResidueField R(F, P);
        long q = R.q();
        long a1 = R.reduce(M.a1()), a2 = R.reduce(M.a2()), a3 = R.reduce(M.a3()),
             a4 = R.reduce(M.a4()), a6 = R.reduce(M.a6());
        long count = 1;
        for (long x = 0; x < q; ++x)
            for (long y = 0; y < q; ++y) {
                long lhs = R.add(R.mul(y, y), R.add(R.mul(a1, R.mul(x, y)), R.mul(a3, y)));
                long rhs = R.add(R.mul(x, R.mul(x, x)),
                                 R.add(R.mul(a2, R.mul(x, x)), R.add(R.mul(a4, x), a6)));
                if (lhs == rhs) ++count;
            }
        long tr = q + 1 - count;
        if (tr % 2 == 0) return true;
    }
    return false;
}

} // namespace ninefields
