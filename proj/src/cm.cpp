#include "ninefields/cm.hpp"

#include "ninefields/parallel.hpp"

#include <map>

namespace ninefields {

namespace {

// fixed base-change models; each has CM by the maximal order and bad
// reduction only at the ramified prime of its field (asserted in tests)
struct BaseData {
    int d;
    long a[5];
    const char* label;
    const char* j;
};
const BaseData kBases[] = {
    {1, {0, 0, 0, 1, 0}, "64a4", "1728"},
    {2, {0, -1, 0, -3, -1}, "256d1", "8000"},
    {3, {0, 0, 0, 0, 16}, "27a4", "0"}, // non-minimal model, as fixed for sextic twists
    {7, {1, -1, 0, -107, 552}, "49a4", "-3375"},
    {11, {0, -1, 1, -887, -10143}, "121b2", "-32768"},
    {19, {0, 0, 1, -13718, -619025}, "361a2", "-884736"},
    {43, {0, 0, 1, -1590140, -771794326}, "1849b2", "-884736000"},
    {67, {0, 0, 1, -33083930, -73244287055}, "4489b2", "-147197952000"},
    {163, {0, 0, 1, -57772164980, -5344733777551611}, "26569a2", "-262537412640768000"},
};

bool is_odd_elem(const FieldCtx& F, const QuadInt& z) {
    for (auto& q : split_rational_prime(Int(2), F))
        if (divides(q.gen, z)) return false;
    return true;
}

// the set { u^2 mod 4 : u odd } as canonical residues mod 4
std::vector<QuadInt> odd_squares_mod4(const FieldCtx& F) {
    ResidueSystem rs4(F.from_int(4));
    std::vector<QuadInt> out;
    ResidueSystem rs2(F.from_int(2));
    rs2.for_each([&](const QuadInt& u0) {
        if (!is_odd_elem(F, u0)) return;
        QuadInt s = rs4.reduce(u0 * u0);
        for (auto& e : out)
            if (e == s) return;
        out.push_back(s);
    });
    return out;
}

} // namespace

const CmBaseCurve& cm_base_curve(const FieldCtx& F) {
    static std::map<int, CmBaseCurve> cache;
    auto it = cache.find(F.d);
    if (it != cache.end()) return it->second;
    for (const auto& b : kBases) {
        if (b.d != F.d) continue;
        CmBaseCurve c;
        c.F = &F;
        c.model = WeierstrassModel(F.make(Int(b.a[0]), 0), F.make(Int(b.a[1]), 0),
                                   F.make(Int(b.a[2]), 0), F.make(Int(b.a[3]), 0),
                                   F.make(Int(b.a[4]), 0));
        c.label = b.label;
        c.cm_j = Int(b.j);
        return cache.emplace(F.d, std::move(c)).first->second;
    }
    throw WrongField("no base curve for this d");
}

bool quad_cm_admissible(const QuadInt& pi) {
    const FieldCtx& F = *pi.F;
    if (F.d == 1 || F.d == 3) throw WrongField("quadratic admissibility needs d != 1, 3");
    QuadInt g = (F.d == 2) ? F.make(1, 1) : F.sqrt_md; // 1+sqrt(-2), else sqrt(-d)
    ResidueSystem rs4(F.from_int(4));
    for (const auto& s : odd_squares_mod4(F))
        if (rs4.congruent(pi, s * g)) return true;
    return false;
}

bool quartic_cm_admissible(const QuadInt& pi) {
    const FieldCtx& F = *pi.F;
    if (F.d != 1) throw WrongField("quartic admissibility needs d = 1");
    ResidueSystem rs8(F.from_int(8));
    return rs8.congruent(pi, F.make(-1, 2)) || rs8.congruent(pi, F.make(-1, -2));
}

bool sextic_cm_admissible(const QuadInt& pi) {
    const FieldCtx& F = *pi.F;
    if (F.d != 3) throw WrongField("sextic admissibility needs d = 3");
    ResidueSystem rs4(F.from_int(4));
    bool c1 = false;
    for (const auto& s : odd_squares_mod4(F))
        if (rs4.congruent(pi, s * F.sqrt_md)) c1 = true;
    if (!c1) return false;
    QuadInt m = F.sqrt_md * F.sqrt_md * F.sqrt_md;
    return congruent_mod(pi, F.from_int(4), m) || congruent_mod(pi, F.from_int(-4), m);
}

bool unramified_kummer_test(const QuadInt& alpha, int degree) {
    const FieldCtx& F = *alpha.F;
    switch (degree) {
    case 2: {
        ResidueSystem rs4(F.from_int(4));
        for (const auto& s : odd_squares_mod4(F))
            if (rs4.congruent(alpha, s)) return true;
        return false;
    }
    case 4: {
        if (F.d != 1) throw WrongField("quartic Kummer test needs d = 1");
        ResidueSystem rs8(F.from_int(8));
        return rs8.congruent(alpha, F.one) || rs8.congruent(alpha, F.make(1, 4));
    }
    case 6: {
        if (F.d != 3) throw WrongField("sextic Kummer test needs d = 3");
        if (!unramified_kummer_test(alpha, 2)) return false;
        QuadInt m = F.sqrt_md * F.sqrt_md * F.sqrt_md;
        return congruent_mod(alpha, F.one, m) || congruent_mod(alpha, -F.one, m);
    }
    default:
        throw std::invalid_argument("degree must be 2, 4 or 6");
    }
}

bool cm_admissible_prime(const PrimeElement& P, const FieldCtx& F, QuadInt* gen_out) {
    for (const auto& u : F.units) {
        QuadInt g = u * P.gen;
        bool ok = false;
        if (F.d == 1)
            ok = quartic_cm_admissible(g);
        else if (F.d == 3)
            ok = sextic_cm_admissible(g);
        else
            ok = quad_cm_admissible(g);
        if (ok) {
            if (gen_out) *gen_out = g;
            return true;
        }
    }
    return false;
}

WeierstrassModel cm_twist_curve(const FieldCtx& F, const QuadInt& gen) {
    if (F.d == 1) return quartic_twist_model(gen);
    if (F.d == 3) return sextic_twist_model(F.sqrt_md * F.sqrt_md * F.sqrt_md * gen);
    return quadratic_twist(cm_base_curve(F).model, gen * F.sqrt_md);
}

namespace {

// primes the twisted curve's discriminant can involve
std::vector<PrimeElement> cm_support(const FieldCtx& F, const PrimeElement& P) {
    std::vector<PrimeElement> s = split_rational_prime(Int(2), F);
    for (auto& q : split_rational_prime(Int(3), F)) s.push_back(q);
    for (auto& q : split_rational_prime(Int(F.d), F)) s.push_back(q);
    s.push_back(P);
    return s;
}

bool prime_in_family_range(const FieldCtx& F, const PrimeElement& P) {
    if (divides(P.gen, F.from_int(2))) return false;
    if (F.d == 3 && P.p == 3) return false;
    if (F.d != 1 && F.d != 3 && P.p == F.d) return false;
    return true;
}

} // namespace

std::vector<CurveRecord> cm_catalog(const FieldCtx& F, const Int& bound, int workers) {
    auto primes = primes_up_to(F, bound);
    std::vector<PrimeElement> eligible;
    for (auto& P : primes)
        if (prime_in_family_range(F, P)) eligible.push_back(P);

    std::string family = F.d == 1 ? "cm-quartic" : F.d == 3 ? "cm-sextic" : "cm-quadratic";
    std::string torsion = (F.d == 1 || F.d == 2 || F.d == 7) ? "Z/2" : "trivial";

    auto results = parallel_map<std::vector<CurveRecord>>(
        eligible.size(),
        [&](size_t i) -> std::vector<CurveRecord> {
            const PrimeElement& P = eligible[i];
            QuadInt gen;
            if (!cm_admissible_prime(P, F, &gen)) return {};
            WeierstrassModel E = cm_twist_curve(F, gen);
            ConductorData cd = conductor(E, cm_support(F, P));
            // the whole point of admissibility: conductor exactly (pi)^2
            if (cd.bad.size() != 1 || cd.bad[0].f != 2 || !(cd.bad[0].prime == P))
                throw std::logic_error("admissible CM twist without conductor (pi)^2");
            CurveRecord r = make_record(E, cd, family, torsion);
            return {r};
        },
        workers);
    std::vector<CurveRecord> out;
    for (auto& v : results)
        for (auto& r : v) out.push_back(std::move(r));
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

CmDensity cm_density(const FieldCtx& F, const Int& bound) {
    CmDensity d;
    for (auto& P : primes_up_to(F, bound)) {
        if (!prime_in_family_range(F, P)) continue;
        ++d.total;
        if (cm_admissible_prime(P, F)) ++d.admissible;
    }
    return d;
}

std::optional<QuadInt> cross_field_cm_twist(int d_cm, const FieldCtx& L) {
    FieldCtx::get(d_cm); // validate
    if (L.d == d_cm) return L.one;
    long p0 = (d_cm == 1 || d_cm == 2) ? 2 : d_cm;
    // the CM field completes at its ramified prime to Q_p0(sqrt(-d_cm)); L
    // must ramify at p0 with an isomorphic completion
    Int disc = field_discriminant(L);
    if (mpz_kronecker_si(disc.get_mpz_t(), p0) != 0) return std::nullopt;
    if (p0 == 2) {
        // -1 and -2 lie in different square classes of Q_2
        return std::nullopt;
    }
    // odd p0 ramified in both: Q_p0(sqrt(-d_cm)) = Q_p0(sqrt(-t)) iff the
    // product of the unit parts is a square mod p0
    Int u1 = Int(-d_cm) / p0, u2 = Int(-L.d) / p0;
    Int prod = u1 * u2;
    Int pp(p0);
    if (mpz_legendre(prod.get_mpz_t(), pp.get_mpz_t()) != 1) return std::nullopt;
    return L.sqrt_md;
}

} // namespace ninefields
