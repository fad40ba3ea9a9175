#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ninefields/kraus.hpp"
#include "ninefields/records.hpp"

#include <random>

using namespace ninefields;

namespace {

QuadInt rand_elem(const FieldCtx& F, std::mt19937_64& rng, long box) {
    std::uniform_int_distribution<long> d(-box, box);
    return F.make(d(rng), d(rng));
}

PrimeElement prime_above(const FieldCtx& F, long p, int which = 0) {
    auto ps = split_rational_prime(Int(p), F);
    return ps.at(which);
}

} // namespace

TEST_CASE("invariants of the two-torsion family model") {
    std::mt19937_64 rng(5);
    for (int d : {1, 7, 43}) {
        const auto& F = FieldCtx::get(d);
        for (int i = 0; i < 50; ++i) {
            QuadInt a = rand_elem(F, rng, 40), b = rand_elem(F, rng, 40);
            AbModel E(a, b);
            if (E.disc_ab().is_zero()) continue;
            Invariants I = invariants(E.model());
            CHECK(I.c4 == 16 * (a * a - 3 * b));
            CHECK(I.c6 == 32 * (a * (9 * b - 2 * (a * a))));
            CHECK(I.disc == 16 * (b * b * (a * a - 4 * b)));
            CHECK(I.c4 * I.c4 * I.c4 - I.c6 * I.c6 == 1728 * I.disc);
        }
    }
}

TEST_CASE("invariants: known discriminants and the singular guard") {
    const auto& F11 = FieldCtx::get(11);
    auto E = WeierstrassModel::from_ints(F11, 0, -1, 1, 0, 0);
    CHECK(invariants(E).disc == F11.from_int(-11));

    auto S = WeierstrassModel::from_ints(F11, 0, 0, 0, 0, 0);
    CHECK_THROWS_AS(invariants(S), SingularModel);
}

TEST_CASE("c4^3 - c6^2 = 1728 disc on random models") {
    std::mt19937_64 rng(17);
    for (int d : {2, 3, 67}) {
        const auto& F = FieldCtx::get(d);
        for (int i = 0; i < 300; ++i) {
            WeierstrassModel E(rand_elem(F, rng, 25), rand_elem(F, rng, 25),
                               rand_elem(F, rng, 25), rand_elem(F, rng, 25),
                               rand_elem(F, rng, 25));
            QuadInt disc = discriminant(E);
            if (disc.is_zero()) continue;
            Invariants I = invariants(E);
            CHECK(I.c4 * I.c4 * I.c4 - I.c6 * I.c6 == 1728 * I.disc);
            CHECK(4 * I.b8 == I.b2 * I.b6 - I.b4 * I.b4);
        }
    }
}

TEST_CASE("two-isogenous parameters") {
    const auto& F7 = FieldCtx::get(7);
    AbModel E(F7.from_int(21), F7.from_int(112));
    AbModel E2 = two_isogenous(E);
    CHECK(E2.a == F7.from_int(-42));
    CHECK(E2.b == F7.from_int(-7));

    // disc(E_{-2a, a^2-4b}) = 2^8 b (a^2-4b)^2, and twice gives (4a, 16b)
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        QuadInt a = rand_elem(F7, rng, 30), b = rand_elem(F7, rng, 30);
        AbModel M(a, b);
        if (M.disc_ab().is_zero()) continue;
        AbModel M2 = two_isogenous(M);
        CHECK(invariants(M2.model()).disc == 256 * (b * ((a * a - 4 * b) * (a * a - 4 * b))));
        AbModel M4 = two_isogenous(M2);
        CHECK(M4.a == 4 * a);
        CHECK(M4.b == 16 * b);
        Invariants I1 = invariants(M.model()), I4 = invariants(M4.model());
        CHECK(I1.j_num * I4.j_den == I4.j_num * I1.j_den);
    }
}

TEST_CASE("quadratic twist basics") {
    const auto& F7 = FieldCtx::get(7);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        QuadInt a = rand_elem(F7, rng, 20), b = rand_elem(F7, rng, 20);
        AbModel M(a, b);
        if (M.disc_ab().is_zero()) continue;
        QuadInt lam = rand_elem(F7, rng, 10);
        if (lam.is_zero()) continue;
        AbModel Mt = quadratic_twist(M, lam);
        CHECK(Mt.a == lam * a);
        CHECK(Mt.b == lam * lam * b);
        AbModel Mtt = quadratic_twist(Mt, lam);
        Invariants I1 = invariants(M.model()), I2 = invariants(Mtt.model());
        CHECK(I1.j_num * I2.j_den == I2.j_num * I1.j_den);
    }
    AbModel M(F7.from_int(3), F7.from_int(5));
    AbModel M1 = quadratic_twist(M, F7.one);
    CHECK(M1.a == M.a);
    CHECK(M1.b == M.b);
}

TEST_CASE("quartic and sextic twist models") {
    const auto& F1 = FieldCtx::get(1);
    auto q = quartic_twist_model(F1.one);
    CHECK(q.a4() == F1.one);
    CHECK_THROWS_AS(quartic_twist_model(FieldCtx::get(3).one), WrongField);

    const auto& F3 = FieldCtx::get(3);
    auto s = sextic_twist_model(F3.one);
    CHECK(s.a6() == F3.from_int(16));
    CHECK_THROWS_AS(sextic_twist_model(F1.one), WrongField);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        QuadInt beta = rand_elem(F1, rng, 8);
        if (beta.is_zero()) continue;
        QuadInt pi = F1.make(1, 2);
        auto E1 = quartic_twist_model(beta);
        auto E2 = quartic_twist_model(pow(pi, 4) * beta);
        Invariants I1 = invariants(E1), I2 = invariants(E2);
        CHECK(I1.j_num * I2.j_den == I2.j_num * I1.j_den);
        CHECK(I2.disc == pow(pi, 12) * I1.disc);
    }
}

TEST_CASE("local data: base changes of the conductor-11 curves") {
    const auto& F11 = FieldCtx::get(11);
    auto E = WeierstrassModel::from_ints(F11, 0, -1, 1, 0, 0); // disc -11
    auto P = prime_above(F11, 11);
    LocalData ld = tate_local(E, P);
    CHECK(ld.f == 1);
    CHECK(ld.v_min_disc == 2);
    CHECK((ld.reduction == Reduction::mult_split || ld.reduction == Reduction::mult_nonsplit));
    CHECK(ld.kodaira == "I2");

    const auto& F1 = FieldCtx::get(1);
    auto E1 = WeierstrassModel::from_ints(F1, 0, -1, 1, 0, 0);
    auto P11 = prime_above(F1, 11);
    LocalData ld1 = tate_local(E1, P11);
    CHECK(ld1.f == 1);
    CHECK(ld1.v_min_disc == 1);
    CHECK(ld1.kodaira == "I1");

    auto E2 = WeierstrassModel::from_ints(F11, 0, -1, 1, -10, -20); // disc -11^5
    LocalData ld2 = tate_local(E2, P);
    CHECK(ld2.f == 1);
    CHECK(ld2.v_min_disc == 10);
}

TEST_CASE("local data: prime conductor of norm 47 with square discriminant") {
    const auto& F = FieldCtx::get(11);
    WeierstrassModel E(F.zero, F.omega, F.one, F.from_int(-1), F.zero);
    ConductorData cd = conductor(E);
    REQUIRE(cd.bad.size() == 1);
    CHECK(cd.conductor_norm == 47);
    CHECK(cd.bad[0].f == 1);
    CHECK(cd.bad[0].v_min_disc == 2);
    QuadInt pi = F.make(7, -2);
    CHECK(canonical_associate(cd.disc_min) == canonical_associate(pi * pi));
    CHECK(tate_local(E, prime_above(F, 2)).f == 0);
    CHECK(two_torsion_points(E).empty());
    CHECK(szpiro_check(cd));
}

TEST_CASE("local data: CM curve of conductor (2+i)^2 over Q(i)") {
    const auto& F = FieldCtx::get(1);
    WeierstrassModel E(F.make(1, 1), F.omega, F.omega, F.zero, F.zero);
    ConductorData cd = conductor(E);
    REQUIRE(cd.bad.size() == 1);
    CHECK(cd.bad[0].f == 2);
    CHECK(cd.bad[0].v_min_disc == 3);
    CHECK(cd.conductor_norm == 25);
    CHECK(tate_local(E, prime_above(F, 2)).f == 0);
}

TEST_CASE("local data: base CM curves have bad reduction only at the ramified prime") {
    {
        const auto& F = FieldCtx::get(1);
        auto E = WeierstrassModel::from_ints(F, 0, 0, 0, 1, 0); // y^2 = x^3 + x
        ConductorData cd = conductor(E);
        REQUIRE(cd.bad.size() == 1);
        CHECK(cd.bad[0].prime.p == 2);
        CHECK(cd.bad[0].f == 8);
        CHECK(cd.conductor_norm == 256);
    }
    {
        const auto& F = FieldCtx::get(3);
        auto E = WeierstrassModel::from_ints(F, 0, 0, 0, 0, 16); // y^2 = x^3 + 16
        ConductorData cd = conductor(E);
        REQUIRE(cd.bad.size() == 1);
        CHECK(cd.bad[0].prime.p == 3);
        CHECK(cd.bad[0].f == 4);
        CHECK(cd.conductor_norm == 81);
        CHECK(cd.bad[0].kodaira == "IV");
        auto M = global_minimal_model(E, cd);
        CHECK(invariants(M).disc == F.from_int(-27));
    }
    {
        const auto& F = FieldCtx::get(7);
        auto E = WeierstrassModel::from_ints(F, 1, -1, 0, -107, 552);
        Invariants I = invariants(E);
        CHECK(I.j_num == F.from_int(-3375) * I.j_den);
        ConductorData cd = conductor(E);
        REQUIRE(cd.bad.size() == 1);
        CHECK(cd.bad[0].prime.kind == PrimeElement::Kind::ramified);
        CHECK(cd.bad[0].f == 2);
        CHECK(cd.conductor_norm == 49);
        CHECK(cd.bad[0].v_min_disc == 6);
    }
    {
        const auto& F = FieldCtx::get(11);
        auto E = WeierstrassModel::from_ints(F, 0, -1, 1, -887, -10143);
        Invariants I = invariants(E);
        CHECK(I.j_num == F.from_int(-32768) * I.j_den);
        ConductorData cd = conductor(E);
        REQUIRE(cd.bad.size() == 1);
        CHECK(cd.bad[0].prime.kind == PrimeElement::Kind::ramified);
        CHECK(cd.bad[0].f == 2);
        CHECK(cd.conductor_norm == 121);
    }
    {
        const auto& F = FieldCtx::get(19);
        auto E = WeierstrassModel::from_ints(F, 0, 0, 1, -13718, -619025);
        Invariants I = invariants(E);
        CHECK(I.j_num == F.from_int(-884736) * I.j_den);
        ConductorData cd = conductor(E);
        REQUIRE(cd.bad.size() == 1);
        CHECK(cd.bad[0].f == 2);
        CHECK(cd.conductor_norm == 361);
    }
}

TEST_CASE("conductor of the additive 49a2 base change over Q(i)") {
    const auto& F1 = FieldCtx::get(1);
    AbModel E(F1.from_int(-42), F1.from_int(-7));
    ConductorData cd = conductor(E.model());
    REQUIRE(cd.bad.size() == 1);
    CHECK(cd.bad[0].prime.kind == PrimeElement::Kind::inert);
    CHECK(cd.bad[0].prime.p == 7);
    CHECK(cd.bad[0].f == 2);
    CHECK(cd.conductor_norm == 49 * 49);
    CHECK(cd.bad[0].v_min_disc == 3);
    CHECK(cd.bad[0].kodaira == "III");
}

TEST_CASE("szpiro check cases") {
    const auto& F11 = FieldCtx::get(11);
    auto E2 = WeierstrassModel::from_ints(F11, 0, -1, 1, -10, -20);
    CHECK(!szpiro_check(E2));
    auto E3 = WeierstrassModel::from_ints(F11, 0, -1, 1, 0, 0);
    CHECK(szpiro_check(E3));
}

TEST_CASE("two-torsion points") {
    const auto& F7 = FieldCtx::get(7);
    AbModel E(F7.from_int(21), F7.from_int(112));
    auto pts = two_torsion_points(E.model());
    bool has_zero = false;
    for (auto& x : pts) has_zero = has_zero || x.is_zero();
    CHECK(has_zero);

    // full 2-torsion member of the unit-parameter family, u = 1:
    // (a, b) = (-(u+32), 16(u+16)) = (-33, 272)
    const auto& F11 = FieldCtx::get(11);
    AbModel Eu(F11.from_int(-33), F11.from_int(272));
    auto pts2 = two_torsion_points(Eu.model());
    CHECK(pts2.size() == 3);
}

TEST_CASE("group law: (0,0) has order 5 on the conductor-11 curve") {
    const auto& F = FieldCtx::get(67);
    auto E = WeierstrassModel::from_ints(F, 0, -1, 1, 0, 0);
    Point P = Point::make(KElem(F.zero), KElem(F.zero));
    REQUIRE(on_curve(E, P));
    CHECK(point_order(E, P, 12) == 5);
}

TEST_CASE("kraus criterion examples") {
    const auto& F11 = FieldCtx::get(11);
    auto q = prime_above(F11, 2);
    auto r = kraus_criterion(F11.from_int(16), F11.from_int(-152), q);
    CHECK(r.ok);
    CHECK(r.case_used == 3);

    // invariants of [1,0,0,0,1]: v(c4) = 0 and -c6 = 865 = 1 (mod 4)
    auto r2 = kraus_criterion(F11.from_int(1), F11.from_int(-865), q);
    CHECK(r2.ok);
    CHECK(r2.case_used == 1);
    REQUIRE(r2.a1_witness.has_value());
    CHECK(divides(F11.from_int(4), *r2.a1_witness * *r2.a1_witness + F11.from_int(-865)));

    CHECK_THROWS_AS(kraus_criterion(F11.from_int(2), F11.from_int(1), q), PreconditionViolated);
}

TEST_CASE("kraus matches the brute-force completion oracle") {
    std::mt19937_64 rng(2024);
    for (int d : {1, 2, 7, 11}) {
        const auto& F = FieldCtx::get(d);
        auto qs = split_rational_prime(Int(2), F);
        int done = 0;
        while (done < 25) {
            QuadInt c4 = rand_elem(F, rng, 40), c6 = rand_elem(F, rng, 40);
            QuadInt num = c4 * c4 * c4 - c6 * c6;
            auto delta = try_exact_div(num, F.from_int(1728));
            if (!delta || delta->is_zero()) continue;
            ++done;
            for (auto& q : qs) {
                CHECK(kraus_criterion(c4, c6, q).ok == kraus_oracle(c4, c6, q));
            }
        }
        for (int i = 0; i < 10; ++i) {
            WeierstrassModel E(rand_elem(F, rng, 6), rand_elem(F, rng, 6), rand_elem(F, rng, 6),
                               rand_elem(F, rng, 6), rand_elem(F, rng, 6));
            if (discriminant(E).is_zero()) continue;
            Invariants I = invariants(E);
            for (auto& q : qs) {
                CHECK(kraus_criterion(I.c4, I.c6, q).ok);
                CHECK(kraus_oracle(I.c4, I.c6, q));
            }
        }
    }
}

TEST_CASE("supersingular-profile parameter solutions stay bad at 2") {
    const auto& F = FieldCtx::get(1);
    auto tau = prime_above(F, 2);
    std::vector<AbModel> curves = {AbModel(F.from_int(4), F.one), AbModel(F.make(2, 2), F.one),
                                   AbModel(F.make(2, -2), F.one)};
    std::vector<QuadInt> twists = {F.one, F.omega, F.make(1, 2), F.omega * F.make(1, 2),
                                   F.make(-1, 2)};
    for (auto& E : curves)
        for (auto& s : twists) {
            AbModel Et = quadratic_twist(E, s);
            CHECK(tate_local(Et.model(), tau).f > 0);
        }
}

TEST_CASE("conductor exponent is twist- and isogeny-stable") {
    std::mt19937_64 rng(4242);
    const auto& F = FieldCtx::get(7);
    int done = 0;
    while (done < 15) {
        QuadInt a = rand_elem(F, rng, 12), b = rand_elem(F, rng, 12);
        AbModel E(a, b);
        if (E.disc_ab().is_zero()) continue;
        ++done;
        ConductorData cd = conductor(E.model());
        // twisting by u * lambda^2 gives the same conductor as twisting by u
        for (const auto& u : F.units) {
            ConductorData cdu = conductor(quadratic_twist(E, u).model());
            ConductorData cdu9 = conductor(quadratic_twist(E, u * F.from_int(9)).model());
            CHECK(cdu.conductor_norm == cdu9.conductor_norm);
        }
        // a pure square twist is an isomorphism
        ConductorData cdsq = conductor(quadratic_twist(E, F.from_int(25)).model());
        CHECK(cd.conductor_norm == cdsq.conductor_norm);
        ConductorData cd3 = conductor(two_isogenous(E).model());
        CHECK(cd.conductor_norm == cd3.conductor_norm);
    }
}

TEST_CASE("model_from_c4c6 reconstructs invariants") {
    std::mt19937_64 rng(808);
    for (int d : {1, 3, 11}) {
        const auto& F = FieldCtx::get(d);
        int done = 0;
        while (done < 20) {
            WeierstrassModel E(rand_elem(F, rng, 9), rand_elem(F, rng, 9), rand_elem(F, rng, 9),
                               rand_elem(F, rng, 9), rand_elem(F, rng, 9));
            if (discriminant(E).is_zero()) continue;
            ++done;
            Invariants I = invariants(E);
            auto M = model_from_c4c6(I.c4, I.c6);
            REQUIRE(M.has_value());
            Invariants IM = invariants(*M);
            CHECK(IM.c4 == I.c4);
            CHECK(IM.c6 == I.c6);
        }
    }
}
