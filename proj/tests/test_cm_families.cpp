#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ninefields/cm.hpp"

#include <random>

using namespace ninefields;

TEST_CASE("base curves: CM j-invariant and bad reduction only at the ramified prime") {
    for (int d : FieldCtx::all_d()) {
        const auto& F = FieldCtx::get(d);
        const auto& B = cm_base_curve(F);
        Invariants I = invariants(B.model);
        CHECK(I.j_num == F.make(B.cm_j, 0) * I.j_den);
        ConductorData cd = conductor(B.model);
        REQUIRE(cd.bad.size() == 1);
        long p0 = (d == 1 || d == 2) ? 2 : d;
        CHECK(cd.bad[0].prime.p == p0);
        CHECK(cd.bad[0].prime.kind == PrimeElement::Kind::ramified);
    }
}

TEST_CASE("quadratic admissibility examples") {
    {
        const auto& F = FieldCtx::get(7);
        QuadInt pi = F.sqrt_md + F.from_int(4); // sqrt(-7) (mod 4)
        CHECK(quad_cm_admissible(pi));
        CHECK(!quad_cm_admissible(F.sqrt_md + F.from_int(2)));
    }
    {
        const auto& F = FieldCtx::get(2);
        CHECK(quad_cm_admissible(F.make(1, 1)));  // 1 + sqrt(-2)
        CHECK(quad_cm_admissible(F.make(-1, 1))); // -1 + sqrt(-2)
        CHECK(!quad_cm_admissible(F.make(3, -1) + F.from_int(2)));
    }
    {
        const auto& F = FieldCtx::get(11);
        ResidueSystem rs4(F.from_int(4));
        QuadInt w = F.omega;
        for (int k = 0; k <= 2; ++k) {
            QuadInt target = pow(w, (unsigned)(2 * k)) * F.sqrt_md;
            CHECK(quad_cm_admissible(rs4.reduce(target)));
        }
        CHECK(!quad_cm_admissible(F.one));
    }
    CHECK_THROWS_AS(quad_cm_admissible(FieldCtx::get(1).one), WrongField);
}

TEST_CASE("quartic admissibility examples") {
    const auto& F = FieldCtx::get(1);
    CHECK(quartic_cm_admissible(F.make(-1, 2)));
    CHECK(quartic_cm_admissible(F.make(-1, -2)));
    CHECK(!quartic_cm_admissible(F.one));
    // exactly one quarter of the odd residues mod 8 pass
    ResidueSystem rs8(F.from_int(8));
    long odd = 0, pass = 0;
    rs8.for_each([&](const QuadInt& r) {
        bool is_odd = !divides(F.make(1, 1), r);
        if (!is_odd) return;
        ++odd;
        if (quartic_cm_admissible(r)) ++pass;
    });
    CHECK(odd == 4 * pass);
    CHECK_THROWS_AS(quartic_cm_admissible(FieldCtx::get(3).one), WrongField);
}

TEST_CASE("sextic admissibility examples") {
    const auto& F = FieldCtx::get(3);
    // pi with pi = sqrt(-3) (mod 4) and pi = 4 (mod sqrt(-3)^3): build one by
    // the Chinese remainder theorem by brute scan
    bool found = false;
    for (long x = -60; x <= 60 && !found; ++x)
        for (long y = -60; y <= 60 && !found; ++y) {
            QuadInt pi = F.make(x, y);
            if (sextic_cm_admissible(pi)) {
                found = true;
                // must satisfy both congruences
                QuadInt m = F.sqrt_md * F.sqrt_md * F.sqrt_md;
                bool c2 = congruent_mod(pi, F.from_int(4), m) ||
                          congruent_mod(pi, F.from_int(-4), m);
                CHECK(c2);
            }
        }
    CHECK(found);
    CHECK(!sextic_cm_admissible(F.one)); // 1 is a square, not sqrt(-3)*square
    CHECK_THROWS_AS(sextic_cm_admissible(FieldCtx::get(1).one), WrongField);
}

TEST_CASE("kummer ramification tests") {
    {
        const auto& F = FieldCtx::get(11);
        CHECK(unramified_kummer_test(F.one, 2));
        CHECK(unramified_kummer_test(F.from_int(5), 2));
        CHECK(!unramified_kummer_test(F.from_int(-1), 2));
    }
    {
        const auto& F = FieldCtx::get(1);
        CHECK(unramified_kummer_test(F.one, 4));
        CHECK(unramified_kummer_test(F.make(1, 4), 4));
        CHECK(!unramified_kummer_test(F.make(1, 2), 4));
    }
    {
        const auto& F = FieldCtx::get(3);
        QuadInt w = F.omega;
        ResidueSystem rs4(F.from_int(4));
        bool is_sq = false;
        rs4.for_each([&](const QuadInt& r) {
            if (rs4.congruent(r * r, w)) is_sq = true;
        });
        CHECK(!is_sq); // enumeration oracle: w is not a square mod 4
        CHECK(!unramified_kummer_test(w, 6));
        CHECK(unramified_kummer_test(F.one, 6));
    }
    for (int d : FieldCtx::all_d()) {
        const auto& F = FieldCtx::get(d);
        std::mt19937_64 rng(d);
        std::uniform_int_distribution<long> dist(-20, 20);
        for (int i = 0; i < 30; ++i) {
            QuadInt a = F.make(dist(rng), dist(rng));
            bool odd = true;
            for (auto& q : split_rational_prime(Int(2), F)) odd = odd && !divides(q.gen, a);
            if (!odd) continue;
            bool base = unramified_kummer_test(a, 2);
            for (const auto& u : F.units)
                CHECK(unramified_kummer_test(u * u * a, 2) == base);
        }
    }
}

TEST_CASE("admissibility depends only on the stated residue class") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> dist(-6, 6);
    {
        const auto& F = FieldCtx::get(7);
        QuadInt pi = F.sqrt_md + F.from_int(4);
        for (int i = 0; i < 40; ++i) {
            QuadInt shift = 4 * F.make(dist(rng), dist(rng));
            CHECK(quad_cm_admissible(pi + shift));
        }
    }
    {
        const auto& F = FieldCtx::get(1);
        QuadInt pi = F.make(-1, 2);
        for (int i = 0; i < 40; ++i) {
            QuadInt shift = 8 * F.make(dist(rng), dist(rng));
            CHECK(quartic_cm_admissible(pi + shift));
        }
    }
}

TEST_CASE("catalog: small bounds with full verification") {
    {
        const auto& F = FieldCtx::get(1);
        auto recs = cm_catalog(F, Int(30), 1);
        bool found5 = false;
        for (auto& r : recs) {
            CHECK(r.conductor.size() == 1);
            CHECK(r.conductor[0].second == 2);
            if (r.conductor_norm == 25) found5 = true;
        }
        CHECK(found5); // the quartic twist by -1+2i, conductor (-1+2i)^2
    }
    {
        const auto& F = FieldCtx::get(7);
        auto recs = cm_catalog(F, Int(60), 1);
        CHECK(!recs.empty());
        for (auto& r : recs) {
            REQUIRE(r.conductor.size() == 1);
            CHECK(r.conductor[0].second == 2);
        }
    }
    {
        const auto& F = FieldCtx::get(19);
        auto recs = cm_catalog(F, Int(60), 1);
        CHECK(!recs.empty());
        for (auto& r : recs) {
            REQUIRE(r.conductor.size() == 1);
            CHECK(r.conductor[0].second == 2);
            WeierstrassModel M(r.ainvs[0], r.ainvs[1], r.ainvs[2], r.ainvs[3], r.ainvs[4]);
            Invariants I = invariants(M);
            CHECK(I.j_num == F.make(cm_base_curve(F).cm_j, 0) * I.j_den);
        }
    }
    {
        const auto& F = FieldCtx::get(3);
        auto recs = cm_catalog(F, Int(80), 1);
        CHECK(!recs.empty());
        for (auto& r : recs) {
            REQUIRE(r.conductor.size() == 1);
            CHECK(r.conductor[0].second == 2);
        }
    }
    {
        const auto& F = FieldCtx::get(2);
        auto recs = cm_catalog(F, Int(30), 1);
        bool found3 = false;
        for (auto& r : recs)
            if (r.conductor_norm == 9) found3 = true;
        CHECK(found3); // twist by (1+sqrt(-2)) sqrt(-2): conductor (1+sqrt(-2))^2
    }
}

TEST_CASE("density spot check at modest bound") {
    auto d7 = cm_density(FieldCtx::get(7), Int(1500));
    CHECK(std::abs(d7.fraction() - 0.5) < 0.1);
    auto d1 = cm_density(FieldCtx::get(1), Int(1500));
    CHECK(std::abs(d1.fraction() - 0.25) < 0.1);
    auto d3 = cm_density(FieldCtx::get(3), Int(1500));
    CHECK(std::abs(d3.fraction() - 1.0 / 6.0) < 0.1);
}

TEST_CASE("cross-field twists never exist inside the family of nine") {
    for (int dk : FieldCtx::all_d())
        for (int dl : FieldCtx::all_d()) {
            const auto& L = FieldCtx::get(dl);
            auto t = cross_field_cm_twist(dk, L);
            if (dk == dl) {
                REQUIRE(t.has_value());
                CHECK(*t == L.one);
            } else {
                CHECK(!t.has_value());
            }
        }
}
