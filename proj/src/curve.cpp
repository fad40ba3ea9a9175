#include "ninefields/curve.hpp"

#include <algorithm>

namespace ninefields {

void KElem::normalize() {
    if (den < 0) throw std::logic_error("KElem denominator must be positive");
    if (den == 0) throw DivisionByZero();
    Int g;
    mpz_gcd(g.get_mpz_t(), num.x.get_mpz_t(), num.y.get_mpz_t());
    if (g == 0) {
        den = 1;
        return;
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
        num.x /= g;
        num.y /= g;
        den /= g;
    }
}

KElem operator+(const KElem& a, const KElem& b) {
    return KElem(b.den * a.num + a.den * b.num, a.den * b.den);
}
KElem operator-(const KElem& a, const KElem& b) {
    return KElem(b.den * a.num - a.den * b.num, a.den * b.den);
}
KElem operator-(const KElem& a) { return KElem(-a.num, a.den); }
KElem operator*(const KElem& a, const KElem& b) { return KElem(a.num * b.num, a.den * b.den); }
KElem operator/(const KElem& a, const KElem& b) {
    if (b.is_zero()) throw DivisionByZero();
    // a/b = a * conj(b) / N(b); keep denominator positive
    Int nb = norm(b.num);
    return KElem(b.den * (a.num * conj(b.num)), a.den * nb);
}
bool operator==(const KElem& a, const KElem& b) {
    return b.den * a.num == a.den * b.num;
}
std::string to_string(const KElem& a) {
    if (a.den == 1) return to_string(a.num);
    return "(" + to_string(a.num) + ")/" + a.den.get_str();
}

WeierstrassModel::WeierstrassModel(QuadInt a1, QuadInt a2, QuadInt a3, QuadInt a4, QuadInt a6) {
    F = a1.F;
    a = {std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)};
    for (auto& ai : a) check_same_field(a[0], ai);
}

WeierstrassModel WeierstrassModel::from_ints(const FieldCtx& F, long a1, long a2, long a3, long a4,
                                             long a6) {
    return WeierstrassModel(F.from_int(a1), F.from_int(a2), F.from_int(a3), F.from_int(a4),
                            F.from_int(a6));
}

QuadInt discriminant(const WeierstrassModel& E) {
    const QuadInt &a1 = E.a1(), &a2 = E.a2(), &a3 = E.a3(), &a4 = E.a4(), &a6 = E.a6();
    QuadInt b2 = a1 * a1 + 4 * a2;
    QuadInt b4 = 2 * a4 + a1 * a3;
    QuadInt b6 = a3 * a3 + 4 * a6;
    QuadInt b8 = a1 * a1 * a6 + 4 * (a2 * a6) - a1 * a3 * a4 + a2 * (a3 * a3) - a4 * a4;
    return -(b2 * b2 * b8) - 8 * (b4 * b4 * b4) - 27 * (b6 * b6) + 9 * (b2 * b4 * b6);
}

Invariants invariants(const WeierstrassModel& E) {
    const QuadInt &a1 = E.a1(), &a2 = E.a2(), &a3 = E.a3(), &a4 = E.a4(), &a6 = E.a6();
    Invariants I;
    I.b2 = a1 * a1 + 4 * a2;
    I.b4 = 2 * a4 + a1 * a3;
    I.b6 = a3 * a3 + 4 * a6;
    I.b8 = a1 * a1 * a6 + 4 * (a2 * a6) - a1 * a3 * a4 + a2 * (a3 * a3) - a4 * a4;
    I.c4 = I.b2 * I.b2 - 24 * I.b4;
    I.c6 = -(I.b2 * I.b2 * I.b2) + 36 * (I.b2 * I.b4) - 216 * I.b6;
    I.disc = -(I.b2 * I.b2 * I.b8) - 8 * (I.b4 * I.b4 * I.b4) - 27 * (I.b6 * I.b6) +
             9 * (I.b2 * I.b4 * I.b6);
    if (I.disc.is_zero()) throw SingularModel();
    I.j_num = I.c4 * I.c4 * I.c4;
    I.j_den = I.disc;
    return I;
}

WeierstrassModel rst_transform(const WeierstrassModel& E, const QuadInt& r, const QuadInt& s,
                               const QuadInt& t) {
    const QuadInt &a1 = E.a1(), &a2 = E.a2(), &a3 = E.a3(), &a4 = E.a4(), &a6 = E.a6();
    QuadInt na1 = a1 + 2 * s;
    QuadInt na2 = a2 - s * a1 + 3 * r - s * s;
    QuadInt na3 = a3 + r * a1 + 2 * t;
    QuadInt na4 = a4 - s * a3 + 2 * (r * a2) - (t + r * s) * a1 + 3 * (r * r) - 2 * (s * t);
    QuadInt na6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * (t * a1);
    return WeierstrassModel(na1, na2, na3, na4, na6);
}

std::optional<WeierstrassModel> u_scale(const WeierstrassModel& E, const QuadInt& u) {
    QuadInt u2 = u * u;
    QuadInt u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    auto d1 = try_exact_div(E.a1(), u);
    auto d2 = try_exact_div(E.a2(), u2);
    auto d3 = try_exact_div(E.a3(), u3);
    auto d4 = try_exact_div(E.a4(), u4);
    auto d6 = try_exact_div(E.a6(), u6);
    if (!(d1 && d2 && d3 && d4 && d6)) return std::nullopt;
    return WeierstrassModel(*d1, *d2, *d3, *d4, *d6);
}

WeierstrassModel AbModel::model() const {
    const FieldCtx& F = field();
    return WeierstrassModel(F.zero, a, F.zero, b, F.zero);
}

QuadInt AbModel::disc_ab() const { return b * b * (a * a - 4 * b); }

AbModel two_isogenous(const AbModel& E) {
    return AbModel(-2 * E.a, E.a * E.a - 4 * E.b);
}

AbModel quadratic_twist(const AbModel& E, const QuadInt& lambda) {
    return AbModel(lambda * E.a, lambda * lambda * E.b);
}

WeierstrassModel quadratic_twist(const WeierstrassModel& E, const QuadInt& lambda) {
    if (lambda.is_zero()) throw DivisionByZero();
    Invariants I = invariants(E);
    const FieldCtx& F = *E.F;
    QuadInt l2 = lambda * lambda, l3 = lambda * lambda * lambda;
    return WeierstrassModel(F.zero, lambda * I.b2, F.zero, 8 * (l2 * I.b4), 16 * (l3 * I.b6));
}

WeierstrassModel quartic_twist_model(const QuadInt& alpha) {
    const FieldCtx& F = *alpha.F;
    if (F.d != 1) throw WrongField("quartic twists only exist over Q(i)");
    if (alpha.is_zero()) throw SingularModel();
    return WeierstrassModel(F.zero, F.zero, F.zero, alpha, F.zero);
}

WeierstrassModel sextic_twist_model(const QuadInt& alpha) {
    const FieldCtx& F = *alpha.F;
    if (F.d != 3) throw WrongField("sextic twists only exist over Q(sqrt(-3))");
    if (alpha.is_zero()) throw SingularModel();
    return WeierstrassModel(F.zero, F.zero, F.zero, F.zero, 16 * alpha);
}

std::vector<QuadInt> monic_quadratic_roots(const QuadInt& c1, const QuadInt& c0) {
    // x^2 + c1 x + c0 = 0  =>  (2x + c1)^2 = c1^2 - 4 c0
    std::vector<QuadInt> out;
    const FieldCtx& F = *c1.F;
    QuadInt disc = c1 * c1 - 4 * c0;
    auto s = sqrt_exact(disc);
    if (!s) return out;
    for (const QuadInt& sg : {*s, -*s}) {
        auto r = try_exact_div(sg - c1, F.from_int(2));
        if (r) out.push_back(*r);
        if (s->is_zero()) break;
    }
    std::sort(out.begin(), out.end(), quad_less);
    out.erase(std::unique(out.begin(), out.end(), [](auto& a, auto& b) { return a == b; }),
              out.end());
    return out;
}

std::vector<QuadInt> monic_cubic_roots(const QuadInt& c2, const QuadInt& c1, const QuadInt& c0) {
    const FieldCtx& F = *c2.F;
    std::vector<QuadInt> out;
    auto eval = [&](const QuadInt& x) { return ((x + c2) * x + c1) * x + c0; };
    QuadInt first;
    bool have_first = false;
    if (c0.is_zero()) {
        first = F.zero;
        have_first = true;
    } else {
        for (const auto& dv : divisors_up_to_units(c0)) {
            for (const auto& u : F.units) {
                QuadInt cand = u * dv;
                if (eval(cand).is_zero()) {
                    first = cand;
                    have_first = true;
                    break;
                }
            }
            if (have_first) break;
        }
    }
    if (!have_first) return out;
    out.push_back(first);
    // deflate: x^2 + (c2 + r) x + (c1 + r(c2 + r))
    QuadInt q1 = c2 + first;
    QuadInt q0 = c1 + first * q1;
    for (auto& r : monic_quadratic_roots(q1, q0)) out.push_back(r);
    std::sort(out.begin(), out.end(), quad_less);
    out.erase(std::unique(out.begin(), out.end(), [](auto& a, auto& b) { return a == b; }),
              out.end());
    return out;
}

std::vector<KElem> two_torsion_points(const WeierstrassModel& E) {
    // roots of 4x^3 + b2 x^2 + 2 b4 x + b6; substitute u = 4x to get the monic
    // integral cubic u^3 + b2 u^2 + 8 b4 u + 16 b6
    Invariants I = invariants(E);
    std::vector<KElem> out;
    for (auto& u : monic_cubic_roots(I.b2, 8 * I.b4, 16 * I.b6)) out.push_back(KElem(u, Int(4)));
    return out;
}

Point negate_point(const WeierstrassModel& E, const Point& P) {
    if (P.infinity) return P;
    KElem a1(E.a1()), a3(E.a3());
    return Point::make(P.x, -(P.y) - a1 * P.x - a3);
}

bool on_curve(const WeierstrassModel& E, const Point& P) {
    if (P.infinity) return true;
    KElem a1(E.a1()), a2(E.a2()), a3(E.a3()), a4(E.a4()), a6(E.a6());
    KElem lhs = P.y * P.y + a1 * P.x * P.y + a3 * P.y;
    KElem rhs = ((P.x + a2) * P.x + a4) * P.x + a6;
    return lhs == rhs;
}

Point add_points(const WeierstrassModel& E, const Point& P, const Point& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    KElem a1(E.a1()), a2(E.a2()), a3(E.a3()), a4(E.a4()), a6(E.a6());
    KElem lambda;
    if (P.x == Q.x) {
        KElem minusQy = -(Q.y) - a1 * Q.x - a3;
        if (P.y == minusQy) return Point::at_infinity();
        // doubling
        KElem num = (KElem(E.F->from_int(3)) * P.x + KElem(E.F->from_int(2)) * a2) * P.x + a4 -
                    a1 * P.y;
        KElem den = KElem(E.F->from_int(2)) * P.y + a1 * P.x + a3;
        lambda = num / den;
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    KElem nu = P.y - lambda * P.x;
    KElem x3 = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
    KElem y3 = -(lambda + a1) * x3 - nu - a3;
    return Point::make(x3, y3);
}

unsigned point_order(const WeierstrassModel& E, const Point& P, unsigned max_order) {
    Point acc = P;
    for (unsigned k = 1; k <= max_order; ++k) {
        if (acc.infinity) return k;
        acc = add_points(E, acc, P);
    }
    return 0;
}

std::optional<WeierstrassModel> model_from_c4c6(const QuadInt& c4, const QuadInt& c6) {
    const FieldCtx& F = *c4.F;
    // search b2 over residues modulo 24, then complete the model; exact
    // divisibility decides validity at 2 and 3
    ResidueSystem rs24(F.from_int(24));
    ResidueSystem rs2(F.from_int(2));
    std::optional<WeierstrassModel> found;
    rs24.for_each([&](const QuadInt& b2) {
        if (found) return;
        auto b4q = try_exact_div(b2 * b2 - c4, F.from_int(24));
        if (!b4q) return;
        auto b6q = try_exact_div(-(b2 * b2 * b2) + 36 * (b2 * *b4q) - c6, F.from_int(216));
        if (!b6q) return;
        // a1, a3 from residues mod 2
        std::optional<WeierstrassModel> local;
        rs2.for_each([&](const QuadInt& a1) {
            if (local) return;
            auto a2q = try_exact_div(b2 - a1 * a1, F.from_int(4));
            if (!a2q) return;
            rs2.for_each([&](const QuadInt& a3) {
                if (local) return;
                auto a6q = try_exact_div(*b6q - a3 * a3, F.from_int(4));
                if (!a6q) return;
                auto a4q = try_exact_div(*b4q - a1 * a3, F.from_int(2));
                if (!a4q) return;
                local = WeierstrassModel(a1, *a2q, a3, *a4q, *a6q);
            });
        });
        if (local) found = local;
    });
    if (found) {
        Invariants I = invariants(*found);
        if (I.c4 != c4 || I.c6 != c6) throw std::logic_error("model_from_c4c6: inconsistent");
    }
    return found;
}

} // namespace ninefields
