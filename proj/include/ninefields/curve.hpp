// Weierstrass models over O_K, their invariants, coordinate transformations,
// quadratic/quartic/sextic twists, the explicit 2-isogeny on y^2 = x(x^2+ax+b),
// rational 2-torsion, and a small exact group law over K for order checks.
#pragma once

#include "ninefields/primes.hpp"

#include <array>

namespace ninefields {

struct SingularModel : std::runtime_error {
    SingularModel() : std::runtime_error("discriminant vanishes") {}
};

// element of K as z/den with z in O_K and a positive rational denominator
struct KElem {
    QuadInt num;
    Int den{1};

    KElem() = default;
    KElem(QuadInt n) : num(std::move(n)) {}
    KElem(QuadInt n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    void normalize();
    bool is_zero() const { return num.is_zero(); }
    bool is_integral() const { return den == 1; }
    const FieldCtx& field() const { return *num.F; }
};

KElem operator+(const KElem& a, const KElem& b);
KElem operator-(const KElem& a, const KElem& b);
KElem operator-(const KElem& a);
KElem operator*(const KElem& a, const KElem& b);
KElem operator/(const KElem& a, const KElem& b);
bool operator==(const KElem& a, const KElem& b);
std::string to_string(const KElem& a);

struct Invariants {
    QuadInt b2, b4, b6, b8, c4, c6, disc;
    // exact j-invariant as a fraction (c4^3, disc)
    QuadInt j_num, j_den;
};

struct WeierstrassModel {
    std::array<QuadInt, 5> a; // a1, a2, a3, a4, a6
    const FieldCtx* F = nullptr;

    WeierstrassModel() = default;
    WeierstrassModel(QuadInt a1, QuadInt a2, QuadInt a3, QuadInt a4, QuadInt a6);
    static WeierstrassModel from_ints(const FieldCtx& F, long a1, long a2, long a3, long a4,
                                      long a6);

    const QuadInt& a1() const { return a[0]; }
    const QuadInt& a2() const { return a[1]; }
    const QuadInt& a3() const { return a[2]; }
    const QuadInt& a4() const { return a[3]; }
    const QuadInt& a6() const { return a[4]; }
};

// standard b/c/disc formulas; throws SingularModel if disc = 0
Invariants invariants(const WeierstrassModel& E);
QuadInt discriminant(const WeierstrassModel& E);

// (x,y) -> (x + r, y + s x + t), i.e. [1, r, s, t]
WeierstrassModel rst_transform(const WeierstrassModel& E, const QuadInt& r, const QuadInt& s,
                               const QuadInt& t);
// x -> u^2 x, y -> u^3 y when every scaled coefficient stays integral
std::optional<WeierstrassModel> u_scale(const WeierstrassModel& E, const QuadInt& u);

// y^2 = x(x^2 + a x + b)
struct AbModel {
    QuadInt a, b;
    AbModel() = default;
    AbModel(QuadInt a0, QuadInt b0) : a(std::move(a0)), b(std::move(b0)) {}
    const FieldCtx& field() const { return *a.F; }
    WeierstrassModel model() const;
    QuadInt disc_ab() const; // b^2 (a^2 - 4b), the odd-prime content of disc/2^4
};

// the 2-isogenous curve via kernel (0,0):  (a, b) -> (-2a, a^2 - 4b)
AbModel two_isogenous(const AbModel& E);

// quadratic twist by lambda: AbModel form (lambda a, lambda^2 b)
AbModel quadratic_twist(const AbModel& E, const QuadInt& lambda);
// quadratic twist of a general model (integral model [0, lam*b2, 0, 8 lam^2 b4, 16 lam^3 b6])
WeierstrassModel quadratic_twist(const WeierstrassModel& E, const QuadInt& lambda);

// y^2 = x^3 + alpha x  (only over Q(i))
WeierstrassModel quartic_twist_model(const QuadInt& alpha);
// y^2 = x^3 + 16 alpha  (only over Q(sqrt(-3)))
WeierstrassModel sextic_twist_model(const QuadInt& alpha);

// x-coordinates in K of the rational points of order 2
std::vector<KElem> two_torsion_points(const WeierstrassModel& E);

// monic cubic/quadratic root finding over O_K (exact, divisor search)
std::vector<QuadInt> monic_cubic_roots(const QuadInt& c2, const QuadInt& c1, const QuadInt& c0);
std::vector<QuadInt> monic_quadratic_roots(const QuadInt& c1, const QuadInt& c0);

// affine point or infinity, exact coordinates in K
struct Point {
    bool infinity = true;
    KElem x, y;
    static Point at_infinity() { return Point{}; }
    static Point make(KElem x, KElem y) { return Point{false, std::move(x), std::move(y)}; }
};

Point add_points(const WeierstrassModel& E, const Point& P, const Point& Q);
Point negate_point(const WeierstrassModel& E, const Point& P);
bool on_curve(const WeierstrassModel& E, const Point& P);
// exact order if <= max_order, else 0
unsigned point_order(const WeierstrassModel& E, const Point& P, unsigned max_order);

// integral model with the given invariants, if one exists
std::optional<WeierstrassModel> model_from_c4c6(const QuadInt& c4, const QuadInt& c6);

} // namespace ninefields
