// Exact arithmetic in the rings of integers of the nine imaginary
// quadratic fields of class number one (d = 1, 2, 3, 7, 11, 19, 43, 67, 163).
//
// Elements are stored in coordinates over the integral basis {1, w}, where
// w = sqrt(-d) for d = 1, 2 and w = (1+sqrt(-d))/2 otherwise.  All arithmetic
// is exact (GMP integers); nothing here ever rounds.
#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ninefields {

using Int = mpz_class;

struct FieldCtx;

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};
struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("exact division has nonzero remainder") {}
};
struct WrongField : std::runtime_error {
    explicit WrongField(const std::string& what) : std::runtime_error(what) {}
};

// x + y*w with exact integer coordinates.
struct QuadInt {
    Int x{0}, y{0};
    const FieldCtx* F = nullptr;

    QuadInt() = default;
    QuadInt(Int x0, Int y0, const FieldCtx& f) : x(std::move(x0)), y(std::move(y0)), F(&f) {}

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_rational() const { return y == 0; }
};

struct FieldCtx {
    int d;           // square-free positive integer
    bool half_basis; // true iff d = 3 (mod 4), i.e. w = (1+sqrt(-d))/2
    Int wconst;      // w^2 = w - wconst (half basis) or w^2 = -wconst
    int e2;          // ramification degree of 2
    enum class Two { split, inert, ramified } two_splitting;

    QuadInt zero, one, omega, sqrt_md, epsilon;
    std::vector<QuadInt> units; // the full (finite) unit group

    static const FieldCtx& get(int d);
    static const std::array<int, 9>& all_d();

    bool is_unit(const QuadInt& q) const;
    QuadInt from_int(long v) const;
    QuadInt make(Int x, Int y) const { return QuadInt(std::move(x), std::move(y), *this); }
};

inline void check_same_field(const QuadInt& a, const QuadInt& b) {
    if (a.F != b.F) throw WrongField("operands live in different fields");
}

QuadInt operator+(const QuadInt& a, const QuadInt& b);
QuadInt operator-(const QuadInt& a, const QuadInt& b);
QuadInt operator-(const QuadInt& a);
QuadInt operator*(const QuadInt& a, const QuadInt& b);
QuadInt operator*(const Int& a, const QuadInt& b);
QuadInt operator+(const QuadInt& a, long b);
QuadInt operator-(const QuadInt& a, long b);
QuadInt operator*(long a, const QuadInt& b);
bool operator==(const QuadInt& a, const QuadInt& b);
bool operator!=(const QuadInt& a, const QuadInt& b);

QuadInt conj(const QuadInt& a);
Int norm(const QuadInt& a);
Int trace(const QuadInt& a);
QuadInt pow(const QuadInt& a, unsigned long e);

// b | a in O_K?
bool divides(const QuadInt& b, const QuadInt& a);
std::optional<QuadInt> try_exact_div(const QuadInt& a, const QuadInt& b);
// throws NotDivisible / DivisionByZero
QuadInt exact_div(const QuadInt& a, const QuadInt& b);

// The associate u*q (u a unit) whose coordinate pair is lexicographically
// maximal among associates with x >= 0.  Deterministic across runs.
QuadInt canonical_associate(const QuadInt& q);
// same, also reporting the unit u with result = u * q
QuadInt canonical_associate(const QuadInt& q, QuadInt& unit_out);

std::string to_string(const QuadInt& q); // "x+y*w"
QuadInt parse_quadint(const std::string& s, const FieldCtx& F);

// total order used for deterministic output (by norm, then coords)
bool quad_less(const QuadInt& a, const QuadInt& b);

} // namespace ninefields
