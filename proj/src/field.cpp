#include "ninefields/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <sstream>

namespace ninefields {

const std::array<int, 9>& FieldCtx::all_d() {
    static const std::array<int, 9> ds = {1, 2, 3, 7, 11, 19, 43, 67, 163};
    return ds;
}

namespace {

std::unique_ptr<FieldCtx> build_field(int d) {
    auto F = std::make_unique<FieldCtx>();
    F->d = d;
    F->half_basis = (d % 4 == 3);
    F->wconst = F->half_basis ? Int((1 + d) / 4) : Int(d);
    F->e2 = (d == 1 || d == 2) ? 2 : 1;
    if (d == 7)
        F->two_splitting = FieldCtx::Two::split;
    else if (d == 1 || d == 2)
        F->two_splitting = FieldCtx::Two::ramified;
    else
        F->two_splitting = FieldCtx::Two::inert;

    F->zero = F->make(0, 0);
    F->one = F->make(1, 0);
    F->omega = F->make(0, 1);
    F->sqrt_md = F->half_basis ? F->make(-1, 2) : F->make(0, 1);

    if (d == 1) {
        // units: powers of i
        F->epsilon = F->omega;
        F->units = {F->one, F->omega, F->make(-1, 0), F->make(0, -1)};
    } else if (d == 3) {
        // units: powers of w (a primitive 6th root of unity)
        F->epsilon = F->omega;
        F->units = {F->one,          F->make(0, 1),  F->make(-1, 1),
                    F->make(-1, 0), F->make(0, -1), F->make(1, -1)};
    } else {
        F->epsilon = F->make(-1, 0);
        F->units = {F->one, F->make(-1, 0)};
    }
    return F;
}

} // namespace

const FieldCtx& FieldCtx::get(int d) {
    static std::array<std::unique_ptr<FieldCtx>, 9> cache;
    const auto& ds = all_d();
    for (size_t i = 0; i < ds.size(); ++i) {
        if (ds[i] == d) {
            if (!cache[i]) cache[i] = build_field(d);
            return *cache[i];
        }
    }
    throw WrongField("d must be one of 1,2,3,7,11,19,43,67,163");
}

bool FieldCtx::is_unit(const QuadInt& q) const { return norm(q) == 1; }

QuadInt FieldCtx::from_int(long v) const { return make(Int(v), 0); }

QuadInt operator+(const QuadInt& a, const QuadInt& b) {
    check_same_field(a, b);
    return QuadInt(a.x + b.x, a.y + b.y, *a.F);
}
QuadInt operator-(const QuadInt& a, const QuadInt& b) {
    check_same_field(a, b);
    return QuadInt(a.x - b.x, a.y - b.y, *a.F);
}
QuadInt operator-(const QuadInt& a) { return QuadInt(-a.x, -a.y, *a.F); }

QuadInt operator*(const QuadInt& a, const QuadInt& b) {
    check_same_field(a, b);
    const FieldCtx& F = *a.F;
    Int yy = a.y * b.y;
    Int cross = a.x * b.y + a.y * b.x;
    if (F.half_basis) {
        // w^2 = w - c
        return QuadInt(a.x * b.x - F.wconst * yy, cross + yy, F);
    }
    // w^2 = -d
    return QuadInt(a.x * b.x - F.wconst * yy, cross, F);
}

QuadInt operator*(const Int& a, const QuadInt& b) { return QuadInt(a * b.x, a * b.y, *b.F); }
QuadInt operator+(const QuadInt& a, long b) { return QuadInt(a.x + b, a.y, *a.F); }
QuadInt operator-(const QuadInt& a, long b) { return QuadInt(a.x - b, a.y, *a.F); }
QuadInt operator*(long a, const QuadInt& b) { return QuadInt(a * b.x, a * b.y, *b.F); }

bool operator==(const QuadInt& a, const QuadInt& b) {
    return a.F == b.F && a.x == b.x && a.y == b.y;
}
bool operator!=(const QuadInt& a, const QuadInt& b) { return !(a == b); }

QuadInt conj(const QuadInt& a) {
    if (a.F->half_basis) return QuadInt(a.x + a.y, -a.y, *a.F);
    return QuadInt(a.x, -a.y, *a.F);
}

Int norm(const QuadInt& a) {
    if (a.F->half_basis) return a.x * a.x + a.x * a.y + a.F->wconst * a.y * a.y;
    return a.x * a.x + a.F->wconst * a.y * a.y;
}

Int trace(const QuadInt& a) {
    if (a.F->half_basis) return 2 * a.x + a.y;
    return 2 * a.x;
}

QuadInt pow(const QuadInt& a, unsigned long e) {
    QuadInt r = a.F->one, base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::optional<QuadInt> try_exact_div(const QuadInt& a, const QuadInt& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw DivisionByZero();
    Int nb = norm(b);
    QuadInt num = a * conj(b);
    if (num.x % nb != 0 || num.y % nb != 0) return std::nullopt;
    return QuadInt(num.x / nb, num.y / nb, *a.F);
}

bool divides(const QuadInt& b, const QuadInt& a) { return try_exact_div(a, b).has_value(); }

QuadInt exact_div(const QuadInt& a, const QuadInt& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw NotDivisible();
    return *q;
}

QuadInt canonical_associate(const QuadInt& q, QuadInt& unit_out) {
    const FieldCtx& F = *q.F;
    unit_out = F.one;
    if (q.is_zero()) return q;
    bool have = false;
    QuadInt best = q, bestu = F.one;
    for (const auto& u : F.units) {
        QuadInt cand = u * q;
        if (cand.x < 0) continue;
        if (!have || cand.x > best.x || (cand.x == best.x && cand.y > best.y)) {
            best = cand;
            bestu = u;
            have = true;
        }
    }
    unit_out = bestu;
    return best;
}

QuadInt canonical_associate(const QuadInt& q) {
    QuadInt u;
    return canonical_associate(q, u);
}

std::string to_string(const QuadInt& q) {
    std::ostringstream os;
    os << q.x.get_str();
    if (q.y >= 0) os << "+";
    os << q.y.get_str() << "*w";
    return os.str();
}

QuadInt parse_quadint(const std::string& s, const FieldCtx& F) {
    // accepts "x", "x+y*w", "x-y*w" (and tolerates spaces)
    std::string t;
    for (char c : s)
        if (!isspace((unsigned char)c)) t += c;
    auto wpos = t.find("*w");
    if (wpos == std::string::npos) return F.make(Int(t), 0);
    // split the y coefficient: scan backwards from '*' for the sign that starts it
    size_t split = std::string::npos;
    for (size_t i = wpos; i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) { // pure "y*w"
        return F.make(0, Int(t.substr(0, wpos)));
    }
    std::string xs = t.substr(0, split);
    std::string ys = t.substr(split, wpos - split);
    if (ys == "+") ys = "1";
    if (ys == "-") ys = "-1";
    if (!ys.empty() && ys[0] == '+') ys = ys.substr(1);
    return F.make(Int(xs), Int(ys));
}

bool quad_less(const QuadInt& a, const QuadInt& b) {
    Int na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

} // namespace ninefields
