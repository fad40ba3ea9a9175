#include "ninefields/kraus.hpp"

namespace ninefields {

namespace {

long vq(const QuadInt& z, const PrimeElement& q) {
    return z.is_zero() ? LONG_MAX / 4 : valuation(z, q);
}

} // namespace

KrausResult kraus_criterion(const QuadInt& c4, const QuadInt& c6, const PrimeElement& q) {
    const FieldCtx& F = *c4.F;
    QuadInt delta_num = c4 * c4 * c4 - c6 * c6;
    auto delta = try_exact_div(delta_num, F.from_int(1728));
    if (!delta || delta->is_zero()) throw PreconditionViolated();

    const long e = vq(F.from_int(2), q);
    KrausResult res;
    long v4 = vq(c4, q);

    if (v4 == 0) {
        res.case_used = 1;
        ResidueSystem rs2(F.from_int(2));
        rs2.for_each([&](const QuadInt& a1) {
            if (res.ok) return;
            if (vq(a1 * a1 + c6, q) >= 2 * e) {
                res.ok = true;
                res.a1_witness = a1;
            }
        });
        return res;
    }

    if (v4 < 4 * e) {
        res.case_used = 2;
        ResidueSystem rs32(F.from_int(32));
        ResidueSystem rs2(F.from_int(2));
        rs32.for_each([&](const QuadInt& a1) {
            if (res.ok) return;
            QuadInt a12 = a1 * a1;
            QuadInt dd = -(a12 * a12 * a12) + 3 * (a12 * c4) + 2 * c6;
            if (vq(dd, q) < 4 * e) return;
            // third congruence: 4 a1^2 d = (a1^4 - c4)^2 mod 256
            QuadInt lhs = 4 * (a12 * dd);
            QuadInt rhs = a12 * a12 - c4;
            if (vq(lhs - rhs * rhs, q) < 8 * e) return;
            // a3^2 = d/16 mod 4, i.e. 16 a3^2 = d mod 64
            rs2.for_each([&](const QuadInt& a3) {
                if (res.ok) return;
                if (vq(16 * (a3 * a3) - dd, q) >= 6 * e) {
                    res.ok = true;
                    res.a1_witness = a1;
                    res.a3_witness = a3;
                }
            });
        });
        return res;
    }

    res.case_used = 3;
    if (vq(c6, q) >= 3 * e) {
        ResidueSystem rs2(F.from_int(2));
        rs2.for_each([&](const QuadInt& a3) {
            if (res.ok) return;
            // a3^2 = c6/8 mod 4, i.e. 8 a3^2 = c6 mod 32
            if (vq(8 * (a3 * a3) - c6, q) >= 5 * e) {
                res.ok = true;
                res.a3_witness = a3;
            }
        });
    }
    return res;
}

bool kraus_oracle(const QuadInt& c4, const QuadInt& c6, const PrimeElement& q) {
    const FieldCtx& F = *c4.F;
    const long e = vq(F.from_int(2), q);
    ResidueSystem rs64(F.from_int(64));
    ResidueSystem rs2(F.from_int(2));
    bool found = false;
    rs64.for_each([&](const QuadInt& b2) {
        if (found) return;
        // B4 = 24 b4, B6 = 432 b6 for a model with these invariants
        QuadInt B4 = b2 * b2 - c4;
        if (vq(B4, q) < 3 * e) return;
        QuadInt B6 = -2 * (b2 * b2 * b2) + 3 * (b2 * B4) - 2 * c6;
        if (vq(B6, q) < 4 * e) return;
        rs2.for_each([&](const QuadInt& a1) {
            if (found) return;
            if (vq(a1 * a1 - b2, q) < 2 * e) return; // b2 = a1^2 + 4 a2
            rs2.for_each([&](const QuadInt& a3) {
                if (found) return;
                if (vq(B4 - 24 * (a1 * a3), q) < 4 * e) return; // a4 integral
                if (vq(B6 - 432 * (a3 * a3), q) < 6 * e) return; // a6 integral
                found = true;
            });
        });
    });
    return found;
}

} // namespace ninefields
