#pragma once

#include "ectk/curve.hpp"
#include "ectk/families.hpp"

#include <random>
#include <vector>

namespace testutil {

using ectk::Curve;
using ectk::Int;
using ectk::Point;
using ectk::Rat;

inline Point pt(long x, long y) { return Point(Rat(x), Rat(y)); }

inline Point pt(long xn, long xd, long yn, long yd) {
    return Point(ectk::make_rat(xn, xd), ectk::make_rat(yn, yd));
}

// Independent discriminant route via the c4/c6 covariants:
// 1728 * disc == c4^3 - c6^2.
inline Int disc_via_c4c6(const Curve& E) {
    Int b2 = E.a * E.a + 4 * E.b;
    Int b4 = 2 * E.d + E.a * E.c;
    Int b6 = E.c * E.c + 4 * E.e;
    Int c4 = b2 * b2 - 24 * b4;
    Int c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    Int num = c4 * c4 * c4 - c6 * c6;
    return num / 1728;
}

// Brute-force oracle for the reduction factor: largest g in [1, cap]
// with g | a, g^2 | b, g^3 | c, g^4 | d, g^6 | e. Intended for curves
// whose true factor is far below cap.
inline Int brute_reduce_factor(const Curve& E, long cap) {
    Int best = 1;
    for (long g = 2; g <= cap; ++g) {
        Int G = g;
        Int g2 = G * G, g3 = g2 * G, g4 = g2 * g2, g6 = g3 * g3;
        if (E.a % G == 0 && E.b % g2 == 0 && E.c % g3 == 0 && E.d % g4 == 0 && E.e % g6 == 0)
            best = G;
    }
    return best;
}

// Draws family parameter tuples until `want` accepted curves were seen,
// returning the accepted FamilyCurve values. Entries are uniform in
// [lo, hi].
inline std::vector<ectk::FamilyCurve> sample_family(int family, int want, long lo, long hi,
                                                    std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::vector<ectk::FamilyCurve> out;
    int arity = ectk::family_arity(family);
    long guard = 0;
    while ((int)out.size() < want) {
        if (++guard > 200000L * want) break; // never expected; avoids a hang on a bad family
        std::vector<Int> params;
        for (int i = 0; i < arity; ++i) params.emplace_back(dist(rng));
        ectk::FamilyResult fr = ectk::make_family_curve(family, params);
        if (fr.ok()) out.push_back(std::move(*fr.curve));
    }
    return out;
}

} // namespace testutil
