#pragma once

#include "ectk/curve.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ectk {

// Why a parameter tuple produced no usable curve. Constructors emit only
// the structural reasons; `torsion` is reported by the search layer when
// it finds n*(0,0) = O.
enum class Reject {
    singular,
    c_zero,
    b_zero,
    unreduced_gcd,
    torsion,
};

const char* reject_name(Reject r);

struct Family2Params { Int a, b, c; };
struct Family3Params { Int a, b, d; };
struct Family4Params { Int a, d, f; };
struct Family5Params { Int r, s, t, u; };
struct Family8Params { Int u, v, p; };

// A constructed curve together with the closed-form multiples the
// construction promises. Predictions are advisory: tests and callers
// cross-check them against the group law before relying on them.
struct FamilyCurve {
    int family = 0;
    std::vector<Int> params;
    Curve curve;
    std::vector<std::pair<int, Point>> predicted; // full points (n, nP)
    std::vector<std::pair<int, Int>> predicted_x; // family 8: (8, x(8P))
};

struct FamilyResult {
    std::optional<FamilyCurve> curve; // empty on rejection
    std::optional<Reject> reject;

    bool ok() const { return curve.has_value(); }
};

// y^2 + axy + cy = x^3 + bx^2, with 2P = (-b, ab - c) at P = (0,0).
FamilyResult family2(const Family2Params& p);

// y^2 + axy + (db)y = x^3 + bx^2, with 3P = (d^2 - ad, -d^3 + ad^2 - bd).
FamilyResult family3(const Family3Params& p);

// y^2 + axy + df(a-d)y = x^3 + f(a-d)x^2,
// with 4P = (f^2 - df, -f^3 + (2d - a)f^2).
FamilyResult family4(const Family4Params& p);

// y^2 + (tr + tu - su)xy + tr^2su(t-s)y = x^3 + rsu(t-s)x^2,
// with 5P = (stu^2 - rstu, rs^2tu^2 - st^2u^3).
// Tuples with gcd(t, s) != 1 give an unreduced curve and are flagged.
FamilyResult family5(const Family5Params& p);

// Curve with multiples 1..8 of (0,0) integral; only the x coordinate of
// 8P has a closed form.
FamilyResult family8(const Family8Params& p);

// Uniform entry point: family 5 takes (r, s, t, u); family 8 takes
// (u, v, p); families 2-4 take their three parameters in header order.
// Throws std::invalid_argument on unknown family or wrong arity.
FamilyResult make_family_curve(int family, const std::vector<Int>& params);

// Number of parameters the family's constructor expects.
int family_arity(int family);

} // namespace ectk
