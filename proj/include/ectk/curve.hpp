#pragma once

#include "ectk/numbers.hpp"

#include <optional>
#include <string>

namespace ectk {

// Integer Weierstrass model
//
//   y^2 + a*x*y + c*y = x^3 + b*x^2 + d*x + e
//
// All group operations require a non-singular curve; curves carrying the
// base point (0,0) have e == 0.
struct Curve {
    Int a, b, c, d, e;

    bool operator==(const Curve&) const = default;
};

// Three-way comparison of coefficient tuples (a, b, c, d, e); used for
// deduplication keys and ranking tie-breaks.
int compare(const Curve& lhs, const Curve& rhs);

std::string to_string(const Curve& E); // "a,b,c,d,e"
std::optional<Curve> parse_curve(const std::string& s);

// Display form, e.g. "y^2 - 17xy + 960y = x^3 - 30x^2". Zero terms are
// omitted; unit coefficients are not printed.
std::string equation(const Curve& E);

// A rational point: the identity O, or an affine pair satisfying the
// curve equation exactly. Default-constructed points are O.
struct Point {
    Rat x, y;
    bool inf = true;

    Point() = default;
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)), inf(false) {}

    static Point infinity() { return Point(); }

    bool operator==(const Point& o) const {
        if (inf || o.inf) return inf == o.inf;
        return x == o.x && y == o.y;
    }
};

std::string to_string(const Point& P); // "O" or "(x,y)"

// Non-vertical line y = slope*(x - x0) + y0 through (x0, y0).
struct Line {
    Rat slope, x0, y0;

    Rat eval(const Rat& x) const { return slope * (x - x0) + y0; }
};

// Scale factor g and the curve with all powers of g divided out:
// g | a, g^2 | b, g^3 | c, g^4 | d, g^6 | e, with g maximal.
struct ReductionResult {
    Int g;
    Curve reduced;

    bool operator==(const ReductionResult&) const = default;
};

bool on_curve(const Curve& E, const Point& P);

// Discriminant via the standard b2, b4, b6, b8 quantities.
Int discriminant(const Curve& E);
bool is_nonsingular(const Curve& E);

// O -> O; (x, y) -> (x, -y - a*x - c).
Point negate(const Curve& E, const Point& P);

// Chord-and-tangent group law. Throws std::invalid_argument on a
// singular curve. Both arguments must lie on E.
Point add(const Curve& E, const Point& P, const Point& Q);

// n-fold sum by iterated addition (every intermediate multiple is
// computed anyway by the callers that matter). n = 0 gives O, negative
// n negates.
Point scalar_mul(const Curve& E, const Int& n, const Point& P);

// True iff P is affine and both coordinates have denominator 1. O is
// not counted as integral.
bool is_integral(const Point& P);

// Throws std::invalid_argument when all coefficients are zero.
ReductionResult reduce(const Curve& E);

// (g*a, g^2*b, g^3*c, g^4*d, g^6*e). Throws when g < 1.
Curve scale(const Curve& E, const Int& g);

enum class MapDirection {
    up,  // point of E       -> point of scale(E, g):  (x, y) -> (g^2 x, g^3 y)
    down // point of scale(E, g) -> point of E:        (x, y) -> (x/g^2, y/g^3)
};

Point map_point(const Point& P, const Int& g, MapDirection dir);

// Substitute y <- y + s*x: (a + 2s, b - s^2 - a*s, c, d - s*c, e).
// Corresponding points keep their x coordinate.
Curve shear(const Curve& E, const Int& s);

namespace detail {
// Group law without the per-call singularity check; callers validate
// the curve once.
Point add_unchecked(const Curve& E, const Point& P, const Point& Q);
} // namespace detail

} // namespace ectk
