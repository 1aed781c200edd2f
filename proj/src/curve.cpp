#include "ectk/curve.hpp"

#include <climits>
#include <stdexcept>

namespace ectk {

int compare(const Curve& lhs, const Curve& rhs) {
    int c = cmp(lhs.a, rhs.a);
    if (c != 0) return c;
    c = cmp(lhs.b, rhs.b);
    if (c != 0) return c;
    c = cmp(lhs.c, rhs.c);
    if (c != 0) return c;
    c = cmp(lhs.d, rhs.d);
    if (c != 0) return c;
    return cmp(lhs.e, rhs.e);
}

std::string to_string(const Curve& E) {
    return E.a.get_str() + "," + E.b.get_str() + "," + E.c.get_str() + "," + E.d.get_str() + "," +
           E.e.get_str();
}

std::optional<Curve> parse_curve(const std::string& s) {
    std::vector<Int> vals;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string field = s.substr(start, comma == std::string::npos ? comma : comma - start);
        // allow surrounding spaces in each field
        std::size_t b = field.find_first_not_of(" \t");
        std::size_t e = field.find_last_not_of(" \t");
        if (b == std::string::npos) return std::nullopt;
        std::optional<Int> v = parse_int(field.substr(b, e - b + 1));
        if (!v) return std::nullopt;
        vals.push_back(*v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (vals.size() != 5) return std::nullopt;
    return Curve{vals[0], vals[1], vals[2], vals[3], vals[4]};
}

static void append_term(std::string& out, const Int& coef, const char* var) {
    if (coef == 0) return;
    out += sgn(coef) < 0 ? " - " : " + ";
    Int m = abs(coef);
    if (m != 1 || var[0] == '\0') out += m.get_str();
    out += var;
}

std::string equation(const Curve& E) {
    std::string lhs = "y^2";
    append_term(lhs, E.a, "xy");
    append_term(lhs, E.c, "y");
    std::string rhs = "x^3";
    append_term(rhs, E.b, "x^2");
    append_term(rhs, E.d, "x");
    append_term(rhs, E.e, "");
    return lhs + " = " + rhs;
}

std::string to_string(const Point& P) {
    if (P.inf) return "O";
    return "(" + P.x.get_str() + "," + P.y.get_str() + ")";
}

bool on_curve(const Curve& E, const Point& P) {
    if (P.inf) return true;
    Rat lhs = P.y * P.y + E.a * P.x * P.y + E.c * P.y;
    Rat rhs = P.x * P.x * P.x + E.b * P.x * P.x + E.d * P.x + E.e;
    return lhs == rhs;
}

Int discriminant(const Curve& E) {
    Int b2 = E.a * E.a + 4 * E.b;
    Int b4 = 2 * E.d + E.a * E.c;
    Int b6 = E.c * E.c + 4 * E.e;
    Int b8 = E.a * E.a * E.e + 4 * E.b * E.e - E.a * E.c * E.d + E.b * E.c * E.c - E.d * E.d;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

bool is_nonsingular(const Curve& E) { return discriminant(E) != 0; }

Point negate(const Curve& E, const Point& P) {
    if (P.inf) return P;
    return Point(P.x, -P.y - E.a * P.x - E.c);
}

namespace detail {

// Reflect the third intersection of L with E back through the vertical:
// P + Q = (x3, -L(x3) - a*x3 - c).
static Point reflect_third(const Curve& E, const Line& L, const Rat& x3) {
    Rat y_line = L.eval(x3);
    return Point(x3, -y_line - E.a * x3 - E.c);
}

Point add_unchecked(const Curve& E, const Point& P, const Point& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    if (P.x != Q.x) {
        // chord through two points with distinct x
        Rat m = (P.y - Q.y) / (P.x - Q.x);
        Rat x3 = m * m + E.a * m - E.b - P.x - Q.x;
        return reflect_third(E, Line{m, P.x, P.y}, x3);
    }
    if (P.y != Q.y) return Point::infinity(); // Q = -P
    // doubling; 2y + ax + c = 0 means a vertical tangent (order 2)
    Rat den = 2 * P.y + E.a * P.x + E.c;
    if (den == 0) return Point::infinity();
    Rat lam = (3 * P.x * P.x + 2 * E.b * P.x - E.a * P.y + E.d) / den;
    Rat x3 = lam * lam + lam * E.a - E.b - 2 * P.x;
    return reflect_third(E, Line{lam, P.x, P.y}, x3);
}

} // namespace detail

Point add(const Curve& E, const Point& P, const Point& Q) {
    if (!is_nonsingular(E)) throw std::invalid_argument("add: singular curve");
    return detail::add_unchecked(E, P, Q);
}

Point scalar_mul(const Curve& E, const Int& n, const Point& P) {
    if (n == 0) return Point::infinity();
    if (n < 0) return negate(E, scalar_mul(E, Int(-n), P));
    if (n == 1) return P;
    if (!is_nonsingular(E)) throw std::invalid_argument("scalar_mul: singular curve");
    if (!n.fits_slong_p()) throw std::invalid_argument("scalar_mul: multiplier too large");
    long k = n.get_si();
    Point r = P;
    for (long i = 2; i <= k; ++i) r = detail::add_unchecked(E, r, P);
    return r;
}

bool is_integral(const Point& P) {
    if (P.inf) return false;
    return is_integer(P.x) && is_integer(P.y);
}

// Largest exponent of p usable in the scale factor given the weighted
// divisibility pattern (1, 2, 3, 4, 6); zero coefficients impose no
// constraint.
static unsigned long prime_exponent(const Curve& E, const Int& p) {
    const Int* coeffs[5] = {&E.a, &E.b, &E.c, &E.d, &E.e};
    const unsigned long weights[5] = {1, 2, 3, 4, 6};
    unsigned long best = ULONG_MAX;
    Int tmp;
    for (int i = 0; i < 5; ++i) {
        if (*coeffs[i] == 0) continue;
        unsigned long v =
            mpz_remove(tmp.get_mpz_t(), coeffs[i]->get_mpz_t(), p.get_mpz_t());
        unsigned long allowed = v / weights[i];
        if (allowed < best) best = allowed;
    }
    return best == ULONG_MAX ? 0 : best;
}

ReductionResult reduce(const Curve& E) {
    Int common = 0;
    for (const Int* c : {&E.a, &E.b, &E.c, &E.d, &E.e})
        mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), c->get_mpz_t());
    if (common == 0) throw std::invalid_argument("reduce: all coefficients are zero");

    // Any prime of the scale factor divides every non-zero coefficient,
    // hence divides their gcd; factor that by trial division.
    Int g = 1;
    Int rem = common;
    auto apply = [&](const Int& p) {
        unsigned long e = prime_exponent(E, p);
        if (e > 0) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            g *= pe;
        }
    };
    Int p = 2;
    while (rem > 1) {
        if (mpz_probab_prime_p(rem.get_mpz_t(), 30) != 0) {
            apply(rem);
            break;
        }
        while (p * p <= rem && rem % p != 0) p += (p == 2) ? 1 : 2;
        apply(p);
        do rem /= p;
        while (rem % p == 0);
    }

    Int g2 = g * g;
    Int g3 = g2 * g;
    Int g4 = g2 * g2;
    Int g6 = g3 * g3;
    Curve reduced{E.a / g, E.b / g2, E.c / g3, E.d / g4, E.e / g6};
    return ReductionResult{g, reduced};
}

Curve scale(const Curve& E, const Int& g) {
    if (g < 1) throw std::invalid_argument("scale: factor must be >= 1");
    Int g2 = g * g;
    Int g3 = g2 * g;
    Int g4 = g2 * g2;
    Int g6 = g3 * g3;
    return Curve{E.a * g, E.b * g2, E.c * g3, E.d * g4, E.e * g6};
}

Point map_point(const Point& P, const Int& g, MapDirection dir) {
    if (g < 1) throw std::invalid_argument("map_point: factor must be >= 1");
    if (P.inf) return P;
    Int g2 = g * g;
    Int g3 = g2 * g;
    if (dir == MapDirection::up) return Point(P.x * g2, P.y * g3);
    return Point(P.x / Rat(g2), P.y / Rat(g3));
}

Curve shear(const Curve& E, const Int& s) {
    return Curve{E.a + 2 * s, E.b - s * s - E.a * s, E.c, E.d - s * E.c, E.e};
}

} // namespace ectk
