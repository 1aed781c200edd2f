#include "ectk/points_enum.hpp"

#include <algorithm>
#include <stdexcept>

namespace ectk {

std::optional<Int> perfect_sqrt(const Int& n) {
    if (sgn(n) < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    return s;
}

std::vector<Point> enumerate_integral_points(const Curve& E, const Int& bound) {
    if (sgn(bound) < 0)
        throw std::invalid_argument("enumerate_integral_points: bound must be >= 0");
    std::vector<Point> pts;
    for (Int x = -bound; x <= bound; ++x) {
        // y^2 + (ax + c)y - (x^3 + bx^2 + dx + e) = 0
        Int t = E.a * x + E.c;
        Int rhs = ((x + E.b) * x + E.d) * x + E.e;
        Int disc = t * t + 4 * rhs;
        if (sgn(disc) < 0) continue;
        std::optional<Int> s = perfect_sqrt(disc);
        if (!s) continue;
        Int top = -t + *s;
        // -t + s and -t - s differ by 2s, so one parity check covers both
        if (mpz_odd_p(top.get_mpz_t())) continue;
        pts.emplace_back(Rat(x), Rat(Int(top / 2)));
        if (*s != 0) pts.emplace_back(Rat(x), Rat(Int((-t - *s) / 2)));
    }
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) {
        int c = cmp(p.x, q.x);
        if (c != 0) return c < 0;
        return cmp(p.y, q.y) < 0;
    });
    return pts;
}

} // namespace ectk
