#pragma once

#include "ectk/curve.hpp"

#include <optional>
#include <vector>

namespace ectk {

// s with s*s == n when n is a perfect square >= 0, otherwise absent.
std::optional<Int> perfect_sqrt(const Int& n);

// All affine integral points (x, y) on E with |x| <= bound, sorted by
// (x, y). For each x the quadratic in y is solved exactly:
// D = (ax + c)^2 + 4(x^3 + bx^2 + dx + e) must be a perfect square s^2
// with -(ax + c) +- s even. No floating point anywhere. The count is a
// bounded count only; nothing is claimed about |x| > bound.
std::vector<Point> enumerate_integral_points(const Curve& E, const Int& bound);

} // namespace ectk
