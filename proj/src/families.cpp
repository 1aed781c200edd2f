#include "ectk/families.hpp"

#include <stdexcept>

namespace ectk {

const char* reject_name(Reject r) {
    switch (r) {
    case Reject::singular: return "singular";
    case Reject::c_zero: return "c_zero";
    case Reject::b_zero: return "b_zero";
    case Reject::unreduced_gcd: return "unreduced_gcd";
    case Reject::torsion: return "torsion";
    }
    return "?";
}

static FamilyResult rejected(Reject r) { return FamilyResult{std::nullopt, r}; }

static FamilyResult accepted(FamilyCurve fc) {
    if (!is_nonsingular(fc.curve)) return rejected(Reject::singular);
    return FamilyResult{std::move(fc), std::nullopt};
}

FamilyResult family2(const Family2Params& p) {
    if (p.c == 0) return rejected(Reject::c_zero); // (0,0) would have order 2
    FamilyCurve fc;
    fc.family = 2;
    fc.params = {p.a, p.b, p.c};
    fc.curve = Curve{p.a, p.b, p.c, 0, 0};
    fc.predicted.emplace_back(2, Point(Rat(-p.b), Rat(p.a * p.b - p.c)));
    return accepted(std::move(fc));
}

FamilyResult family3(const Family3Params& p) {
    Int c = p.d * p.b;
    if (c == 0) return rejected(Reject::c_zero);
    FamilyCurve fc;
    fc.family = 3;
    fc.params = {p.a, p.b, p.d};
    fc.curve = Curve{p.a, p.b, c, 0, 0};
    fc.predicted.emplace_back(
        3, Point(Rat(p.d * p.d - p.a * p.d),
                 Rat(-p.d * p.d * p.d + p.a * p.d * p.d - p.b * p.d)));
    return accepted(std::move(fc));
}

FamilyResult family4(const Family4Params& p) {
    Int b = p.f * (p.a - p.d);
    Int c = p.d * b;
    if (c == 0) return rejected(Reject::c_zero);
    FamilyCurve fc;
    fc.family = 4;
    fc.params = {p.a, p.d, p.f};
    fc.curve = Curve{p.a, b, c, 0, 0};
    fc.predicted.emplace_back(
        4, Point(Rat(p.f * p.f - p.d * p.f),
                 Rat(-p.f * p.f * p.f + (2 * p.d - p.a) * p.f * p.f)));
    return accepted(std::move(fc));
}

FamilyResult family5(const Family5Params& p) {
    Int g;
    mpz_gcd(g.get_mpz_t(), p.t.get_mpz_t(), p.s.get_mpz_t());
    if (g != 1) return rejected(Reject::unreduced_gcd);
    Int a = p.t * p.r + p.t * p.u - p.s * p.u;
    Int b = p.r * p.s * p.u * (p.t - p.s);
    Int c = p.t * p.r * p.r * p.s * p.u * (p.t - p.s);
    if (c == 0) return rejected(Reject::c_zero);
    FamilyCurve fc;
    fc.family = 5;
    fc.params = {p.r, p.s, p.t, p.u};
    fc.curve = Curve{a, b, c, 0, 0};
    Int x5 = p.s * p.t * p.u * p.u - p.r * p.s * p.t * p.u;
    Int y5 = p.r * p.s * p.s * p.t * p.u * p.u - p.s * p.t * p.t * p.u * p.u * p.u;
    fc.predicted.emplace_back(5, Point(Rat(x5), Rat(y5)));
    return accepted(std::move(fc));
}

FamilyResult family8(const Family8Params& p) {
    const Int& u = p.u;
    const Int& v = p.v;
    const Int& q = p.p;
    Int a = u * u + q * u * v + u * u * v - q * q * v * v + 2 * q * u * v * v -
            q * u * v * v * v + u * u * v * v * v;
    Int b = u * v * (v + 1) * (u - q) * (u + q * v) * (u + u * v + q * v + u * v * v);
    if (b == 0) return rejected(Reject::b_zero);
    Int c = b * v * v * (u - q) * (q + u * v);
    if (c == 0) return rejected(Reject::c_zero);
    FamilyCurve fc;
    fc.family = 8;
    fc.params = {u, v, q};
    fc.curve = Curve{a, b, c, 0, 0};
    Int v2 = v * v;
    Int v3 = v2 * v;
    Int v4 = v2 * v2;
    Int v5 = v3 * v2;
    Int x8 = -u * u * u * v5 * q - u * u * u * v4 * q - u * u * u * v3 * q +
             u * u * v5 * q * q + u * u * v3 * q * q + u * v4 * q * q * q;
    fc.predicted_x.emplace_back(8, x8);
    return accepted(std::move(fc));
}

int family_arity(int family) {
    switch (family) {
    case 2:
    case 3:
    case 4: return 3;
    case 5: return 4;
    case 8: return 3;
    default: throw std::invalid_argument("unknown curve family " + std::to_string(family));
    }
}

FamilyResult make_family_curve(int family, const std::vector<Int>& params) {
    if ((int)params.size() != family_arity(family))
        throw std::invalid_argument("wrong parameter count for family " + std::to_string(family));
    switch (family) {
    case 2: return family2({params[0], params[1], params[2]});
    case 3: return family3({params[0], params[1], params[2]});
    case 4: return family4({params[0], params[1], params[2]});
    case 5: return family5({params[0], params[1], params[2], params[3]});
    default: return family8({params[0], params[1], params[2]});
    }
}

} // namespace ectk
