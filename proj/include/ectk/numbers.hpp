#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ectk {

// Arbitrary-precision signed integers and rationals. Rationals are kept
// canonical (positive denominator, gcd(|num|, den) = 1), so integrality
// is a den == 1 test.
using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized num/den. Throws std::invalid_argument when den == 0.
Rat make_rat(const Int& num, const Int& den);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

std::string to_string(const Int& n);

// "num/den", or just "num" when den == 1.
std::string to_string(const Rat& q);

// Strict base-10 parse: optional leading '-', then digits only.
std::optional<Int> parse_int(const std::string& s);

} // namespace ectk
