#include "ectk/numbers.hpp"

#include <stdexcept>

namespace ectk {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

std::optional<Int> parse_int(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    if (i == s.size()) return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return std::nullopt;
    Int n;
    if (n.set_str(s, 10) != 0) return std::nullopt;
    return n;
}

} // namespace ectk
