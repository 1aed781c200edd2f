#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ectk::selfdesc {

// A length-n list of digit counts. Entries may exceed 9 (lists stand in
// for digit strings once values pass 9).
using DigitList = std::vector<int>;

// A solution b of length n satisfies b(i) = |{j : b(j) = i}| for all
// i < n. Solutions split into sporadic ones and extendable ones; the
// extendable ones form chains under extend(), each rooted at a unique
// particular solution.
enum class Classification {
    not_solution,
    sporadic,
    particular,
    extendable_nonparticular,
};

// "sporadic", "particular", "extendable", "not a solution".
const char* classification_name(Classification c);

long long digit_sum(const DigitList& b);          // sum of entries
long long weighted_sum(const DigitList& b);       // sum of i * b(i)
bool is_solution(const DigitList& b);

// Least possible number of zeros in any solution of length n: the
// smallest z >= 0 with z >= n - 1/2 - sqrt(2n + 1/4), evaluated through
// the squared form (2n - 2z - 1)^2 <= 8n + 1 so boundary cases stay
// exact.
int zero_lower_bound(int n);

Classification classify(const DigitList& b);

inline bool is_extendable(Classification c) {
    return c == Classification::particular || c == Classification::extendable_nonparticular;
}

// Length n+1 successor of an extendable solution. Throws unless b is
// extendable. The result is always an extendable, non-particular
// solution.
DigitList extend(const DigitList& b);

// The unique predecessor under extend(). Throws unless b is extendable
// and not particular.
DigitList contract(const DigitList& b);

// Contracts until the particular root of the chain; returns the root
// and the number of contractions.
std::pair<DigitList, int> to_particular(const DigitList& b);

// All solutions of length n, lexicographically sorted. Depth-first
// enumeration pruned by the running digit sum and the running weighted
// sum (both must end at exactly n).
std::vector<DigitList> search_solutions(int n);

// Largest length search_solutions accepts.
inline constexpr int kMaxSearchLength = 40;

// (n-4, 2, 1, 0 ... 0, 1, 0, 0, 0) of length n; the lone inner 1 sits at
// index n-4. Defined for n >= 7; the unique solution for every n > 11.
DigitList closed_form(int n);

// Digit string when all entries are <= 9, otherwise "(11, 2, 1, ...)".
std::string render(const DigitList& b);

// Inverse of render: a plain digit string or a parenthesized
// comma-separated list. Entries must be non-negative.
std::optional<DigitList> parse_digit_list(const std::string& s);

} // namespace ectk::selfdesc
