#pragma once

#include "ectk/families.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ectk {

struct MultiplesResult {
    std::vector<int> multiples;       // sorted n with n*(0,0) integral
    std::optional<int> torsion_order; // first n <= nmax with n*(0,0) = O
};

// Walks n*(0,0) for n = 1..nmax by repeated addition of (0,0) and
// records which multiples are integral. Requires e == 0 (so (0,0) is on
// the curve) and a non-singular curve; throws otherwise. Stops at the
// first n with n*(0,0) = O and reports it as torsion_order.
MultiplesResult integral_multiples(const Curve& E, int nmax);

struct SearchConfig {
    int family = 8;                          // 5 or 8
    std::vector<std::pair<Int, Int>> ranges; // inclusive, one per parameter
    int nmax = 35;
    int min_n = 15;
    int workers = 1;
};

struct CandidateRecord {
    int family = 0;
    std::vector<Int> params;
    Curve curve; // stored in reduced form
    Int g = 1;   // factor removed by reduction
    std::vector<int> multiples;
    int highest = 0;
    int count = 0;
    std::optional<int> torsion_order; // never set on emitted records
};

struct SearchStats {
    unsigned long long tuples = 0;
    unsigned long long rejected_singular = 0;
    unsigned long long rejected_c_zero = 0;
    unsigned long long rejected_b_zero = 0;
    unsigned long long rejected_unreduced = 0;
    unsigned long long torsion = 0;
    unsigned long long below_min_n = 0;
    unsigned long long duplicates = 0;
    unsigned long long emitted = 0;
};

// Sweeps every parameter tuple in cfg.ranges (lexicographic order, first
// parameter most significant). For each accepted curve the multiples are
// computed on its reduced form; a record is emitted iff some integral
// multiple n >= min_n exists and the point is not torsion. Records are
// deduplicated by reduced coefficient tuple (first occurrence wins) and
// the result is independent of cfg.workers.
std::vector<CandidateRecord> run_search(const SearchConfig& cfg, SearchStats* stats = nullptr);

// One JSON object per line: family (int), params (decimal strings),
// curve {a..e: decimal strings}, g (decimal string), multiples (ints),
// highest (int), count (int). Coefficients routinely exceed 64 bits,
// hence the strings.
void write_candidates(const std::vector<CandidateRecord>& records, std::ostream& out);
void write_candidates_file(const std::vector<CandidateRecord>& records, const std::string& path);
std::vector<CandidateRecord> read_candidates(std::istream& in);
std::vector<CandidateRecord> read_candidates_file(const std::string& path);

enum class RankKey { highest, count };

// Descending by key, ties broken by ascending coefficient tuple,
// truncated to at most `top` records.
std::vector<CandidateRecord> rank_records(std::vector<CandidateRecord> records, RankKey key,
                                          int top);

} // namespace ectk
