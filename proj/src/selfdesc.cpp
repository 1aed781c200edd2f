#include "ectk/selfdesc.hpp"

#include <numeric>
#include <stdexcept>

namespace ectk::selfdesc {

const char* classification_name(Classification c) {
    switch (c) {
    case Classification::not_solution: return "not a solution";
    case Classification::sporadic: return "sporadic";
    case Classification::particular: return "particular";
    case Classification::extendable_nonparticular: return "extendable";
    }
    return "?";
}

long long digit_sum(const DigitList& b) {
    return std::accumulate(b.begin(), b.end(), 0LL);
}

long long weighted_sum(const DigitList& b) {
    long long s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += (long long)i * b[i];
    return s;
}

bool is_solution(const DigitList& b) {
    const int n = (int)b.size();
    if (n == 0) return false;
    std::vector<int> count(n, 0);
    for (int v : b) {
        if (v < 0) return false;
        if (v < n) ++count[v];
    }
    for (int i = 0; i < n; ++i)
        if (b[i] != count[i]) return false;
    return true;
}

int zero_lower_bound(int n) {
    if (n < 1) throw std::invalid_argument("zero_lower_bound: length must be >= 1");
    // smallest z >= 0 with z >= n - 1/2 - sqrt(2n + 1/4); squared form
    // keeps boundary cases (where the bound is an exact integer) exact
    for (int z = 0;; ++z) {
        long long t = 2LL * n - 2LL * z - 1;
        if (t <= 0 || t * t <= 8LL * n + 1) return z;
    }
}

Classification classify(const DigitList& b) {
    if (!is_solution(b)) return Classification::not_solution;
    const int n = (int)b.size();
    const int z = b[0]; // solutions force 1 <= b(0) <= n - 1
    bool extendable = z >= 1 && z < n && b[z] == 1;
    for (int i = z + 1; extendable && i < n; ++i)
        if (b[i] != 0) extendable = false;
    if (!extendable) return Classification::sporadic;
    return b[z - 1] > 0 ? Classification::particular : Classification::extendable_nonparticular;
}

DigitList extend(const DigitList& b) {
    if (!is_extendable(classify(b)))
        throw std::invalid_argument("extend: not an extendable solution");
    const int n = (int)b.size();
    const int z = b[0];
    DigitList e(b);
    e.push_back(0); // new final position of length n + 1
    e[0] = z + 1;
    e[z] = 0;
    e[z + 1] = 1; // z + 1 <= n - 1 for every extendable solution
    return e;
}

DigitList contract(const DigitList& e) {
    if (classify(e) != Classification::extendable_nonparticular)
        throw std::invalid_argument("contract: input is not the extension of a smaller solution");
    const int z = e[0];
    // non-particular forces z >= 2 and e's last entry 0, so the dropped
    // position and the rewrites below never collide
    DigitList b(e.begin(), e.end() - 1);
    b[0] = z - 1;
    b[z] = 0;
    b[z - 1] = 1;
    return b;
}

std::pair<DigitList, int> to_particular(const DigitList& b) {
    if (!is_extendable(classify(b)))
        throw std::invalid_argument("to_particular: not an extendable solution");
    DigitList cur = b;
    int steps = 0;
    while (classify(cur) == Classification::extendable_nonparticular) {
        cur = contract(cur);
        ++steps;
    }
    return {cur, steps};
}

namespace {

struct Dfs {
    int n;
    DigitList cur;
    std::vector<DigitList>& out;

    // Both running sums must finish at exactly n; any prefix exceeding
    // either budget is dead.
    void run(int pos, int sum, int weighted) {
        if (pos == n) {
            if (sum == n && weighted == n && is_solution(cur)) out.push_back(cur);
            return;
        }
        int maxv = n - sum;
        if (pos >= 1) maxv = std::min(maxv, (n - weighted) / pos);
        for (int v = 0; v <= maxv; ++v) {
            cur[pos] = v;
            run(pos + 1, sum + v, weighted + pos * v);
        }
        cur[pos] = 0;
    }
};

} // namespace

std::vector<DigitList> search_solutions(int n) {
    if (n < 1) throw std::invalid_argument("search_solutions: length must be >= 1");
    if (n > kMaxSearchLength)
        throw std::invalid_argument("search_solutions: length beyond enumeration limit; use "
                                    "closed_form for long solutions");
    std::vector<DigitList> out;
    Dfs dfs{n, DigitList(n, 0), out};
    dfs.run(0, 0, 0);
    return out; // lexicographic by construction
}

DigitList closed_form(int n) {
    if (n < 7) throw std::invalid_argument("closed_form: defined for lengths >= 7");
    DigitList b(n, 0);
    b[0] = n - 4;
    b[1] = 2;
    b[2] = 1;
    b[n - 4] = 1;
    return b;
}

std::string render(const DigitList& b) {
    bool wide = false;
    for (int v : b)
        if (v > 9) wide = true;
    std::string s;
    if (!wide) {
        for (int v : b) s += (char)('0' + v);
        return s;
    }
    s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(b[i]);
    }
    s += ")";
    return s;
}

std::optional<DigitList> parse_digit_list(const std::string& s) {
    DigitList out;
    if (s.empty()) return std::nullopt;
    if (s.front() == '(') {
        if (s.back() != ')') return std::nullopt;
        std::string inner = s.substr(1, s.size() - 2);
        std::size_t start = 0;
        while (start <= inner.size()) {
            std::size_t comma = inner.find(',', start);
            std::string field =
                inner.substr(start, comma == std::string::npos ? comma : comma - start);
            std::size_t b = field.find_first_not_of(" \t");
            if (b == std::string::npos) return std::nullopt;
            std::size_t e = field.find_last_not_of(" \t");
            long long v = 0;
            for (std::size_t i = b; i <= e; ++i) {
                if (field[i] < '0' || field[i] > '9') return std::nullopt;
                v = v * 10 + (field[i] - '0');
                if (v > 1'000'000'000LL) return std::nullopt;
            }
            out.push_back((int)v);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (out.empty()) return std::nullopt;
        return out;
    }
    for (char ch : s) {
        if (ch < '0' || ch > '9') return std::nullopt;
        out.push_back(ch - '0');
    }
    return out;
}

} // namespace ectk::selfdesc
