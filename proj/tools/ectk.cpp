// Command-line front end: curve checks, family parameter sweeps, candidate
// ranking reports, bounded integral-point enumeration, curve reduction, and
// the self-descriptive number commands.

#include "ectk/curve.hpp"
#include "ectk/points_enum.hpp"
#include "ectk/search.hpp"
#include "ectk/selfdesc.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

// exit code 2: bad usage or unparseable input
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exit code 3: input parsed but is not a valid curve for the operation
struct CurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ectk::Curve parse_curve_arg(const std::string& s) {
    std::optional<ectk::Curve> E = ectk::parse_curve(s);
    if (!E) throw UsageError("cannot parse curve '" + s + "': expected \"a,b,c,d,e\"");
    return *E;
}

ectk::Int parse_int_arg(const std::string& s, const char* what) {
    std::optional<ectk::Int> v = ectk::parse_int(s);
    if (!v) throw UsageError(std::string("cannot parse ") + what + " '" + s + "'");
    return *v;
}

// "lo:hi,lo:hi,..." with one inclusive range per family parameter.
std::vector<std::pair<ectk::Int, ectk::Int>> parse_ranges(const std::string& s) {
    std::vector<std::pair<ectk::Int, ectk::Int>> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string field = s.substr(start, comma == std::string::npos ? comma : comma - start);
        std::size_t colon = field.find(':');
        if (colon == std::string::npos)
            throw UsageError("bad range '" + field + "': expected \"lo:hi\"");
        ectk::Int lo = parse_int_arg(field.substr(0, colon), "range bound");
        ectk::Int hi = parse_int_arg(field.substr(colon + 1), "range bound");
        out.emplace_back(lo, hi);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string join_multiples(const std::vector<int>& ns, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(ns[i]);
    }
    return s;
}

void cmd_check(const std::string& curve_str, int nmax) {
    ectk::Curve E = parse_curve_arg(curve_str);
    if (E.e != 0) throw CurveError("(0,0) is not on this curve (e != 0)");
    if (!ectk::is_nonsingular(E)) throw CurveError("curve is singular");
    if (nmax < 1) throw UsageError("--nmax must be >= 1");
    ectk::MultiplesResult r = ectk::integral_multiples(E, nmax);
    std::cout << join_multiples(r.multiples, ",") << "\n";
    if (r.torsion_order) std::cout << "torsion order: " << *r.torsion_order << "\n";
}

void cmd_search(int family, const std::string& ranges_str, int nmax, int min_n,
                const std::string& out_path, int workers) {
    if (family != 5 && family != 8) throw UsageError("--family must be 5 or 8");
    ectk::SearchConfig cfg;
    cfg.family = family;
    cfg.ranges = parse_ranges(ranges_str);
    if ((int)cfg.ranges.size() != ectk::family_arity(family))
        throw UsageError("family " + std::to_string(family) + " needs " +
                         std::to_string(ectk::family_arity(family)) + " ranges, got " +
                         std::to_string(cfg.ranges.size()));
    if (min_n < 1 || nmax < min_n) throw UsageError("need --nmax >= --min-n >= 1");
    if (workers < 1) throw UsageError("--workers must be >= 1");
    cfg.nmax = nmax;
    cfg.min_n = min_n;
    cfg.workers = workers;

    ectk::SearchStats st;
    std::vector<ectk::CandidateRecord> records = ectk::run_search(cfg, &st);
    ectk::write_candidates_file(records, out_path);

    std::cout << "tuples:        " << st.tuples << "\n"
              << "rejected:      " << (st.rejected_singular + st.rejected_c_zero +
                                       st.rejected_b_zero + st.rejected_unreduced)
              << " (singular " << st.rejected_singular << ", c=0 " << st.rejected_c_zero
              << ", b=0 " << st.rejected_b_zero << ", unreduced " << st.rejected_unreduced << ")\n"
              << "torsion:       " << st.torsion << "\n"
              << "below min-n:   " << st.below_min_n << "\n"
              << "duplicates:    " << st.duplicates << "\n"
              << "candidates:    " << st.emitted << " -> " << out_path << "\n";
}

void cmd_report(const std::string& in_path, const std::string& rank, int top) {
    ectk::RankKey key;
    if (rank == "highest")
        key = ectk::RankKey::highest;
    else if (rank == "count")
        key = ectk::RankKey::count;
    else
        throw UsageError("--rank must be 'highest' or 'count'");
    if (top < 0) throw UsageError("--top must be >= 0");
    std::vector<ectk::CandidateRecord> records =
        ectk::rank_records(ectk::read_candidates_file(in_path), key, top);
    std::cout << "Curve | Integral Multiples of (0,0)\n";
    for (const ectk::CandidateRecord& r : records)
        std::cout << ectk::equation(r.curve) << " | " << join_multiples(r.multiples, ", ") << "\n";
}

void cmd_enum(const std::string& curve_str, const std::string& bound_str) {
    ectk::Curve E = parse_curve_arg(curve_str);
    ectk::Int bound = parse_int_arg(bound_str, "bound");
    if (bound < 0) throw UsageError("--bound must be >= 0");
    for (const ectk::Point& P : ectk::enumerate_integral_points(E, bound))
        std::cout << ectk::to_string(P) << "\n";
}

void cmd_reduce(const std::string& curve_str) {
    ectk::Curve E = parse_curve_arg(curve_str);
    if (E == ectk::Curve{0, 0, 0, 0, 0}) throw CurveError("all coefficients are zero");
    ectk::ReductionResult r = ectk::reduce(E);
    std::cout << "g: " << ectk::to_string(r.g) << "\n"
              << "reduced: " << ectk::to_string(r.reduced) << "\n";
}

ectk::selfdesc::DigitList parse_list_arg(const std::string& s) {
    std::optional<ectk::selfdesc::DigitList> b = ectk::selfdesc::parse_digit_list(s);
    if (!b)
        throw UsageError("cannot parse digit list '" + s +
                         "': expected digits like 1210 or a list like (11, 2, 1, 0)");
    return *b;
}

void cmd_selfdesc_search(int max_len) {
    namespace sd = ectk::selfdesc;
    if (max_len < 1) throw UsageError("--max-len must be >= 1");
    if (max_len > sd::kMaxSearchLength)
        throw UsageError("--max-len is capped at " + std::to_string(sd::kMaxSearchLength));
    std::cout << "L(b) | b | Classification\n";
    for (int n = 1; n <= max_len; ++n)
        for (const sd::DigitList& b : sd::search_solutions(n))
            std::cout << n << " | " << sd::render(b) << " | "
                      << sd::classification_name(sd::classify(b)) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit: integral multiples of (0,0) on Weierstrass curves, "
                 "family parameter sweeps, and self-descriptive numbers"};
    app.require_subcommand(1);

    // check
    std::string check_curve;
    int check_nmax = 35;
    CLI::App* check = app.add_subcommand(
        "check", "List the n with n*(0,0) integral on a curve \"a,b,c,d,e\" (e must be 0)");
    check->add_option("curve", check_curve, "curve coefficients \"a,b,c,d,e\"")->required();
    check->add_option("--nmax", check_nmax, "largest multiple to test (default 35)");
    check->callback([&] { cmd_check(check_curve, check_nmax); });

    // search
    int search_family = 8;
    std::string search_ranges, search_out;
    int search_nmax = 35, search_min_n = 15, search_workers = 1;
    CLI::App* search =
        app.add_subcommand("search", "Sweep a curve family and store candidate records as JSONL");
    search->add_option("--family", search_family, "curve family: 5 (params r,s,t,u) or 8 (u,v,p)")
        ->required();
    search->add_option("--ranges", search_ranges,
                       "inclusive per-parameter ranges \"lo:hi,lo:hi,...\"")
        ->required();
    search->add_option("--nmax", search_nmax, "largest multiple to test (default 35)");
    search->add_option("--min-n", search_min_n,
                       "keep curves with some integral n*(0,0), n >= min-n (default 15)");
    search->add_option("--out", search_out, "output JSONL path")->required();
    search->add_option("--workers", search_workers, "worker threads (default 1)");
    search->callback([&] {
        cmd_search(search_family, search_ranges, search_nmax, search_min_n, search_out,
                   search_workers);
    });

    // report
    std::string report_in, report_rank = "highest";
    int report_top = 40;
    CLI::App* report = app.add_subcommand("report", "Rank stored candidate records as a table");
    report->add_option("--in", report_in, "candidate JSONL file")->required();
    report->add_option("--rank", report_rank, "sort key: highest | count (default highest)");
    report->add_option("--top", report_top, "number of rows (default 40)");
    report->callback([&] { cmd_report(report_in, report_rank, report_top); });

    // enum
    std::string enum_curve, enum_bound;
    CLI::App* enumc =
        app.add_subcommand("enum", "List integral points (x, y) with |x| <= bound, sorted");
    enumc->add_option("--curve", enum_curve, "curve coefficients \"a,b,c,d,e\"")->required();
    enumc->add_option("--bound", enum_bound, "inclusive bound on |x|")->required();
    enumc->callback([&] { cmd_enum(enum_curve, enum_bound); });

    // reduce
    std::string reduce_curve;
    CLI::App* reducec =
        app.add_subcommand("reduce", "Print the scale factor g and the reduced curve");
    reducec->add_option("--curve", reduce_curve, "curve coefficients \"a,b,c,d,e\"")->required();
    reducec->callback([&] { cmd_reduce(reduce_curve); });

    // selfdesc
    CLI::App* sd = app.add_subcommand("selfdesc", "Self-descriptive number commands");
    sd->require_subcommand(1);

    int sd_max_len = 11;
    CLI::App* sd_search =
        sd->add_subcommand("search", "Exhaustively list all solutions up to a length");
    sd_search->add_option("--max-len", sd_max_len, "largest length to search")->required();
    sd_search->callback([&] { cmd_selfdesc_search(sd_max_len); });

    std::string sd_classify_arg;
    CLI::App* sd_classify = sd->add_subcommand("classify", "Classify a digit list");
    sd_classify->add_option("list", sd_classify_arg, "digit list, e.g. 1210 or (11, 2, 1, 0)")
        ->required();
    sd_classify->callback([&] {
        namespace s = ectk::selfdesc;
        std::cout << s::classification_name(s::classify(parse_list_arg(sd_classify_arg))) << "\n";
    });

    std::string sd_extend_arg;
    CLI::App* sd_extend = sd->add_subcommand("extend", "Extend an extendable solution by one digit");
    sd_extend->add_option("list", sd_extend_arg, "digit list")->required();
    sd_extend->callback([&] {
        namespace s = ectk::selfdesc;
        try {
            std::cout << s::render(s::extend(parse_list_arg(sd_extend_arg))) << "\n";
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    });

    std::string sd_contract_arg;
    CLI::App* sd_contract =
        sd->add_subcommand("contract", "Contract an extendable non-particular solution");
    sd_contract->add_option("list", sd_contract_arg, "digit list")->required();
    sd_contract->callback([&] {
        namespace s = ectk::selfdesc;
        try {
            std::cout << s::render(s::contract(parse_list_arg(sd_contract_arg))) << "\n";
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    });

    int sd_formula_len = 0;
    CLI::App* sd_formula =
        sd->add_subcommand("formula", "Print the closed-form solution of a given length (>= 7)");
    sd_formula->add_option("--length", sd_formula_len, "solution length")->required();
    sd_formula->callback([&] {
        namespace s = ectk::selfdesc;
        if (sd_formula_len < 7) throw UsageError("--length must be >= 7");
        std::cout << s::render(s::closed_form(sd_formula_len)) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CurveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
