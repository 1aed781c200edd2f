#include "ectk/search.hpp"

#include "json.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ectk {

using json = nlohmann::ordered_json;

MultiplesResult integral_multiples(const Curve& E, int nmax) {
    if (E.e != 0)
        throw std::invalid_argument("integral_multiples: (0,0) is not on the curve (e != 0)");
    if (!is_nonsingular(E)) throw std::invalid_argument("integral_multiples: singular curve");
    if (nmax < 1) throw std::invalid_argument("integral_multiples: nmax must be >= 1");

    MultiplesResult r;
    const Point base(Rat(0), Rat(0));
    Point cur = base;
    for (int n = 1; n <= nmax; ++n) {
        if (cur.inf) {
            r.torsion_order = n;
            break;
        }
        if (is_integral(cur)) r.multiples.push_back(n);
        cur = detail::add_unchecked(E, cur, base);
    }
    return r;
}

namespace {

struct Sweep {
    std::vector<Int> lows;
    std::vector<unsigned long long> sizes;
    unsigned long long total = 1;

    explicit Sweep(const std::vector<std::pair<Int, Int>>& ranges) {
        for (const auto& [lo, hi] : ranges) {
            lows.push_back(lo);
            Int width = hi - lo + 1;
            if (width <= 0) { // empty range: the whole sweep is empty
                sizes.push_back(0);
                continue;
            }
            if (!width.fits_ulong_p())
                throw std::invalid_argument("run_search: parameter range too large");
            sizes.push_back(width.get_ui());
        }
        for (unsigned long long s : sizes) {
            if (s != 0 && total > (1ULL << 62) / s)
                throw std::invalid_argument("run_search: parameter space too large");
            total *= s;
        }
    }

    // Tuple at flat index, first parameter most significant.
    std::vector<Int> tuple(unsigned long long idx) const {
        std::vector<Int> t(lows.size());
        for (std::size_t i = lows.size(); i-- > 0;) {
            t[i] = lows[i] + Int((unsigned long)(idx % sizes[i]));
            idx /= sizes[i];
        }
        return t;
    }
};

void tally_reject(Reject r, SearchStats& st) {
    switch (r) {
    case Reject::singular: ++st.rejected_singular; break;
    case Reject::c_zero: ++st.rejected_c_zero; break;
    case Reject::b_zero: ++st.rejected_b_zero; break;
    case Reject::unreduced_gcd: ++st.rejected_unreduced; break;
    case Reject::torsion: ++st.torsion; break;
    }
}

// Runs the pipeline on one tuple; returns a record only for keepers.
std::optional<CandidateRecord> process_tuple(const SearchConfig& cfg, const std::vector<Int>& params,
                                             SearchStats& st) {
    ++st.tuples;
    FamilyResult fr = make_family_curve(cfg.family, params);
    if (!fr.ok()) {
        tally_reject(*fr.reject, st);
        return std::nullopt;
    }
    ReductionResult rr = reduce(fr.curve->curve);
    MultiplesResult mr = integral_multiples(rr.reduced, cfg.nmax);
    if (mr.torsion_order) {
        ++st.torsion;
        return std::nullopt;
    }
    bool keep = false;
    for (int n : mr.multiples)
        if (n >= cfg.min_n) keep = true;
    if (!keep) {
        ++st.below_min_n;
        return std::nullopt;
    }
    CandidateRecord rec;
    rec.family = cfg.family;
    rec.params = params;
    rec.curve = rr.reduced;
    rec.g = rr.g;
    rec.multiples = mr.multiples;
    rec.highest = mr.multiples.back();
    rec.count = (int)mr.multiples.size();
    return rec;
}

} // namespace

std::vector<CandidateRecord> run_search(const SearchConfig& cfg, SearchStats* stats) {
    if (cfg.family != 5 && cfg.family != 8)
        throw std::invalid_argument("run_search: family must be 5 or 8");
    if ((int)cfg.ranges.size() != family_arity(cfg.family))
        throw std::invalid_argument("run_search: expected " +
                                    std::to_string(family_arity(cfg.family)) +
                                    " parameter ranges for family " + std::to_string(cfg.family));
    if (cfg.min_n < 1 || cfg.nmax < cfg.min_n)
        throw std::invalid_argument("run_search: need nmax >= min_n >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("run_search: need at least one worker");

    Sweep sweep(cfg.ranges);
    const unsigned long long total = sweep.total;
    const unsigned int workers =
        (unsigned int)std::min<unsigned long long>(cfg.workers, std::max<unsigned long long>(total, 1));

    std::vector<std::vector<CandidateRecord>> found(workers);
    std::vector<SearchStats> local(workers);
    std::vector<std::exception_ptr> errors(workers);

    auto work = [&](unsigned int w) {
        try {
            unsigned long long begin = total * w / workers;
            unsigned long long end = total * (w + 1) / workers;
            for (unsigned long long idx = begin; idx < end; ++idx) {
                std::optional<CandidateRecord> rec = process_tuple(cfg, sweep.tuple(idx), local[w]);
                if (rec) found[w].push_back(std::move(*rec));
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    // Merge in chunk order (= tuple order), then drop repeats of the same
    // reduced curve so the output is independent of the worker count.
    SearchStats merged;
    std::vector<CandidateRecord> out;
    std::set<std::string> seen;
    for (unsigned int w = 0; w < workers; ++w) {
        merged.tuples += local[w].tuples;
        merged.rejected_singular += local[w].rejected_singular;
        merged.rejected_c_zero += local[w].rejected_c_zero;
        merged.rejected_b_zero += local[w].rejected_b_zero;
        merged.rejected_unreduced += local[w].rejected_unreduced;
        merged.torsion += local[w].torsion;
        merged.below_min_n += local[w].below_min_n;
        for (auto& rec : found[w]) {
            if (seen.insert(to_string(rec.curve)).second)
                out.push_back(std::move(rec));
            else
                ++merged.duplicates;
        }
    }
    merged.emitted = out.size();
    if (stats) *stats = merged;
    return out;
}

static json record_to_json(const CandidateRecord& r) {
    json j;
    j["family"] = r.family;
    json params = json::array();
    for (const Int& p : r.params) params.push_back(to_string(p));
    j["params"] = std::move(params);
    j["curve"] = {{"a", to_string(r.curve.a)},
                  {"b", to_string(r.curve.b)},
                  {"c", to_string(r.curve.c)},
                  {"d", to_string(r.curve.d)},
                  {"e", to_string(r.curve.e)}};
    j["g"] = to_string(r.g);
    j["multiples"] = r.multiples;
    j["highest"] = r.highest;
    j["count"] = r.count;
    return j;
}

void write_candidates(const std::vector<CandidateRecord>& records, std::ostream& out) {
    for (const CandidateRecord& r : records) out << record_to_json(r).dump() << '\n';
}

void write_candidates_file(const std::vector<CandidateRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_candidates(records, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

static Int int_field(const json& j, const char* key) {
    std::optional<Int> v = parse_int(j.at(key).get<std::string>());
    if (!v) throw std::runtime_error(std::string("bad integer in field '") + key + "'");
    return *v;
}

std::vector<CandidateRecord> read_candidates(std::istream& in) {
    std::vector<CandidateRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            CandidateRecord r;
            r.family = j.at("family").get<int>();
            for (const auto& p : j.at("params")) {
                std::optional<Int> v = parse_int(p.get<std::string>());
                if (!v) throw std::runtime_error("bad integer in params");
                r.params.push_back(*v);
            }
            const json& c = j.at("curve");
            r.curve = Curve{int_field(c, "a"), int_field(c, "b"), int_field(c, "c"),
                            int_field(c, "d"), int_field(c, "e")};
            r.g = int_field(j, "g");
            r.multiples = j.at("multiples").get<std::vector<int>>();
            r.highest = j.at("highest").get<int>();
            r.count = j.at("count").get<int>();
            out.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw std::runtime_error("bad candidate record at line " + std::to_string(lineno) +
                                     ": " + e.what());
        }
    }
    return out;
}

std::vector<CandidateRecord> read_candidates_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    try {
        return read_candidates(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::vector<CandidateRecord> rank_records(std::vector<CandidateRecord> records, RankKey key,
                                          int top) {
    auto key_of = [key](const CandidateRecord& r) {
        return key == RankKey::highest ? r.highest : r.count;
    };
    std::stable_sort(records.begin(), records.end(),
                     [&](const CandidateRecord& x, const CandidateRecord& y) {
                         int kx = key_of(x), ky = key_of(y);
                         if (kx != ky) return kx > ky;
                         return compare(x.curve, y.curve) < 0;
                     });
    if (top < 0) top = 0;
    if ((std::size_t)top < records.size()) records.resize(top);
    return records;
}

} // namespace ectk
