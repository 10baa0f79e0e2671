#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "constructions.hpp"
#include "formulas.hpp"
#include "json_io.hpp"
#include "matching.hpp"
#include "oracle.hpp"
#include "rainbow.hpp"

namespace antiramsey {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class VerifyMode { Certificate, Exhaustive, Both };

inline VerifyMode parse_verify_mode(std::string_view s) {
    if (s == "certificate") return VerifyMode::Certificate;
    if (s == "exhaustive") return VerifyMode::Exhaustive;
    if (s == "both") return VerifyMode::Both;
    throw ParseError("mode must be certificate, exhaustive or both");
}

inline std::string_view verify_mode_name(VerifyMode m) {
    switch (m) {
    case VerifyMode::Certificate: return "certificate";
    case VerifyMode::Exhaustive: return "exhaustive";
    case VerifyMode::Both: return "both";
    }
    return "?";
}

enum class RowStatus { Pass, Fail, Timeout };

inline std::string_view row_status_name(RowStatus s) {
    switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Timeout: return "TIMEOUT";
    }
    return "?";
}

struct VerifyRow {
    std::string family;
    int n = 0;
    FormulaResult formula;
    int construction_colors = 0;
    bool certificate_ok = false;
    std::optional<bool> detector_ok;
    std::optional<SearchOutcome> oracle;
    RowStatus status = RowStatus::Pass;
    std::string note;
};

struct SpiderRow {
    std::vector<int> legs;
    int beta = 0;
    int beta_pair = 0;
    int even_legs = 0;
    bool observation_ok = false;
    int sample_n = 0;
    std::int64_t join_value = 0; // (beta-1)n - C(beta,2) + r
    int construction_colors = 0;
    bool certificate_ok = false;
    RowStatus status = RowStatus::Pass;
};

/// Rows are ordered by (family, n) whatever order they finished in.
/// Timing lives only in the header (elapsed_ms, omitted in deterministic mode).
struct VerificationReport {
    std::string campaign;
    std::string tool_version{kToolVersion};
    std::chrono::milliseconds elapsed{0};
    bool deterministic = false;
    std::vector<VerifyRow> rows;
    std::vector<SpiderRow> spider_rows;

    bool any(RowStatus s) const {
        return std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return r.status == s; }) ||
               std::any_of(spider_rows.begin(), spider_rows.end(), [&](const auto& r) { return r.status == s; });
    }
};

/// 0 all PASS, 1 any FAIL, 3 oracle timeouts but no FAIL. (2 is left for invalid invocations.)
inline int exit_code(const VerificationReport& rep) {
    if (rep.any(RowStatus::Fail)) return 1;
    if (rep.any(RowStatus::Timeout)) return 3;
    return 0;
}

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Certificate;
    bool oracle = false;          // also run ar_exact (n <= 12)
    SearchOptions search;         // budget and threads for the oracle
    int threads = 1;              // rows evaluated in parallel
    bool deterministic = false;
    FormulaConfig formula;
};

inline constexpr int kExhaustiveMaxN = 25;

namespace report_detail {

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::min<int>(threads, static_cast<int>(count)); ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

inline VerifyRow verify_one(const ForestSpec& f, int n, const VerifyOptions& opt) {
    VerifyRow row;
    row.family = format_forest_spec(f);
    row.n = n;
    row.formula = ar_formula(f, n, opt.formula);

    Construction c = construct_for(f, n);
    row.construction_colors = c.coloring.num_colors();
    std::vector<std::string> problems;

    if (row.formula.lower) {
        if (row.construction_colors != *row.formula.lower) problems.push_back("construction differs from formula lower bound");
    } else {
        row.note = "formula out of range; construction not compared";
    }
    if (opt.mode != VerifyMode::Exhaustive) {
        row.certificate_ok = check_certificate(c.coloring, c.certificate, f);
        if (!row.certificate_ok) problems.push_back("certificate failed");
    }
    if (opt.mode != VerifyMode::Certificate) {
        row.detector_ok = verify_no_rainbow(c.coloring, f);
        if (!*row.detector_ok) problems.push_back("detector found a rainbow copy");
        if (opt.mode == VerifyMode::Exhaustive) row.certificate_ok = check_certificate(c.coloring, c.certificate, f);
    }

    bool timed_out = false;
    if (opt.oracle) {
        row.oracle = ar_exact(n, f, opt.search);
        const auto& o = *row.oracle;
        if (o.status != SearchStatus::Exact) {
            timed_out = true;
        } else {
            if (o.value < row.construction_colors) problems.push_back("oracle below construction");
            if (row.formula.is_exact() && o.value != row.formula.value()) problems.push_back("oracle differs from exact formula");
        }
        if (o.value > 0 && !(o.witness && verify_no_rainbow(*o.witness, f))) problems.push_back("oracle witness invalid");
    }

    for (const auto& p : problems) row.note += (row.note.empty() ? "" : "; ") + p;
    row.status = !problems.empty() ? RowStatus::Fail : timed_out ? RowStatus::Timeout : RowStatus::Pass;
    return row;
}

} // namespace report_detail

/// One row per (pattern, n): formula value, construction size, certificate,
/// optional exhaustive detector and oracle runs.
inline VerificationReport run_verify(const std::vector<ForestSpec>& family, int n_min, int n_max, const VerifyOptions& opt = {}) {
    if (family.empty()) throw RangeError("verify: no patterns given");
    if (n_min > n_max) throw RangeError("verify: empty n range");
    if (opt.mode != VerifyMode::Certificate && n_max > kExhaustiveMaxN)
        throw RangeError("verify: exhaustive mode is limited to n <= " + std::to_string(kExhaustiveMaxN));
    if (opt.oracle && n_max > 12) throw RangeError("verify: the oracle is limited to n <= 12");

    std::vector<ForestSpec> specs;
    for (const auto& f : family) specs.push_back(canonical(f));
    for (const auto& f : specs)
        if (n_min < f.vertex_count())
            throw RangeError("verify: n=" + std::to_string(n_min) + " is below the order of " + format_forest_spec(f));

    const auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<ForestSpec, int>> jobs;
    for (const auto& f : specs)
        for (int n = n_min; n <= n_max; ++n) jobs.emplace_back(f, n);

    VerificationReport rep;
    rep.campaign = "verify";
    rep.deterministic = opt.deterministic;
    rep.rows.resize(jobs.size());
    report_detail::parallel_for(jobs.size(), opt.threads,
                                [&](std::size_t i) { rep.rows[i] = report_detail::verify_one(jobs[i].first, jobs[i].second, opt); });
    std::stable_sort(rep.rows.begin(), rep.rows.end(),
                     [](const auto& a, const auto& b) { return std::tie(a.family, a.n) < std::tie(b.family, b.n); });
    if (!opt.deterministic)
        rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return rep;
}

/// Every spider with 2..max_legs legs of lengths 2..max_len: beta, beta over edge
/// pairs, and the join construction at sample_n = 3 v(T).
///
/// observation_ok: beta_pair <= beta, with equality exactly when one leg is even.
/// The construction row only shows the conjectured value is attained, never that it is the maximum.
inline VerificationReport run_spider_scan(int max_legs, int max_len, int threads = 1, bool deterministic = false) {
    if (max_legs < 2 || max_len < 2) throw RangeError("spider scan needs max_legs >= 2 and max_len >= 2");
    if (max_legs > 8 || max_len > 12) throw RangeError("spider scan limited to 8 legs of length <= 12");
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::vector<int>> all;
    std::vector<int> legs;
    auto rec = [&](auto&& self, int from) -> void {
        if (legs.size() >= 2) all.push_back(legs);
        if (static_cast<int>(legs.size()) == max_legs) return;
        for (int a = from; a <= max_len; ++a) {
            legs.push_back(a);
            self(self, a);
            legs.pop_back();
        }
    };
    rec(rec, 2);

    VerificationReport rep;
    rep.campaign = "spider";
    rep.deterministic = deterministic;
    rep.spider_rows.resize(all.size());
    report_detail::parallel_for(all.size(), threads, [&](std::size_t i) {
        SpiderSpec sp{all[i]};
        SpiderRow row;
        row.legs = sp.legs;
        row.beta = spider_beta(sp);
        row.beta_pair = spider_beta_pair(sp);
        row.even_legs = even_leg_count(sp);
        row.observation_ok = row.beta_pair <= row.beta && ((row.beta_pair == row.beta) == (row.even_legs == 1));

        row.sample_n = 3 * sp.vertex_count();
        const std::int64_t n = row.sample_n, b = row.beta;
        row.join_value = (b - 1) * n - b * (b - 1) / 2 + (row.even_legs == 1 ? 2 : 1);
        ForestSpec f{ForestKind::Spider, sp.legs};
        Construction c = construct_spider(row.sample_n, sp);
        row.construction_colors = c.coloring.num_colors();
        row.certificate_ok = check_certificate(c.coloring, c.certificate, f);
        bool ok = row.observation_ok && row.certificate_ok && row.construction_colors == row.join_value;
        row.status = ok ? RowStatus::Pass : RowStatus::Fail;
        rep.spider_rows[i] = std::move(row);
    });
    std::stable_sort(rep.spider_rows.begin(), rep.spider_rows.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.legs.size(), a.legs) < std::make_pair(b.legs.size(), b.legs);
    });
    if (!deterministic) rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return rep;
}

// ---- emission ----

inline json to_json(const VerifyRow& r) {
    json j{{"family", r.family},
           {"n", r.n},
           {"formula", to_json(r.formula)},
           {"construction_colors", r.construction_colors},
           {"certificate_ok", r.certificate_ok},
           {"detector_ok", json_detail::opt(r.detector_ok)},
           {"status", std::string(row_status_name(r.status))},
           {"note", r.note}};
    j["oracle"] = r.oracle ? json{{"value", r.oracle->value}, {"status", std::string(search_status_name(r.oracle->status))}} : json(nullptr);
    return j;
}

inline json to_json(const SpiderRow& r) {
    return json{{"spider", format_forest_spec(ForestSpec{ForestKind::Spider, r.legs})},
                {"legs", r.legs},
                {"beta", r.beta},
                {"beta_pair", r.beta_pair},
                {"even_legs", r.even_legs},
                {"observation_ok", r.observation_ok},
                {"sample_n", r.sample_n},
                {"join_value", r.join_value},
                {"construction_colors", r.construction_colors},
                {"certificate_ok", r.certificate_ok},
                {"conjecture", "conjectural lower bound attained"},
                {"status", std::string(row_status_name(r.status))}};
}

inline json to_json(const VerificationReport& rep) {
    json header{{"campaign", rep.campaign}, {"tool_version", rep.tool_version}};
    if (!rep.deterministic) header["elapsed_ms"] = rep.elapsed.count();
    json rows = json::array();
    for (const auto& r : rep.rows) rows.push_back(to_json(r));
    for (const auto& r : rep.spider_rows) rows.push_back(to_json(r));
    return json{{"header", header}, {"rows", rows}, {"exit_code", exit_code(rep)}};
}

inline constexpr std::string_view kVerifyCsvHeader =
    "family,n,formula_lower,formula_upper,formula_status,construction_colors,certificate_ok,detector_ok,oracle_value,oracle_status,status";
inline constexpr std::string_view kSpiderCsvHeader =
    "spider,beta,beta_pair,even_legs,observation_ok,sample_n,join_value,construction_colors,certificate_ok,conjecture,status";

namespace report_detail {

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

template <typename T>
std::string cell(const std::optional<T>& v) {
    if (!v) return "";
    std::ostringstream os;
    os << *v;
    return os.str();
}

inline std::string cell(bool b) { return b ? "true" : "false"; }

} // namespace report_detail

/// Fixed column order (kVerifyCsvHeader / kSpiderCsvHeader); empty cells for values not computed.
inline void write_csv(std::ostream& os, const VerificationReport& rep) {
    using namespace report_detail;
    if (rep.campaign == "spider") {
        os << kSpiderCsvHeader << '\n';
        for (const auto& r : rep.spider_rows)
            os << csv_quote(format_forest_spec(ForestSpec{ForestKind::Spider, r.legs})) << ',' << r.beta << ',' << r.beta_pair << ','
               << r.even_legs << ',' << cell(r.observation_ok) << ',' << r.sample_n << ',' << r.join_value << ',' << r.construction_colors
               << ',' << cell(r.certificate_ok) << ",conjectural lower bound attained," << row_status_name(r.status) << '\n';
        return;
    }
    os << kVerifyCsvHeader << '\n';
    for (const auto& r : rep.rows) {
        std::optional<std::int64_t> ov;
        std::optional<std::string> os_status;
        if (r.oracle) {
            ov = r.oracle->value;
            os_status = std::string(search_status_name(r.oracle->status));
        }
        os << csv_quote(r.family) << ',' << r.n << ',' << cell(r.formula.lower) << ',' << cell(r.formula.upper) << ','
           << status_name(r.formula.status) << ',' << r.construction_colors << ',' << cell(r.certificate_ok) << ','
           << (r.detector_ok ? cell(*r.detector_ok) : "") << ',' << cell(ov) << ',' << cell(os_status) << ',' << row_status_name(r.status)
           << '\n';
    }
}

inline std::string to_csv(const VerificationReport& rep) {
    std::ostringstream os;
    write_csv(os, rep);
    return os.str();
}

} // namespace antiramsey
