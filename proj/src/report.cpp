#include "pgroup/report.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "pgroup/errors.hpp"
#include "pgroup/isomorphism.hpp"
#include "pgroup/modp.hpp"
#include "pgroup/structure.hpp"

namespace pgroup {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

void validate(const RunConfig& cfg) {
    const auto& r = cfg.ranges;
    if (!is_prime(r.p)) throw ConfigError("--p: " + std::to_string(r.p) + " is not a prime");
    if (r.p == 2)
        throw ConfigError("--p: p = 2 is out of scope; the classification and the unit-group results assume an odd prime");
    auto positive = [](int v, const char* flag) {
        if (v < 1) throw ConfigError(std::string(flag) + ": must be positive, got " + std::to_string(v));
    };
    positive(r.n_max, "--n-max");
    positive(r.m_max, "--m-max");
    positive(r.k_max, "--k-max");
    if (r.r_max < 2) throw ConfigError("--r-max: must be at least 2, got " + std::to_string(r.r_max));
    for (int t : r.types)
        if (t < 1 || t > 19) throw ConfigError("--types: type " + std::to_string(t) + " is not in 1..19");
    if (cfg.suite.group_budget < 27) throw ConfigError("--budget-group: must be at least 27");
    if (cfg.suite.algebra_budget < 27) throw ConfigError("--budget-algebra: must be at least 27");
    if (cfg.jobs < 1) throw ConfigError("--jobs: must be positive");
}

std::vector<CheckResult> verify_entries(const std::vector<CatalogEntry>& entries, const SuiteConfig& cfg,
                                        unsigned jobs) {
    std::vector<std::vector<CheckResult>> per_entry(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) per_entry[i] = run_suite(entries[i], cfg);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<CheckResult> out;
    for (auto& v : per_entry)
        for (auto& r : v) out.push_back(std::move(r));
    return out;
}

VerifyCounts count_verdicts(const std::vector<CheckResult>& results) {
    VerifyCounts c;
    for (const auto& r : results) {
        switch (r.verdict) {
            case Verdict::Pass: ++c.pass; break;
            case Verdict::Fail: ++c.fail; break;
            case Verdict::Skipped: ++c.skipped; break;
        }
    }
    return c;
}

nlohmann::ordered_json to_json(const CheckResult& r, bool timing) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["group"] = r.group;
    if (r.l) j["l"] = r.l;
    j["mode"] = r.sampled ? "sampled" : "exhaustive";
    if (r.sampled) {
        j["seed"] = r.seed;
        j["samples"] = r.samples;
    }
    j["verdict"] = to_string(r.verdict);
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.counts.empty()) j["counts"] = r.counts;
    if (!r.note.empty()) j["note"] = r.note;
    if (timing) j["seconds"] = r.seconds;
    return j;
}

std::string to_jsonl(const std::vector<CheckResult>& results, bool timing) {
    std::string out;
    for (const auto& r : results) out += to_json(r, timing).dump() + "\n";
    return out;
}

std::string to_table(const std::vector<CheckResult>& results) {
    std::map<std::pair<std::string, int>, VerifyCounts> by_check;
    for (const auto& r : results) {
        auto& c = by_check[{r.check, r.l}];
        (r.verdict == Verdict::Pass ? c.pass : r.verdict == Verdict::Fail ? c.fail : c.skipped)++;
    }
    std::ostringstream os;
    os << std::left << std::setw(18) << "check" << std::setw(4) << "l" << std::right << std::setw(7) << "pass"
       << std::setw(7) << "fail" << std::setw(9) << "skipped" << "\n";
    for (const auto& [key, c] : by_check)
        os << std::left << std::setw(18) << key.first << std::setw(4) << (key.second ? std::to_string(key.second) : "-")
           << std::right << std::setw(7) << c.pass << std::setw(7) << c.fail << std::setw(9) << c.skipped << "\n";
    const auto total = count_verdicts(results);
    os << "total: " << total.pass << " pass, " << total.fail << " fail, " << total.skipped << " skipped\n";
    for (const auto& r : results) {
        if (r.verdict == Verdict::Fail)
            os << "FAIL " << r.check << (r.l ? " l=" + std::to_string(r.l) : "") << " " << r.group << ": " << r.witness
               << "\n";
    }
    std::map<std::string, std::size_t> skip_reasons;
    for (const auto& r : results)
        if (r.verdict == Verdict::Skipped) ++skip_reasons[r.group];
    for (const auto& [g, n] : skip_reasons) os << "SKIP " << g << " (" << n << " checks)\n";
    return os.str();
}

nlohmann::json group_report(const CatalogEntry& e, std::size_t group_budget) {
    const Group g(e.presentation, group_budget);
    const auto& pres = g.presentation();
    nlohmann::json j;
    j["entry"] = e.id();
    j["order"] = g.order();
    j["order_log"] = g.order_log();
    j["exponent"] = exponent(g);

    const Subgroup n = Subgroup::generated(g, {g.index(e.mark("u")), g.index(e.mark("v"))});
    const auto cls = classify_center(g, n);
    j["center"] = {{"tag", to_string(cls.tag)}, {"invariants", cls.invariants}, {"n_location", cls.n_location}};
    std::vector<nlohmann::json> zs;
    for (std::size_t i = 0; i < cls.z.size(); ++i)
        zs.push_back({{"element", pres.format(g.element(cls.z[i]))}, {"order_log", cls.z_orders[i]}});
    j["center"]["decomposition"] = zs;

    const auto f = symplectic_form(g);
    const auto db = symplectic_basis(f);
    j["symplectic_rank"] = f.dimension();
    std::vector<nlohmann::json> pairs;
    for (const auto& [x, y] : db.pairs)
        pairs.push_back({{"x", pres.format(g.element(lift(g, f, x)))}, {"y", pres.format(g.element(lift(g, f, y)))}});
    j["darboux_basis"] = pairs;

    std::map<std::size_t, std::size_t> profile;
    for (const auto& c : conjugacy_classes(g)) ++profile[c.size()];
    std::vector<nlohmann::json> sizes;
    for (const auto& [size, count] : profile) sizes.push_back({{"size", size}, {"count", count}});
    j["class_sizes"] = sizes;
    j["fingerprint"] = fingerprint(g).to_string();
    return j;
}

std::string group_report_text(const nlohmann::json& j) {
    std::ostringstream os;
    os << j["entry"].get<std::string>() << "\n";
    os << "  order          " << j["order"] << " (p^" << j["order_log"] << "), exponent " << j["exponent"] << "\n";
    os << "  center         " << j["center"]["tag"].get<std::string>() << ", invariants " << j["center"]["invariants"].dump()
       << ", N = " << j["center"]["n_location"].get<std::string>() << "\n";
    std::size_t i = 0;
    for (const auto& z : j["center"]["decomposition"])
        os << "    z" << ++i << " = " << z["element"].get<std::string>() << " of order p^" << z["order_log"] << "\n";
    os << "  symplectic     rank " << j["symplectic_rank"] << "\n";
    for (const auto& p : j["darboux_basis"])
        os << "    (" << p["x"].get<std::string>() << ", " << p["y"].get<std::string>() << ")\n";
    os << "  class sizes    ";
    for (const auto& c : j["class_sizes"]) os << c["count"] << " of size " << c["size"] << "  ";
    os << "\n  fingerprint    " << j["fingerprint"].get<std::string>() << "\n";
    return os.str();
}

}  // namespace pgroup
