// Command-line front end: build catalogs, inspect one group, run the theorem suite.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pgroup/catalog.hpp"
#include "pgroup/catalog_io.hpp"
#include "pgroup/errors.hpp"
#include "pgroup/report.hpp"

using namespace pgroup;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

void add_range_flags(CLI::App& app, RunConfig& cfg) {
    auto& r = cfg.ranges;
    app.add_option("--p", r.p, "odd prime")->envname("PGROUP_P");
    app.add_option("--n-max", r.n_max, "bound on n")->envname("PGROUP_N_MAX");
    app.add_option("--m-max", r.m_max, "bound on m")->envname("PGROUP_M_MAX");
    app.add_option("--k-max", r.k_max, "bound on k")->envname("PGROUP_K_MAX");
    app.add_option("--r-max", r.r_max, "bound on r")->envname("PGROUP_R_MAX");
    app.add_option("--max-order-log", r.max_order_log, "skip entries with |G| > p^this")
        ->envname("PGROUP_MAX_ORDER_LOG");
    app.add_option("--types", r.types, "comma-separated family numbers 1..19 (default all)")
        ->delimiter(',')
        ->envname("PGROUP_TYPES");
    app.add_option("--budget-group", cfg.suite.group_budget, "largest group to enumerate")
        ->envname("PGROUP_BUDGET_GROUP");
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_catalog(const RunConfig& cfg, const std::string& out) {
    validate(cfg);
    const CatalogFile file = make_catalog_file(cfg.ranges);
    std::size_t failed = 0;
    for (const auto& e : file.entries) {
        const auto rep = verify_entry(e, cfg.suite.group_budget);
        if (rep.pass()) continue;
        ++failed;
        for (const auto& item : rep.items)
            if (!item.pass) std::cerr << "FAIL " << e.id() << " " << item.check << ": " << item.detail << "\n";
    }
    write_output(out, serialize(file));
    std::cerr << file.entries.size() << " entries, " << file.entries.size() - failed << " verified, " << failed
              << " failed\n";
    return failed ? kExitFail : 0;
}

int cmd_group(const RunConfig& cfg, int type_id, const EntryParams& params, const std::string& format) {
    validate(cfg);
    const auto e = build_entry(type_id, params);
    const auto rep = group_report(e, cfg.suite.group_budget);
    std::cout << (format == "jsonl" ? rep.dump() + "\n" : group_report_text(rep));
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& catalog_path, const std::string& out,
               const std::string& format) {
    validate(cfg);
    std::vector<CatalogEntry> entries;
    if (catalog_path.empty()) {
        entries = build_catalog(cfg.ranges);
    } else {
        entries = parse_catalog(read_file(catalog_path)).entries;
    }
    const auto results = verify_entries(entries, cfg.suite, cfg.jobs);
    write_output(out, format == "table" ? to_table(results) : to_jsonl(results, cfg.timing));
    const auto c = count_verdicts(results);
    std::cerr << entries.size() << " entries: " << c.pass << " pass, " << c.fail << " fail, " << c.skipped
              << " skipped\n";
    return c.fail ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite p-groups with derived subgroup of order p and their modular group algebras"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string out, format = "jsonl", catalog_path;
    int type_id = 0;
    EntryParams params;

    auto* catalog = app.add_subcommand("catalog", "build, verify and serialize the catalog");
    add_range_flags(*catalog, cfg);
    catalog->add_option("--out", out, "catalog file (default stdout)")->envname("PGROUP_OUT");

    auto* group = app.add_subcommand("group", "inspect one catalog entry");
    group->add_option("--type", type_id, "family number 1..19")->required()->check(CLI::Range(1, 19));
    group->add_option("--p", params.p)->envname("PGROUP_P");
    group->add_option("--n", params.n);
    group->add_option("--m", params.m);
    group->add_option("--k", params.k);
    group->add_option("--r", params.r);
    group->add_option("--budget-group", cfg.suite.group_budget)->envname("PGROUP_BUDGET_GROUP");
    group->add_option("--format", format, "jsonl | table")
        ->check(CLI::IsMember({"jsonl", "table"}))
        ->envname("PGROUP_FORMAT");

    auto* verify = app.add_subcommand("verify", "run every theorem check over a catalog");
    add_range_flags(*verify, cfg);
    verify->add_option("--catalog", catalog_path, "read entries from a catalog file instead of the ranges")
        ->envname("PGROUP_CATALOG");
    verify->add_option("--samples", cfg.suite.samples, "samples per sampled check")->envname("PGROUP_SAMPLES");
    verify->add_option("--seed", cfg.suite.seed)->envname("PGROUP_SEED");
    verify->add_option("--budget-algebra", cfg.suite.algebra_budget, "largest group algebra to build")
        ->envname("PGROUP_BUDGET_ALGEBRA");
    verify->add_option("--out", out, "report file (default stdout)")->envname("PGROUP_OUT");
    verify->add_option("--format", format, "jsonl | table")
        ->check(CLI::IsMember({"jsonl", "table"}))
        ->envname("PGROUP_FORMAT");
    verify->add_option("--jobs", cfg.jobs, "entries verified in parallel")->envname("PGROUP_JOBS");
    verify->add_flag("--timing", cfg.timing, "include per-check seconds in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*catalog) return cmd_catalog(cfg, out);
        if (*group) {
            cfg.ranges.p = params.p;
            return cmd_group(cfg, type_id, params, format);
        }
        return cmd_verify(cfg, catalog_path, out, format);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ConstraintError& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
