// coxeter-eulerian: tables, verification suites, and a real-rootedness probe
// for Eulerian and sub-Eulerian polynomials of Coxeter types A, B and D.
//
// Exit codes: 0 success / all checks pass; 1 verification failure;
// 2 usage error; 3 oracle request beyond the enumeration bound.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxeuler/descent_tables.hpp"
#include "coxeuler/recurrences.hpp"
#include "coxeuler/sturm.hpp"
#include "coxeuler/suites.hpp"
#include "coxeuler/table_record.hpp"

namespace {

using namespace coxeuler;

constexpr int kOracleBound = 8;  // largest rank served by exhaustive enumeration

struct BoundViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Family parse_family(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "D") return Family::D;
    throw std::invalid_argument("unknown family: " + s);
}

int min_rank_for(const std::string& stat) { return stat == "eulerian" ? 0 : 2; }

// One table polynomial, computed from the requested source.  `source` must
// already be resolved to "oracle" or "recurrence".
Polynomial compute_statistic(const std::string& family, const std::string& stat, int n,
                             const std::string& source) {
    if (stat != "eulerian" && family != "D")
        throw std::invalid_argument("statistic " + stat + " is defined for family D only");
    if (n < min_rank_for(stat))
        throw std::invalid_argument("statistic " + stat + " starts at rank " +
                                    std::to_string(min_rank_for(stat)));
    const Family fam = parse_family(family);
    if (source == "oracle") {
        if (n > kOracleBound)
            throw BoundViolation("oracle source is limited to n <= " + std::to_string(kOracleBound));
        if (stat == "eulerian") return brute_force_eulerian(n, fam);
        const SubTableRow row = brute_force_sub_row(n);
        if (stat == "sub1") return row.p1;
        if (stat == "sub01") return row.p01;
        if (stat == "subge2") return row.pge2;
        if (stat == "sub0ge2") return row.p0ge2;
        throw std::invalid_argument("unknown statistic: " + stat);
    }
    if (source != "recurrence") throw std::invalid_argument("unknown source: " + source);
    if (stat == "eulerian") return build_ladder(fam, n).rows[static_cast<size_t>(n)];
    const SubTableRow row = build_sub_ladder(n)[static_cast<size_t>(n)];
    if (stat == "sub1") return row.p1;
    if (stat == "sub01") return row.p01;
    if (stat == "subge2") return row.pge2;
    if (stat == "sub0ge2") return row.p0ge2;
    throw std::invalid_argument("unknown statistic: " + stat);
}

std::string resolve_source(const std::string& requested, int n) {
    if (requested == "auto") return n <= kOracleBound ? "oracle" : "recurrence";
    return requested;
}

struct TableArgs {
    std::string family = "D";
    std::string stat = "eulerian";
    std::optional<int> n;
    std::optional<int> max_n;
    std::string source = "auto";
    std::string format = "json";
    std::string cache_path;
};

int run_table(const TableArgs& args) {
    const int min_rank = min_rank_for(args.stat);
    if (args.stat != "eulerian" && args.family != "D") {
        std::cerr << "error: statistic " << args.stat << " is defined for family D only\n";
        return 2;
    }
    if (!args.n && !args.max_n) {
        std::cerr << "error: table requires --n or --max-n\n";
        return 2;
    }
    std::vector<int> ranks;
    if (args.n) {
        if (*args.n < min_rank) {
            std::cerr << "error: statistic " << args.stat << " starts at rank " << min_rank << "\n";
            return 2;
        }
        ranks.push_back(*args.n);
    } else {
        if (*args.max_n < min_rank) {
            std::cerr << "error: statistic " << args.stat << " starts at rank " << min_rank << "\n";
            return 2;
        }
        for (int r = min_rank; r <= *args.max_n; ++r) ranks.push_back(r);
    }

    TableCache cache;
    bool cache_dirty = false;
    if (!args.cache_path.empty()) {
        CacheLoadResult loaded = load_cache(args.cache_path);
        for (const auto& d : loaded.diagnostics) std::cerr << "cache: " << args.cache_path << ": " << d << "\n";
        cache = std::move(loaded.cache);
    }

    if (args.format == "csv") std::cout << "family,stat,n,k,coefficient\n";
    for (int rank : ranks) {
        const std::string source = resolve_source(args.source, rank);
        TableRecord record;
        if (const TableRecord* hit = cache.find(args.family, args.stat, rank, source)) {
            record = *hit;
        } else {
            Polynomial p;
            try {
                p = compute_statistic(args.family, args.stat, rank, source);
            } catch (const BoundViolation& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 3;
            }
            record = make_record(args.family, args.stat, rank, source, p);
            if (!args.cache_path.empty()) {
                cache.put(record);
                cache_dirty = true;
            }
        }
        if (args.format == "csv")
            for (const auto& line : to_csv_lines(record)) std::cout << line << "\n";
        else
            std::cout << to_json_line(record) << "\n";
    }
    if (cache_dirty) save_cache(args.cache_path, cache);
    return 0;
}

void emit_report(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["check"] = report.context;
    j["status"] = report.passed ? "pass" : "fail";
    if (!report.passed && report.first_failure) {
        j["location"] = report.first_failure->location;
        j["expected"] = report.first_failure->expected;
        j["actual"] = report.first_failure->actual;
    }
    std::cout << j.dump() << "\n";
}

// Revalidates every cache record against a fresh computation.
std::vector<CheckReport> validate_cache(const std::string& path) {
    std::vector<CheckReport> reports;
    CacheLoadResult loaded = load_cache(path);
    for (const auto& d : loaded.diagnostics) std::cerr << "cache: " << path << ": " << d << "\n";
    for (const auto& [key, record] : loaded.cache.records()) {
        const std::string ctx = "cache record: " + record.family + " " + record.statistic + " rank " +
                                std::to_string(record.n) + " (" + record.source + ")";
        try {
            Polynomial truth = compute_statistic(record.family, record.statistic, record.n, record.source);
            Polynomial cached = record_polynomial(record);
            reports.push_back(truth == cached
                                  ? CheckReport::pass(ctx)
                                  : CheckReport::fail(ctx, "coefficients", truth.to_string(),
                                                      cached.to_string()));
        } catch (const std::exception& e) {
            reports.push_back(CheckReport::fail(ctx, "record", "computable statistic", e.what()));
        }
    }
    return reports;
}

struct VerifyArgs {
    std::string suite = "all";
    std::optional<int> max_n;
    std::optional<int> order;
    std::string cache_path;
};

int run_verify(const VerifyArgs& args) {
    SuiteConfig cfg;
    if (args.max_n) {
        const int n = *args.max_n;
        if (args.suite == "tables") cfg.tables_max_n = n;
        else if (args.suite == "hat") cfg.hat_max_n = n;
        else if (args.suite == "insertion") cfg.insertion_max_n = n;
        else if (args.suite == "recurrences") {
            cfg.recurrence_max_n = n;
            cfg.oracle_max_n = std::min(cfg.oracle_max_n, n);
        } else if (args.suite == "worpitzky") cfg.worpitzky_max_n = n;
        else if (args.suite == "symmetry") cfg.symmetry_max_n = n;
        else if (args.suite == "errata") cfg.oracle_max_n = n;
        else if (args.suite == "all") {
            cfg.hat_max_n = n;
            cfg.insertion_max_n = n;
            cfg.tables_max_n = std::min(n, 6);
        }
    }
    if (args.order) {
        const int o = *args.order;
        if (args.suite == "egf") cfg.egf_order = o;
        else if (args.suite == "pde") cfg.pde_order = o;
        else if (args.suite == "worpitzky") cfg.worpitzky_t_degree = o;
        else if (args.suite == "all") {
            cfg.egf_order = o;
            cfg.pde_order = o;
            cfg.worpitzky_t_degree = o;
        }
    }

    std::vector<CheckReport> reports;
    try {
        reports = run_suite(args.suite, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!args.cache_path.empty()) {
        auto cache_reports = validate_cache(args.cache_path);
        reports.insert(reports.end(), cache_reports.begin(), cache_reports.end());
    }
    bool all_passed = true;
    for (const auto& report : reports) {
        emit_report(report);
        all_passed = all_passed && report.passed;
    }
    return all_passed ? 0 : 1;
}

struct RootsArgs {
    std::string family = "D";
    std::optional<int> n;
    std::optional<int> max_n;
};

int run_roots(const RootsArgs& args) {
    constexpr int kRootsBound = 40;  // recurrence range for the probe
    int lo = 2, hi = 12;
    if (args.n) lo = hi = *args.n;
    else if (args.max_n) hi = *args.max_n;
    if (lo < 0 || hi < lo || hi > kRootsBound) {
        std::cerr << "error: roots probe covers ranks 0.." << kRootsBound << "\n";
        return 2;
    }
    const Family fam = parse_family(args.family);
    const EulerianLadder ladder = build_ladder(fam, hi);
    for (int n = lo; n <= hi; ++n) {
        const Polynomial& p = ladder.rows[static_cast<size_t>(n)];
        const SturmResult result = sturm_real_root_count(p);
        nlohmann::ordered_json j;
        j["family"] = args.family;
        j["n"] = n;
        j["degree"] = p.degree();
        j["squarefree_degree"] = result.degree_of_squarefree_part;
        j["distinct_real_roots"] = result.distinct_real_roots;
        j["all_real"] = result.all_real;
        j["label"] = "empirical";
        std::cout << j.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eulerian and sub-Eulerian polynomial toolkit for Coxeter types A, B and D"};
    app.require_subcommand(1);

    const char* env_cache = std::getenv("COXEULER_CACHE");
    const std::string default_cache = env_cache ? env_cache : "";

    TableArgs table_args;
    table_args.cache_path = default_cache;
    CLI::App* table = app.add_subcommand("table", "Emit table rows as JSON lines or CSV");
    table->add_option("--family", table_args.family, "Coxeter family")->check(CLI::IsMember({"A", "B", "D"}));
    table->add_option("--stat", table_args.stat, "statistic")
        ->check(CLI::IsMember({"eulerian", "sub1", "sub01", "subge2", "sub0ge2"}));
    auto* n_opt = table->add_option("--n", table_args.n, "single rank");
    table->add_option("--max-n", table_args.max_n, "all ranks up to this bound")->excludes(n_opt);
    table->add_option("--source", table_args.source, "row source (auto: oracle up to n = 8)")
        ->check(CLI::IsMember({"auto", "oracle", "recurrence"}));
    table->add_option("--format", table_args.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--cache", table_args.cache_path, "JSON-lines cache file");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", verify_args.suite, "suite name")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", verify_args.max_n, "override the suite's rank bound");
    verify->add_option("--order", verify_args.order, "override the suite's truncation order / t-degree");
    verify->add_option("--cache", verify_args.cache_path, "validate this cache file's records");

    RootsArgs roots_args;
    CLI::App* roots = app.add_subcommand("roots", "Empirical real-rootedness probe (Sturm counts)");
    roots->add_option("--family", roots_args.family, "Coxeter family")->check(CLI::IsMember({"A", "B", "D"}));
    auto* rn_opt = roots->add_option("--n", roots_args.n, "single rank");
    roots->add_option("--max-n", roots_args.max_n, "probe ranks 2 up to this bound")->excludes(rn_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) return run_table(table_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (roots->parsed()) return run_roots(roots_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
