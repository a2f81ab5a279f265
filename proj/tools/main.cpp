#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logpois/cohomology.hpp"
#include "logpois/parallel.hpp"
#include "logpois/poly_parse.hpp"
#include "logpois/verify.hpp"

using json = nlohmann::ordered_json;
using namespace logpois;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_config = 2;

struct RunConfig {
    std::string command;
    std::string variant = "log";
    std::vector<int> ns = {2};
    WeightWindow window{-2, 25};
    std::uint64_t seed = 42;
    std::string format = "table";
    int jobs = 1;
    std::string phi_text;
    int k = 0;
    int w = 0;
    bool corrupt_d2 = false;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* "a" or "a..b", inclusive, negatives allowed */
std::pair<int, int> parse_range(const std::string& text) {
    auto parse_int = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw ConfigError("bad integer '" + s + "'");
            return v;
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("bad integer '" + s + "'");
        }
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = parse_int(text);
        return {v, v};
    }
    return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

std::vector<int> parse_n_list(const std::string& text) {
    auto [lo, hi] = parse_range(text);
    if (lo < 2) throw ConfigError("n must be >= 2");
    if (hi < lo) throw ConfigError("empty n range");
    std::vector<int> ns;
    for (int n = lo; n <= hi; ++n) ns.push_back(n);
    return ns;
}

json config_json(const RunConfig& cfg) {
    // --jobs is execution machinery, deliberately not echoed: reports must
    // be byte-identical across job counts
    json c;
    c["command"] = cfg.command;
    c["variant"] = cfg.variant;
    c["n"] = cfg.ns;
    c["weights"] = {{"min", cfg.window.min_w}, {"max", cfg.window.max_w}};
    c["seed"] = cfg.seed;
    c["format"] = cfg.format;
    if (!cfg.phi_text.empty()) c["phi"] = cfg.phi_text;
    return c;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

struct TableWriter {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void print() const {
        std::vector<std::size_t> width(header.size());
        for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c)
                std::cout << std::left << std::setw(int(width[c]) + 2) << cells[c];
            std::cout << "\n";
        };
        line(header);
        for (const auto& row : rows) line(row);
    }

    void print_csv() const {
        auto line = [](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c)
                std::cout << (c ? "," : "") << csv_escape(cells[c]);
            std::cout << "\n";
        };
        line(header);
        for (const auto& row : rows) line(row);
    }
};

/* ---------------- dims ---------------- */

int cmd_dims(const RunConfig& cfg) {
    bool both = cfg.variant == "both";
    std::vector<std::string> variants =
        both ? std::vector<std::string>{"classical", "log"} : std::vector<std::string>{cfg.variant};

    struct Cell {
        std::string variant;
        int n, k, w;
    };
    std::vector<Cell> cells;
    for (const auto& variant : variants)
        for (int n : cfg.ns)
            for (int k = 0; k <= 3; ++k)
                for (int w = cfg.window.min_w; w <= cfg.window.max_w; ++w)
                    cells.push_back({variant, n, k, w});

    std::vector<CohomologyReport> reports(cells.size());
    run_indexed(cells.size(), cfg.jobs, [&](std::size_t i) {
        const Cell& c = cells[i];
        ComplexSpec spec = c.variant == "log" ? ComplexSpec::logarithmic(c.n)
                                              : ComplexSpec::classical_power(c.n);
        reports[i] = cohomology_at(spec, c.k, c.w, false);
    });

    // per-cell classical-vs-log comparison, classical side annotated
    std::map<std::tuple<int, int, int>, ComparisonCell> iso;
    std::vector<ComparisonReport> comparisons;
    if (both) {
        for (int n : cfg.ns) {
            ComparisonReport cmp = compare_variants(n, cfg.window);
            for (const auto& cell : cmp.cells) iso[{n, cell.k, cell.w}] = cell;
            comparisons.push_back(std::move(cmp));
        }
    }

    bool all_match = true;
    for (const auto& r : reports) all_match = all_match && r.match;
    for (const auto& cmp : comparisons)
        all_match = all_match && cmp.cells_match && cmp.totals_match;

    auto iso_of = [&](const CohomologyReport& r) -> const ComparisonCell* {
        if (!both || r.variant != "classical" || r.degree > 2) return nullptr;
        auto it = iso.find({r.n, r.degree, r.weight});
        return it == iso.end() ? nullptr : &it->second;
    };

    if (cfg.format == "json") {
        json doc;
        doc["config"] = config_json(cfg);
        doc["rows"] = json::array();
        for (const auto& r : reports) {
            json row;
            row["variant"] = r.variant;
            row["n"] = r.n;
            row["k"] = r.degree;
            row["w"] = r.weight;
            row["dimZ"] = r.dim_z;
            row["dimB"] = r.dim_b;
            row["dimH"] = r.dim_h;
            row["predicted"] = r.predicted ? json(*r.predicted) : json(nullptr);
            row["match"] = r.match;
            if (both) {
                const ComparisonCell* cell = iso_of(r);
                row["iso_dim"] = cell ? json(cell->dim_log) : json(nullptr);
                row["iso_match"] = cell ? json(cell->match) : json(nullptr);
            }
            doc["rows"].push_back(std::move(row));
        }
        doc["suites"] = json::array();
        for (const auto& cmp : comparisons) {
            std::string tag = "(n=" + std::to_string(cmp.n) + ")";
            doc["suites"].push_back({{"name", "classical_log_cells" + tag},
                                     {"pass", cmp.cells_match},
                                     {"counterexample", nullptr}});
            doc["suites"].push_back({{"name", "classical_log_totals" + tag},
                                     {"pass", cmp.totals_match},
                                     {"counterexample", nullptr}});
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        TableWriter table;
        table.header = {"variant", "n", "k", "w", "dimZ", "dimB", "dimH", "predicted", "match"};
        if (both) {
            table.header.push_back("iso_dim");
            table.header.push_back("iso_match");
        }
        for (const auto& r : reports) {
            std::vector<std::string> row = {r.variant,
                                            std::to_string(r.n),
                                            std::to_string(r.degree),
                                            std::to_string(r.weight),
                                            std::to_string(r.dim_z),
                                            std::to_string(r.dim_b),
                                            std::to_string(r.dim_h),
                                            r.predicted ? std::to_string(*r.predicted) : "-",
                                            r.match ? "yes" : "NO"};
            if (both) {
                const ComparisonCell* cell = iso_of(r);
                row.push_back(cell ? std::to_string(cell->dim_log) : "-");
                row.push_back(cell ? (cell->match ? "yes" : "NO") : "-");
            }
            table.rows.push_back(std::move(row));
        }
        if (cfg.format == "csv")
            table.print_csv();
        else
            table.print();
        if (both && cfg.format == "table")
            for (const auto& cmp : comparisons)
                std::cout << "classical vs log n=" << cmp.n
                          << ": cells " << (cmp.cells_match ? "match" : "MISMATCH") << ", totals "
                          << (cmp.totals_match ? "match" : "MISMATCH") << "\n";
    }
    return all_match ? exit_ok : exit_mismatch;
}

/* ---------------- verify ---------------- */

int cmd_verify(const RunConfig& cfg) {
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.window = cfg.window;
    opts.corrupt_d2 = cfg.corrupt_d2;

    auto tasks = suite_tasks(cfg.ns, opts);
    if (!cfg.phi_text.empty()) {
        BiPoly phi = parse_poly(cfg.phi_text);
        std::string text = cfg.phi_text;
        tasks.emplace_back([phi, text, opts] {
            return suite_complex_dd_custom_phi(phi, text, opts);
        });
    }

    std::vector<SuiteResult> results(tasks.size());
    run_indexed(tasks.size(), cfg.jobs, [&](std::size_t i) { results[i] = tasks[i](); });

    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;

    if (cfg.format == "json") {
        json doc;
        doc["config"] = config_json(cfg);
        doc["rows"] = json::array();
        doc["suites"] = json::array();
        for (const auto& r : results)
            doc["suites"].push_back(
                {{"name", r.name},
                 {"pass", r.pass},
                 {"counterexample", r.pass ? json(nullptr) : json(r.counterexample)}});
        std::cout << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        TableWriter table;
        table.header = {"name", "pass", "counterexample"};
        for (const auto& r : results)
            table.rows.push_back({r.name, r.pass ? "yes" : "NO", r.counterexample});
        table.print_csv();
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "[ ok ] " : "[FAIL] ") << r.name;
            if (!r.pass) std::cout << ": " << r.counterexample;
            std::cout << "\n";
        }
        std::cout << (all_pass ? "all suites passed" : "suite failures detected") << "\n";
    }
    return all_pass ? exit_ok : exit_mismatch;
}

/* ---------------- reps ---------------- */

int cmd_reps(const RunConfig& cfg) {
    int n = cfg.ns.front();
    ComplexSpec spec =
        cfg.variant == "classical" ? ComplexSpec::classical_power(n) : ComplexSpec::logarithmic(n);
    CohomologyReport report = cohomology_at(spec, cfg.k, cfg.w, true);

    RatMatrix out_matrix;
    std::vector<SparseVec> image;
    if (cfg.k < 2) out_matrix = matrix_of_d(spec, cfg.k, cfg.w);
    if (cfg.k >= 1) image = matrix_of_d(spec, cfg.k - 1, cfg.w - weight_shift(spec)).columns();

    struct Annotated {
        std::string text;
        bool cocycle, fresh;
    };
    std::vector<Annotated> lines;
    for (const auto& rep : report.representatives) {
        SparseVec v = cochain_to_vector(spec, cfg.k, cfg.w, rep);
        bool cocycle = cfg.k == 2 || out_matrix.apply(v).is_zero();
        bool fresh = !membership(v, image);
        lines.push_back({cochain_to_string(rep), cocycle, fresh});
    }

    if (cfg.format == "json") {
        json doc;
        doc["config"] = config_json(cfg);
        json row;
        row["variant"] = report.variant;
        row["n"] = report.n;
        row["k"] = report.degree;
        row["w"] = report.weight;
        row["dimZ"] = report.dim_z;
        row["dimB"] = report.dim_b;
        row["dimH"] = report.dim_h;
        row["predicted"] = report.predicted ? json(*report.predicted) : json(nullptr);
        row["match"] = report.match;
        row["representatives"] = json::array();
        for (const auto& line : lines)
            row["representatives"].push_back({{"cochain", line.text},
                                              {"cocycle_checked", line.cocycle},
                                              {"non_coboundary_checked", line.fresh}});
        doc["rows"] = json::array({row});
        doc["suites"] = json::array();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "H^" << cfg.k << " at weight " << cfg.w << " (" << report.variant
                  << ", n=" << n << "): dim " << report.dim_h << "\n";
        for (const auto& line : lines)
            std::cout << "  " << line.text << "   ["
                      << (line.cocycle ? "cocycle-checked" : "NOT A COCYCLE") << ", "
                      << (line.fresh ? "non-coboundary-checked" : "IS A COBOUNDARY") << "]\n";
    }
    bool sane = true;
    for (const auto& line : lines) sane = sane && line.cocycle && line.fresh;
    return sane && report.match ? exit_ok : exit_mismatch;
}

/* ---------------- bench ---------------- */

int cmd_bench(const RunConfig& cfg) {
    struct Cell {
        int n, w;
        double ms = 0;
        std::array<int, 3> dims{0, 0, 0};
    };
    std::vector<Cell> cells;
    for (int n : cfg.ns)
        for (int w = cfg.window.min_w; w <= cfg.window.max_w; ++w) cells.push_back({n, w});

    run_indexed(cells.size(), cfg.jobs, [&](std::size_t i) {
        Cell& cell = cells[i];
        ComplexSpec spec = cfg.variant == "classical" ? ComplexSpec::classical_power(cell.n)
                                                      : ComplexSpec::logarithmic(cell.n);
        auto start = std::chrono::steady_clock::now();
        for (int k = 0; k <= 2; ++k)
            cell.dims[std::size_t(k)] = cohomology_at(spec, k, cell.w, false).dim_h;
        cell.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
    });

    json doc;
    doc["config"] = config_json(cfg);
    doc["bench"] = json::array();
    for (const auto& cell : cells)
        doc["bench"].push_back(
            {{"n", cell.n}, {"w", cell.w}, {"ms", cell.ms}, {"dimH", cell.dims}});
    std::cout << doc.dump(2) << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Poisson cohomology tables for the bivector y^n dx^dy"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string n_text = "2", weights_text = "-2..25";

    auto add_common = [&](CLI::App* cmd, bool with_variant) {
        cmd->add_option("--n", n_text, "divisor exponent, INT or INT..INT (n >= 2)");
        cmd->add_option("--weights", weights_text, "inclusive weight window INT..INT");
        cmd->add_option("--seed", cfg.seed, "random seed for property suites");
        cmd->add_option("--format", cfg.format, "table | csv | json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
        if (with_variant)
            cmd->add_option("--variant", cfg.variant, "log | classical | both")
                ->check(CLI::IsMember({"log", "classical", "both"}));
    };

    CLI::App* dims = app.add_subcommand("dims", "per-weight cohomology dimension table");
    add_common(dims, true);

    CLI::App* verify = app.add_subcommand("verify", "run every identity and structure suite");
    add_common(verify, false);
    verify->add_option("--phi", cfg.phi_text,
                       "extra classical d2 o d1 = 0 suite for this Poisson structure");
    verify->add_flag("--corrupt-d2", cfg.corrupt_d2)->group("");  // test hook, hidden

    CLI::App* reps = app.add_subcommand("reps", "representative basis of one H^k piece");
    reps->add_option("--n", n_text, "divisor exponent (single value)");
    reps->add_option("--k", cfg.k, "cochain degree")->required();
    reps->add_option("--w", cfg.w, "weight")->required();
    reps->add_option("--variant", cfg.variant, "log | classical")
        ->check(CLI::IsMember({"log", "classical"}));
    reps->add_option("--format", cfg.format, "table | csv | json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* bench = app.add_subcommand("bench", "wall time per graded piece (json)");
    add_common(bench, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_config;
    }

    try {
        cfg.ns = parse_n_list(n_text);
        auto [lo, hi] = parse_range(weights_text);
        cfg.window = {lo, hi};  // an inverted range is an empty window

        if (dims->parsed()) {
            cfg.command = "dims";
            return cmd_dims(cfg);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            return cmd_verify(cfg);
        }
        if (reps->parsed()) {
            cfg.command = "reps";
            if (cfg.ns.size() != 1) throw ConfigError("reps needs a single n");
            if (cfg.k < 0) throw ConfigError("k must be >= 0");
            if (cfg.k > 2) throw ConfigError("H^k = 0 for all k > 2; nothing to print");
            return cmd_reps(cfg);
        }
        cfg.command = "bench";
        if (cfg.variant == "both") throw ConfigError("bench times one variant: log or classical");
        return cmd_bench(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_mismatch;
    }
}
