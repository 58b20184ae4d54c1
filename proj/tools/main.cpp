#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "subtyper/decls.hpp"
#include "subtyper/emit.hpp"

namespace {

using namespace subtyper;

// Exit codes, stable so scripts can branch on them.
constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_budget = 2;
constexpr int exit_io = 3;
constexpr int exit_query_false = 4;
constexpr int exit_query_unknown = 5;

struct CommonOptions {
    std::string input_path;
    int iterations = 1;
    std::string mode = "interval";
    std::size_t vertex_budget = default_vertex_budget;
    std::size_t path_budget = default_path_budget;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed reading input file '" + path + "'");
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    out << text;
    if (!out) throw IoError("failed writing output file '" + path + "'");
}

ConstructionConfig make_config(const CommonOptions& opt) {
    ConstructionConfig cfg;
    cfg.iterations = opt.iterations;
    cfg.mode = arg_mode_from_string(opt.mode);
    cfg.vertex_budget = opt.vertex_budget;
    cfg.path_budget = opt.path_budget;
    return cfg;
}

IterationOutcome run_pipeline(const CommonOptions& opt, const ConstructionConfig& cfg) {
    ClassTable table = parse_decls(read_file(opt.input_path));
    SubclassingGraph c = build_subclassing(table, cfg.naming);
    return iterate(c, cfg);
}

int cmd_build(const CommonOptions& opt, const std::string& emit_format,
              const std::string& out_path, bool highlight_self_similar) {
    ConstructionConfig cfg = make_config(opt);
    IterationOutcome outcome = run_pipeline(opt, cfg);
    EmitFormat format = emit_format_from_string(emit_format);
    std::string text;
    if (format == EmitFormat::dot && highlight_self_similar && outcome.stages.size() > 1) {
        const DirectedGraph& prev = outcome.stages[outcome.stages.size() - 2];
        auto prev_vertices = prev.vertices();
        GraphDocument doc = make_document(outcome.graph, outcome.report, cfg.mode,
                                          cfg.iterations);
        text = to_dot(doc, std::set<Label>(prev_vertices.begin(), prev_vertices.end()));
    } else {
        text = emit(outcome.graph, outcome.report, cfg.mode, cfg.iterations, format);
    }
    write_output(out_path, text);
    return exit_ok;
}

void print_rows(const IterationReport& interval_report,
                const IterationReport& wildcard_report) {
    std::printf("%-10s %-9s %10s %10s %10s\n", "iteration", "mode", "|V|", "|E|", "|I|");
    std::size_t n = std::max(interval_report.rows.size(), wildcard_report.rows.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (const IterationReport* rep : {&interval_report, &wildcard_report}) {
            if (i >= rep->rows.size()) continue;
            const IterationRow& row = rep->rows[i];
            std::printf("%-10d %-9s %10zu %10zu %10zu\n", row.iteration,
                        to_string(row.mode).c_str(), row.vertex_count, row.edge_count,
                        row.interval_count);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i < interval_report.rows.size() && i < wildcard_report.rows.size()) {
            const IterationRow& a = interval_report.rows[i];
            const IterationRow& b = wildcard_report.rows[i];
            std::printf("iteration %d: vertex delta %td\n", a.iteration,
                        static_cast<std::ptrdiff_t>(a.vertex_count) -
                            static_cast<std::ptrdiff_t>(b.vertex_count));
        }
    }
}

int cmd_compare(const CommonOptions& opt) {
    ClassTable table = parse_decls(read_file(opt.input_path));
    ConstructionConfig cfg = make_config(opt);
    SubclassingGraph c = build_subclassing(table, cfg.naming);

    IterationReport reports[2];
    bool budget_hit = false;
    for (ArgMode mode : {ArgMode::interval, ArgMode::wildcard}) {
        ConstructionConfig run = cfg;
        run.mode = mode;
        try {
            reports[mode == ArgMode::wildcard] = iterate(c, run).report;
        } catch (const IterationBudgetError& e) {
            reports[mode == ArgMode::wildcard] = e.partial_report();
            std::cerr << "subtyper: " << to_string(mode) << " mode stopped early: "
                      << e.what() << "\n";
            budget_hit = true;
        }
    }
    print_rows(reports[0], reports[1]);
    return budget_hit ? exit_budget : exit_ok;
}

int cmd_query(const CommonOptions& opt, const std::string& query_text) {
    ConstructionConfig cfg = make_config(opt);
    auto [lhs, rhs] = parse_subtype_query(query_text, cfg.naming);
    IterationOutcome outcome = run_pipeline(opt, cfg);
    switch (query_subtype(outcome.graph, lhs, rhs)) {
        case SubtypeAnswer::yes:
            std::cout << "true\n";
            return exit_ok;
        case SubtypeAnswer::no:
            std::cout << "false\n";
            return exit_query_false;
        case SubtypeAnswer::unknown: break;
    }
    std::cout << "unknown (type not materialized at depth " << opt.iterations << ")\n";
    return exit_query_unknown;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generic subtyping graphs with interval type arguments"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::string emit_format = "json";
    std::string out_path;
    std::string query_text;
    bool highlight = false;

    auto add_common = [&](CLI::App* cmd, bool with_mode) {
        cmd->add_option("--input,-i", opt.input_path, "class declaration file")
            ->required();
        cmd->add_option("--iterations,-k", opt.iterations,
                        "number of construction iterations")
            ->check(CLI::PositiveNumber)
            ->required();
        if (with_mode)
            cmd->add_option("--mode,-m", opt.mode, "argument mode")
                ->check(CLI::IsMember({"interval", "wildcard"}))
                ->capture_default_str();
        cmd->add_option("--vertex-budget", opt.vertex_budget,
                        "abort once a graph exceeds this many vertices")
            ->envname("SUBTYPER_VERTEX_BUDGET")
            ->capture_default_str();
        cmd->add_option("--path-budget", opt.path_budget,
                        "cap on enumerated simple paths")
            ->capture_default_str();
    };

    CLI::App* build = app.add_subcommand("build", "construct S_k and emit it");
    add_common(build, true);
    build->add_option("--emit,-e", emit_format, "output format")
        ->check(CLI::IsMember({"dot", "graphml", "json"}))
        ->capture_default_str();
    build->add_option("--out,-o", out_path, "output file (default: stdout)");
    build->add_flag("--highlight-self-similar", highlight,
                    "color DOT edges already present in the previous iteration");

    CLI::App* compare = app.add_subcommand(
        "compare", "construct both modes and tabulate their sizes");
    add_common(compare, false);

    CLI::App* query =
        app.add_subcommand("query", "decide a ground subtyping query over S_k");
    add_common(query, true);
    query->add_option("query", query_text, "query of the form \"T1 <: T2\"")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(opt, emit_format, out_path, highlight);
        if (compare->parsed()) return cmd_compare(opt);
        return cmd_query(opt, query_text);
    } catch (const BudgetExceededError& e) {
        std::cerr << "subtyper: " << e.what() << "\n";
        return exit_budget;
    } catch (const IoError& e) {
        std::cerr << "subtyper: " << e.what() << "\n";
        return exit_io;
    } catch (const Error& e) {
        std::cerr << "subtyper: " << e.what() << "\n";
        return exit_input_error;
    }
}
