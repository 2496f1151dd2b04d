#include "foldnet/analysis.hpp"
#include "foldnet/catalog.hpp"
#include "foldnet/geometry.hpp"
#include "foldnet/holes.hpp"
#include "foldnet/io.hpp"
#include "foldnet/mlst.hpp"
#include "foldnet/symmetry.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace foldnet;

namespace {

enum Exit { ok = 0, mismatch = 1, usage = 2, budget = 3, exhausted = 4 };

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    std::string builtin_name;
    std::string input;
    std::vector<int> hole;
    std::uint64_t budget_nodes = default_node_budget;
    double time_limit = 0;
    unsigned workers = 0;
    bool long_run = false;
    std::string out_dir = "out";
    std::vector<int> svg_ranks;
    std::vector<int> cut_edges;
    std::uint64_t oracle_cap = 1'000'000;

    [[nodiscard]] SearchOptions search() const
    {
        SearchOptions options;
        options.node_budget = budget_nodes;
        options.workers = workers;
        if (time_limit > 0)
            options.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
        return options;
    }
};

/// The shell a command works on: the spec as given, or with faces removed.
struct Shell
{
    PolyhedronSpec closed;
    std::optional<OpenShell> open;
    ShellGraph graph;
    std::string label;

    [[nodiscard]] const PolyhedronSpec& spec() const { return open ? open->spec : closed; }
};

void add_source_options(CLI::App* command, RunConfig& config)
{
    auto* builtin = command->add_option("--builtin", config.builtin_name, "Built-in solid name");
    auto* input = command->add_option("--input", config.input, "Polyhedron JSON document")->check(CLI::ExistingFile);
    builtin->excludes(input);
    command->add_option("--hole", config.hole, "Faces to remove, comma separated")->delimiter(',');
    command->add_flag("--long-run", config.long_run, "Allow solids whose search takes minutes to days");
}

void add_search_options(CLI::App* command, RunConfig& config)
{
    command->add_option("--budget-nodes", config.budget_nodes, "Recursion states before giving up")
        ->check(CLI::PositiveNumber);
    command->add_option("--time-limit", config.time_limit, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
    command->add_option("--workers", config.workers, "Worker threads, 0 for all cores");
    command->add_option("--out-dir", config.out_dir, "Directory for result files");
}

Shell load_shell(const RunConfig& config, bool require_source = true)
{
    Shell shell;
    if (!config.builtin_name.empty()) {
        try {
            const CatalogEntry& entry = catalog_entry(config.builtin_name);
            if (entry.tier == RunTier::long_run && !config.long_run)
                throw UsageError("'" + entry.name + "' is a long-run solid (minutes to days); pass --long-run to proceed");
            shell.closed = entry.spec;
        }
        catch (const std::invalid_argument& error) {
            throw UsageError(error.what());
        }
    }
    else if (!config.input.empty()) {
        shell.closed = load_polyhedron_file(config.input);
    }
    else if (require_source) {
        throw UsageError("one of --builtin or --input is required");
    }
    else {
        return shell;
    }
    shell.label = shell.closed.name;
    if (!config.hole.empty()) {
        shell.open = make_open_shell(shell.closed, config.hole);
        shell.graph = shell.open->graph;
        std::set<int> sorted(config.hole.begin(), config.hole.end());
        shell.label += "-hole";
        for (int f : sorted)
            shell.label += "-" + std::to_string(f);
    }
    else {
        shell.graph = build_shell_graph(shell.closed);
    }
    return shell;
}

struct Enumeration
{
    CutList labelled;
    CutList nets;
    std::vector<CanonicalCut> canonical;
    SearchStatistics stats;
};

Enumeration enumerate(const Shell& shell, const RunConfig& config)
{
    Enumeration run;
    CutList& list = run.labelled;
    list.shell = shell.label;
    list.hole_faces = config.hole;
    std::sort(list.hole_faces.begin(), list.hole_faces.end());
    list.vertex_count = shell.graph.vertex_count();
    list.edges = shell.graph.edges();

    AutomorphismGroup group = find_automorphisms(shell.graph);
    if (shell.open) {
        HoleCutResult result = enumerate_hole_cuts(shell.graph, shell.open->hole, config.search());
        list.leaves = result.leaf_count;
        list.interior_size = result.interior_size;
        list.cuts = std::move(result.cuts);
        run.stats = result.stats;
        group = group.stabilizer(shell.graph, shell.open->hole.boundary_edges);
    }
    else {
        MlstResult result = enumerate_mlsts(shell.graph, config.search());
        list.leaves = result.leaf_count;
        list.interior_size = result.interior_size;
        list.cuts = std::move(result.cuts);
        run.stats = result.stats;
    }
    run.canonical = dedupe_cuts(list.cuts, group, config.workers);
    run.nets = list;
    run.nets.kind = CutListKind::nets;
    run.nets.cuts.clear();
    for (const auto& c : run.canonical) {
        run.nets.cuts.push_back(c.representative);
        run.nets.orbit_sizes.push_back(c.orbit_size);
    }
    return run;
}

fs::path shell_dir(const RunConfig& config, const Shell& shell) { return fs::path(config.out_dir) / shell.label; }

void write_enumeration(const fs::path& dir, const Enumeration& run)
{
    write_file(dir / "cuts.json", save_results(run.labelled));
    write_file(dir / "nets.json", save_results(run.nets));
    write_file(dir / "summary.tsv", "shell\t" + run.labelled.shell + "\nleaves\t" + std::to_string(run.labelled.leaves) +
                                        "\ninterior_size\t" + std::to_string(run.labelled.interior_size) +
                                        "\nlabelled_cuts\t" + std::to_string(run.labelled.cuts.size()) +
                                        "\noptimal_nets\t" + std::to_string(run.nets.cuts.size()) + "\n");
    char timing[160];
    std::snprintf(timing, sizeof timing, "wall_seconds\t%.3f\nsearch_nodes\t%llu\ninterior_subtrees\t%llu\n",
                  run.stats.wall_seconds, static_cast<unsigned long long>(run.stats.nodes),
                  static_cast<unsigned long long>(run.stats.interior_subtrees));
    write_file(dir / "timing.txt", timing);
}

void write_partial(const fs::path& dir, const Shell& shell, const RunConfig& config, const BudgetExceeded& error)
{
    CutList list;
    list.shell = shell.label;
    list.hole_faces = config.hole;
    list.vertex_count = shell.graph.vertex_count();
    list.edges = shell.graph.edges();
    list.interior_size = error.interior_size;
    list.partial = true;
    list.note = error.what();
    write_file(dir / "cuts.json", save_results(list));
}

void print_summary(const Enumeration& run)
{
    std::cout << "shell " << run.labelled.shell << "\n"
              << "leaves " << run.labelled.leaves << "\n"
              << "labelled cuts " << run.labelled.cuts.size() << "\n"
              << "optimal nets " << run.nets.cuts.size() << "\n";
}

int cmd_enumerate(const RunConfig& config)
{
    Shell shell = load_shell(config);
    fs::path dir = shell_dir(config, shell);
    try {
        Enumeration run = enumerate(shell, config);
        write_enumeration(dir, run);
        print_summary(run);
        std::cout << "written to " << dir.string() << "\n";
        return ok;
    }
    catch (const BudgetExceeded& error) {
        write_partial(dir, shell, config, error);
        std::cerr << "budget exceeded: " << error.what() << " (partial result in " << dir.string() << ")\n";
        return budget;
    }
}

void write_svgs(const fs::path& dir, std::span<const RankedNet> ranked, const std::vector<int>& ranks)
{
    for (int r : ranks) {
        if (r < 1 || r > static_cast<int>(ranked.size()))
            throw UsageError("--svg-ranks " + std::to_string(r) + " outside 1.." + std::to_string(ranked.size()));
        fs::path file = dir / ("net-rank-" + std::to_string(r) + ".svg");
        write_file(file, export_svg(ranked[static_cast<std::size_t>(r - 1)].layout));
        std::cout << "svg " << file.string() << "\n";
    }
}

int cmd_rank(const RunConfig& config)
{
    Shell shell = load_shell(config);
    fs::path dir = shell_dir(config, shell);
    Enumeration run;
    try {
        run = enumerate(shell, config);
    }
    catch (const BudgetExceeded& error) {
        write_partial(dir, shell, config, error);
        std::cerr << "budget exceeded: " << error.what() << "\n";
        return budget;
    }
    write_enumeration(dir, run);
    auto ranked = rank_nets(shell.spec(), run.canonical, config.workers);
    write_file(dir / "ranking.tsv", format_ranking(ranked, run.canonical));
    print_summary(run);
    double ratio = ranked.back().radius_of_gyration / ranked.front().radius_of_gyration;
    std::cout << "R_g min " << ranked.front().radius_of_gyration << " max " << ranked.back().radius_of_gyration
              << " ratio " << ratio << "\n";
    write_svgs(dir, ranked, config.svg_ranks);
    try {
        const RankedNet& chosen = select_optimal_net(ranked);
        write_file(dir / "selected.txt", "rank\t" + std::to_string(chosen.rank) + "\n");
        std::cout << "selected rank " << chosen.rank << "\n";
        return ok;
    }
    catch (const FallbackExhausted& error) {
        write_file(dir / "selected.txt", "fallback-exhausted\n");
        std::cerr << "fallback exhausted: " << error.what() << "\n";
        return exhausted;
    }
}

int cmd_verify(const RunConfig& config)
{
    Shell shell = load_shell(config);
    if (shell.open)
        throw UsageError("verify works on closed shells");
    bool all_ok = true;
    auto report = [&](const std::string& status, const std::string& what) {
        if (status == "FAIL")
            all_ok = false;
        std::cout << status << "  " << what << "\n";
    };
    const ShellGraph& graph = shell.graph;
    BigInt kirchhoff = count_spanning_trees(graph);
    AutomorphismGroup group = find_automorphisms(graph);
    report(satisfies_group_axioms(graph, group) ? "PASS" : "FAIL",
           "automorphisms form a group of order " + std::to_string(group.order()));
    MlstResult result = enumerate_mlsts(graph, config.search());
    std::size_t orbit_total = 0;
    for (const auto& c : dedupe_cuts(result.cuts, group, config.workers))
        orbit_total += c.orbit_size;
    report(orbit_total == result.cuts.size() ? "PASS" : "FAIL",
           "orbit sizes sum to " + std::to_string(orbit_total) + " of " + std::to_string(result.cuts.size()) +
               " labelled MLSTs");
    bool all_trees = true;
    for (const auto& cut : result.cuts)
        all_trees = all_trees && is_spanning_tree(graph, cut.edges) &&
                    static_cast<int>(cut_leaves(graph, cut).size()) == result.leaf_count;
    report(all_trees ? "PASS" : "FAIL", "every MLST is a spanning tree with " + std::to_string(result.leaf_count) + " leaves");
    try {
        auto trees = enumerate_spanning_trees(graph, config.oracle_cap);
        report(BigInt(trees.size()) == kirchhoff ? "PASS" : "FAIL",
               "Kirchhoff " + kirchhoff.str() + " vs oracle " + std::to_string(trees.size()) + " spanning trees");
        auto best = max_leaf_subset(graph, trees);
        report(best == result.cuts ? "PASS" : "FAIL",
               "MLST set equals max-leaf filter of the oracle (" + std::to_string(best.size()) + " trees)");
    }
    catch (const TreeCapExceeded& error) {
        report("SKIP", "Kirchhoff count " + kirchhoff.str() + " exceeds oracle cap " + std::to_string(error.cap));
        report("SKIP", "MLST set vs oracle filter (oracle cap exceeded)");
    }
    return all_ok ? ok : mismatch;
}

int cmd_estimate(const RunConfig& config)
{
    std::vector<ShellStatistics> rows;
    Shell shell = load_shell(config, false);
    if (!shell.label.empty()) {
        if (shell.open)
            throw UsageError("estimate works on closed shells");
        rows.push_back(shell_statistics(shell.closed, config.search()));
    }
    else {
        for (const auto& entry : catalog()) {
            if (entry.tier == RunTier::long_run && !config.long_run)
                rows.push_back(basic_statistics(entry.spec));
            else
                rows.push_back(shell_statistics(entry.spec, config.search()));
        }
    }
    fs::path dir(config.out_dir);
    auto residuals = residual_report(rows);
    write_file(dir / "statistics.tsv", format_statistics_table(rows));
    write_file(dir / "residuals.tsv", format_residual_report(residuals));
    write_file(dir / "plot-data.tsv", format_plot_data(plot_series(rows)));
    std::cout << format_residual_report(residuals);
    TrendFit trend = mlst_fraction_trend(rows);
    std::cout << "log2(N_MLST/N_ST) vs E over " << trend.points << " shells: slope " << trend.slope
              << ", rank correlation " << trend.rank_correlation << "\n";
    std::cout << "written to " << dir.string() << "\n";
    return ok;
}

int cmd_count(const RunConfig& config)
{
    Shell shell = load_shell(config);
    const ShellGraph& graph = shell.graph;
    BigInt trees = count_spanning_trees(graph);
    AutomorphismGroup group = find_automorphisms(graph);
    if (shell.open)
        group = group.stabilizer(graph, shell.open->hole.boundary_edges);
    std::cout << "shell " << shell.label << "\n"
              << "V " << graph.vertex_count() << "\n"
              << "E " << graph.edge_count() << "\n"
              << "F " << shell.spec().faces.size() << "\n"
              << "N_ST " << trees << "\n"
              << "N_aut " << group.order() << "\n"
              << "N_ST/N_aut " << BigRational(trees, BigInt(group.order())) << "\n";
    if (!shell.open)
        std::cout << "greedy leaves " << cut_leaves(graph, greedy_mlst(graph)).size() << "\n";
    return ok;
}

int cmd_export_svg(const RunConfig& config)
{
    Shell shell = load_shell(config);
    fs::path dir = shell_dir(config, shell);
    if (!config.cut_edges.empty()) {
        Cut cut;
        for (int e : config.cut_edges) {
            if (e < 0 || e >= shell.graph.edge_count())
                throw UsageError("--cut edge " + std::to_string(e) + " outside 0.." +
                                 std::to_string(shell.graph.edge_count() - 1));
            cut.edges.set(e);
        }
        fs::path file = dir / "net-cut.svg";
        write_file(file, export_svg(unfold(shell.spec(), cut)));
        std::cout << "svg " << file.string() << "\n";
        return ok;
    }
    if (config.svg_ranks.empty())
        throw UsageError("export-svg needs --cut or --svg-ranks");
    Enumeration run;
    try {
        run = enumerate(shell, config);
    }
    catch (const BudgetExceeded& error) {
        std::cerr << "budget exceeded: " << error.what() << "\n";
        return budget;
    }
    auto ranked = rank_nets(shell.spec(), run.canonical, config.workers);
    write_svgs(dir, ranked, config.svg_ranks);
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Optimal polyhedral nets: maximum leaf spanning tree cuts, symmetry reduction and ranking"};
    app.require_subcommand(1);
    RunConfig config;

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Every optimal cut and one per symmetry class");
    auto* rank_cmd = app.add_subcommand("rank", "Rank optimal nets by radius of gyration and pick one");
    auto* verify_cmd = app.add_subcommand("verify", "Compare against brute-force oracles");
    auto* estimate_cmd = app.add_subcommand("estimate", "Trend estimates against exact catalog values");
    auto* count_cmd = app.add_subcommand("count", "Spanning tree and automorphism counts");
    auto* svg_cmd = app.add_subcommand("export-svg", "Draw nets as SVG");

    for (auto* command : {enumerate_cmd, rank_cmd, verify_cmd, estimate_cmd, count_cmd, svg_cmd}) {
        add_source_options(command, config);
        add_search_options(command, config);
    }
    for (auto* command : {rank_cmd, svg_cmd})
        command->add_option("--svg-ranks", config.svg_ranks, "Ranks to draw, comma separated")->delimiter(',');
    svg_cmd->add_option("--cut", config.cut_edges, "Cut edge indices, comma separated")->delimiter(',');
    verify_cmd->add_option("--oracle-cap", config.oracle_cap, "Largest spanning-tree count to brute force");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& error) {
        int code = app.exit(error);
        return code == 0 ? ok : usage;
    }

    try {
        if (*enumerate_cmd)
            return cmd_enumerate(config);
        if (*rank_cmd)
            return cmd_rank(config);
        if (*verify_cmd)
            return cmd_verify(config);
        if (*estimate_cmd)
            return cmd_estimate(config);
        if (*count_cmd)
            return cmd_count(config);
        return cmd_export_svg(config);
    }
    catch (const UsageError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return usage;
    }
    catch (const SchemaError& error) {
        std::cerr << "input error: " << error.what() << "\n";
        return usage;
    }
    catch (const StructuralError& error) {
        std::cerr << "structural error: " << error.what() << "\n";
        return usage;
    }
    catch (const DegenerateInput& error) {
        std::cerr << "degenerate input: " << error.what() << "\n";
        return usage;
    }
}
