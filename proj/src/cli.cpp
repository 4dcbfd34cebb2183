#include "starprism/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "starprism/errors.hpp"
#include "starprism/io.hpp"
#include "starprism/plot.hpp"
#include "starprism/sweep.hpp"

namespace starprism::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw UsageError("cannot write file '" + output_path + "'");
    }
    out << payload;
}

IntRange parse_range(const std::string& text, const std::string& flag) {
    const auto bad = [&]() {
        return UsageError("flag " + flag + " expects an integer or a..b, got '" + text + "'");
    };
    try {
        const size_t dots = text.find("..");
        size_t pos = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(text, &pos);
            if (pos != text.size()) throw bad();
            return IntRange{v, v};
        }
        const std::string lo = text.substr(0, dots);
        const std::string hi = text.substr(dots + 2);
        const int a = std::stoi(lo, &pos);
        if (pos != lo.size()) throw bad();
        const int b = std::stoi(hi, &pos);
        if (pos != hi.size()) throw bad();
        return IntRange{a, b};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

std::chrono::milliseconds seconds_to_budget(double seconds) {
    if (seconds < 0 || !std::isfinite(seconds)) {
        throw UsageError("flag --budget must be a non-negative number of seconds");
    }
    return std::chrono::milliseconds(std::llround(seconds * 1000.0));
}

struct Args {
    int n = 0;
    int m = 0;
    std::string n_range;
    std::string m_range;
    std::string method = "best";
    std::string variant = "antipodal";
    std::string format = "dot";
    std::string input;
    std::string output;
    std::vector<unsigned> seeds{0, 1, 2, 3};
    double budget_seconds = 60.0;
    int jobs = 1;
    int exact_cap = 15;
    bool timing = false;
};

int do_build(const Args& a, bool n_set, bool m_set) {
    Graph g = [&] {
        if (n_set && m_set) return Graph::star_cycle_product(a.n, a.m);
        if (n_set) return Graph::star(a.n);
        if (m_set) return Graph::cycle(a.m);
        throw UsageError("build needs --n (star), --m (cycle), or both (product)");
    }();
    if (a.format == "dot") {
        emit(to_dot(g), a.output);
    } else if (a.format == "json") {
        emit(graph_to_json(g), a.output);
    } else {
        throw UsageError("flag --format must be dot or json, got '" + a.format + "'");
    }
    return 0;
}

int do_label(const Args& a) {
    const Graph g = Graph::star_cycle_product(a.n, a.m);
    const DistanceMatrix dm = all_pairs_distances(g);
    const FormulaResult formula = closed_form_rn(a.n, a.m);
    const RadioLabeling literal = paper_literal_labeling(a.n, a.m);
    const int literal_violations = static_cast<int>(verify(dm, literal).size());

    ConstructionReport report;
    if (a.method == "paper") {
        report = ConstructionReport{literal, formula.value, literal.span, literal_violations,
                                    ConstructionMethod::paper_literal, 0};
    } else if (a.method == "heuristic") {
        const OrderingVariant variant = ordering_variant_from_string(a.variant);
        if (a.seeds.empty()) {
            throw UsageError("flag --seeds must list at least one seed");
        }
        RadioLabeling best;
        unsigned best_seed = 0;
        for (unsigned seed : a.seeds) {
            RadioLabeling phi = greedy_from_ordering(dm, heuristic_ordering(a.n, a.m, variant, seed));
            if (best.labels.empty() || phi.span < best.span) {
                best = std::move(phi);
                best_seed = seed;
            }
        }
        const auto method = variant == OrderingVariant::antipodal
                                ? ConstructionMethod::antipodal
                                : (variant == OrderingVariant::critical_path
                                       ? ConstructionMethod::critical_path
                                       : ConstructionMethod::identity);
        report = ConstructionReport{std::move(best), formula.value, 0, literal_violations,
                                    method, best_seed};
        report.achieved_span = report.labeling.span;
    } else if (a.method == "best") {
        report = construct_best(a.n, a.m, a.seeds);
    } else {
        throw UsageError("flag --method must be paper, heuristic, or best, got '" + a.method +
                         "'");
    }
    emit(report_to_json(g, dm.diameter(), report), a.output);
    return 0;
}

int do_verify(const Args& a) {
    const ParsedLabeling parsed = labeling_from_json(slurp(a.input));
    const Graph g = Graph::star_cycle_product(parsed.n, parsed.m);
    const DistanceMatrix dm = all_pairs_distances(g);
    const std::vector<Violation> violations = verify(dm, parsed.labeling);
    emit(violations_csv(g, violations), a.output);
    if (violations.empty()) {
        std::cerr << "valid radio labeling (span " << parsed.labeling.span << ", diameter "
                  << dm.diameter() << ")\n";
        return 0;
    }
    std::cerr << "invalid: " << violations.size() << " violation"
              << (violations.size() == 1 ? "" : "s") << " (span " << parsed.labeling.span
              << ", diameter " << dm.diameter() << ")\n";
    return 1;
}

int do_exact(const Args& a, bool n_set, bool m_set) {
    Graph g = [&] {
        if (!a.input.empty()) {
            if (n_set || m_set) {
                throw UsageError("exact takes either --input or --n/--m, not both");
            }
            return graph_from_json(slurp(a.input));
        }
        if (n_set && m_set) return Graph::star_cycle_product(a.n, a.m);
        throw UsageError("exact needs --n and --m, or --input GRAPH.json");
    }();
    const unsigned seed = a.seeds.empty() ? 0 : a.seeds.front();
    const ExactResult result = exact_rn(g, seconds_to_budget(a.budget_seconds), seed);
    const int diameter = all_pairs_distances(g).diameter();
    emit(exact_to_json(g, diameter, result), a.output);
    std::cerr << (result.status == ExactStatus::proven ? "proven optimum " : "upper bound ")
              << result.optimum << " after " << result.nodes_explored << " nodes in "
              << result.elapsed.count() << " ms\n";
    return result.status == ExactStatus::proven ? 0 : 3;
}

int do_sweep(const Args& a) {
    SweepOptions options;
    options.jobs = a.jobs;
    options.exact_vertex_cap = a.exact_cap;
    options.budget = seconds_to_budget(a.budget_seconds);
    options.seeds = a.seeds;
    const std::vector<SweepRecord> records =
        run_sweep(parse_range(a.n_range, "--n"), parse_range(a.m_range, "--m"), options);
    emit(sweep_csv(records, a.timing), a.output);
    return 0;
}

int do_plot(const Args& a) {
    const std::vector<SweepRecord> records = parse_sweep_csv(slurp(a.input));
    if (a.output.empty()) {
        throw UsageError("plot needs --output CHART.svg (the series CSV lands next to it)");
    }
    emit(plot_svg(records), a.output);
    std::string tidy_path = a.output;
    if (tidy_path.size() > 4 && tidy_path.substr(tidy_path.size() - 4) == ".svg") {
        tidy_path = tidy_path.substr(0, tidy_path.size() - 4) + ".csv";
    } else {
        tidy_path += ".csv";
    }
    emit(plot_tidy_csv(records), tidy_path);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"radio labelings of star-cycle strong products"};
    app.require_subcommand(1);

    Args a;

    CLI::App* build = app.add_subcommand("build", "construct a graph and export it");
    CLI::Option* build_n = build->add_option("--n", a.n, "star order");
    CLI::Option* build_m = build->add_option("--m", a.m, "cycle length");
    build->add_option("--format", a.format, "dot or json")->capture_default_str();
    build->add_option("--output", a.output, "output path (stdout otherwise)");

    CLI::App* label = app.add_subcommand("label", "construct a labeling and report it");
    label->add_option("--n", a.n, "star order")->required();
    label->add_option("--m", a.m, "cycle length")->required();
    label->add_option("--method", a.method, "paper, heuristic, or best")->capture_default_str();
    label->add_option("--variant", a.variant, "ordering for --method heuristic")
        ->capture_default_str();
    label->add_option("--seeds", a.seeds, "seeds for the ordering tournament")
        ->delimiter(',')
        ->capture_default_str();
    label->add_option("--output", a.output, "output path (stdout otherwise)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a labeling file");
    verify_cmd->add_option("--input", a.input, "labeling JSON")->required();
    verify_cmd->add_option("--output", a.output, "violations CSV path (stdout otherwise)");

    CLI::App* exact = app.add_subcommand("exact", "prove the optimum by branch and bound");
    CLI::Option* exact_n = exact->add_option("--n", a.n, "star order");
    CLI::Option* exact_m = exact->add_option("--m", a.m, "cycle length");
    exact->add_option("--input", a.input, "graph JSON instead of --n/--m");
    exact->add_option("--budget", a.budget_seconds, "seconds before giving up")
        ->capture_default_str();
    exact->add_option("--seeds", a.seeds, "incumbent heuristic seed (first is used)")
        ->delimiter(',');
    exact->add_option("--output", a.output, "output path (stdout otherwise)");

    CLI::App* sweep = app.add_subcommand("sweep", "batch-evaluate an (n, m) grid");
    sweep->add_option("--n", a.n_range, "n or a..b")->required();
    sweep->add_option("--m", a.m_range, "m or a..b")->required();
    sweep->add_option("--jobs", a.jobs, "worker threads")->capture_default_str();
    sweep->add_option("--budget", a.budget_seconds, "seconds per exact solve")
        ->capture_default_str();
    sweep->add_option("--exact-cap", a.exact_cap, "solve exactly up to this many vertices")
        ->capture_default_str();
    sweep->add_option("--seeds", a.seeds, "seeds for the ordering tournament")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_flag("--timing", a.timing,
                    "record wall time in the CSV (breaks byte-for-byte reproducibility)");
    sweep->add_option("--output", a.output, "CSV path (stdout otherwise)");

    CLI::App* plot = app.add_subcommand("plot", "chart a sweep CSV");
    plot->add_option("--input", a.input, "sweep CSV")->required();
    plot->add_option("--output", a.output, "SVG path; series CSV lands next to it");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("starprism");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (build->parsed()) return do_build(a, build_n->count() > 0, build_m->count() > 0);
        if (label->parsed()) return do_label(a);
        if (verify_cmd->parsed()) return do_verify(a);
        if (exact->parsed()) return do_exact(a, exact_n->count() > 0, exact_m->count() > 0);
        if (sweep->parsed()) return do_sweep(a);
        if (plot->parsed()) return do_plot(a);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace starprism::cli
