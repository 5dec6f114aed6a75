#include <indclique/clique_approx.hh>
#include <indclique/clique_exact.hh>
#include <indclique/clique_fpt.hh>
#include <indclique/errors.hh>
#include <indclique/generators.hh>
#include <indclique/io.hh>
#include <indclique/orderings.hh>
#include <indclique/report.hh>
#include <indclique/structure.hh>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

using namespace indclique;

using std::chrono::steady_clock;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_refuted = 1;
    constexpr int exit_input = 2;

    struct Options
    {
        std::string format = "auto";
        bool json = false;
        unsigned workers = 1;
        std::optional<unsigned> oracle_cap;
        std::string input;
        std::string ordering = "degeneracy";
        unsigned k = 0;
        unsigned p = 0;
        unsigned trials = 200;
        std::uint64_t seed = 1;
        bool with_omega = false;
        std::string family;
        GeneratorParams gen_params;
        std::string output;
        std::string ordering_out;
    };

    class Timer
    {
        private:
            RunReport & _report;
            std::string _phase;
            steady_clock::time_point _start = steady_clock::now();

        public:
            Timer(RunReport & report, std::string phase) :
                _report(report),
                _phase(std::move(phase))
            {
            }

            ~Timer()
            {
                _report.timings_ms[_phase] += std::chrono::duration<double, std::milli>(steady_clock::now() - _start).count();
            }
    };

    auto read_input(const std::string & path) -> std::string
    {
        if (path == "-")
            return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return read_text_file(path);
    }

    auto load_graph(const Options & options, RunReport & report) -> Graph
    {
        Timer timer(report, "parse");
        auto text = read_input(options.input);
        auto format = options.format == "auto" ? detect_format(text) : parse_format(options.format);
        auto parsed = parse_graph(text, format);
        for (auto & w : parsed.warnings)
            std::cerr << "warning: " << w << '\n';
        return std::move(parsed.graph);
    }

    auto load_ordering(const Options & options, const Graph & g, RunReport & report) -> VertexOrdering
    {
        Timer timer(report, "ordering");
        report.ordering = options.ordering;
        if (options.ordering == "degeneracy")
            return degeneracy_ordering(g).ordering;
        if (options.ordering == "identity")
            return VertexOrdering::identity(g.size());
        auto sigma = parse_ordering(read_text_file(options.ordering), g.size());
        report.ordering = "file:" + options.ordering;
        return sigma;
    }

    auto join(std::span<const unsigned> ids) -> std::string
    {
        std::string out;
        for (auto v : ids) {
            if (! out.empty())
                out += ' ';
            out += std::to_string(v);
        }
        return out;
    }

    auto print_clique(const CliqueResult & clique) -> void
    {
        std::cout << "clique size " << clique.size() << " (" << to_string(clique.source);
        if (clique.source == CliqueSource::Index)
            std::cout << ' ' << clique.index;
        std::cout << ")\n" << join(clique.vertices) << '\n';
    }

    auto print_bound(const std::string & name, const RatioBound & bound) -> void
    {
        std::cout << name << ": " << bound.formula << " at " << bound.degree << " = ";
        if (bound.applicable)
            std::cout << bound.value << '\n';
        else
            std::cout << "not applicable\n";
    }

    auto witness_line(const IndependenceWitness & w) -> std::string
    {
        return "index " + std::to_string(w.index) + ", independent set " + join(w.vertices);
    }

    auto finish(const Options & options, RunReport & report, int code) -> int
    {
        if (options.json)
            std::cout << report.to_json().dump(2) << '\n';
        return code;
    }

    auto write_text(const std::string & path, const std::string & text) -> void
    {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (! (out << text))
            throw InputError("cannot write '" + path + "'");
    }

    auto cmd_order_degeneracy(const Options & options, RunReport & report) -> int
    {
        auto g = load_graph(options, report);
        DegeneracyResult result = [&] {
            Timer timer(report, "solve");
            return degeneracy_ordering(g);
        }();
        report.ordering = "degeneracy";
        auto order = result.ordering.order();
        report.result = {{"ordering", std::vector<unsigned>(order.begin(), order.end())}, {"degeneracy", result.degeneracy}};
        if (! options.json)
            std::cout << "degeneracy " << result.degeneracy << '\n' << emit_ordering(result.ordering);
        return finish(options, report, exit_ok);
    }

    auto cmd_verify(const Options & options, RunReport & report) -> int
    {
        auto g = load_graph(options, report);
        auto sigma = load_ordering(options, g, report);
        report.k = options.k;
        KIndependenceResult result = [&] {
            Timer timer(report, "solve");
            return verify_k_independence(g, sigma, options.k, options.workers);
        }();
        report.result = {{"holds", result.holds}, {"profile", to_json(result.profile)},
            {"witness", result.witness ? to_json(*result.witness) : nlohmann::json(nullptr)}};
        if (! options.json) {
            if (result.holds)
                std::cout << "pass: inductive " << options.k << "-independent (tight at k = " << result.profile.k_verified << ")\n";
            else
                std::cout << "fail: " << witness_line(*result.witness) << '\n';
        }
        return finish(options, report, result.holds ? exit_ok : exit_refuted);
    }

    auto cmd_clique(const Options & options, RunReport & report, const std::string & mode) -> int
    {
        auto g = load_graph(options, report);
        unsigned cap = options.oracle_cap.value_or(default_clique_cap);

        if (mode == "exact" || mode == "degenerate" || mode == "ordered") {
            std::optional<VertexOrdering> sigma;
            if (mode == "ordered")
                sigma = load_ordering(options, g, report);
            CliqueResult clique = [&] {
                Timer timer(report, "solve");
                if (mode == "exact")
                    return max_clique_bruteforce(g, cap);
                if (mode == "degenerate")
                    return max_clique_degenerate(g, options.workers);
                return max_clique_ordered(g, *sigma, bruteforce_subsolver(cap), options.workers);
            }();
            report.result = to_json(clique);
            if (! options.json)
                print_clique(clique);
            return finish(options, report, exit_ok);
        }

        auto sigma = load_ordering(options, g, report);
        report.k = options.k;

        if (mode == "fpt") {
            try {
                std::optional<CliqueResult> found = [&] {
                    Timer timer(report, "solve");
                    return clique_fpt(g, sigma, options.k, options.p);
                }();
                report.result = {{"p", options.p}, {"found", found.has_value()},
                    {"clique", found ? to_json(*found) : nlohmann::json(nullptr)}};
                if (! options.json) {
                    if (found) {
                        std::cout << "yes: ";
                        print_clique(*found);
                    }
                    else
                        std::cout << "no clique of size " << options.p << '\n';
                }
                return finish(options, report, found ? exit_ok : exit_refuted);
            }
            catch (const IndependenceViolation & e) {
                report.result = {{"p", options.p}, {"found", nullptr}, {"violation", to_json(e.witness)}};
                if (! options.json)
                    std::cout << "ordering refuted: " << witness_line(e.witness) << '\n';
                return finish(options, report, exit_refuted);
            }
        }

        std::optional<unsigned> omega;
        if (options.with_omega) {
            Timer timer(report, "oracle");
            omega = max_clique_bruteforce(g, cap).size();
        }
        ApproxReport approx = [&] {
            Timer timer(report, "solve");
            return clique_approx(g, sigma, options.k, mis_approx_kfree, omega, options.workers);
        }();
        report.result = to_json(approx);
        if (! options.json) {
            print_clique(approx.clique);
            print_bound("bound", approx.bound);
            print_bound("coarse bound", approx.coarse_bound);
            if (approx.triangle_free_bound)
                print_bound("triangle-free bound", *approx.triangle_free_bound);
            if (approx.beta)
                std::cout << "omega " << *omega << ", ratio " << *approx.beta << '\n';
        }
        return finish(options, report, exit_ok);
    }

    auto run_check(const Options & options, RunReport & report, const std::string & what, const Graph & g,
            const VertexOrdering & sigma) -> int
    {
        Timer timer(report, "solve");

        if (what == "lemma1") {
            auto result = check_unique_containers(g, sigma, options.oracle_cap.value_or(default_enumeration_cap));
            report.result = {{"cliques_checked", result.cliques_checked}, {"violations", result.violations},
                {"partial", result.partial}};
            if (! options.json)
                std::cout << result.cliques_checked << " maximal cliques, " << result.violations << " without a unique container"
                    << (result.partial ? " (enumeration stopped early)" : "") << '\n';
            return result.violations ? exit_refuted : exit_ok;
        }

        try {
            if (what == "heredity") {
                report.k = options.k;
                report.seed = options.seed;
                auto result = check_heredity(g, sigma, options.k, options.trials, options.seed);
                report.result = {{"trials", result.trials}, {"violations", result.violations},
                    {"counterexample", result.counterexample ? nlohmann::json(*result.counterexample) : nlohmann::json(nullptr)}};
                if (! options.json) {
                    std::cout << result.trials << " induced subgraphs, " << result.violations << " violations\n";
                    if (result.counterexample)
                        std::cout << "counterexample " << join(*result.counterexample) << '\n';
                }
                return result.violations ? exit_refuted : exit_ok;
            }

            report.k = 2;
            auto result = check_2independent_structure(g, sigma,
                    options.oracle_cap.value_or(default_hamiltonian_cap), options.workers);
            report.result = to_json(result);
            if (! options.json) {
                for (auto & v : result.verdicts) {
                    std::cout << "G_" << v.index << "^+: ";
                    std::cout << (v.hamiltonian == Hamiltonicity::Yes ? "hamiltonian"
                            : v.hamiltonian == Hamiltonicity::No ? "not hamiltonian" : "hamiltonicity skipped");
                    if (v.cover)
                        std::cout << ", cover {" << join(v.cover->first) << "} {" << join(v.cover->second) << "}";
                    std::cout << (v.inconclusive ? ", inconclusive" : v.passes ? ", ok" : ", FAILS") << '\n';
                }
                std::cout << (result.overall ? "holds" : "refuted") << ", " << result.inconclusive_count << " inconclusive\n";
            }
            return result.overall ? exit_ok : exit_refuted;
        }
        catch (const IndependenceViolation & e) {
            report.result = {{"violation", to_json(e.witness)}};
            if (! options.json)
                std::cout << "ordering refuted: " << witness_line(e.witness) << '\n';
            return exit_refuted;
        }
    }

    auto cmd_check(const Options & options, RunReport & report, const std::string & what) -> int
    {
        auto g = load_graph(options, report);
        auto sigma = load_ordering(options, g, report);
        auto code = run_check(options, report, what, g, sigma);
        return finish(options, report, code);
    }

    auto cmd_gen(const Options & options) -> int
    {
        auto family = parse_family(options.family);
        auto generated = generate(family, options.gen_params, options.seed);
        auto format = options.format == "auto" ? GraphFormat::Dimacs : parse_format(options.format);
        write_text(options.output, emit_graph(generated.graph, format));
        if (! options.ordering_out.empty()) {
            auto sigma = generated.ordering ? *generated.ordering : degeneracy_ordering(generated.graph).ordering;
            write_text(options.ordering_out, emit_ordering(sigma));
        }
        return exit_ok;
    }

    auto cmd_bench(const Options & options) -> int
    {
        nlohmann::json suite;
        try {
            suite = nlohmann::json::parse(read_input(options.input));
        }
        catch (const nlohmann::json::parse_error & e) {
            throw InputError(std::string("bench suite is not valid JSON: ") + e.what());
        }
        auto result = run_bench(parse_bench_suite(suite), options.workers);
        write_text(options.output, bench_csv(result));
        return exit_ok;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Maximum clique and structure checks on inductive k-independent graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Options options;
    app.add_option("--format", options.format, "Graph file format")
        ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}))->capture_default_str();
    app.add_flag("--json", options.json, "Print a JSON report instead of text");
    app.add_option("--workers", options.workers, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    app.add_option("--oracle-cap", options.oracle_cap, "Vertex cap for exponential oracles");

    std::function<int()> action;
    RunReport report;

    auto add_input = [&] (CLI::App * cmd) {
        cmd->add_option("file", options.input, "Graph file, or - for stdin")->required();
    };
    auto add_ordering = [&] (CLI::App * cmd) {
        cmd->add_option("--ordering", options.ordering, "degeneracy, identity, or a file of vertex ids")->capture_default_str();
    };
    auto add_k = [&] (CLI::App * cmd, bool required) {
        auto opt = cmd->add_option("--k", options.k, "Independence parameter");
        if (required)
            opt->required();
    };

    auto order = app.add_subcommand("order", "Compute a vertex ordering")->require_subcommand(1);
    auto order_degeneracy = order->add_subcommand("degeneracy", "Degeneracy ordering and degeneracy");
    add_input(order_degeneracy);
    order_degeneracy->callback([&] { report.command = "order degeneracy";
            action = [&] { return cmd_order_degeneracy(options, report); }; });

    auto verify = app.add_subcommand("verify", "Verify an inductive k-independence ordering");
    add_k(verify, true);
    add_ordering(verify);
    add_input(verify);
    verify->callback([&] { report.command = "verify"; action = [&] { return cmd_verify(options, report); }; });

    auto clique = app.add_subcommand("clique", "Maximum clique")->require_subcommand(1);
    for (std::string mode : {"exact", "degenerate", "ordered", "fpt", "approx"}) {
        auto cmd = clique->add_subcommand(mode);
        add_input(cmd);
        if (mode == "ordered" || mode == "fpt" || mode == "approx")
            add_ordering(cmd);
        if (mode == "fpt") {
            add_k(cmd, true);
            cmd->add_option("--p", options.p, "Clique size to decide")->required();
        }
        if (mode == "approx") {
            add_k(cmd, true);
            cmd->add_flag("--with-omega", options.with_omega, "Also compute the exact clique number and the ratio");
        }
        cmd->callback([&, mode] { report.command = "clique " + mode;
                action = [&, mode] { return cmd_clique(options, report, mode); }; });
    }
    clique->description("Maximum clique: exact (brute force), degenerate, ordered, fpt (decide a p-clique), approx");

    auto check = app.add_subcommand("check", "Structural checks against an ordering")->require_subcommand(1);
    const std::pair<std::string, std::string> checks[] = {
        {"lemma1", "Every maximal clique lies in exactly one closed forward neighborhood"},
        {"heredity", "Restrictions to random induced subgraphs stay k-independent"},
        {"prop2indep", "Closed forward neighborhoods of a 2-independence ordering are Hamiltonian or two cliques"},
    };
    for (auto & [what, help] : checks) {
        auto cmd = check->add_subcommand(what, help);
        add_input(cmd);
        add_ordering(cmd);
        if (what == "heredity") {
            add_k(cmd, true);
            cmd->add_option("--trials", options.trials, "Random induced subgraphs")->capture_default_str();
            cmd->add_option("--seed", options.seed, "Random seed")->capture_default_str();
        }
        cmd->callback([&, what] { report.command = "check " + what;
                action = [&, what] { return cmd_check(options, report, what); }; });
    }

    auto gen = app.add_subcommand("gen", "Generate a graph");
    gen->add_option("family", options.family, "gnp, ktree, partial_ktree, chordal, linegraph_of_gnp, cycle, complete, petersen, star")
        ->required();
    gen->add_option("--n", options.gen_params.n, "Vertices")->capture_default_str();
    gen->add_option("--p", options.gen_params.p, "Edge probability")->capture_default_str();
    gen->add_option("--k", options.gen_params.k, "Tree width or attachment size")->capture_default_str();
    gen->add_option("--seed", options.seed, "Random seed")->capture_default_str();
    gen->add_option("-o,--output", options.output, "Graph output file (default stdout)");
    gen->add_option("--ordering-out", options.ordering_out, "Also write the construction (or degeneracy) ordering");
    gen->callback([&] { action = [&] { return cmd_gen(options); }; });

    auto bench = app.add_subcommand("bench", "Run a benchmark suite and print CSV");
    bench->add_option("suite", options.input, "Suite JSON file")->required();
    bench->add_option("-o,--output", options.output, "CSV output file (default stdout)");
    bench->callback([&] { action = [&] { return cmd_bench(options); }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::Success & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_input;
    }

    report.input = options.input;
    try {
        return action();
    }
    catch (const OracleCapExceeded & e) {
        std::cerr << "error: " << e.what() << " (raise it with --oracle-cap)\n";
        return exit_input;
    }
    catch (const InputError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const IndependenceViolation & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_refuted;
    }
}
