#include <indclique/report.hh>
#include <indclique/errors.hh>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace indclique
{
    using nlohmann::json;

    auto fixed_ms(double ms) -> double
    {
        return std::round(ms * 1000.0) / 1000.0;
    }

    auto to_json(const CliqueResult & clique) -> json
    {
        return json{
            {"vertices", clique.vertices},
            {"size", clique.size()},
            {"source", to_string(clique.source)},
            {"index", clique.source == CliqueSource::Index ? json(clique.index) : json(nullptr)}
        };
    }

    auto to_json(const RatioBound & bound) -> json
    {
        return json{
            {"formula", bound.formula},
            {"degree", bound.degree},
            {"applicable", bound.applicable},
            {"value", bound.applicable ? json(bound.value) : json(nullptr)}
        };
    }

    auto to_json(const ApproxReport & report) -> json
    {
        return json{
            {"clique", to_json(report.clique)},
            {"bound", to_json(report.bound)},
            {"coarse_bound", to_json(report.coarse_bound)},
            {"triangle_free_bound", report.triangle_free_bound ? to_json(*report.triangle_free_bound) : json(nullptr)},
            {"per_index_sizes", report.per_index_sizes},
            {"delta_bar_sigma", report.delta_bar_sigma},
            {"complement_max_degree", report.complement_max_degree},
            {"beta", report.beta ? json(*report.beta) : json(nullptr)}
        };
    }

    auto to_json(const StructureReport & report) -> json
    {
        auto verdicts = json::array();
        for (auto & v : report.verdicts) {
            const char * ham = v.hamiltonian == Hamiltonicity::Yes ? "yes" : v.hamiltonian == Hamiltonicity::No ? "no" : "skipped";
            verdicts.push_back(json{
                {"index", v.index},
                {"hamiltonian", ham},
                {"two_clique_cover", v.cover ? json::array({v.cover->first, v.cover->second}) : json(nullptr)},
                {"passes", v.passes},
                {"inconclusive", v.inconclusive}
            });
        }
        return json{{"verdicts", verdicts}, {"overall", report.overall}, {"inconclusive_count", report.inconclusive_count}};
    }

    auto to_json(const OrderingProfile & profile) -> json
    {
        return json{
            {"k_verified", profile.k_verified},
            {"delta_sigma", profile.delta_sigma},
            {"delta_bar_sigma", profile.delta_bar_sigma},
            {"degeneracy_bound", profile.degeneracy_bound}
        };
    }

    auto to_json(const IndependenceWitness & witness) -> json
    {
        return json{{"index", witness.index}, {"vertices", witness.vertices}};
    }

    auto RunReport::to_json() const -> json
    {
        json timings = json::object();
        for (auto & [phase, ms] : timings_ms)
            timings[phase] = fixed_ms(ms);
        return json{
            {"command", command},
            {"input", input},
            {"seed", seed ? json(*seed) : json(nullptr)},
            {"ordering", ordering ? json(*ordering) : json(nullptr)},
            {"k", k ? json(*k) : json(nullptr)},
            {"result", result},
            {"timings_ms", timings}
        };
    }

    auto parse_bench_suite(const json & suite) -> std::vector<BenchEntry>
    {
        std::vector<BenchEntry> entries;
        try {
            if (! suite.is_object() || ! suite.contains("entries") || ! suite["entries"].is_array())
                throw InputError("bench suite needs an \"entries\" array");
            for (auto & item : suite["entries"]) {
                BenchEntry entry;
                entry.family = parse_family(item.at("family").get<std::string>());
                entry.sizes = item.at("sizes").get<std::vector<unsigned>>();
                entry.k = item.value("k", entry.k);
                entry.p = item.value("p", entry.p);
                entry.repetitions = std::max(1u, item.value("repetitions", entry.repetitions));
                entry.seed = item.value("seed", entry.seed);
                if (item.contains("algorithms"))
                    entry.algorithms = item["algorithms"].get<std::vector<std::string>>();
                for (auto & a : entry.algorithms)
                    if (a != "degenerate" && a != "ordered" && a != "approx")
                        throw InputError("unknown bench algorithm '" + a + "'");
                entries.push_back(std::move(entry));
            }
        }
        catch (const json::exception & e) {
            throw InputError(std::string("malformed bench suite: ") + e.what());
        }
        return entries;
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto elapsed_ms(Clock::time_point since) -> double
        {
            return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
        }

        auto solve(const std::string & algorithm, const Graph & g, unsigned workers) -> unsigned
        {
            if (algorithm == "degenerate")
                return max_clique_degenerate(g, workers).size();
            auto [ordering, d] = degeneracy_ordering(g);
            if (algorithm == "ordered")
                return max_clique_ordered(g, ordering, bruteforce_subsolver(std::max(d + 1, default_clique_cap)), workers).size();
            return clique_approx(g, ordering, d, mis_approx_kfree, std::nullopt, workers).clique.size();
        }
    }

    auto run_bench(const std::vector<BenchEntry> & suite, unsigned workers) -> BenchResult
    {
        BenchResult result;
        for (auto & entry : suite) {
            std::map<std::string, std::vector<std::pair<unsigned, double>>> times;
            for (auto n : entry.sizes) {
                auto start = Clock::now();
                auto generated = generate(entry.family, GeneratorParams{n, entry.p, entry.k}, entry.seed);
                double generate_ms = elapsed_ms(start);
                auto & g = generated.graph;

                for (auto & algorithm : entry.algorithms) {
                    std::vector<double> runs;
                    unsigned size = 0;
                    for (unsigned r = 0 ; r < entry.repetitions ; ++r) {
                        auto t = Clock::now();
                        size = solve(algorithm, g, workers);
                        runs.push_back(elapsed_ms(t));
                    }
                    std::sort(runs.begin(), runs.end());
                    double median = runs[runs.size() / 2];
                    result.rows.push_back(BenchRow{family_name(entry.family), g.size(), g.edge_count(), entry.k, algorithm,
                            size, generate_ms, median});
                    times[algorithm].emplace_back(n, median);
                }
            }
            for (auto & [algorithm, series] : times)
                for (std::size_t j = 1 ; j < series.size() ; ++j)
                    if (series[j].first == 2 * series[j - 1].first && series[j - 1].second > 0)
                        result.linearity.push_back(LinearityPoint{family_name(entry.family), algorithm, series[j - 1].first,
                                series[j].first, series[j].second / series[j - 1].second});
        }
        return result;
    }

    auto bench_csv(const BenchResult & result) -> std::string
    {
        std::ostringstream out;
        out << "family,n,m,k,algorithm,clique_size,generate_ms,solve_ms\n";
        out << std::fixed << std::setprecision(3);
        for (auto & row : result.rows)
            out << row.family << ',' << row.n << ',' << row.m << ',' << row.k << ',' << row.algorithm << ','
                << row.clique_size << ',' << row.generate_ms << ',' << row.solve_ms << '\n';
        for (auto & point : result.linearity)
            out << "# linearity family=" << point.family << " algorithm=" << point.algorithm << " n=" << point.n_from
                << "->" << point.n_to << " ratio=" << point.ratio << '\n';
        return out.str();
    }
}
