#ifndef INDCLIQUE_REPORT_HH
#define INDCLIQUE_REPORT_HH

#include <indclique/clique_approx.hh>
#include <indclique/clique_exact.hh>
#include <indclique/generators.hh>
#include <indclique/orderings.hh>
#include <indclique/structure.hh>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace indclique
{
    /// Milliseconds rounded to three decimals.
    auto fixed_ms(double ms) -> double;

    auto to_json(const CliqueResult & clique) -> nlohmann::json;
    auto to_json(const RatioBound & bound) -> nlohmann::json;
    auto to_json(const ApproxReport & report) -> nlohmann::json;
    auto to_json(const StructureReport & report) -> nlohmann::json;
    auto to_json(const OrderingProfile & profile) -> nlohmann::json;
    auto to_json(const IndependenceWitness & witness) -> nlohmann::json;

    /// One command's machine-readable record. The top-level keys are always
    /// command, input, seed, ordering, k, result, timings_ms; absent values are null.
    struct RunReport
    {
        std::string command;
        std::string input;
        std::optional<std::uint64_t> seed;
        std::optional<std::string> ordering;
        std::optional<unsigned> k;
        nlohmann::json result = nlohmann::json::object();
        /// Phase name to wall time in milliseconds.
        std::map<std::string, double> timings_ms;

        auto to_json() const -> nlohmann::json;
    };

    struct BenchEntry
    {
        Family family = Family::KTree;
        std::vector<unsigned> sizes;
        unsigned k = 2;
        double p = 0.5;
        unsigned repetitions = 1;
        std::uint64_t seed = 1;
        /// Any of "degenerate", "ordered", "approx".
        std::vector<std::string> algorithms{"degenerate"};
    };

    /// {"entries": [{"family", "sizes", "k", "p", "repetitions", "seed", "algorithms"}, ...]}
    /// with everything but family and sizes optional. Throws InputError on a
    /// malformed suite.
    auto parse_bench_suite(const nlohmann::json & suite) -> std::vector<BenchEntry>;

    struct BenchRow
    {
        std::string family;
        unsigned n = 0;
        std::size_t m = 0;
        unsigned k = 0;
        std::string algorithm;
        unsigned clique_size = 0;
        double generate_ms = 0;
        /// Median over repetitions.
        double solve_ms = 0;
    };

    struct LinearityPoint
    {
        std::string family;
        std::string algorithm;
        unsigned n_from = 0, n_to = 0;
        double ratio = 0;
    };

    struct BenchResult
    {
        std::vector<BenchRow> rows;
        /// Solve-time ratios between consecutive sizes of an entry where the size doubles.
        std::vector<LinearityPoint> linearity;
    };

    auto run_bench(const std::vector<BenchEntry> & suite, unsigned workers = 1) -> BenchResult;

    /// Header, one line per row, then one "# linearity ..." comment per point.
    auto bench_csv(const BenchResult & result) -> std::string;
}

#endif
