#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modcluster/graph.hpp"
#include "modcluster/search.hpp"

namespace modcluster {

struct SeedOutcome {
    std::uint64_t seed;
    double modularity;
    int solver_calls;
    int iterations;
    double wall_time_seconds;
};

struct FiveNumberSummary {
    double min;
    double q1;
    double median;
    double q3;
    double max;
};

/// Quartiles by the inclusive linear-interpolation method (quantile position
/// q * (n - 1), interpolated between the surrounding order statistics).
FiveNumberSummary five_number_summary(std::vector<double> values);

/// Multi-seed experiment harness. The same seed list is reused verbatim for
/// every backend so results are directly comparable.
struct ExperimentOptions {
    SearchConfig search;               ///< per-run template; its seed field is overridden
    std::vector<std::uint64_t> seeds;  ///< empty means seed_range(30), i.e. 0..29
    int workers = 0;                   ///< parallel seed runs; 0 = available cores
};

/// Seeds 0..count-1.
std::vector<std::uint64_t> seed_range(int count);

struct ExperimentSummary {
    std::string graph_name;
    std::string backend;
    std::vector<SeedOutcome> per_seed;  ///< ordered as the requested seed list
    FiveNumberSummary modularity_stats;
    FiveNumberSummary solver_call_stats;
};

/// One run_local_search per seed (in parallel up to `workers`, output order
/// fixed by the seed list regardless of completion order).
ExperimentSummary run_experiment(const Graph& g, std::string graph_name,
                                 const ExperimentOptions& opts);

/// run_experiment once per backend with the identical seed list.
std::vector<ExperimentSummary> compare_backends(const Graph& g, std::string graph_name,
                                                const ExperimentOptions& opts,
                                                std::span<const Backend> backends);

/// JSON with keys sorted alphabetically and reals rendered with 12
/// significant digits, so identical runs serialize byte-identically apart
/// from wall-time fields.
std::string to_json(const ExperimentSummary& summary);

/// Combined document for backend comparisons, keyed by backend name.
std::string to_json(std::span<const ExperimentSummary> summaries, std::string_view graph_name);

/// CSV with one row per seed (per backend, for comparisons).
std::string to_csv(std::span<const ExperimentSummary> summaries);

}  // namespace modcluster
