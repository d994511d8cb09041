#include "modcluster/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "modcluster/errors.hpp"

namespace modcluster {

std::vector<std::uint64_t> seed_range(int count) {
    if (count < 1) throw Error("seed count must be at least 1");
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) seeds[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i);
    return seeds;
}

FiveNumberSummary five_number_summary(std::vector<double> values) {
    if (values.empty()) throw Error("cannot summarize an empty sample");
    std::sort(values.begin(), values.end());
    // Inclusive linear interpolation: quantile q sits at position q * (n - 1).
    auto quantile = [&](double q) {
        const double position = q * static_cast<double>(values.size() - 1);
        const auto lower = static_cast<std::size_t>(position);
        if (lower + 1 >= values.size()) return values.back();
        const double fraction = position - static_cast<double>(lower);
        return values[lower] * (1.0 - fraction) + values[lower + 1] * fraction;
    };
    return {quantile(0.0), quantile(0.25), quantile(0.5), quantile(0.75), quantile(1.0)};
}

ExperimentSummary run_experiment(const Graph& g, std::string graph_name,
                                 const ExperimentOptions& opts) {
    const std::vector<std::uint64_t> seeds = opts.seeds.empty() ? seed_range(30) : opts.seeds;

    ExperimentSummary summary;
    summary.graph_name = std::move(graph_name);
    summary.backend = std::string(backend_name(opts.search.backend));
    summary.per_seed.resize(seeds.size());

    unsigned workers = opts.workers > 0 ? static_cast<unsigned>(opts.workers)
                                        : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(seeds.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run_slot = [&](std::size_t i) {
        SearchConfig cfg = opts.search;
        cfg.seed = seeds[i];
        const SearchReport report = run_local_search(g, cfg);
        summary.per_seed[i] = {seeds[i], report.best_modularity, report.solver_calls,
                               report.iterations, report.wall_time_seconds};
    };

    if (workers <= 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i) run_slot(i);
    } else {
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= seeds.size()) return;
                try {
                    run_slot(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<double> modularities;
    std::vector<double> calls;
    modularities.reserve(summary.per_seed.size());
    calls.reserve(summary.per_seed.size());
    for (const auto& outcome : summary.per_seed) {
        modularities.push_back(outcome.modularity);
        calls.push_back(static_cast<double>(outcome.solver_calls));
    }
    summary.modularity_stats = five_number_summary(std::move(modularities));
    summary.solver_call_stats = five_number_summary(std::move(calls));
    return summary;
}

std::vector<ExperimentSummary> compare_backends(const Graph& g, std::string graph_name,
                                                const ExperimentOptions& opts,
                                                std::span<const Backend> backends) {
    if (backends.size() < 2) throw Error("backend comparison needs at least two backends");
    std::vector<ExperimentSummary> summaries;
    summaries.reserve(backends.size());
    for (Backend backend : backends) {
        ExperimentOptions per_backend = opts;
        per_backend.search.backend = backend;
        summaries.push_back(run_experiment(g, graph_name, per_backend));
    }
    return summaries;
}

namespace {

// 12 significant digits, shortest form.
std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

std::string json_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buffer[8];
                    std::snprintf(buffer, sizeof buffer, "\\u%04x", c);
                    out += buffer;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// Keys are emitted in sorted order throughout so output is diffable.

void append_stats(std::string& out, const FiveNumberSummary& stats, std::string_view indent) {
    out += "{\n";
    auto field = [&](std::string_view key, double value, bool last) {
        out += indent;
        out += "  \"";
        out += key;
        out += "\": ";
        out += format_real(value);
        out += last ? "\n" : ",\n";
    };
    field("max", stats.max, false);
    field("median", stats.median, false);
    field("min", stats.min, false);
    field("q1", stats.q1, false);
    field("q3", stats.q3, true);
    out += indent;
    out += "}";
}

void append_per_seed(std::string& out, const std::vector<SeedOutcome>& per_seed,
                     std::string_view indent) {
    out += "[\n";
    for (std::size_t i = 0; i < per_seed.size(); ++i) {
        const auto& o = per_seed[i];
        out += indent;
        out += "  {\"iterations\": " + std::to_string(o.iterations);
        out += ", \"modularity\": " + format_real(o.modularity);
        out += ", \"seed\": " + std::to_string(o.seed);
        out += ", \"solver_calls\": " + std::to_string(o.solver_calls);
        out += ", \"wall_time_seconds\": " + format_real(o.wall_time_seconds);
        out += i + 1 < per_seed.size() ? "},\n" : "}\n";
    }
    out += indent;
    out += "]";
}

void append_summary_body(std::string& out, const ExperimentSummary& summary,
                         std::string_view indent, bool include_graph_name) {
    out += "{\n";
    out += indent;
    out += "  \"backend\": \"" + json_escape(summary.backend) + "\",\n";
    if (include_graph_name) {
        out += indent;
        out += "  \"graph_name\": \"" + json_escape(summary.graph_name) + "\",\n";
    }
    out += indent;
    out += "  \"modularity_stats\": ";
    append_stats(out, summary.modularity_stats, std::string(indent) + "  ");
    out += ",\n";
    out += indent;
    out += "  \"per_seed\": ";
    append_per_seed(out, summary.per_seed, std::string(indent) + "  ");
    out += ",\n";
    out += indent;
    out += "  \"solver_call_stats\": ";
    append_stats(out, summary.solver_call_stats, std::string(indent) + "  ");
    out += "\n";
    out += indent;
    out += "}";
}

}  // namespace

std::string to_json(const ExperimentSummary& summary) {
    std::string out;
    append_summary_body(out, summary, "", true);
    out += "\n";
    return out;
}

std::string to_json(std::span<const ExperimentSummary> summaries, std::string_view graph_name) {
    // Combined document keyed by backend name.
    std::vector<const ExperimentSummary*> ordered;
    ordered.reserve(summaries.size());
    for (const auto& s : summaries) ordered.push_back(&s);
    std::sort(ordered.begin(), ordered.end(),
              [](const ExperimentSummary* a, const ExperimentSummary* b) {
                  return a->backend < b->backend;
              });

    std::string out = "{\n  \"backends\": {\n";
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        out += "    \"" + json_escape(ordered[i]->backend) + "\": ";
        append_summary_body(out, *ordered[i], "    ", false);
        out += i + 1 < ordered.size() ? ",\n" : "\n";
    }
    out += "  },\n";
    out += "  \"graph_name\": \"" + std::string(json_escape(graph_name)) + "\"\n";
    out += "}\n";
    return out;
}

std::string to_csv(std::span<const ExperimentSummary> summaries) {
    std::string out = "graph_name,backend,seed,modularity,solver_calls,iterations,wall_time_seconds\n";
    for (const auto& summary : summaries) {
        for (const auto& o : summary.per_seed) {
            out += summary.graph_name;
            out += ',';
            out += summary.backend;
            out += ',';
            out += std::to_string(o.seed);
            out += ',';
            out += format_real(o.modularity);
            out += ',';
            out += std::to_string(o.solver_calls);
            out += ',';
            out += std::to_string(o.iterations);
            out += ',';
            out += format_real(o.wall_time_seconds);
            out += '\n';
        }
    }
    return out;
}

}  // namespace modcluster
