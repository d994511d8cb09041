#include "modcluster/solvers.hpp"

#include "modcluster/errors.hpp"

namespace modcluster {

std::string_view backend_name(Backend backend) {
    switch (backend) {
        case Backend::Exact: return "exact";
        case Backend::Anneal: return "anneal";
        case Backend::Qaoa: return "qaoa";
    }
    return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) {
    if (name == "exact") return Backend::Exact;
    if (name == "anneal") return Backend::Anneal;
    if (name == "qaoa") return Backend::Qaoa;
    return std::nullopt;
}

SolverResult solve(const IsingSubproblem& sp, Backend backend, const SolverConfig& config,
                   std::uint64_t rng_seed) {
    switch (backend) {
        case Backend::Exact: return solve_exact(sp);
        case Backend::Anneal: return solve_anneal(sp, config.anneal, rng_seed);
        case Backend::Qaoa: return solve_qaoa(sp, config.qaoa, rng_seed);
    }
    throw Error("unknown backend");
}

}  // namespace modcluster
