#include <doctest.h>

#include <cmath>
#include <complex>

#include "modcluster/errors.hpp"
#include "modcluster/solvers.hpp"
#include "modcluster/statevector.hpp"
#include "support/oracles.hpp"
#include "support/random_instances.hpp"

using namespace modcluster;
using testsupport::random_subproblem;

namespace {

IsingSubproblem single_field_instance() {
    IsingSubproblem sp;
    sp.subset = {0};
    sp.fields = {1.0};
    sp.edge_count_m = 1;
    return sp;
}

}  // namespace

TEST_CASE("uniform_plus is normalized with equal amplitudes") {
    const auto sv = Statevector::uniform_plus(5);
    CHECK(sv.dimension() == 32);
    CHECK(sv.norm() == doctest::Approx(1.0).epsilon(1e-12));
    const double expected = 1.0 / std::sqrt(32.0);
    for (const auto& amp : sv.amplitudes()) {
        CHECK(amp.real() == doctest::Approx(expected).epsilon(1e-12));
        CHECK(amp.imag() == 0.0);
    }
}

TEST_CASE("mixer at beta = pi/2 maps |0...0> to (-i)^k |1...1>") {
    const int k = 3;
    Statevector sv(k);
    sv.apply_mixer(std::acos(-1.0) / 2.0);
    const auto amps = sv.amplitudes();
    // (-i)^3 = i
    CHECK(std::abs(amps[7] - std::complex<double>(0.0, 1.0)) < 1e-12);
    for (std::size_t z = 0; z < 7; ++z) CHECK(std::abs(amps[z]) < 1e-12);
}

TEST_CASE("cost phase multiplies each amplitude by the expected phase") {
    const auto sp = single_field_instance();
    const auto cost = basis_cost_table(sp);
    REQUIRE(cost.size() == 2);
    CHECK(cost[0] == 1.0);   // bit 0 -> spin +1
    CHECK(cost[1] == -1.0);  // bit 1 -> spin -1

    auto sv = Statevector::uniform_plus(1);
    const double gamma = 0.37;
    sv.apply_cost_phase(cost, gamma);
    const auto amps = sv.amplitudes();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(amps[0] - inv_sqrt2 * std::polar(1.0, -gamma)) < 1e-12);
    CHECK(std::abs(amps[1] - inv_sqrt2 * std::polar(1.0, gamma)) < 1e-12);
}

TEST_CASE("norm is preserved through every layer") {
    const auto sp = random_subproblem(20, 8, 5);
    const auto cost = basis_cost_table(sp);
    auto sv = Statevector::uniform_plus(8);
    for (int layer = 0; layer < 4; ++layer) {
        sv.apply_cost_phase(cost, 0.3 + 0.2 * layer);
        CHECK(std::abs(sv.norm() - 1.0) <= 1e-10);
        sv.apply_mixer(0.7 - 0.1 * layer);
        CHECK(std::abs(sv.norm() - 1.0) <= 1e-10);
    }
}

TEST_CASE("basis cost table matches direct objective evaluation") {
    const auto sp = random_subproblem(18, 6, 21);
    const auto cost = basis_cost_table(sp);
    REQUIRE(cost.size() == 64);
    for (std::size_t z = 0; z < 64; ++z) {
        std::vector<int> spins(6);
        for (int a = 0; a < 6; ++a) spins[static_cast<std::size_t>(a)] = (z >> a) & 1u ? -1 : +1;
        CHECK(cost[z] == doctest::Approx(testsupport::naive_objective(sp, spins)).epsilon(1e-10));
    }
}

TEST_CASE("zero angles leave the uniform state with zero expectation") {
    const auto sp = random_subproblem(16, 7, 2);
    const auto cost = basis_cost_table(sp);
    auto sv = Statevector::uniform_plus(7);
    sv.apply_cost_phase(cost, 0.0);
    sv.apply_mixer(0.0);
    CHECK(std::abs(sv.expectation(cost)) <= 1e-9);
}

TEST_CASE("single qubit with unit field reaches expectation 1") {
    // closed form <z> = sin(2 beta) sin(2 gamma) peaks at 1, on the grid
    const auto sp = single_field_instance();
    QaoaConfig cfg;
    cfg.depth = 1;
    const auto result = solve_qaoa(sp, cfg, 11);
    CHECK(result.diagnostics.at("expectation") == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(result.spins == std::vector<int>{+1});
    CHECK(result.objective == 1.0);
    CHECK(result.solver_kind == Backend::Qaoa);
}

TEST_CASE("expectation never beats the exact optimum") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto sp = random_subproblem(16, 6, seed + 60);
        const auto exact = solve_exact(sp);
        QaoaConfig cfg;
        cfg.depth = 2;
        const auto result = solve_qaoa(sp, cfg, seed);
        CHECK(result.diagnostics.at("expectation") <= exact.objective + 1e-9);
        CHECK(result.objective <= exact.objective + 1e-9);
    }
}

TEST_CASE("qaoa reports the exactly re-evaluated objective of its sample") {
    const auto sp = random_subproblem(16, 6, 91);
    QaoaConfig cfg;
    cfg.depth = 1;
    cfg.samples = 128;
    const auto result = solve_qaoa(sp, cfg, 7);
    CHECK(result.objective == testsupport::naive_objective(sp, result.spins));
}

TEST_CASE("nelder-mead refinement never loses to the plain grid") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto sp = random_subproblem(14, 5, seed + 45);
        QaoaConfig grid_only;
        grid_only.depth = 2;
        grid_only.optimizer = QaoaOptimizer::GridOnly;
        grid_only.samples = 32;
        QaoaConfig refined = grid_only;
        refined.optimizer = QaoaOptimizer::GridThenNelderMead;

        const double grid_expectation =
            solve_qaoa(sp, grid_only, seed).diagnostics.at("expectation");
        const double refined_expectation =
            solve_qaoa(sp, refined, seed).diagnostics.at("expectation");
        CHECK(refined_expectation >= grid_expectation);
    }
}

TEST_CASE("qaoa is deterministic for a fixed seed") {
    const auto sp = random_subproblem(14, 5, 33);
    QaoaConfig cfg;
    cfg.depth = 2;
    cfg.samples = 256;
    const auto a = solve_qaoa(sp, cfg, 5);
    const auto b = solve_qaoa(sp, cfg, 5);
    CHECK(a.spins == b.spins);
    CHECK(a.objective == b.objective);
    CHECK(a.diagnostics == b.diagnostics);
}

TEST_CASE("grid-only optimization works and reports angles") {
    const auto sp = random_subproblem(12, 4, 8);
    QaoaConfig cfg;
    cfg.depth = 2;
    cfg.optimizer = QaoaOptimizer::GridOnly;
    cfg.samples = 128;
    const auto result = solve_qaoa(sp, cfg, 3);
    CHECK(result.diagnostics.count("gamma_1") == 1);
    CHECK(result.diagnostics.count("beta_2") == 1);
    CHECK(result.diagnostics.at("evaluations") ==
          doctest::Approx(2.0 * 8 * 8));  // depth * grid^2, no refinement
}

TEST_CASE("subproblems above the qubit cap are rejected") {
    const auto sp = random_subproblem(30, 21, 4);
    CHECK_THROWS_AS(solve_qaoa(sp, QaoaConfig{}, 0), TooManyQubitsError);

    QaoaConfig raised;
    raised.max_qubits = 21;
    raised.depth = 1;
    raised.samples = 16;
    raised.grid_points_per_angle = 2;
    CHECK_NOTHROW(solve_qaoa(sp, raised, 0));
}

TEST_CASE("sampled spins have the subset's length and valid values") {
    const auto sp = random_subproblem(15, 6, 77);
    QaoaConfig cfg;
    cfg.depth = 1;
    cfg.samples = 64;
    const auto result = solve_qaoa(sp, cfg, 19);
    REQUIRE(result.spins.size() == 6);
    for (int s : result.spins) CHECK((s == +1 || s == -1));
    CHECK(result.diagnostics.at("best_sample_probability") > 0.0);
    CHECK(result.diagnostics.at("best_sample_probability") <= 1.0);
}
