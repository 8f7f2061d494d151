// Copyright 2026 The qtransport Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "qtransport/anneal.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "qtransport/errors.hpp"
#include "qtransport/random.hpp"

namespace qtransport {

void AnnealSchedule::validate() const {
    if (sweeps < 1) throw ParameterError("schedule needs at least one sweep");
    if (!(temp_final > 0.0) || !std::isfinite(temp_initial) || temp_initial < temp_final) {
        throw ParameterError("schedule needs temp_initial >= temp_final > 0");
    }
}

double AnnealSchedule::decay() const {
    if (sweeps <= 1) return 1.0;
    return std::pow(temp_final / temp_initial, 1.0 / static_cast<double>(sweeps - 1));
}

double AnnealSchedule::temperature(std::size_t sweep) const {
    if (sweeps <= 1) return temp_initial;
    if (sweep + 1 >= sweeps) return temp_final;
    return temp_initial * std::pow(decay(), static_cast<double>(sweep));
}

AnnealSchedule default_schedule(const CostFunction& cost, std::size_t sweeps) {
    const CompiledCost compiled(cost);
    const double m = compiled.max_abs_coefficient() > 0.0 ? compiled.max_abs_coefficient() : 1.0;
    return AnnealSchedule{sweeps, m, 1e-3 * m};
}

IncrementalEnergy::IncrementalEnergy(const CompiledCost& cost, Assignment initial)
    : cost_(&cost), state_(std::move(initial)), energy_(cost.energy(state_)) {}

void IncrementalEnergy::flip(Index k, double delta) {
    state_[k] ^= 1U;
    energy_ += delta;
}

void IncrementalEnergy::resync() { energy_ = cost_->energy(state_); }

AnnealResult simulated_anneal(const CompiledCost& cost, const AnnealSchedule& schedule,
                              std::uint64_t seed) {
    schedule.validate();
    const std::size_t n = cost.num_vars();
    if (n == 0) throw ParameterError("annealing needs at least one variable");

    const auto start = std::chrono::steady_clock::now();
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Assignment initial(n);
    for (auto& b : initial) b = static_cast<std::uint8_t>(rng() & 1U);
    IncrementalEnergy state(cost, std::move(initial));

    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});

    AnnealResult result;
    result.seed = seed;
    result.energy_trajectory.reserve(schedule.sweeps);
    double best = 0.0;

    const double decay = schedule.decay();
    double temp = schedule.temp_initial;
    for (std::size_t sweep = 0; sweep < schedule.sweeps; ++sweep) {
        if (sweep + 1 == schedule.sweeps) temp = schedule.temp_final;
        const double beta = 1.0 / temp;
        std::shuffle(order.begin(), order.end(), rng);
        for (Index k : order) {
            const double d = state.delta(k);
            if (d <= 0.0 || unit(rng) < std::exp(-d * beta)) state.flip(k, d);
        }
        state.resync();
        if (sweep == 0 || state.energy() < best) {
            best = state.energy();
            result.best_assignment = state.state();
        }
        result.energy_trajectory.push_back(best);
        temp *= decay;
    }

    result.best_energy = best;
    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

AnnealResult simulated_anneal(const CostFunction& cost, const AnnealSchedule& schedule,
                              std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const CompiledCost compiled(cost);
    AnnealResult result = simulated_anneal(compiled, schedule, seed);
    result.best_energy = evaluate(cost, result.best_assignment);
    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

SuccessEstimate estimate_success_probability(const SolverRun& run, std::size_t runs,
                                             double optimal_energy, std::uint64_t seed) {
    if (runs == 0) throw ParameterError("runs must be at least 1");
    SuccessEstimate est;
    est.runs = runs;
    est.energies.reserve(runs);
    est.run_seconds.reserve(runs);
    for (std::size_t k = 0; k < runs; ++k) {
        const auto start = std::chrono::steady_clock::now();
        const double e = run(derive_seed(seed, k));
        est.run_seconds.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        est.energies.push_back(e);
        if (e <= optimal_energy + kSuccessTolerance) ++est.successes;
    }
    est.p = static_cast<double>(est.successes) / static_cast<double>(runs);
    return est;
}

SuccessEstimate estimate_success_probability(const CostFunction& cost,
                                             const AnnealSchedule& schedule, std::size_t runs,
                                             double optimal_energy, std::uint64_t seed) {
    schedule.validate();
    const CompiledCost compiled(cost);
    return estimate_success_probability(
        [&](std::uint64_t s) {
            return evaluate(cost, simulated_anneal(compiled, schedule, s).best_assignment);
        },
        runs, optimal_energy, seed);
}

}  // namespace qtransport
