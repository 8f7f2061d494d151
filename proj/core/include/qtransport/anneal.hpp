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

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qtransport/cost.hpp"

namespace qtransport {

/// Geometric cooling from temp_initial to temp_final over `sweeps` sweeps.
struct AnnealSchedule {
    std::size_t sweeps = 1000;
    double temp_initial = 1.0;
    double temp_final = 1e-3;

    /// Throws ParameterError unless sweeps >= 1 and temp_initial >= temp_final > 0.
    void validate() const;
    /// Per-sweep factor, (temp_final / temp_initial)^(1 / (sweeps - 1)).
    double decay() const;
    double temperature(std::size_t sweep) const;
};

/// Endpoints (m, 1e-3 m) where m is the largest absolute coefficient of the
/// cost in binary variables (1 for a constant cost).
AnnealSchedule default_schedule(const CostFunction& cost, std::size_t sweeps);

struct AnnealResult {
    Assignment best_assignment;
    double best_energy = 0.0;
    std::vector<double> energy_trajectory;  ///< running best at the end of each sweep
    std::uint64_t seed = 0;
    double wall_time = 0.0;  ///< seconds
};

/// Energy of a state kept up to date under single-bit flips.
class IncrementalEnergy {
 public:
    IncrementalEnergy(const CompiledCost& cost, Assignment initial);

    double energy() const noexcept { return energy_; }
    const Assignment& state() const noexcept { return state_; }

    double delta(Index k) const { return cost_->flip_delta(state_, k); }
    void flip(Index k, double delta);
    void flip(Index k) { flip(k, delta(k)); }
    /// Replaces the tracked energy with a full re-evaluation.
    void resync();

 private:
    const CompiledCost* cost_;
    Assignment state_;
    double energy_;
};

/// Single-flip Metropolis annealing: a uniformly random initial state, then
/// per sweep every variable once in a freshly shuffled order, accepting with
/// probability min(1, exp(-dE / T)). The best state is tracked over sweep
/// ends. Deterministic for a given seed.
///
/// For an IsingModel the assignment is in x with s = 1 - 2x, and best_energy
/// comes from evaluate_ising.
AnnealResult simulated_anneal(const CostFunction& cost, const AnnealSchedule& schedule,
                              std::uint64_t seed);

AnnealResult simulated_anneal(const CompiledCost& cost, const AnnealSchedule& schedule,
                              std::uint64_t seed);

/// Energies within this distance above the optimum count as a success.
inline constexpr double kSuccessTolerance = 1e-9;

struct SuccessEstimate {
    std::size_t runs = 0;
    std::size_t successes = 0;
    double p = 0.0;
    std::vector<double> energies;     ///< best energy per run, in run order
    std::vector<double> run_seconds;  ///< wall time per run
};

/// One solver run with the given seed, returning its best energy.
using SolverRun = std::function<double(std::uint64_t seed)>;

/// Runs `run` with derive_seed(seed, k) for k = 0..runs-1 and counts runs
/// ending within kSuccessTolerance of optimal_energy. Throws ParameterError
/// for runs == 0.
SuccessEstimate estimate_success_probability(const SolverRun& run, std::size_t runs,
                                             double optimal_energy, std::uint64_t seed);

SuccessEstimate estimate_success_probability(const CostFunction& cost,
                                             const AnnealSchedule& schedule, std::size_t runs,
                                             double optimal_energy, std::uint64_t seed);

}  // namespace qtransport
