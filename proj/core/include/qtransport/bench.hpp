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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qtransport/anneal.hpp"
#include "qtransport/brute_force.hpp"
#include "qtransport/cost.hpp"
#include "qtransport/io.hpp"
#include "qtransport/qaoa.hpp"

namespace qtransport {

/// Expected time to see the optimum at least once with 99% confidence,
/// T ln(0.01) / ln(1 - p). Returns T at p = 1. Throws UndefinedResultError
/// for p <= 0 and ParameterError for T <= 0, p > 1 or non-finite input.
double compute_tts(double run_time, double p);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval for a binomial proportion; z = 1.96 gives 95%.
Interval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

struct BruteConfig {
    std::size_t cap = kDefaultEnumerationCap;
};

struct SaConfig {
    std::size_t sweeps = 1000;
    /// Overrides the default temperatures derived from the cost when set.
    std::optional<double> temp_initial;
    std::optional<double> temp_final;

    AnnealSchedule schedule_for(const CostFunction& cost) const;
};

struct QaoaConfig {
    std::size_t depth = 1;
    AngleOptimizerOptions optimizer;
    std::size_t final_shots = 1024;  ///< draws from the optimized state
};

using SolverConfig = std::variant<BruteConfig, SaConfig, QaoaConfig>;

std::string solver_name(const SolverConfig& config);
json to_json(const SolverConfig& config);

struct SolveOutcome {
    Assignment assignment;
    double energy = 0.0;
    double seconds = 0.0;  ///< solver wall time, model construction excluded
    /// QAOA only: optimized exact expectation and optimizer trace.
    std::optional<double> expectation;
    std::vector<double> trace;
    std::optional<QaoaParams> angles;
};

/// One solver invocation. QAOA returns the lowest-energy sampled bitstring.
SolveOutcome solve_once(const CostFunction& cost, const SolverConfig& config, std::uint64_t seed);

struct ExperimentSpec {
    CostFunction cost;
    json instance = json::object();  ///< free-form descriptor copied into the report
    SolverConfig solver = BruteConfig{};
    std::size_t runs = 100;
    std::uint64_t seed = 0;
    std::size_t oracle_cap = kDefaultEnumerationCap;
};

struct TtsReport {
    double run_time = 0.0;  ///< mean solver seconds per run
    double p = 0.0;
    std::size_t runs = 0;
    std::size_t successes = 0;
    std::optional<double> tts;  ///< empty when p = 0
    Interval ci95;
    std::uint64_t seed = 0;
    double optimal_energy = 0.0;
    std::vector<double> energies;
    json solver;
    json instance;
};

/// Solves the instance exactly, then runs the solver `runs` times with seeds
/// derive_seed(seed, k). Throws ResourceError when the oracle is out of reach.
TtsReport run_tts_experiment(const ExperimentSpec& spec);

/// Wall-clock fields are kept under "timing" so data comparisons can drop them.
json to_json(const TtsReport& report);

enum class TspEncoding { one_hot, binary };

std::string_view to_string(TspEncoding encoding);
/// Accepts "one-hot" and "binary"; throws ParameterError otherwise.
TspEncoding parse_tsp_encoding(std::string_view name);

struct ScalingRow {
    std::size_t size = 0;
    TspEncoding encoding = TspEncoding::one_hot;
    std::size_t num_vars = 0;
    std::size_t nnz = 0;
    std::size_t max_degree = 0;
};

/// Encodes a fixed TSP instance of every size with every encoding.
/// Throws ParameterError on empty inputs or a size below 2.
std::vector<ScalingRow> scaling_sweep(const std::vector<TspEncoding>& encodings,
                                      const std::vector<std::size_t>& sizes);

/// "size,encoding,num_vars,nnz,max_degree" followed by one line per row.
std::string scaling_csv(const std::vector<ScalingRow>& rows);

}  // namespace qtransport
