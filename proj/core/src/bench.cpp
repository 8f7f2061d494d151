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

#include "qtransport/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "qtransport/errors.hpp"
#include "qtransport/random.hpp"
#include "qtransport/resources.hpp"
#include "qtransport/tsp.hpp"

namespace qtransport {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kTargetConfidence = 0.99;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

// Symmetric, strictly positive off the diagonal, so every structural
// coefficient of the encodings is nonzero.
TspInstance sweep_instance(std::size_t n) {
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) d[i][j] = 1.0 + static_cast<double>((i + j) % 3);
        }
    }
    return TspInstance(std::move(d));
}

}  // namespace

double compute_tts(double run_time, double p) {
    if (!std::isfinite(run_time) || run_time <= 0.0) {
        throw ParameterError("run time must be positive");
    }
    if (std::isnan(p) || p > 1.0) throw ParameterError("success probability must lie in (0, 1]");
    if (p <= 0.0) throw UndefinedResultError("time-to-solution is undefined when p = 0");
    if (p == 1.0) return run_time;
    // Both logarithms must come from the same runtime log1p so that p equal to
    // the target confidence gives exactly T. Reading the target through a
    // volatile keeps the compiler from folding the numerator at compile time
    // with a differently rounded result.
    const volatile double target = kTargetConfidence;
    return run_time * std::log1p(-target) / std::log1p(-p);
}

Interval wilson_interval(std::size_t successes, std::size_t trials, double z) {
    if (trials == 0) throw ParameterError("Wilson interval needs at least one trial");
    if (successes > trials) throw ParameterError("successes exceed trials");
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

AnnealSchedule SaConfig::schedule_for(const CostFunction& cost) const {
    AnnealSchedule s = default_schedule(cost, sweeps);
    if (temp_initial) s.temp_initial = *temp_initial;
    if (temp_final) s.temp_final = *temp_final;
    s.validate();
    return s;
}

std::string solver_name(const SolverConfig& config) {
    return std::visit(Overloaded{[](const BruteConfig&) { return std::string("brute"); },
                                 [](const SaConfig&) { return std::string("sa"); },
                                 [](const QaoaConfig&) { return std::string("qaoa"); }},
                      config);
}

json to_json(const SolverConfig& config) {
    return std::visit(
        Overloaded{
            [](const BruteConfig& c) { return json{{"name", "brute"}, {"cap", c.cap}}; },
            [](const SaConfig& c) {
                json j{{"name", "sa"}, {"sweeps", c.sweeps}};
                j["t0"] = c.temp_initial ? json(*c.temp_initial) : json(nullptr);
                j["t1"] = c.temp_final ? json(*c.temp_final) : json(nullptr);
                return j;
            },
            [](const QaoaConfig& c) {
                return json{{"name", "qaoa"},
                            {"p", c.depth},
                            {"restarts", c.optimizer.restarts},
                            {"max_iters", c.optimizer.max_iters},
                            {"estimator", c.optimizer.estimator == Estimator::exact ? "exact"
                                                                                     : "sampled"},
                            {"shots", c.optimizer.shots},
                            {"final_shots", c.final_shots}};
            }},
        config);
}

SolveOutcome solve_once(const CostFunction& cost, const SolverConfig& config, std::uint64_t seed) {
    return std::visit(
        Overloaded{
            [&](const BruteConfig& c) {
                const auto start = Clock::now();
                Minimum m = brute_force_min(cost, c.cap);
                SolveOutcome out;
                out.seconds = seconds_since(start);
                out.assignment = std::move(m.assignment);
                out.energy = m.energy;
                return out;
            },
            [&](const SaConfig& c) {
                const AnnealSchedule schedule = c.schedule_for(cost);
                const CompiledCost compiled(cost);
                const auto start = Clock::now();
                AnnealResult r = simulated_anneal(compiled, schedule, seed);
                SolveOutcome out;
                out.seconds = seconds_since(start);
                out.energy = evaluate(cost, r.best_assignment);
                out.assignment = std::move(r.best_assignment);
                return out;
            },
            [&](const QaoaConfig& c) {
                if (c.final_shots == 0) throw ParameterError("QAOA needs at least one final shot");
                const std::size_t n = num_vars(cost);
                const auto diag = cost_diagonal(cost, c.optimizer.qubit_cap);
                const auto start = Clock::now();
                AngleOptimization opt =
                    optimize_angles(cost, c.depth, c.optimizer, derive_seed(seed, 0));
                const StateVector state = run_qaoa_circuit(diag, n, opt.params);
                const SampleCounts counts = sample(state, c.final_shots, derive_seed(seed, 1));
                std::uint64_t best = counts.counts.begin()->first;
                for (const auto& [k, unused] : counts.counts) {
                    if (diag[k] < diag[best]) best = k;
                }
                SolveOutcome out;
                out.seconds = seconds_since(start);
                out.assignment = to_assignment(best, n);
                out.energy = evaluate(cost, out.assignment);
                out.expectation = opt.expectation;
                out.trace = std::move(opt.trace);
                out.angles = std::move(opt.params);
                return out;
            }},
        config);
}

TtsReport run_tts_experiment(const ExperimentSpec& spec) {
    if (spec.runs == 0) throw ParameterError("runs must be at least 1");
    const Minimum oracle = brute_force_min(spec.cost, spec.oracle_cap);

    TtsReport report;
    report.runs = spec.runs;
    report.seed = spec.seed;
    report.optimal_energy = oracle.energy;
    report.solver = to_json(spec.solver);
    report.instance = spec.instance;
    report.energies.reserve(spec.runs);

    double total_seconds = 0.0;
    for (std::size_t k = 0; k < spec.runs; ++k) {
        const SolveOutcome o = solve_once(spec.cost, spec.solver, derive_seed(spec.seed, k));
        total_seconds += o.seconds;
        report.energies.push_back(o.energy);
        if (o.energy <= oracle.energy + tie_tolerance(oracle.energy)) ++report.successes;
    }
    // A run faster than the clock resolution still costs something.
    report.run_time = std::max(total_seconds / static_cast<double>(spec.runs), 1e-9);
    report.p = static_cast<double>(report.successes) / static_cast<double>(spec.runs);
    report.ci95 = wilson_interval(report.successes, spec.runs);
    if (report.successes > 0) report.tts = compute_tts(report.run_time, report.p);
    return report;
}

json to_json(const TtsReport& report) {
    json j;
    j["T"] = report.run_time;
    j["p"] = report.p;
    j["runs"] = report.runs;
    j["successes"] = report.successes;
    j["tts"] = report.tts ? json(*report.tts) : json(nullptr);
    j["ci95"] = json::array({report.ci95.lo, report.ci95.hi});
    j["seed"] = report.seed;
    j["solver"] = report.solver;
    j["instance"] = report.instance;
    j["optimal_energy"] = report.optimal_energy;
    j["energies"] = report.energies;
    j["timing"] = {{"T", report.run_time},
                   {"tts", report.tts ? json(*report.tts) : json(nullptr)}};
    return j;
}

std::string_view to_string(TspEncoding encoding) {
    return encoding == TspEncoding::one_hot ? "one-hot" : "binary";
}

TspEncoding parse_tsp_encoding(std::string_view name) {
    if (name == "one-hot") return TspEncoding::one_hot;
    if (name == "binary") return TspEncoding::binary;
    throw ParameterError("unknown encoding '" + std::string(name) +
                         "', expected one-hot or binary");
}

std::vector<ScalingRow> scaling_sweep(const std::vector<TspEncoding>& encodings,
                                      const std::vector<std::size_t>& sizes) {
    if (encodings.empty()) throw ParameterError("scaling sweep needs at least one encoding");
    if (sizes.empty()) throw ParameterError("scaling sweep needs at least one size");
    for (std::size_t n : sizes) {
        if (n < 2) throw ParameterError("TSP sizes must be at least 2");
    }
    std::vector<ScalingRow> rows;
    for (std::size_t n : sizes) {
        const TspInstance inst = sweep_instance(n);
        for (TspEncoding e : encodings) {
            const ResourceReport r = e == TspEncoding::one_hot
                                         ? resource_report(encode_tsp_one_hot(inst).model)
                                         : resource_report(encode_tsp_binary(inst).poly);
            rows.push_back({n, e, r.num_variables, r.num_quadratic_nonzero, r.max_degree});
        }
    }
    return rows;
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
    std::ostringstream out;
    out << "size,encoding,num_vars,nnz,max_degree\n";
    for (const auto& r : rows) {
        out << r.size << ',' << to_string(r.encoding) << ',' << r.num_vars << ',' << r.nnz << ','
            << r.max_degree << '\n';
    }
    return out.str();
}

}  // namespace qtransport
