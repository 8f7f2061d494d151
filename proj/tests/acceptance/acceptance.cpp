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

// Release acceptance run. Prints one PASS or FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "oracles.hpp"
#include "qtransport/anneal.hpp"
#include "qtransport/bench.hpp"
#include "qtransport/brute_force.hpp"
#include "qtransport/io.hpp"
#include "qtransport/ising.hpp"
#include "qtransport/qaoa.hpp"
#include "qtransport/random.hpp"
#include "qtransport/traffic.hpp"
#include "qtransport/tsp.hpp"

using namespace qtransport;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// 1 ---------------------------------------------------------------------------

Outcome ising_equivalence() {
    Outcome o;
    const auto start = Clock::now();
    std::mt19937_64 rng(1001);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 12;
        const QuboModel q = testing::random_qubo(rng, n);
        const IsingModel h = to_ising(q);
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
            const Assignment x = testing::bits(k, n);
            Spins s(n);
            for (std::size_t i = 0; i < n; ++i) s[i] = 1 - 2 * x[i];
            worst = std::max(worst, std::abs(evaluate_qubo(q, x) - evaluate_ising(h, s)));
        }
    }
    const double t = seconds_since(start);
    o.require(worst <= 1e-9, "max error " + fmt(worst));
    o.require(t < 30.0, "took " + fmt(t) + " s");
    if (o.ok) o.detail = "max error " + fmt(worst) + ", " + fmt(t) + " s";
    return o;
}

// 2 ---------------------------------------------------------------------------

Outcome encoding_counts() {
    Outcome o;
    for (std::size_t n : {4u, 8u, 16u}) {
        std::vector<std::vector<double>> d(n, std::vector<double>(n, 1.0));
        for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
        const TspInstance inst(d);
        const std::size_t bits = static_cast<std::size_t>(std::ceil(std::log2(n)));
        o.require(encode_tsp_one_hot(inst).model.num_vars() == n * n,
                  "one-hot count wrong at N=" + std::to_string(n));
        o.require(encode_tsp_binary(inst).poly.num_vars() == n * bits,
                  "binary count wrong at N=" + std::to_string(n));
    }
    if (o.ok) o.detail = "one-hot 16/64/256, binary 8/24/64";
    return o;
}

// 3 ---------------------------------------------------------------------------

Outcome encoder_equivalence() {
    Outcome o;
    const auto start = Clock::now();
    std::mt19937_64 rng(1003);
    const auto d = testing::random_integer_distances(rng, 4);
    const TspInstance inst(d);
    const OneHotLayout oh(4);
    const BinaryLayout bl(4);
    const QuboModel objective = tsp_one_hot_objective(inst, oh);
    const OneHotTsp penalized = encode_tsp_one_hot(inst);
    const BinaryTsp binary = encode_tsp_binary(inst);
    std::size_t tours = 0;
    for (const auto& tour : testing::all_tours(4)) {
        ++tours;
        const double len = testing::cycle_length(d, tour);
        o.require(tour_length(inst, tour) == len, "tour_length disagrees with the oracle");
        o.require(evaluate_qubo(objective, one_hot_assignment(tour, oh)) == len,
                  "one-hot objective differs from the tour length");
        o.require(evaluate_qubo(penalized.model, one_hot_assignment(tour, oh)) == len,
                  "penalized one-hot differs on a feasible tour");
        o.require(evaluate_hobo(binary.poly, binary_assignment(tour, bl)) == len,
                  "binary HOBO differs from the tour length");
    }
    const Minimum m = brute_force_min(CostFunction(penalized.model));
    const TourDecoding dec = decode_one_hot(m.assignment, oh);
    const double best = testing::permutation_optimum(d);
    o.require(dec.feasible, "brute-force minimizer is not a tour");
    o.require(dec.feasible && tour_length(inst, dec.tour) == best,
              "decoded tour is not the permutation optimum");
    const double t = seconds_since(start);
    o.require(t < 60.0, "took " + fmt(t) + " s");
    if (o.ok) {
        o.detail = std::to_string(tours) + " tours agree, optimum " + fmt(best) + ", " + fmt(t) + " s";
    }
    return o;
}

// 4 ---------------------------------------------------------------------------

Outcome penalty_dominance() {
    Outcome o;
    std::mt19937_64 rng(1004);
    std::size_t with_feasible = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const bool inequality = trial % 2 == 1;
        const std::size_t n = 3 + rng() % 6;
        const QuboModel base = testing::random_qubo(rng, n);
        std::vector<double> a(n);
        std::uniform_int_distribution<int> coef(inequality ? 0 : -3, 3);
        for (auto& v : a) v = coef(rng);
        std::int64_t b = 0;
        for (double v : a) b += static_cast<std::int64_t>(v) * static_cast<std::int64_t>(rng() % 2);
        if (trial % 5 == 4) b += 50;  // occasionally no feasible point for equalities
        if (inequality) b = std::max<std::int64_t>(0, std::min<std::int64_t>(b, 7));

        auto feasible = [&](const Assignment& x) {
            double ax = 0.0;
            for (std::size_t i = 0; i < n; ++i) ax += a[i] * x[i];
            return inequality ? ax <= b : ax == b;
        };

        bool any = false;
        double constrained = 1e300;
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
            const Assignment x = testing::bits(k, n);
            if (feasible(x)) {
                any = true;
                constrained = std::min(constrained, evaluate_qubo(base, x));
            }
        }

        QuboModel model = inequality ? add_inequality_constraint(base, a, b).model
                                     : add_equality_constraint(base, a, static_cast<double>(b));
        o.require(model.num_vars() <= 12, "instance exceeds 12 variables");
        if (!any) continue;
        ++with_feasible;
        const Minimum m = brute_force_min(CostFunction(model));
        const Assignment x(m.assignment.begin(), m.assignment.begin() + n);
        o.require(feasible(x), "infeasible minimizer in trial " + std::to_string(trial));
        o.require(std::abs(m.energy - constrained) <= 1e-9 * (1 + std::abs(constrained)),
                  "minimum differs from the constrained optimum in trial " + std::to_string(trial));
    }
    o.require(with_feasible >= 25, "too few instances with a feasible point");
    if (o.ok) o.detail = std::to_string(with_feasible) + " of 50 instances feasible, all minimizers feasible";
    return o;
}

// 5 ---------------------------------------------------------------------------

Outcome qaoa_oracle() {
    Outcome o;
    std::mt19937_64 rng(1005);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const std::size_t p = 1 + trial % 3;
        const QuboModel q = testing::random_qubo(rng, n);
        QaoaParams params;
        for (std::size_t k = 0; k < p; ++k) {
            params.gammas.push_back(angle(rng));
            params.betas.push_back(angle(rng));
        }
        const StateVector s = run_qaoa_circuit(n, CostFunction(q), params);
        const auto ref = testing::dense_qaoa_state(testing::enumerate_energies(q, n), n,
                                                   params.gammas, params.betas);
        for (std::size_t k = 0; k < ref.size(); ++k) worst = std::max(worst, std::abs(s[k] - ref[k]));
    }
    const QuboModel q8 = testing::random_qubo(rng, 8);
    const auto diag = cost_diagonal(CostFunction(q8));
    StateVector s = init_uniform(8);
    for (int layer = 0; layer < 100; ++layer) {
        apply_cost_phase(s, diag, angle(rng));
        apply_mixer(s, angle(rng));
    }
    const double norm_error = std::abs(std::sqrt(s.norm_squared()) - 1.0);
    o.require(worst <= 1e-10, "amplitude error " + fmt(worst));
    o.require(norm_error <= 1e-9, "norm error " + fmt(norm_error));
    if (o.ok) o.detail = "amplitude error " + fmt(worst) + ", norm error " + fmt(norm_error);
    return o;
}

// 6 ---------------------------------------------------------------------------

Outcome zero_angle_law() {
    Outcome o;
    std::mt19937_64 rng(1006);
    const QuboModel q = testing::random_qubo(rng, 4);
    const StateVector u = init_uniform(4);
    for (std::size_t p = 1; p <= 3; ++p) {
        const StateVector s = run_qaoa_circuit(4, CostFunction(q), QaoaParams::zeros(p));
        for (std::uint64_t k = 0; k < 16; ++k) o.require(s[k] == u[k], "zero angles moved the state");
        o.require(s[0] == Amplitude(0.25, 0.0), "uniform amplitude is not 1/4");
    }
    constexpr std::size_t kShots = 10000;
    const SampleCounts c = sample(run_qaoa_circuit(4, CostFunction(q), QaoaParams::zeros(1)), kShots, 0);
    const double mean = kShots / 16.0;
    const double sigma = std::sqrt(kShots * (1.0 / 16) * (15.0 / 16));
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 16; ++k) {
        const auto it = c.counts.find(k);
        const double count = it == c.counts.end() ? 0.0 : static_cast<double>(it->second);
        worst = std::max(worst, std::abs(count - mean) / sigma);
    }
    o.require(worst <= 3.0, "count deviates by " + fmt(worst) + " sigma");
    if (o.ok) o.detail = "exact uniform state, largest deviation " + fmt(worst) + " sigma";
    return o;
}

// 7 ---------------------------------------------------------------------------

Outcome qaoa_improvement() {
    Outcome o;
    const auto start = Clock::now();
    QuboModel pair(2);
    pair.add_linear(0, -1.0).add_linear(1, -1.0).add_quadratic(0, 1, 2.0);
    std::mt19937_64 rng(1007);
    const OneHotTsp tsp = encode_tsp_one_hot(TspInstance(testing::random_integer_distances(rng, 3)));

    std::ostringstream detail;
    const std::vector<std::pair<std::string, CostFunction>> cases{{"pair", pair},
                                                                 {"tsp3", tsp.model}};
    for (const auto& [name, cost] : cases) {
        const std::size_t n = num_vars(cost);
        const double uniform = expectation(init_uniform(n), cost);
        const AngleOptimization p1 = optimize_angles(cost, 1, 10, 500, 7);
        AngleOptimizerOptions opt;
        opt.restarts = 4;
        opt.max_iters = 800;
        opt.initial = QaoaParams{{p1.params.gammas[0], 0.0}, {p1.params.betas[0], 0.0}};
        const AngleOptimization p2 = optimize_angles(cost, 2, opt, 8);
        o.require(p1.expectation < uniform, name + ": p=1 not below the uniform mean");
        o.require(p2.expectation <= p1.expectation + 1e-6, name + ": p=2 worse than p=1");
        detail << name << " " << fmt(uniform) << " -> " << fmt(p1.expectation) << " -> "
               << fmt(p2.expectation) << "; ";
    }
    const double t = seconds_since(start);
    o.require(t < 120.0, "took " + fmt(t) + " s");
    if (o.ok) o.detail = detail.str() + fmt(t) + " s";
    return o;
}

// 8 ---------------------------------------------------------------------------

Outcome tts_formula() {
    Outcome o;
    o.require(compute_tts(1.0, 0.99) == 1.0, "T=1, p=0.99 is not exactly 1");
    const double v = compute_tts(2.0, 0.5);
    o.require(std::abs(v - 13.2877) <= 1e-3, "T=2, p=0.5 gave " + fmt(v));
    double prev = compute_tts(1.0, 0.0099);
    for (int k = 2; k <= 100; ++k) {
        const double p = k * 0.0099;
        const double cur = compute_tts(1.0, p);
        o.require(cur < prev, "not decreasing in p near " + fmt(p));
        o.require(compute_tts(2.0, p) > cur, "not increasing in T at p=" + fmt(p));
        prev = cur;
    }
    if (o.ok) o.detail = "tts(2, 0.5) = " + fmt(v) + ", monotone on 100 points";
    return o;
}

// 9 ---------------------------------------------------------------------------

Outcome annealing_success() {
    Outcome o;
    std::mt19937_64 rng(1009);
    const auto d = testing::random_euclidean_distances(rng, 5);
    const CostFunction cost = encode_tsp_one_hot(TspInstance(d)).model;

    ExperimentSpec spec{cost};
    spec.solver = SaConfig{2000};
    spec.runs = 100;
    spec.seed = 9;
    spec.oracle_cap = 25;
    const TtsReport report = run_tts_experiment(spec);
    o.require(std::abs(report.optimal_energy - testing::permutation_optimum(d)) <= 1e-9,
              "oracle minimum is not the shortest tour");
    o.require(report.p >= 0.9, "p = " + fmt(report.p));
    o.require(report.tts.has_value() && std::isfinite(*report.tts), "TTS not finite");

    std::ostringstream detail;
    detail << "p = " << fmt(report.p) << ", tts = " << (report.tts ? fmt(*report.tts) : "-")
           << " s; budget p:";
    Interval previous{0.0, 0.0};
    bool first = true;
    for (std::size_t sweeps : {250u, 500u, 1000u, 2000u}) {
        const SuccessEstimate e = estimate_success_probability(
            cost, default_schedule(cost, sweeps), 100, report.optimal_energy, derive_seed(9, sweeps));
        const Interval ci = wilson_interval(e.successes, e.runs);
        if (!first) o.require(ci.hi >= previous.lo, "p drops at " + std::to_string(sweeps) + " sweeps");
        detail << " " << sweeps << "=" << fmt(e.p);
        previous = ci;
        first = false;
    }
    if (o.ok) o.detail = detail.str();
    return o;
}

// 10 --------------------------------------------------------------------------

Outcome traffic_grid() {
    Outcome o;
    const TrafficGrid grid{2, 2, {3, 1, 4, 1}, {5, 9, 2, 6}, {1, -1, 0, 1}, 0.0, 0.0, 1.0};
    const IsingModel h = encode_traffic_grid(grid);
    double lowest = 1e300;
    for (std::uint64_t k = 0; k < 16; ++k) lowest = std::min(lowest, evaluate_ising(h, to_spins(testing::bits(k, 4))));
    std::vector<Spins> ground;
    for (std::uint64_t k = 0; k < 16; ++k) {
        const Spins s = to_spins(testing::bits(k, 4));
        if (evaluate_ising(h, s) == lowest) ground.push_back(s);
    }
    o.require(ground.size() == 2, std::to_string(ground.size()) + " ground states");
    for (const auto& s : ground) {
        o.require(std::all_of(s.begin(), s.end(), [&](int v) { return v == s[0]; }),
                  "ground state is not aligned");
    }

    const TrafficGrid ns_heavy{1, 1, {7}, {2}, {0}};
    const TrafficGrid ew_heavy{1, 1, {2}, {7}, {0}};
    o.require(brute_force_min_spins(encode_traffic_grid(ns_heavy)).spins == Spins{kNorthSouth},
              "longer north-south queue not served");
    o.require(brute_force_min_spins(encode_traffic_grid(ew_heavy)).spins == Spins{kEastWest},
              "longer east-west queue not served");

    std::mt19937_64 rng(1010);
    std::uniform_real_distribution<double> q(0.0, 20.0), w(0.0, 3.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3, n = rows * cols;
        TrafficGrid g{rows, cols, {}, {}, {}, w(rng), w(rng), w(rng)};
        for (std::size_t i = 0; i < n; ++i) {
            g.q_ns.push_back(q(rng));
            g.q_ew.push_back(q(rng));
            g.prev.push_back(static_cast<int>(rng() % 3) - 1);
        }
        TrafficGrid mirror = g;
        std::swap(mirror.q_ns, mirror.q_ew);
        for (auto& p : mirror.prev) p = -p;
        const IsingModel a = encode_traffic_grid(g), b = encode_traffic_grid(mirror);
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
            const Spins s = to_spins(testing::bits(k, n));
            Spins f = s;
            for (auto& v : f) v = -v;
            worst = std::max(worst, std::abs(evaluate_ising(a, s) - evaluate_ising(b, f)));
        }
    }
    o.require(worst <= 1e-12, "flip symmetry error " + fmt(worst));
    if (o.ok) o.detail = "2 aligned ground states, symmetry error " + fmt(worst);
    return o;
}

// 11 --------------------------------------------------------------------------

Outcome landscape() {
    Outcome o;
    std::mt19937_64 rng(1011);
    const CostFunction cost =
        encode_tsp_one_hot(TspInstance(testing::random_integer_distances(rng, 3))).model;
    const Landscape a = landscape_slice(cost, QaoaParams::zeros(1), 25, std::numbers::pi / 2, 11, true);
    const Landscape b = landscape_slice(cost, QaoaParams::zeros(1), 25, std::numbers::pi / 2, 11, true);
    double lo = 1e300, hi = -1e300, sum = 0.0, sum2 = 0.0;
    std::size_t count = 0;
    bool finite = true;
    for (const auto& row : a.values) {
        for (double v : row) {
            finite = finite && std::isfinite(v);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
            sum2 += v * v;
            ++count;
        }
    }
    const double mean = sum / count;
    const double variance = sum2 / count - mean * mean;
    o.require(finite && std::isfinite(variance), "non-finite values");
    o.require(hi - lo > 1e-6 && variance > 0.0, "slice is constant");
    o.require(a.values == b.values, "slice not reproducible");
    o.require(matrix_from_csv(matrix_to_csv(a.values)) == a.values, "CSV round trip is lossy");

    const Landscape r1 = landscape_slice(cost, QaoaParams{{0.2}, {0.1}}, 9, 1.0, 5);
    const Landscape r2 = landscape_slice(cost, QaoaParams{{0.2}, {0.1}}, 9, 1.0, 5);
    o.require(r1.values == r2.values && r1.u == r2.u, "random slice not reproducible");
    if (o.ok) o.detail = "range [" + fmt(lo) + ", " + fmt(hi) + "], variance " + fmt(variance);
    return o;
}

// 12 --------------------------------------------------------------------------

struct CliRun {
    int code;
    std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
    args.insert(args.begin(), "qtransport");
    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str()};
}

std::string strip_timing(const std::string& text) {
    json doc = parse_json(text);
    doc.erase("timing");
    doc.erase("T");
    doc.erase("tts");
    return doc.dump();
}

Outcome determinism() {
    Outcome o;
    std::mt19937_64 rng(1012);
    const auto d = testing::random_integer_distances(rng, 4);
    const CostFunction tsp = encode_tsp_one_hot(TspInstance(d)).model;
    const QuboModel q = testing::random_qubo(rng, 6);
    std::size_t checked = 0;
    auto same = [&](bool equal, const std::string& what) {
        ++checked;
        o.require(equal, what + " is not reproducible");
    };

    {
        const AnnealResult a = simulated_anneal(tsp, default_schedule(tsp, 300), 3);
        const AnnealResult b = simulated_anneal(tsp, default_schedule(tsp, 300), 3);
        same(a.best_assignment == b.best_assignment && a.energy_trajectory == b.energy_trajectory,
             "simulated_anneal");
    }
    {
        const auto a = estimate_success_probability(tsp, default_schedule(tsp, 100), 20, 0.0, 4);
        const auto b = estimate_success_probability(tsp, default_schedule(tsp, 100), 20, 0.0, 4);
        same(a.energies == b.energies, "estimate_success_probability");
    }
    for (Estimator est : {Estimator::exact, Estimator::sampled}) {
        AngleOptimizerOptions opt;
        opt.estimator = est;
        opt.restarts = 2;
        opt.max_iters = 60;
        const AngleOptimization a = optimize_angles(CostFunction(q), 2, opt, 5);
        const AngleOptimization b = optimize_angles(CostFunction(q), 2, opt, 5);
        same(a.params.flatten() == b.params.flatten() && a.trace == b.trace, "optimize_angles");
    }
    {
        const StateVector s = run_qaoa_circuit(6, CostFunction(q), QaoaParams{{0.3}, {0.7}});
        same(sample(s, 500, 6).counts == sample(s, 500, 6).counts, "sample");
    }
    {
        const Landscape a = landscape_slice(CostFunction(q), QaoaParams::zeros(2), 5, 1.0, 7);
        const Landscape b = landscape_slice(CostFunction(q), QaoaParams::zeros(2), 5, 1.0, 7);
        same(a.values == b.values, "landscape_slice");
    }
    for (const SolverConfig& cfg : std::vector<SolverConfig>{BruteConfig{}, SaConfig{200}, QaoaConfig{}}) {
        const CostFunction c = CostFunction(q);
        const SolveOutcome a = solve_once(c, cfg, 8);
        const SolveOutcome b = solve_once(c, cfg, 8);
        same(a.assignment == b.assignment && a.energy == b.energy && a.trace == b.trace,
             "solve_once " + solver_name(cfg));

        ExperimentSpec spec{c};
        spec.solver = cfg;
        spec.runs = 5;
        spec.seed = 8;
        same(strip_timing(to_json(run_tts_experiment(spec)).dump()) ==
                 strip_timing(to_json(run_tts_experiment(spec)).dump()),
             "run_tts_experiment " + solver_name(cfg));
    }

    const auto dir = std::filesystem::temp_directory_path() /
                     ("qtransport_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const std::string problem = (dir / "tsp.json").string();
    write_file(problem, json{{"problem", "tsp"}, {"distance", d}}.dump());
    const std::string model = (dir / "model.json").string();
    {
        const CliRun a = cli_run({"encode", problem});
        const CliRun b = cli_run({"encode", problem});
        same(a.code == 0 && a.out == b.out, "cli encode");
        cli_run({"encode", problem, "--out", model});
    }
    const std::vector<std::vector<std::string>> json_commands{
        {"solve", model, "--solver", "sa", "--seed", "7"},
        {"solve", model, "--solver", "brute"},
        {"tts", model, "--solver", "sa", "--sweeps", "200", "--runs", "10", "--seed", "7"},
    };
    for (const auto& args : json_commands) {
        const CliRun a = cli_run(args);
        const CliRun b = cli_run(args);
        same(a.code == 0 && strip_timing(a.out) == strip_timing(b.out), "cli " + args[0]);
    }
    const std::string small = (dir / "small.json").string();
    write_file(small, to_json(CostFunction(q)).dump());
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"solve", small, "--solver", "qaoa", "--restarts", "2", "--max-iters", "80", "--seed", "4"},
             {"landscape", small, "--grid", "5", "--seed", "3"},
             {"resources"}}) {
        const CliRun a = cli_run(args);
        const CliRun b = cli_run(args);
        const bool is_json = args[0] == "solve";
        same(a.code == 0 && (is_json ? strip_timing(a.out) == strip_timing(b.out) : a.out == b.out),
             "cli " + args[0]);
    }
    std::filesystem::remove_all(dir);
    if (o.ok) o.detail = std::to_string(checked) + " entry points reproduced";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Ising transform equivalence", ising_equivalence},
        {"TSP encoding variable counts", encoding_counts},
        {"one-hot and binary encoders agree", encoder_equivalence},
        {"penalty dominance", penalty_dominance},
        {"QAOA simulator matches dense oracle", qaoa_oracle},
        {"zero-angle law", zero_angle_law},
        {"QAOA improves on the uniform state", qaoa_improvement},
        {"time-to-solution formula", tts_formula},
        {"annealing success on five cities", annealing_success},
        {"traffic grid ground states and symmetry", traffic_grid},
        {"landscape slice", landscape},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.ok) ++failures;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << (k + 1) << " " << criteria[k].first << ": "
                  << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
