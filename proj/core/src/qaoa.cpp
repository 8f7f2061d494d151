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

#include "qtransport/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qtransport/errors.hpp"
#include "qtransport/nelder_mead.hpp"
#include "qtransport/random.hpp"

namespace qtransport {

namespace {

void check_qubits(std::size_t n, std::size_t cap) {
    if (n == 0) throw ParameterError("a state needs at least one qubit");
    if (n > cap || n > 62) {
        throw ResourceError("statevector of " + std::to_string(n) + " qubits exceeds the cap of " +
                            std::to_string(cap));
    }
}

void check_diagonal(const StateVector& state, std::span<const double> diagonal) {
    if (diagonal.size() != state.dimension()) {
        throw DimensionError("cost diagonal has " + std::to_string(diagonal.size()) +
                             " entries, state has " + std::to_string(state.dimension()));
    }
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (num_qubits_ > 62 || amps_.size() != (std::uint64_t{1} << num_qubits_)) {
        throw DimensionError("state of " + std::to_string(num_qubits_) + " qubits needs 2^" +
                             std::to_string(num_qubits_) + " amplitudes");
    }
}

StateVector StateVector::basis(std::size_t num_qubits, std::uint64_t index) {
    check_qubits(num_qubits, kDefaultQubitCap);
    std::vector<Amplitude> amps(std::uint64_t{1} << num_qubits);
    if (index >= amps.size()) throw DimensionError("basis index out of range");
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t k = 0; k < amps_.size(); ++k) p[k] = std::norm(amps_[k]);
    return p;
}

StateVector init_uniform(std::size_t n, std::size_t cap) {
    check_qubits(n, cap);
    const std::uint64_t dim = std::uint64_t{1} << n;
    const double a = std::pow(2.0, -0.5 * static_cast<double>(n));
    return StateVector(n, std::vector<Amplitude>(dim, Amplitude(a, 0.0)));
}

std::vector<double> cost_diagonal(const CostFunction& cost, std::size_t cap) {
    const std::size_t n = num_vars(cost);
    check_qubits(n, cap);
    const CompiledCost compiled(cost);
    std::vector<double> diag(std::uint64_t{1} << n);
    for (std::uint64_t k = 0; k < diag.size(); ++k) diag[k] = compiled.energy_of_index(k);
    return diag;
}

void apply_cost_phase(StateVector& state, std::span<const double> diagonal, double gamma) {
    check_diagonal(state, diagonal);
    if (gamma == 0.0) return;
    auto amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        const double phase = gamma * diagonal[k];
        amps[k] *= Amplitude(std::cos(phase), -std::sin(phase));
    }
}

StateVector apply_cost_phase(StateVector state, const CostFunction& cost, double gamma) {
    if (num_vars(cost) != state.num_qubits()) {
        throw DimensionError("cost has " + std::to_string(num_vars(cost)) +
                             " variables, state has " + std::to_string(state.num_qubits()) +
                             " qubits");
    }
    const auto diag = cost_diagonal(cost, std::max(kDefaultQubitCap, state.num_qubits()));
    apply_cost_phase(state, diag, gamma);
    return state;
}

void apply_mixer(StateVector& state, double beta) {
    if (beta == 0.0) return;
    const double c = std::cos(beta);
    const Amplitude mis(0.0, -std::sin(beta));
    auto amps = state.amplitudes();
    const std::uint64_t dim = amps.size();
    for (std::size_t q = 0; q < state.num_qubits(); ++q) {
        const std::uint64_t stride = std::uint64_t{1} << q;
        for (std::uint64_t block = 0; block < dim; block += 2 * stride) {
            for (std::uint64_t k = block; k < block + stride; ++k) {
                const Amplitude a = amps[k];
                const Amplitude b = amps[k + stride];
                amps[k] = c * a + mis * b;
                amps[k + stride] = mis * a + c * b;
            }
        }
    }
}

void QaoaParams::validate() const {
    if (gammas.empty()) throw ParameterError("QAOA depth must be at least 1");
    if (gammas.size() != betas.size()) {
        throw ParameterError("QAOA needs as many mixing angles as cost angles");
    }
    for (double a : gammas) {
        if (!std::isfinite(a)) throw ParameterError("QAOA angles must be finite");
    }
    for (double a : betas) {
        if (!std::isfinite(a)) throw ParameterError("QAOA angles must be finite");
    }
}

std::vector<double> QaoaParams::flatten() const {
    std::vector<double> flat(gammas);
    flat.insert(flat.end(), betas.begin(), betas.end());
    return flat;
}

QaoaParams QaoaParams::unflatten(std::span<const double> flat) {
    if (flat.size() % 2 != 0) throw ParameterError("flattened angles must have even length");
    const std::size_t p = flat.size() / 2;
    return QaoaParams{{flat.begin(), flat.begin() + p}, {flat.begin() + p, flat.end()}};
}

QaoaParams QaoaParams::zeros(std::size_t depth) {
    return QaoaParams{std::vector<double>(depth, 0.0), std::vector<double>(depth, 0.0)};
}

StateVector run_qaoa_circuit(std::span<const double> diagonal, std::size_t n,
                             const QaoaParams& params) {
    params.validate();
    StateVector state = init_uniform(n, std::max(kDefaultQubitCap, n));
    for (std::size_t k = 0; k < params.depth(); ++k) {
        apply_cost_phase(state, diagonal, params.gammas[k]);
        apply_mixer(state, params.betas[k]);
    }
    return state;
}

StateVector run_qaoa_circuit(std::size_t n, const CostFunction& cost, const QaoaParams& params) {
    if (num_vars(cost) != n) {
        throw DimensionError("cost has " + std::to_string(num_vars(cost)) +
                             " variables, circuit has " + std::to_string(n) + " qubits");
    }
    const auto diag = cost_diagonal(cost);
    return run_qaoa_circuit(diag, n, params);
}

double expectation(const StateVector& state, std::span<const double> diagonal) {
    check_diagonal(state, diagonal);
    double e = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) e += std::norm(amps[k]) * diagonal[k];
    return e;
}

double expectation(const StateVector& state, const CostFunction& cost) {
    if (num_vars(cost) != state.num_qubits()) {
        throw DimensionError("cost has " + std::to_string(num_vars(cost)) +
                             " variables, state has " + std::to_string(state.num_qubits()) +
                             " qubits");
    }
    return expectation(state, cost_diagonal(cost, std::max(kDefaultQubitCap, state.num_qubits())));
}

SampleCounts sample(const StateVector& state, std::size_t shots, std::uint64_t seed) {
    if (shots == 0) throw ParameterError("shots must be at least 1");
    const auto probs = state.probabilities();
    std::discrete_distribution<std::uint64_t> dist(probs.begin(), probs.end());
    Rng rng(seed);
    SampleCounts out;
    out.num_qubits = state.num_qubits();
    out.shots = shots;
    for (std::size_t s = 0; s < shots; ++s) ++out.counts[dist(rng)];
    return out;
}

std::string to_bitstring(std::uint64_t index, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
        if (index >> i & 1U) s[i] = '1';
    }
    return s;
}

Assignment to_assignment(std::uint64_t index, std::size_t n) {
    Assignment x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>(index >> i & 1U);
    return x;
}

AngleOptimization optimize_angles(const CostFunction& cost, std::size_t p,
                                  const AngleOptimizerOptions& options, std::uint64_t seed) {
    if (p == 0) throw ParameterError("QAOA depth must be at least 1");
    if (options.restarts == 0 && !options.initial) {
        throw ParameterError("angle optimization needs a restart or an initial point");
    }
    if (options.initial && options.initial->depth() != p) {
        throw ParameterError("initial angles have the wrong depth");
    }
    if (options.estimator == Estimator::sampled && options.shots == 0) {
        throw ParameterError("sampled estimation needs shots >= 1");
    }
    const std::size_t n = num_vars(cost);
    const auto diag = cost_diagonal(cost, options.qubit_cap);

    std::uint64_t evaluation = 0;
    auto objective = [&](std::span<const double> flat) {
        const StateVector state = run_qaoa_circuit(diag, n, QaoaParams::unflatten(flat));
        if (options.estimator == Estimator::exact) return expectation(state, diag);
        const SampleCounts counts = sample(state, options.shots, derive_seed(seed, ++evaluation));
        double total = 0.0;
        for (const auto& [k, c] : counts.counts) total += diag[k] * static_cast<double>(c);
        return total / static_cast<double>(counts.shots);
    };

    std::vector<std::vector<double>> starts;
    if (options.initial) {
        options.initial->validate();
        starts.push_back(options.initial->flatten());
    }
    Rng rng(seed);
    std::uniform_real_distribution<double> gamma_dist(0.0, std::numbers::pi);
    std::uniform_real_distribution<double> beta_dist(0.0, std::numbers::pi / 2);
    for (std::size_t r = 0; r < options.restarts; ++r) {
        std::vector<double> x(2 * p);
        for (std::size_t k = 0; k < p; ++k) x[k] = gamma_dist(rng);
        for (std::size_t k = 0; k < p; ++k) x[p + k] = beta_dist(rng);
        starts.push_back(std::move(x));
    }

    NelderMeadOptions nm;
    nm.max_iters = options.max_iters;
    nm.tolerance = options.tolerance;

    AngleOptimization out;
    double best = 0.0;
    bool have_best = false;
    for (auto& start : starts) {
        NelderMeadResult local = nelder_mead(objective, std::move(start), nm);
        out.evaluations += local.evaluations;
        for (double v : local.trace) {
            out.trace.push_back(have_best ? std::min(best, v) : v);
        }
        if (!have_best || local.value < best) {
            best = local.value;
            have_best = true;
            out.params = QaoaParams::unflatten(local.x);
        }
        if (!out.trace.empty()) out.trace.back() = std::min(out.trace.back(), best);
    }
    out.expectation = expectation(run_qaoa_circuit(diag, n, out.params), diag);
    return out;
}

AngleOptimization optimize_angles(const CostFunction& cost, std::size_t p, std::size_t restarts,
                                  std::size_t max_iters, std::uint64_t seed) {
    AngleOptimizerOptions options;
    options.restarts = restarts;
    options.max_iters = max_iters;
    return optimize_angles(cost, p, options, seed);
}

Landscape landscape_slice(const CostFunction& cost, const QaoaParams& center,
                          std::size_t resolution, double extent, std::uint64_t seed,
                          bool axis_aligned, std::size_t qubit_cap) {
    center.validate();
    if (resolution < 2) throw ParameterError("landscape resolution must be at least 2");
    if (!std::isfinite(extent) || extent <= 0.0) throw ParameterError("extent must be positive");
    const std::size_t p = center.depth();
    const std::size_t dim = 2 * p;

    Landscape out;
    out.center = center;
    out.seed = seed;
    out.u.assign(dim, 0.0);
    out.v.assign(dim, 0.0);
    if (axis_aligned) {
        out.u[0] = 1.0;
        out.v[p] = 1.0;
    } else {
        Rng rng(seed);
        std::normal_distribution<double> normal(0.0, 1.0);
        auto normalize = [](std::vector<double>& w) {
            double s = 0.0;
            for (double c : w) s += c * c;
            s = std::sqrt(s);
            for (double& c : w) c /= s;
            return s;
        };
        do {
            for (double& c : out.u) c = normal(rng);
        } while (normalize(out.u) < 1e-8);
        double residual = 0.0;
        do {
            for (double& c : out.v) c = normal(rng);
            double dot = 0.0;
            for (std::size_t k = 0; k < dim; ++k) dot += out.u[k] * out.v[k];
            for (std::size_t k = 0; k < dim; ++k) out.v[k] -= dot * out.u[k];
            residual = normalize(out.v);
        } while (residual < 1e-8);
    }

    out.offsets.resize(resolution);
    for (std::size_t k = 0; k < resolution; ++k) {
        out.offsets[k] = -extent + 2.0 * extent * static_cast<double>(k) /
                                       static_cast<double>(resolution - 1);
    }

    const std::size_t n = num_vars(cost);
    const auto diag = cost_diagonal(cost, qubit_cap);
    const auto base = center.flatten();
    std::vector<double> point(dim);
    out.values.assign(resolution, std::vector<double>(resolution, 0.0));
    for (std::size_t r = 0; r < resolution; ++r) {
        for (std::size_t c = 0; c < resolution; ++c) {
            for (std::size_t k = 0; k < dim; ++k) {
                point[k] = base[k] + out.offsets[r] * out.u[k] + out.offsets[c] * out.v[k];
            }
            out.values[r][c] =
                expectation(run_qaoa_circuit(diag, n, QaoaParams::unflatten(point)), diag);
        }
    }
    return out;
}

}  // namespace qtransport
