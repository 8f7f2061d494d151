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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtransport/cost.hpp"

namespace qtransport {

using Amplitude = std::complex<double>;

/// 2^24 complex doubles, 256 MiB.
inline constexpr std::size_t kDefaultQubitCap = 24;

/// Dense state of n qubits. Basis index k holds the amplitude of the
/// bitstring with x_i = bit i of k.
class StateVector {
 public:
    /// Throws DimensionError unless amplitudes.size() == 2^num_qubits.
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

    /// The computational basis state |index>.
    static StateVector basis(std::size_t num_qubits, std::uint64_t index);

    std::size_t num_qubits() const noexcept { return num_qubits_; }
    std::size_t dimension() const noexcept { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    std::span<Amplitude> amplitudes() noexcept { return amps_; }
    const Amplitude& operator[](std::uint64_t k) const { return amps_[k]; }

    double norm_squared() const;
    std::vector<double> probabilities() const;

 private:
    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// Equal superposition 2^{-n/2} on every basis state. Throws ResourceError
/// for n > cap and ParameterError for n = 0.
StateVector init_uniform(std::size_t n, std::size_t cap = kDefaultQubitCap);

/// C(x) for every basis index, each by direct evaluation of the cost.
std::vector<double> cost_diagonal(const CostFunction& cost, std::size_t cap = kDefaultQubitCap);

/// amplitude_k *= exp(-i gamma C_k).
void apply_cost_phase(StateVector& state, std::span<const double> diagonal, double gamma);
StateVector apply_cost_phase(StateVector state, const CostFunction& cost, double gamma);

/// exp(-i beta X_q) on every qubit q: each amplitude pair differing in bit q
/// is rotated by [[cos b, -i sin b], [-i sin b, cos b]].
void apply_mixer(StateVector& state, double beta);

struct QaoaParams {
    std::vector<double> gammas;  ///< cost angles, one per layer
    std::vector<double> betas;   ///< mixing angles, one per layer

    std::size_t depth() const noexcept { return gammas.size(); }
    /// Throws ParameterError when depth is 0 or the lengths differ.
    void validate() const;

    /// [gamma_1..gamma_p, beta_1..beta_p].
    std::vector<double> flatten() const;
    static QaoaParams unflatten(std::span<const double> flat);
    /// All-zero angles of the given depth.
    static QaoaParams zeros(std::size_t depth);
};

/// Uniform state, then cost phase gamma_k and mixer beta_k for k = 1..p.
StateVector run_qaoa_circuit(std::size_t n, const CostFunction& cost, const QaoaParams& params);
StateVector run_qaoa_circuit(std::span<const double> diagonal, std::size_t n,
                             const QaoaParams& params);

/// sum_k |a_k|^2 C_k.
double expectation(const StateVector& state, const CostFunction& cost);
double expectation(const StateVector& state, std::span<const double> diagonal);

struct SampleCounts {
    std::size_t num_qubits = 0;
    std::size_t shots = 0;
    std::map<std::uint64_t, std::size_t> counts;  ///< basis index -> occurrences
};

/// i.i.d. Born-rule draws. Deterministic for a given seed.
SampleCounts sample(const StateVector& state, std::size_t shots, std::uint64_t seed);

/// "x_0 x_1 ... x_{n-1}" for a basis index.
std::string to_bitstring(std::uint64_t index, std::size_t n);
Assignment to_assignment(std::uint64_t index, std::size_t n);

enum class Estimator { exact, sampled };

struct AngleOptimizerOptions {
    std::size_t restarts = 10;
    std::size_t max_iters = 500;
    double tolerance = 1e-6;
    Estimator estimator = Estimator::exact;
    std::size_t shots = 1024;  ///< per evaluation, sampled mode only
    std::size_t qubit_cap = kDefaultQubitCap;
    /// Extra starting point tried before the random restarts.
    std::optional<QaoaParams> initial;
};

struct AngleOptimization {
    QaoaParams params;
    double expectation = 0.0;   ///< exact expectation at params
    std::vector<double> trace;  ///< best objective so far, per simplex iteration
    std::size_t evaluations = 0;
};

/// Nelder-Mead over the 2p angles from `initial` (if any) and from `restarts`
/// random points with gammas in [0, pi) and betas in [0, pi/2); keeps the
/// best. In sampled mode the objective is a shot estimate.
AngleOptimization optimize_angles(const CostFunction& cost, std::size_t p,
                                  const AngleOptimizerOptions& options, std::uint64_t seed);

AngleOptimization optimize_angles(const CostFunction& cost, std::size_t p, std::size_t restarts,
                                  std::size_t max_iters, std::uint64_t seed);

struct Landscape {
    QaoaParams center;
    std::vector<double> u;        ///< row direction, unit length
    std::vector<double> v;        ///< column direction, unit length, orthogonal to u
    std::vector<double> offsets;  ///< grid coordinates, shared by rows and columns
    std::vector<std::vector<double>> values;  ///< values[r][c] at center + offsets[r] u + offsets[c] v
    std::uint64_t seed = 0;
};

/// Exact expectation on a resolution x resolution grid spanning
/// [-extent, extent]^2 in a plane through `center`. The plane is random and
/// seeded unless axis_aligned, which uses the gamma_1 and beta_1 axes.
Landscape landscape_slice(const CostFunction& cost, const QaoaParams& center,
                          std::size_t resolution, double extent, std::uint64_t seed,
                          bool axis_aligned = false, std::size_t qubit_cap = kDefaultQubitCap);

}  // namespace qtransport
