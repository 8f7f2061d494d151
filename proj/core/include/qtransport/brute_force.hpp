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

#include <cstddef>

#include "qtransport/cost.hpp"

namespace qtransport {

inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// Energies within this distance of the minimum count as ties.
inline double tie_tolerance(double energy) { return 1e-9 * (1.0 + (energy < 0 ? -energy : energy)); }

struct Minimum {
    Assignment assignment;
    double energy = 0.0;
};

/// Exhaustive global minimum. Ties (see tie_tolerance) resolve to the
/// lexicographically smallest bitstring, comparing x_0 first. The returned
/// energy is re-evaluated with the cost's own evaluator.
///
/// Throws ResourceError when num_vars exceeds `cap`.
Minimum brute_force_min(const CostFunction& cost, std::size_t cap = kDefaultEnumerationCap);

struct SpinMinimum {
    Spins spins;
    double energy = 0.0;
};

/// Plain enumeration in spin space with evaluate_ising, independent of the
/// QUBO path. Ties resolve like brute_force_min under x = (1 - s) / 2.
SpinMinimum brute_force_min_spins(const IsingModel& model,
                                  std::size_t cap = kDefaultEnumerationCap);

}  // namespace qtransport
