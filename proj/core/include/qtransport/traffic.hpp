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

#include <vector>

#include "qtransport/ising.hpp"

namespace qtransport {

/// Spin value of an intersection serving east-west traffic.
inline constexpr int kEastWest = +1;
/// Spin value of an intersection serving north-south traffic.
inline constexpr int kNorthSouth = -1;

/// Rectangular grid of signalized intersections, row-major, 4-neighbour
/// adjacency. One spin per intersection selects its active mode, so exactly
/// one mode is active everywhere by construction.
struct TrafficGrid {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> q_ns;  ///< queued vehicles waiting north-south
    std::vector<double> q_ew;  ///< queued vehicles waiting east-west
    std::vector<int> prev;     ///< previous mode, +-1, or 0 when unknown
    double bias_weight = 1.0;        ///< A
    double switch_weight = 0.0;      ///< B
    double green_wave_weight = 0.0;  ///< G

    std::size_t size() const noexcept { return rows * cols; }
    Index index(std::size_t row, std::size_t col) const noexcept { return row * cols + col; }

    /// Throws DomainError for negative queues or a prev entry outside
    /// {-1, 0, 1}, ParameterError for negative weights, DimensionError when
    /// vector lengths disagree with rows * cols.
    void validate() const;
};

/// H(s) = sum_i A (q_ns_i - q_ew_i) s_i - sum_i B prev_i s_i - sum_<i,j> G s_i s_j
///
/// The flow term makes the mode with the longer queue cheaper, the switching
/// term rewards keeping the previous mode and the green-wave term rewards
/// neighbours sharing a mode.
IsingModel encode_traffic_grid(const TrafficGrid& grid);

}  // namespace qtransport
