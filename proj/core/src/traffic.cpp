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

#include "qtransport/traffic.hpp"

#include <cmath>
#include <string>

#include "qtransport/errors.hpp"

namespace qtransport {

void TrafficGrid::validate() const {
    if (rows == 0 || cols == 0) throw ParameterError("traffic grid must have rows and cols >= 1");
    const std::size_t n = size();
    if (q_ns.size() != n || q_ew.size() != n || prev.size() != n) {
        throw DimensionError("q_ns, q_ew and prev must each have rows * cols = " +
                             std::to_string(n) + " entries");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(q_ns[i]) || !std::isfinite(q_ew[i]) || q_ns[i] < 0.0 || q_ew[i] < 0.0) {
            throw DomainError("queue lengths at intersection " + std::to_string(i) +
                              " must be finite and nonnegative");
        }
        if (prev[i] < -1 || prev[i] > 1) {
            throw DomainError("prev[" + std::to_string(i) + "] must be -1, 0 or +1");
        }
    }
    for (double w : {bias_weight, switch_weight, green_wave_weight}) {
        if (!std::isfinite(w) || w < 0.0) throw ParameterError("traffic weights must be >= 0");
    }
}

IsingModel encode_traffic_grid(const TrafficGrid& grid) {
    grid.validate();
    IsingModel model(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        model.add_field(i, grid.bias_weight * (grid.q_ns[i] - grid.q_ew[i]));
        model.add_field(i, -grid.switch_weight * grid.prev[i]);
    }
    if (grid.green_wave_weight == 0.0) return model;
    for (std::size_t r = 0; r < grid.rows; ++r) {
        for (std::size_t c = 0; c < grid.cols; ++c) {
            const Index here = grid.index(r, c);
            if (c + 1 < grid.cols) model.add_coupling(here, grid.index(r, c + 1), -grid.green_wave_weight);
            if (r + 1 < grid.rows) model.add_coupling(here, grid.index(r + 1, c), -grid.green_wave_weight);
        }
    }
    return model;
}

}  // namespace qtransport
