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

#include <functional>
#include <span>
#include <vector>

namespace qtransport {

struct NelderMeadOptions {
    std::size_t max_iters = 500;
    /// Stop once both the spread of vertex values and the largest vertex
    /// distance from the best vertex fall below this.
    double tolerance = 1e-6;
    double initial_step = 0.1;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    std::vector<double> trace;  ///< best vertex value after each iteration
};

using Objective = std::function<double(std::span<const double>)>;

/// Downhill simplex minimization with the standard reflection (1), expansion
/// (2), contraction (1/2) and shrink (1/2) coefficients, starting from x0 and
/// x0 + initial_step * e_i. The returned value never exceeds f(x0).
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& options = {});

}  // namespace qtransport
