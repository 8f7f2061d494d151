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

#include "qtransport/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qtransport/errors.hpp"

namespace qtransport {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0,
                             const NelderMeadOptions& options) {
    const std::size_t dim = x0.size();
    if (dim == 0) throw ParameterError("Nelder-Mead needs at least one dimension");

    NelderMeadResult result;
    auto eval = [&](const std::vector<double>& x) {
        ++result.evaluations;
        return f(x);
    };

    std::vector<std::vector<double>> simplex(dim + 1, x0);
    for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += options.initial_step;
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) values[i] = eval(simplex[i]);

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim), second(dim);

    auto along = [&](std::vector<double>& out, const std::vector<double>& worst, double coef) {
        for (std::size_t k = 0; k < dim; ++k) out[k] = centroid[k] + coef * (centroid[k] - worst[k]);
    };

    for (result.iterations = 0; result.iterations < options.max_iters;) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t next_worst = order[dim - 1];

        double spread = values[worst] - values[best];
        double size = 0.0;
        for (std::size_t i = 0; i <= dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) {
                size = std::max(size, std::abs(simplex[i][k] - simplex[best][k]));
            }
        }
        if (spread <= options.tolerance && size <= options.tolerance) break;
        ++result.iterations;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k];
        }
        for (auto& c : centroid) c /= static_cast<double>(dim);

        along(trial, simplex[worst], kReflect);
        const double reflected = eval(trial);
        if (reflected < values[best]) {
            along(second, simplex[worst], kExpand);
            const double expanded = eval(second);
            if (expanded < reflected) {
                simplex[worst] = second;
                values[worst] = expanded;
            } else {
                simplex[worst] = trial;
                values[worst] = reflected;
            }
        } else if (reflected < values[next_worst]) {
            simplex[worst] = trial;
            values[worst] = reflected;
        } else {
            const bool outside = reflected < values[worst];
            along(second, simplex[worst], outside ? kContract : -kContract);
            const double contracted = eval(second);
            if (contracted < std::min(reflected, values[worst])) {
                simplex[worst] = second;
                values[worst] = contracted;
            } else {
                for (std::size_t i = 0; i <= dim; ++i) {
                    if (i == best) continue;
                    for (std::size_t k = 0; k < dim; ++k) {
                        simplex[i][k] = simplex[best][k] + kShrink * (simplex[i][k] - simplex[best][k]);
                    }
                    values[i] = eval(simplex[i]);
                }
            }
        }
        result.trace.push_back(*std::min_element(values.begin(), values.end()));
    }

    const auto best = static_cast<std::size_t>(
        std::min_element(values.begin(), values.end()) - values.begin());
    result.x = simplex[best];
    result.value = values[best];
    return result;
}

}  // namespace qtransport
