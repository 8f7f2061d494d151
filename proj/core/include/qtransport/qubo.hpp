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
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace qtransport {

using Index = std::size_t;

/// A binary assignment x, one entry in {0, 1} per variable.
using Assignment = std::vector<std::uint8_t>;

/// Canonical key of a quadratic coefficient, always first < second.
using IndexPair = std::pair<Index, Index>;

/// Quadratic objective over binary variables:
///
///     C(x) = offset + sum_i h_i x_i + sum_{i<j} Q_ij x_i x_j
///
/// The quadratic part is stored once per unordered pair under the key (i, j)
/// with i < j. Adding (j, i) accumulates into the same key and adding (i, i)
/// folds into the linear coefficient since x_i^2 = x_i. Coefficients that
/// cancel to exactly zero are dropped, so an absent key always means zero.
class QuboModel {
 public:
    QuboModel() = default;
    explicit QuboModel(std::size_t num_vars, double offset = 0.0);

    std::size_t num_vars() const noexcept { return num_vars_; }
    double offset() const noexcept { return offset_; }
    const std::map<Index, double>& linear() const noexcept { return linear_; }
    const std::map<IndexPair, double>& quadratic() const noexcept { return quadratic_; }

    double linear(Index i) const;
    double quadratic(Index i, Index j) const;

    QuboModel& add_offset(double c);
    QuboModel& add_linear(Index i, double c);
    QuboModel& add_quadratic(Index i, Index j, double c);

    /// Appends `count` fresh variables and returns the index of the first.
    Index add_variables(std::size_t count);

    double energy(std::span<const std::uint8_t> x) const;

    friend bool operator==(const QuboModel&, const QuboModel&) = default;

 private:
    void check_index(Index i) const;

    std::size_t num_vars_ = 0;
    double offset_ = 0.0;
    std::map<Index, double> linear_;
    std::map<IndexPair, double> quadratic_;
};

/// offset + h.x + sum_{i<j} Q_ij x_i x_j. Throws DimensionError when the
/// assignment length differs from num_vars.
double evaluate_qubo(const QuboModel& model, std::span<const std::uint8_t> x);

/// 1 + sum |h_i| + sum |Q_ij|. Any violation of an integral linear constraint
/// penalized with at least this weight costs more than the objective's whole
/// range.
double default_penalty_weight(const QuboModel& model);

/// Returns a copy of `model` with lambda * (a.x - b)^2 added, expanded and
/// with x_i^2 folded into x_i.
QuboModel add_equality_constraint(const QuboModel& model, std::span<const double> a, double b,
                                  double lambda);

/// Same as above with lambda = default_penalty_weight(model).
QuboModel add_equality_constraint(const QuboModel& model, std::span<const double> a, double b);

struct SlackExtension {
    QuboModel model;
    Index slack_begin = 0;  ///< first slack variable
    Index slack_end = 0;    ///< one past the last slack variable
    std::vector<std::int64_t> slack_weights;
};

/// Weights of the binary slack register for a bound b >= 0: 1, 2, 4, ...
/// with the last weight trimmed so the weights sum to exactly b. Empty for b = 0.
std::vector<std::int64_t> slack_weights(std::int64_t bound);

/// Encodes a.x <= b by appending slack bits s (see slack_weights) and adding
/// lambda * (a.x + s - b)^2. `a` covers the original variables only.
SlackExtension add_inequality_constraint(const QuboModel& model, std::span<const double> a,
                                         std::int64_t b, double lambda);

SlackExtension add_inequality_constraint(const QuboModel& model, std::span<const double> a,
                                         std::int64_t b);

}  // namespace qtransport
