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

#include "qtransport/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtransport/errors.hpp"

namespace qtransport {

namespace {

void check_finite(double c) {
    if (!std::isfinite(c)) throw ParameterError("coefficient is not finite");
}

template <class Map, class Key>
void accumulate(Map& map, const Key& key, double c) {
    if (c == 0.0) return;
    auto [it, inserted] = map.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0.0) map.erase(it);
}

void check_lambda(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw ParameterError("penalty weight must be positive and finite");
    }
}

}  // namespace

QuboModel::QuboModel(std::size_t num_vars, double offset) : num_vars_(num_vars), offset_(offset) {
    check_finite(offset);
}

void QuboModel::check_index(Index i) const {
    if (i >= num_vars_) {
        throw DimensionError("variable index " + std::to_string(i) + " out of range for " +
                             std::to_string(num_vars_) + " variables");
    }
}

double QuboModel::linear(Index i) const {
    auto it = linear_.find(i);
    return it == linear_.end() ? 0.0 : it->second;
}

double QuboModel::quadratic(Index i, Index j) const {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    auto it = quadratic_.find({i, j});
    return it == quadratic_.end() ? 0.0 : it->second;
}

QuboModel& QuboModel::add_offset(double c) {
    check_finite(c);
    offset_ += c;
    return *this;
}

QuboModel& QuboModel::add_linear(Index i, double c) {
    check_index(i);
    check_finite(c);
    accumulate(linear_, i, c);
    return *this;
}

QuboModel& QuboModel::add_quadratic(Index i, Index j, double c) {
    check_index(i);
    check_index(j);
    check_finite(c);
    if (i == j) {
        accumulate(linear_, i, c);
        return *this;
    }
    if (i > j) std::swap(i, j);
    accumulate(quadratic_, IndexPair{i, j}, c);
    return *this;
}

Index QuboModel::add_variables(std::size_t count) {
    Index first = num_vars_;
    num_vars_ += count;
    return first;
}

double QuboModel::energy(std::span<const std::uint8_t> x) const {
    if (x.size() != num_vars_) {
        throw DimensionError("assignment has " + std::to_string(x.size()) +
                             " entries, model has " + std::to_string(num_vars_));
    }
    double e = offset_;
    for (const auto& [i, h] : linear_) {
        if (x[i]) e += h;
    }
    for (const auto& [ij, q] : quadratic_) {
        if (x[ij.first] && x[ij.second]) e += q;
    }
    return e;
}

double evaluate_qubo(const QuboModel& model, std::span<const std::uint8_t> x) {
    return model.energy(x);
}

double default_penalty_weight(const QuboModel& model) {
    double sum = 1.0;
    for (const auto& [i, h] : model.linear()) sum += std::abs(h);
    for (const auto& [ij, q] : model.quadratic()) sum += std::abs(q);
    return sum;
}

namespace {

// lambda * (sum_i a_i x_i - b)^2 over the first a.size() variables plus the
// extra (index, weight) terms.
void add_squared_penalty(QuboModel& m, std::span<const double> a,
                         const std::vector<std::pair<Index, double>>& extra, double b,
                         double lambda) {
    std::vector<std::pair<Index, double>> terms;
    terms.reserve(a.size() + extra.size());
    for (Index i = 0; i < a.size(); ++i) {
        check_finite(a[i]);
        if (a[i] != 0.0) terms.emplace_back(i, a[i]);
    }
    terms.insert(terms.end(), extra.begin(), extra.end());

    m.add_offset(lambda * b * b);
    for (std::size_t u = 0; u < terms.size(); ++u) {
        const auto [i, ai] = terms[u];
        m.add_linear(i, lambda * (ai * ai - 2.0 * b * ai));
        for (std::size_t v = u + 1; v < terms.size(); ++v) {
            const auto [j, aj] = terms[v];
            m.add_quadratic(i, j, 2.0 * lambda * ai * aj);
        }
    }
}

}  // namespace

QuboModel add_equality_constraint(const QuboModel& model, std::span<const double> a, double b,
                                  double lambda) {
    check_lambda(lambda);
    check_finite(b);
    if (a.size() != model.num_vars()) {
        throw DimensionError("constraint has " + std::to_string(a.size()) +
                             " coefficients, model has " + std::to_string(model.num_vars()) +
                             " variables");
    }
    QuboModel out = model;
    add_squared_penalty(out, a, {}, b, lambda);
    return out;
}

QuboModel add_equality_constraint(const QuboModel& model, std::span<const double> a, double b) {
    return add_equality_constraint(model, a, b, default_penalty_weight(model));
}

std::vector<std::int64_t> slack_weights(std::int64_t bound) {
    if (bound < 0) throw ParameterError("inequality bound must be nonnegative");
    std::vector<std::int64_t> weights;
    std::int64_t covered = 0;
    std::int64_t next = 1;
    while (covered < bound) {
        std::int64_t w = std::min(next, bound - covered);
        weights.push_back(w);
        covered += w;
        next *= 2;
    }
    return weights;
}

SlackExtension add_inequality_constraint(const QuboModel& model, std::span<const double> a,
                                         std::int64_t b, double lambda) {
    check_lambda(lambda);
    if (b < 0) throw ParameterError("inequality bound must be nonnegative");
    if (a.size() != model.num_vars()) {
        throw DimensionError("constraint has " + std::to_string(a.size()) +
                             " coefficients, model has " + std::to_string(model.num_vars()) +
                             " variables");
    }
    SlackExtension ext;
    ext.model = model;
    ext.slack_weights = slack_weights(b);
    ext.slack_begin = ext.model.add_variables(ext.slack_weights.size());
    ext.slack_end = ext.model.num_vars();

    std::vector<std::pair<Index, double>> slack;
    for (std::size_t k = 0; k < ext.slack_weights.size(); ++k) {
        slack.emplace_back(ext.slack_begin + k, static_cast<double>(ext.slack_weights[k]));
    }
    add_squared_penalty(ext.model, a, slack, static_cast<double>(b), lambda);
    return ext;
}

SlackExtension add_inequality_constraint(const QuboModel& model, std::span<const double> a,
                                         std::int64_t b) {
    return add_inequality_constraint(model, a, b, default_penalty_weight(model));
}

}  // namespace qtransport
