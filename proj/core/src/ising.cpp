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

#include "qtransport/ising.hpp"

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

}  // namespace

IsingModel::IsingModel(std::size_t num_vars, double offset) : num_vars_(num_vars), offset_(offset) {
    check_finite(offset);
}

void IsingModel::check_index(Index i) const {
    if (i >= num_vars_) {
        throw DimensionError("spin index " + std::to_string(i) + " out of range for " +
                             std::to_string(num_vars_) + " spins");
    }
}

double IsingModel::field(Index i) const {
    auto it = field_.find(i);
    return it == field_.end() ? 0.0 : it->second;
}

double IsingModel::coupling(Index i, Index j) const {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    auto it = coupling_.find({i, j});
    return it == coupling_.end() ? 0.0 : it->second;
}

IsingModel& IsingModel::add_offset(double c) {
    check_finite(c);
    offset_ += c;
    return *this;
}

IsingModel& IsingModel::add_field(Index i, double c) {
    check_index(i);
    check_finite(c);
    accumulate(field_, i, c);
    return *this;
}

IsingModel& IsingModel::add_coupling(Index i, Index j, double c) {
    check_index(i);
    check_index(j);
    check_finite(c);
    if (i == j) {
        offset_ += c;
        return *this;
    }
    if (i > j) std::swap(i, j);
    accumulate(coupling_, IndexPair{i, j}, c);
    return *this;
}

double IsingModel::energy(std::span<const int> spins) const {
    if (spins.size() != num_vars_) {
        throw DimensionError("spin vector has " + std::to_string(spins.size()) +
                             " entries, model has " + std::to_string(num_vars_));
    }
    for (std::size_t i = 0; i < spins.size(); ++i) {
        if (spins[i] != 1 && spins[i] != -1) {
            throw DomainError("spin " + std::to_string(i) + " is " + std::to_string(spins[i]) +
                              ", expected +1 or -1");
        }
    }
    double e = offset_;
    for (const auto& [i, w] : field_) e += w * spins[i];
    for (const auto& [ij, j] : coupling_) e += j * spins[ij.first] * spins[ij.second];
    return e;
}

double evaluate_ising(const IsingModel& model, std::span<const int> spins) {
    return model.energy(spins);
}

IsingModel to_ising(const QuboModel& model) {
    IsingModel out(model.num_vars(), model.offset());
    for (const auto& [i, h] : model.linear()) {
        out.add_field(i, -0.5 * h);
        out.add_offset(0.5 * h);
    }
    for (const auto& [ij, q] : model.quadratic()) {
        const double quarter = 0.25 * q;
        out.add_coupling(ij.first, ij.second, quarter);
        out.add_field(ij.first, -quarter);
        out.add_field(ij.second, -quarter);
        out.add_offset(quarter);
    }
    return out;
}

QuboModel to_qubo(const IsingModel& model) {
    QuboModel out(model.num_vars(), model.offset());
    for (const auto& [i, w] : model.field()) {
        out.add_offset(w);
        out.add_linear(i, -2.0 * w);
    }
    for (const auto& [ij, j] : model.coupling()) {
        out.add_offset(j);
        out.add_linear(ij.first, -2.0 * j);
        out.add_linear(ij.second, -2.0 * j);
        out.add_quadratic(ij.first, ij.second, 4.0 * j);
    }
    return out;
}

Spins to_spins(std::span<const std::uint8_t> x) {
    Spins s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] ? -1 : 1;
    return s;
}

Assignment from_spins(std::span<const int> spins) {
    Assignment x(spins.size());
    for (std::size_t i = 0; i < spins.size(); ++i) {
        if (spins[i] == 1) {
            x[i] = 0;
        } else if (spins[i] == -1) {
            x[i] = 1;
        } else {
            throw DomainError("spin " + std::to_string(i) + " is " + std::to_string(spins[i]) +
                              ", expected +1 or -1");
        }
    }
    return x;
}

}  // namespace qtransport
