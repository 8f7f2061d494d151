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

#include <map>
#include <span>
#include <vector>

#include "qtransport/qubo.hpp"

namespace qtransport {

/// Spin configuration, every entry +1 or -1.
using Spins = std::vector<int>;

/// Spin-variable energy
///
///     H(s) = offset + sum_i w_i s_i + sum_{i<j} J_ij s_i s_j
///
/// Couplings are stored once per unordered pair with both symmetric
/// contributions combined, mirroring QuboModel.
class IsingModel {
 public:
    IsingModel() = default;
    explicit IsingModel(std::size_t num_vars, double offset = 0.0);

    std::size_t num_vars() const noexcept { return num_vars_; }
    double offset() const noexcept { return offset_; }
    const std::map<Index, double>& field() const noexcept { return field_; }
    const std::map<IndexPair, double>& coupling() const noexcept { return coupling_; }

    double field(Index i) const;
    double coupling(Index i, Index j) const;

    IsingModel& add_offset(double c);
    IsingModel& add_field(Index i, double c);
    /// Diagonal couplings contribute s_i^2 = 1 and fold into the offset.
    IsingModel& add_coupling(Index i, Index j, double c);

    double energy(std::span<const int> spins) const;

    friend bool operator==(const IsingModel&, const IsingModel&) = default;

 private:
    void check_index(Index i) const;

    std::size_t num_vars_ = 0;
    double offset_ = 0.0;
    std::map<Index, double> field_;
    std::map<IndexPair, double> coupling_;
};

/// Throws DomainError for any entry other than +-1 and DimensionError on a
/// length mismatch.
double evaluate_ising(const IsingModel& model, std::span<const int> spins);

/// Exact change of variables s = 1 - 2x. Per upper-triangular Q_ij the
/// coupling gets Q_ij/4, both fields get -Q_ij/4 and the offset Q_ij/4; each
/// h_i moves -h_i/2 into the field and h_i/2 into the offset.
IsingModel to_ising(const QuboModel& model);

/// Inverse of to_ising, substituting s = 1 - 2x.
QuboModel to_qubo(const IsingModel& model);

/// s_i = 1 - 2 x_i.
Spins to_spins(std::span<const std::uint8_t> x);

/// x_i = (1 - s_i) / 2. Throws DomainError for entries other than +-1.
Assignment from_spins(std::span<const int> spins);

}  // namespace qtransport
