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

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "qtransport/ising.hpp"
#include "qtransport/polynomial.hpp"
#include "qtransport/qubo.hpp"

namespace qtransport {

/// Any cost the solvers accept. All of them are minimized over binary x; an
/// IsingModel is read through s = 1 - 2x.
using CostFunction = std::variant<QuboModel, IsingModel, PseudoBooleanPolynomial>;

std::size_t num_vars(const CostFunction& cost);

/// Energy of x under the cost's own evaluator (evaluate_ising on 1 - 2x for
/// Ising models).
double evaluate(const CostFunction& cost, std::span<const std::uint8_t> x);

/// Binary-variable polynomial equal to the cost on every assignment.
PseudoBooleanPolynomial to_polynomial(const CostFunction& cost);

/// Flat term storage with per-variable term adjacency, built once and shared
/// by the enumeration, annealing and statevector code paths.
class CompiledCost {
 public:
    explicit CompiledCost(const PseudoBooleanPolynomial& poly);
    explicit CompiledCost(const CostFunction& cost);

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::size_t num_terms() const noexcept { return coeff_.size(); }
    double constant() const noexcept { return constant_; }
    double max_abs_coefficient() const noexcept { return max_abs_; }

    double energy(std::span<const std::uint8_t> x) const;

    /// energy(x with bit k flipped) - energy(x), touching only the terms that
    /// contain k.
    double flip_delta(std::span<const std::uint8_t> x, Index k) const;

    /// Energy of the basis index whose bit i is x_i. Requires num_vars <= 64.
    double energy_of_index(std::uint64_t index) const;

    /// flip_delta on a basis index. Requires num_vars <= 64.
    double flip_delta_of_index(std::uint64_t index, Index k) const;

 private:
    std::size_t num_vars_ = 0;
    double constant_ = 0.0;
    double max_abs_ = 0.0;
    std::vector<double> coeff_;
    std::vector<std::size_t> term_begin_;  // size num_terms + 1
    std::vector<Index> term_vars_;
    std::vector<std::uint64_t> term_mask_;  // empty when num_vars > 64
    std::vector<std::vector<std::size_t>> var_terms_;
};

}  // namespace qtransport
