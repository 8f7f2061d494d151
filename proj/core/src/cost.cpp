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

#include "qtransport/cost.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtransport/errors.hpp"

namespace qtransport {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::size_t num_vars(const CostFunction& cost) {
    return std::visit([](const auto& m) { return m.num_vars(); }, cost);
}

double evaluate(const CostFunction& cost, std::span<const std::uint8_t> x) {
    return std::visit(overloaded{
                          [&](const QuboModel& m) { return evaluate_qubo(m, x); },
                          [&](const IsingModel& m) {
                              if (x.size() != m.num_vars()) {
                                  throw DimensionError("assignment length does not match model");
                              }
                              return evaluate_ising(m, to_spins(x));
                          },
                          [&](const PseudoBooleanPolynomial& p) { return evaluate_hobo(p, x); },
                      },
                      cost);
}

PseudoBooleanPolynomial to_polynomial(const CostFunction& cost) {
    return std::visit(overloaded{
                          [](const QuboModel& m) { return to_polynomial(m); },
                          [](const IsingModel& m) { return to_polynomial(to_qubo(m)); },
                          [](const PseudoBooleanPolynomial& p) { return p; },
                      },
                      cost);
}

CompiledCost::CompiledCost(const CostFunction& cost) : CompiledCost(to_polynomial(cost)) {}

CompiledCost::CompiledCost(const PseudoBooleanPolynomial& poly)
    : num_vars_(poly.num_vars()), var_terms_(poly.num_vars()) {
    const bool masks = num_vars_ <= 64;
    term_begin_.push_back(0);
    for (const auto& [vars, c] : poly.terms()) {
        if (vars.empty()) {
            constant_ += c;
            continue;
        }
        const std::size_t t = coeff_.size();
        coeff_.push_back(c);
        max_abs_ = std::max(max_abs_, std::abs(c));
        std::uint64_t mask = 0;
        for (Index k : vars) {
            term_vars_.push_back(k);
            var_terms_[k].push_back(t);
            if (masks) mask |= std::uint64_t{1} << k;
        }
        term_begin_.push_back(term_vars_.size());
        if (masks) term_mask_.push_back(mask);
    }
}

double CompiledCost::energy(std::span<const std::uint8_t> x) const {
    if (x.size() != num_vars_) {
        throw DimensionError("assignment has " + std::to_string(x.size()) + " entries, cost has " +
                             std::to_string(num_vars_));
    }
    double e = constant_;
    for (std::size_t t = 0; t < coeff_.size(); ++t) {
        bool on = true;
        for (std::size_t u = term_begin_[t]; u < term_begin_[t + 1] && on; ++u) {
            on = x[term_vars_[u]] != 0;
        }
        if (on) e += coeff_[t];
    }
    return e;
}

double CompiledCost::flip_delta(std::span<const std::uint8_t> x, Index k) const {
    double delta = 0.0;
    for (std::size_t t : var_terms_[k]) {
        bool others_on = true;
        for (std::size_t u = term_begin_[t]; u < term_begin_[t + 1] && others_on; ++u) {
            const Index v = term_vars_[u];
            if (v != k) others_on = x[v] != 0;
        }
        if (others_on) delta += coeff_[t];
    }
    return x[k] ? -delta : delta;
}

double CompiledCost::energy_of_index(std::uint64_t index) const {
    if (num_vars_ > 64) throw ResourceError("basis-index evaluation needs at most 64 variables");
    double e = constant_;
    for (std::size_t t = 0; t < coeff_.size(); ++t) {
        if ((index & term_mask_[t]) == term_mask_[t]) e += coeff_[t];
    }
    return e;
}

double CompiledCost::flip_delta_of_index(std::uint64_t index, Index k) const {
    if (num_vars_ > 64) throw ResourceError("basis-index evaluation needs at most 64 variables");
    const std::uint64_t bit = std::uint64_t{1} << k;
    const std::uint64_t rest = index & ~bit;
    double delta = 0.0;
    for (std::size_t t : var_terms_[k]) {
        const std::uint64_t others = term_mask_[t] & ~bit;
        if ((rest & others) == others) delta += coeff_[t];
    }
    return (index & bit) ? -delta : delta;
}

}  // namespace qtransport
