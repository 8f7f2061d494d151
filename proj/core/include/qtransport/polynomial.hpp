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

/// Sorted set of distinct variable indices. The empty monomial is the constant 1.
using Monomial = std::vector<Index>;

/// Arbitrary-degree pseudo-Boolean function sum_S c_S prod_{k in S} x_k.
///
/// Supports the ring operations needed to expand indicator products such as
/// the binary-encoded TSP cost. Products use x_k^2 = x_k, so a monomial never
/// repeats an index.
class PseudoBooleanPolynomial {
 public:
    PseudoBooleanPolynomial() = default;
    explicit PseudoBooleanPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

    static PseudoBooleanPolynomial constant(std::size_t num_vars, double c);
    /// The polynomial x_i.
    static PseudoBooleanPolynomial variable(std::size_t num_vars, Index i);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::map<Monomial, double>& terms() const noexcept { return terms_; }

    double coefficient(const Monomial& vars) const;
    double constant_term() const { return coefficient({}); }
    std::size_t degree() const;

    /// Indices are sorted and deduplicated before insertion.
    PseudoBooleanPolynomial& add_term(Monomial vars, double c);

    /// Grows the variable count; never shrinks.
    void resize(std::size_t num_vars);

    double energy(std::span<const std::uint8_t> x) const;

    PseudoBooleanPolynomial& operator+=(const PseudoBooleanPolynomial& other);
    PseudoBooleanPolynomial& operator-=(const PseudoBooleanPolynomial& other);
    PseudoBooleanPolynomial& operator*=(double s);

    friend PseudoBooleanPolynomial operator+(PseudoBooleanPolynomial a,
                                             const PseudoBooleanPolynomial& b) {
        return a += b;
    }
    friend PseudoBooleanPolynomial operator-(PseudoBooleanPolynomial a,
                                             const PseudoBooleanPolynomial& b) {
        return a -= b;
    }
    friend PseudoBooleanPolynomial operator*(PseudoBooleanPolynomial a, double s) { return a *= s; }
    friend PseudoBooleanPolynomial operator*(double s, PseudoBooleanPolynomial a) { return a *= s; }
    friend PseudoBooleanPolynomial operator*(const PseudoBooleanPolynomial& a,
                                             const PseudoBooleanPolynomial& b);

    friend bool operator==(const PseudoBooleanPolynomial&,
                           const PseudoBooleanPolynomial&) = default;

 private:
    std::size_t num_vars_ = 0;
    std::map<Monomial, double> terms_;
};

double evaluate_hobo(const PseudoBooleanPolynomial& poly, std::span<const std::uint8_t> x);

PseudoBooleanPolynomial to_polynomial(const QuboModel& model);

/// Lossless for degree <= 2; throws DomainError otherwise.
QuboModel to_qubo(const PseudoBooleanPolynomial& poly);

}  // namespace qtransport
