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

#include <span>
#include <string>
#include <utility>

#include "qtransport/cost.hpp"

namespace qtransport {

/// Exact size counts of a formulation.
struct ResourceReport {
    std::size_t num_variables = 0;
    std::size_t num_quadratic_nonzero = 0;  ///< nonzero degree-2 coefficients
    std::size_t max_degree = 0;
    double density = 0.0;  ///< num_quadratic_nonzero / (n (n - 1) / 2), 0 when n < 2

    friend bool operator==(const ResourceReport&, const ResourceReport&) = default;
};

ResourceReport resource_report(const QuboModel& model);
ResourceReport resource_report(const PseudoBooleanPolynomial& poly);
ResourceReport resource_report(const CostFunction& cost);

/// CSV with header size,num_vars,nnz,max_degree,density; one row per
/// (size, report) pair.
std::string resource_csv(std::span<const std::pair<std::size_t, ResourceReport>> rows);

}  // namespace qtransport
