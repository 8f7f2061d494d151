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

#include "qtransport/resources.hpp"

#include <algorithm>
#include <sstream>

#include "qtransport/io.hpp"

namespace qtransport {

namespace {

double pair_density(std::size_t nnz, std::size_t n) {
    if (n < 2) return 0.0;
    return static_cast<double>(nnz) / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

}  // namespace

ResourceReport resource_report(const QuboModel& model) {
    ResourceReport r;
    r.num_variables = model.num_vars();
    r.num_quadratic_nonzero = model.quadratic().size();
    r.max_degree = !model.quadratic().empty() ? 2 : !model.linear().empty() ? 1 : 0;
    r.density = pair_density(r.num_quadratic_nonzero, r.num_variables);
    return r;
}

ResourceReport resource_report(const PseudoBooleanPolynomial& poly) {
    ResourceReport r;
    r.num_variables = poly.num_vars();
    for (const auto& [vars, c] : poly.terms()) {
        if (vars.size() == 2) ++r.num_quadratic_nonzero;
        r.max_degree = std::max(r.max_degree, vars.size());
    }
    r.density = pair_density(r.num_quadratic_nonzero, r.num_variables);
    return r;
}

ResourceReport resource_report(const CostFunction& cost) {
    if (const auto* q = std::get_if<QuboModel>(&cost)) return resource_report(*q);
    if (const auto* p = std::get_if<PseudoBooleanPolynomial>(&cost)) return resource_report(*p);
    const auto& ising = std::get<IsingModel>(cost);
    ResourceReport r;
    r.num_variables = ising.num_vars();
    r.num_quadratic_nonzero = ising.coupling().size();
    r.max_degree = !ising.coupling().empty() ? 2 : !ising.field().empty() ? 1 : 0;
    r.density = pair_density(r.num_quadratic_nonzero, r.num_variables);
    return r;
}

std::string resource_csv(std::span<const std::pair<std::size_t, ResourceReport>> rows) {
    std::ostringstream out;
    out << "size,num_vars,nnz,max_degree,density\n";
    for (const auto& [size, r] : rows) {
        out << size << ',' << r.num_variables << ',' << r.num_quadratic_nonzero << ','
            << r.max_degree << ',' << format_double(r.density) << '\n';
    }
    return out.str();
}

}  // namespace qtransport
