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

#include "qtransport/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

#include "qtransport/errors.hpp"

namespace qtransport {

namespace {

void accumulate(std::map<Monomial, double>& terms, Monomial key, double c) {
    if (c == 0.0) return;
    auto [it, inserted] = terms.try_emplace(std::move(key), c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0.0) terms.erase(it);
}

}  // namespace

PseudoBooleanPolynomial PseudoBooleanPolynomial::constant(std::size_t num_vars, double c) {
    PseudoBooleanPolynomial p(num_vars);
    p.add_term({}, c);
    return p;
}

PseudoBooleanPolynomial PseudoBooleanPolynomial::variable(std::size_t num_vars, Index i) {
    PseudoBooleanPolynomial p(num_vars);
    p.add_term({i}, 1.0);
    return p;
}

double PseudoBooleanPolynomial::coefficient(const Monomial& vars) const {
    auto it = terms_.find(vars);
    return it == terms_.end() ? 0.0 : it->second;
}

std::size_t PseudoBooleanPolynomial::degree() const {
    std::size_t d = 0;
    for (const auto& [vars, c] : terms_) d = std::max(d, vars.size());
    return d;
}

PseudoBooleanPolynomial& PseudoBooleanPolynomial::add_term(Monomial vars, double c) {
    if (!std::isfinite(c)) throw ParameterError("coefficient is not finite");
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (!vars.empty() && vars.back() >= num_vars_) {
        throw DimensionError("variable index " + std::to_string(vars.back()) +
                             " out of range for " + std::to_string(num_vars_) + " variables");
    }
    accumulate(terms_, std::move(vars), c);
    return *this;
}

void PseudoBooleanPolynomial::resize(std::size_t num_vars) {
    num_vars_ = std::max(num_vars_, num_vars);
}

double PseudoBooleanPolynomial::energy(std::span<const std::uint8_t> x) const {
    if (x.size() != num_vars_) {
        throw DimensionError("assignment has " + std::to_string(x.size()) +
                             " entries, polynomial has " + std::to_string(num_vars_));
    }
    double e = 0.0;
    for (const auto& [vars, c] : terms_) {
        bool on = std::all_of(vars.begin(), vars.end(), [&](Index k) { return x[k] != 0; });
        if (on) e += c;
    }
    return e;
}

PseudoBooleanPolynomial& PseudoBooleanPolynomial::operator+=(const PseudoBooleanPolynomial& other) {
    resize(other.num_vars_);
    for (const auto& [vars, c] : other.terms_) accumulate(terms_, vars, c);
    return *this;
}

PseudoBooleanPolynomial& PseudoBooleanPolynomial::operator-=(const PseudoBooleanPolynomial& other) {
    resize(other.num_vars_);
    for (const auto& [vars, c] : other.terms_) accumulate(terms_, vars, -c);
    return *this;
}

PseudoBooleanPolynomial& PseudoBooleanPolynomial::operator*=(double s) {
    if (!std::isfinite(s)) throw ParameterError("scale factor is not finite");
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [vars, c] : terms_) c *= s;
    return *this;
}

PseudoBooleanPolynomial operator*(const PseudoBooleanPolynomial& a,
                                  const PseudoBooleanPolynomial& b) {
    PseudoBooleanPolynomial out(std::max(a.num_vars_, b.num_vars_));
    Monomial merged;
    for (const auto& [va, ca] : a.terms_) {
        for (const auto& [vb, cb] : b.terms_) {
            merged.clear();
            std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(merged));
            accumulate(out.terms_, merged, ca * cb);
        }
    }
    return out;
}

double evaluate_hobo(const PseudoBooleanPolynomial& poly, std::span<const std::uint8_t> x) {
    return poly.energy(x);
}

PseudoBooleanPolynomial to_polynomial(const QuboModel& model) {
    PseudoBooleanPolynomial p(model.num_vars());
    p.add_term({}, model.offset());
    for (const auto& [i, h] : model.linear()) p.add_term({i}, h);
    for (const auto& [ij, q] : model.quadratic()) p.add_term({ij.first, ij.second}, q);
    return p;
}

QuboModel to_qubo(const PseudoBooleanPolynomial& poly) {
    if (poly.degree() > 2) {
        throw DomainError("polynomial of degree " + std::to_string(poly.degree()) +
                          " has no quadratic form");
    }
    QuboModel m(poly.num_vars());
    for (const auto& [vars, c] : poly.terms()) {
        switch (vars.size()) {
            case 0: m.add_offset(c); break;
            case 1: m.add_linear(vars[0], c); break;
            default: m.add_quadratic(vars[0], vars[1], c); break;
        }
    }
    return m;
}

}  // namespace qtransport
