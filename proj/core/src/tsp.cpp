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

#include "qtransport/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtransport/errors.hpp"

namespace qtransport {

TspInstance::TspInstance(std::vector<std::vector<double>> distance) : distance_(std::move(distance)) {
    const std::size_t n = distance_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (distance_[i].size() != n) {
            throw DimensionError("distance matrix row " + std::to_string(i) + " has " +
                                 std::to_string(distance_[i].size()) + " entries, expected " +
                                 std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const double d = distance_[i][j];
            if (!std::isfinite(d) || d < 0.0) {
                throw DomainError("distance[" + std::to_string(i) + "][" + std::to_string(j) +
                                  "] must be finite and nonnegative");
            }
            if (i == j && d != 0.0) {
                throw DomainError("distance[" + std::to_string(i) + "][" + std::to_string(i) +
                                  "] must be zero");
            }
            max_distance_ = std::max(max_distance_, d);
        }
    }
}

namespace {

void check_num_cities(std::size_t n) {
    if (n < 2) throw ParameterError("a tour needs at least 2 cities, got " + std::to_string(n));
}

void check_permutation(std::span<const Index> tour, std::size_t n) {
    if (tour.size() != n) {
        throw DomainError("tour has " + std::to_string(tour.size()) + " stops, expected " +
                          std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (Index c : tour) {
        if (c >= n || seen[c]) throw DomainError("tour is not a permutation of the cities");
        seen[c] = true;
    }
}

// x_{city,position} as a polynomial: a variable, or a constant for the pinned
// row and column in fixed-start mode.
PseudoBooleanPolynomial one_hot_term(const OneHotLayout& layout, Index city, Index position) {
    const std::size_t nv = layout.num_vars();
    if (auto idx = layout.index(city, position)) return PseudoBooleanPolynomial::variable(nv, *idx);
    const bool pinned = city == 0 && position == 0;
    return PseudoBooleanPolynomial::constant(nv, pinned ? 1.0 : 0.0);
}

PseudoBooleanPolynomial squared_deviation(PseudoBooleanPolynomial sum) {
    sum -= PseudoBooleanPolynomial::constant(sum.num_vars(), 1.0);
    return sum * sum;
}

}  // namespace

double tour_length(const TspInstance& inst, std::span<const Index> tour) {
    const std::size_t n = inst.num_cities();
    check_permutation(tour, n);
    double total = 0.0;
    for (std::size_t p = 0; p < n; ++p) total += inst.distance(tour[p], tour[(p + 1) % n]);
    return total;
}

// ---------------------------------------------------------------------------

OneHotLayout::OneHotLayout(std::size_t num_cities, bool fixed_start)
    : num_cities_(num_cities), fixed_start_(fixed_start) {}

std::size_t OneHotLayout::num_vars() const noexcept {
    const std::size_t free = fixed_start_ && num_cities_ > 0 ? num_cities_ - 1 : num_cities_;
    return free * free;
}

std::optional<Index> OneHotLayout::index(Index city, Index position) const {
    if (city >= num_cities_ || position >= num_cities_) {
        throw DimensionError("city or position out of range");
    }
    if (!fixed_start_) return city * num_cities_ + position;
    if (city == 0 || position == 0) return std::nullopt;
    return (city - 1) * (num_cities_ - 1) + (position - 1);
}

QuboModel tsp_one_hot_objective(const TspInstance& inst, const OneHotLayout& layout) {
    const std::size_t n = inst.num_cities();
    check_num_cities(n);
    if (layout.num_cities() != n) throw DimensionError("layout does not match instance");
    PseudoBooleanPolynomial cost(layout.num_vars());
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t next = (p + 1) % n;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double d = inst.distance(i, j);
                if (i == j || d == 0.0) continue;
                cost += d * (one_hot_term(layout, i, p) * one_hot_term(layout, j, next));
            }
        }
    }
    return to_qubo(cost);
}

double tsp_default_penalty(const TspInstance& inst) {
    check_num_cities(inst.num_cities());
    return default_penalty_weight(tsp_one_hot_objective(inst, OneHotLayout(inst.num_cities())));
}

OneHotTsp encode_tsp_one_hot(const TspInstance& inst, double lambda, bool fixed_start) {
    const std::size_t n = inst.num_cities();
    check_num_cities(n);
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw ParameterError("penalty weight must be positive and finite");
    }
    OneHotLayout layout(n, fixed_start);
    const std::size_t nv = layout.num_vars();

    PseudoBooleanPolynomial penalty(nv);
    for (std::size_t i = 0; i < n; ++i) {
        PseudoBooleanPolynomial row(nv);
        PseudoBooleanPolynomial col(nv);
        for (std::size_t p = 0; p < n; ++p) {
            row += one_hot_term(layout, i, p);
            col += one_hot_term(layout, p, i);
        }
        penalty += squared_deviation(std::move(row));
        penalty += squared_deviation(std::move(col));
    }

    QuboModel model = tsp_one_hot_objective(inst, layout);
    const QuboModel constraints = to_qubo(lambda * penalty);
    model.add_offset(constraints.offset());
    for (const auto& [i, h] : constraints.linear()) model.add_linear(i, h);
    for (const auto& [ij, q] : constraints.quadratic()) model.add_quadratic(ij.first, ij.second, q);
    return OneHotTsp{std::move(model), layout, lambda};
}

OneHotTsp encode_tsp_one_hot(const TspInstance& inst, bool fixed_start) {
    return encode_tsp_one_hot(inst, tsp_default_penalty(inst), fixed_start);
}

TourDecoding decode_one_hot(std::span<const std::uint8_t> x, const OneHotLayout& layout) {
    if (x.size() != layout.num_vars()) {
        throw DimensionError("assignment has " + std::to_string(x.size()) +
                             " entries, layout has " + std::to_string(layout.num_vars()));
    }
    const std::size_t n = layout.num_cities();
    auto bit = [&](Index city, Index position) -> int {
        if (auto idx = layout.index(city, position)) return x[*idx] ? 1 : 0;
        return city == 0 && position == 0 ? 1 : 0;
    };

    TourDecoding out;
    Tour tour(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int row = 0;
        for (std::size_t p = 0; p < n; ++p) row += bit(i, p);
        if (row != 1) out.bad_cities.push_back(i);
    }
    for (std::size_t p = 0; p < n; ++p) {
        int col = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (bit(i, p)) {
                ++col;
                tour[p] = i;
            }
        }
        if (col != 1) out.bad_positions.push_back(p);
    }
    out.feasible = out.bad_cities.empty() && out.bad_positions.empty();
    if (out.feasible) out.tour = std::move(tour);
    return out;
}

Assignment one_hot_assignment(std::span<const Index> tour, const OneHotLayout& layout) {
    const std::size_t n = layout.num_cities();
    check_permutation(tour, n);
    Tour order(tour.begin(), tour.end());
    if (layout.fixed_start()) {
        std::rotate(order.begin(), std::find(order.begin(), order.end(), Index{0}), order.end());
    }
    Assignment x(layout.num_vars(), 0);
    for (std::size_t p = 0; p < n; ++p) {
        if (auto idx = layout.index(order[p], p)) x[*idx] = 1;
    }
    return x;
}

// ---------------------------------------------------------------------------

std::size_t ceil_log2(std::size_t n) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    return bits;
}

BinaryLayout::BinaryLayout(std::size_t num_cities)
    : num_cities_(num_cities), bits_(ceil_log2(num_cities)) {}

PseudoBooleanPolynomial position_indicator(const BinaryLayout& layout, std::uint64_t code,
                                           Index position) {
    const std::size_t nv = layout.num_vars();
    auto delta = PseudoBooleanPolynomial::constant(nv, 1.0);
    for (std::size_t k = 0; k < layout.bits_per_position(); ++k) {
        const auto x = PseudoBooleanPolynomial::variable(nv, layout.index(position, k));
        // 1 - (x - c_k)^2 reduces to x for c_k = 1 and 1 - x for c_k = 0.
        if (code >> k & 1U) {
            delta = delta * x;
        } else {
            delta = delta * (PseudoBooleanPolynomial::constant(nv, 1.0) - x);
        }
    }
    return delta;
}

BinaryTsp encode_tsp_binary(const TspInstance& inst) {
    const std::size_t n = inst.num_cities();
    check_num_cities(n);
    BinaryLayout layout(n);
    const std::size_t nv = layout.num_vars();
    const std::uint64_t codes = std::uint64_t{1} << layout.bits_per_position();
    const double big = 1.0 + static_cast<double>(n) * inst.max_distance();

    std::vector<std::vector<PseudoBooleanPolynomial>> delta(n);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::uint64_t c = 0; c < codes; ++c) delta[p].push_back(position_indicator(layout, c, p));
    }

    PseudoBooleanPolynomial poly(nv);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t next = (p + 1) % n;
        for (std::size_t i = 0; i < n; ++i) {
            // delta_{i,p} * sum_j d_ij delta_{j,p+1}
            PseudoBooleanPolynomial successors(nv);
            for (std::size_t j = 0; j < n; ++j) {
                const double d = inst.distance(i, j);
                if (i != j && d != 0.0) successors += d * delta[next][j];
            }
            poly += delta[p][i] * successors;
        }
    }

    PseudoBooleanPolynomial penalty(nv);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::uint64_t c = n; c < codes; ++c) penalty += delta[p][c];
    }
    for (std::size_t i = 0; i < n; ++i) {
        PseudoBooleanPolynomial visits(nv);
        for (std::size_t p = 0; p < n; ++p) visits += delta[p][i];
        penalty += squared_deviation(std::move(visits));
    }
    poly += big * penalty;
    return BinaryTsp{std::move(poly), layout, big};
}

std::uint64_t decode_position_code(std::span<const std::uint8_t> x, const BinaryLayout& layout,
                                   Index position) {
    if (x.size() != layout.num_vars()) {
        throw DimensionError("assignment has " + std::to_string(x.size()) +
                             " entries, layout has " + std::to_string(layout.num_vars()));
    }
    if (position >= layout.num_cities()) throw DimensionError("position out of range");
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < layout.bits_per_position(); ++k) {
        if (x[layout.index(position, k)]) code |= std::uint64_t{1} << k;
    }
    return code;
}

TourDecoding decode_binary(std::span<const std::uint8_t> x, const BinaryLayout& layout) {
    const std::size_t n = layout.num_cities();
    TourDecoding out;
    Tour tour(n, 0);
    std::vector<int> visits(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
        const std::uint64_t code = decode_position_code(x, layout, p);
        if (code >= n) {
            out.bad_positions.push_back(p);
            continue;
        }
        tour[p] = static_cast<Index>(code);
        ++visits[code];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (visits[i] != 1) out.bad_cities.push_back(i);
    }
    out.feasible = out.bad_cities.empty() && out.bad_positions.empty();
    if (out.feasible) out.tour = std::move(tour);
    return out;
}

Assignment binary_assignment(std::span<const Index> tour, const BinaryLayout& layout) {
    check_permutation(tour, layout.num_cities());
    Assignment x(layout.num_vars(), 0);
    for (std::size_t p = 0; p < tour.size(); ++p) {
        for (std::size_t k = 0; k < layout.bits_per_position(); ++k) {
            x[layout.index(p, k)] = static_cast<std::uint8_t>(tour[p] >> k & 1U);
        }
    }
    return x;
}

}  // namespace qtransport
