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
#include <optional>
#include <span>
#include <vector>

#include "qtransport/polynomial.hpp"
#include "qtransport/qubo.hpp"

namespace qtransport {

/// City sequence; position p visits tour[p]. Tours are closed.
using Tour = std::vector<Index>;

/// Square, nonnegative distance matrix with zero diagonal. Symmetry is not
/// required.
class TspInstance {
 public:
    explicit TspInstance(std::vector<std::vector<double>> distance);

    std::size_t num_cities() const noexcept { return distance_.size(); }
    double distance(Index from, Index to) const { return distance_[from][to]; }
    double max_distance() const noexcept { return max_distance_; }
    const std::vector<std::vector<double>>& matrix() const noexcept { return distance_; }

 private:
    std::vector<std::vector<double>> distance_;
    double max_distance_ = 0.0;
};

/// sum_p d(tour[p], tour[p+1 mod N]). Throws DomainError unless `tour` is a
/// permutation of the cities.
double tour_length(const TspInstance& inst, std::span<const Index> tour);

/// Outcome of reading a tour back out of an assignment. Infeasibility is
/// reported, never thrown.
struct TourDecoding {
    bool feasible = false;
    Tour tour;                           ///< empty unless feasible
    std::vector<Index> bad_cities;       ///< cities not visited exactly once
    std::vector<Index> bad_positions;    ///< positions without exactly one city, or with an invalid code
};

// ---------------------------------------------------------------------------
// One-hot encoding: x_{i,p} = 1 iff city i is visited at position p.

class OneHotLayout {
 public:
    /// With fixed_start, city 0 is pinned to position 0 and the 2N - 1
    /// variables of its row and column are dropped.
    explicit OneHotLayout(std::size_t num_cities, bool fixed_start = false);

    std::size_t num_cities() const noexcept { return num_cities_; }
    bool fixed_start() const noexcept { return fixed_start_; }
    std::size_t num_vars() const noexcept;

    /// Flat variable of (city, position), or nullopt for the pinned row and
    /// column in fixed-start mode.
    std::optional<Index> index(Index city, Index position) const;

 private:
    std::size_t num_cities_;
    bool fixed_start_;
};

struct OneHotTsp {
    QuboModel model;
    OneHotLayout layout;
    double penalty = 0.0;
};

/// Closed-tour objective sum_p sum_{i,j} d_ij x_{i,p} x_{j,p+1 mod N}, no penalties.
QuboModel tsp_one_hot_objective(const TspInstance& inst, const OneHotLayout& layout);

/// Objective plus lambda (sum_p x_{i,p} - 1)^2 per city and
/// lambda (sum_i x_{i,p} - 1)^2 per position. Throws ParameterError for
/// N < 2 or lambda <= 0.
OneHotTsp encode_tsp_one_hot(const TspInstance& inst, double lambda, bool fixed_start = false);

/// Uses tsp_default_penalty(inst).
OneHotTsp encode_tsp_one_hot(const TspInstance& inst, bool fixed_start = false);

/// Default one-hot penalty weight: default_penalty_weight of the objective.
double tsp_default_penalty(const TspInstance& inst);

TourDecoding decode_one_hot(std::span<const std::uint8_t> x, const OneHotLayout& layout);

/// Permutation matrix of `tour`. In fixed-start mode the tour is first rotated
/// so that it starts at city 0.
Assignment one_hot_assignment(std::span<const Index> tour, const OneHotLayout& layout);

// ---------------------------------------------------------------------------
// Binary encoding: position p stores the visited city in ceil(log2 N) bits,
// least significant bit first.

class BinaryLayout {
 public:
    explicit BinaryLayout(std::size_t num_cities);

    std::size_t num_cities() const noexcept { return num_cities_; }
    std::size_t bits_per_position() const noexcept { return bits_; }
    std::size_t num_vars() const noexcept { return num_cities_ * bits_; }
    Index index(Index position, Index bit) const { return position * bits_ + bit; }

 private:
    std::size_t num_cities_;
    std::size_t bits_;
};

/// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(std::size_t n);

struct BinaryTsp {
    PseudoBooleanPolynomial poly;
    BinaryLayout layout;
    double penalty = 0.0;
};

/// Indicator polynomial delta_{city,position} = prod_k [1 - (x_k - city_k)^2].
PseudoBooleanPolynomial position_indicator(const BinaryLayout& layout, std::uint64_t code,
                                           Index position);

/// sum_p sum_{i != j} d_ij delta_{i,p} delta_{j,p+1} plus, with
/// P = 1 + N max d, P * delta_{c,p} for every unused code c >= N and
/// P * (sum_p delta_{i,p} - 1)^2 for every city. Degree <= 2 ceil(log2 N).
BinaryTsp encode_tsp_binary(const TspInstance& inst);

/// sum_k 2^k x_k over the bits of `position`.
std::uint64_t decode_position_code(std::span<const std::uint8_t> x, const BinaryLayout& layout,
                                   Index position);

TourDecoding decode_binary(std::span<const std::uint8_t> x, const BinaryLayout& layout);

Assignment binary_assignment(std::span<const Index> tour, const BinaryLayout& layout);

}  // namespace qtransport
