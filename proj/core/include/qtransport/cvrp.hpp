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
#include <vector>

#include "qtransport/qubo.hpp"
#include "qtransport/tsp.hpp"

namespace qtransport {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double euclidean(const Point& a, const Point& b);

struct Customer {
    Point location;
    std::int64_t demand = 1;
};

struct CvrpInstance {
    Point depot;
    std::vector<Customer> customers;
    std::int64_t capacity = 0;
    std::size_t vehicles = 1;

    /// Throws ParameterError when a demand is not positive, a single demand
    /// exceeds the capacity, or total demand exceeds capacity * vehicles.
    void validate() const;
};

/// y_{c,v} = 1 iff customer c rides vehicle v, stored at c * vehicles + v.
/// Each vehicle's capacity slack register follows the assignment block.
class ClusteringLayout {
 public:
    ClusteringLayout() = default;
    ClusteringLayout(std::size_t customers, std::size_t vehicles)
        : customers_(customers), vehicles_(vehicles) {}

    std::size_t customers() const noexcept { return customers_; }
    std::size_t vehicles() const noexcept { return vehicles_; }
    std::size_t num_assignment_vars() const noexcept { return customers_ * vehicles_; }
    Index index(Index customer, Index vehicle) const { return customer * vehicles_ + vehicle; }

 private:
    std::size_t customers_ = 0;
    std::size_t vehicles_ = 0;
};

struct CvrpClustering {
    QuboModel model;
    ClusteringLayout layout;
    std::vector<Index> seeds;  ///< seed customer per vehicle
    double penalty = 0.0;
};

/// Greedy max-min dispersion: each next seed is the customer whose distance to
/// the depot and to every chosen seed is largest. Ties go to the lower index.
std::vector<Index> select_seeds(const CvrpInstance& inst);

/// Phase one of the two-phase heuristic. Objective sum_{c,v} dist(c, seed_v) y_{c,v};
/// each customer assigned exactly once (equality penalty) and
/// sum_c demand_c y_{c,v} <= capacity per vehicle (slack penalty).
CvrpClustering encode_cvrp_two_phase(const CvrpInstance& inst, double lambda);

/// lambda = default_penalty_weight of the phase-one objective.
CvrpClustering encode_cvrp_two_phase(const CvrpInstance& inst);

struct ClusterDecoding {
    bool feasible = false;
    std::vector<std::vector<Index>> clusters;   ///< customers per vehicle
    std::vector<Index> bad_customers;           ///< assigned zero or several times
    std::vector<Index> overloaded_vehicles;
};

/// Reads the assignment block of x; slack bits are ignored.
ClusterDecoding decode_clusters(std::span<const std::uint8_t> x, const CvrpInstance& inst,
                                const ClusteringLayout& layout);

/// Phase-two subproblem: node 0 is the depot, node k is customers[k - 1].
struct RouteProblem {
    Index vehicle = 0;
    std::vector<Index> customers;
    TspInstance tsp;
};

/// One TSP per vehicle with at least one customer. Throws DomainError when
/// the decoding is infeasible.
std::vector<RouteProblem> build_route_problems(const CvrpInstance& inst,
                                               const ClusterDecoding& clusters);

}  // namespace qtransport
