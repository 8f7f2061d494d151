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

#include "qtransport/cvrp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qtransport/errors.hpp"

namespace qtransport {

double euclidean(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

void CvrpInstance::validate() const {
    if (vehicles == 0) throw ParameterError("at least one vehicle is required");
    if (customers.empty()) throw ParameterError("at least one customer is required");
    if (capacity <= 0) throw ParameterError("vehicle capacity must be positive");
    std::int64_t total = 0;
    for (std::size_t c = 0; c < customers.size(); ++c) {
        const auto demand = customers[c].demand;
        if (demand <= 0) {
            throw ParameterError("customer " + std::to_string(c) + " has nonpositive demand");
        }
        if (demand > capacity) {
            throw ParameterError("customer " + std::to_string(c) +
                                 " demand exceeds the vehicle capacity");
        }
        total += demand;
    }
    if (total > capacity * static_cast<std::int64_t>(vehicles)) {
        throw ParameterError("total demand " + std::to_string(total) +
                             " exceeds fleet capacity " +
                             std::to_string(capacity * static_cast<std::int64_t>(vehicles)));
    }
}

std::vector<Index> select_seeds(const CvrpInstance& inst) {
    const std::size_t k = std::min(inst.vehicles, inst.customers.size());
    std::vector<double> nearest(inst.customers.size());
    for (std::size_t c = 0; c < inst.customers.size(); ++c) {
        nearest[c] = euclidean(inst.depot, inst.customers[c].location);
    }
    std::vector<Index> seeds;
    std::vector<bool> taken(inst.customers.size(), false);
    while (seeds.size() < k) {
        Index pick = 0;
        double best = -1.0;
        for (std::size_t c = 0; c < inst.customers.size(); ++c) {
            if (!taken[c] && nearest[c] > best) {
                best = nearest[c];
                pick = c;
            }
        }
        taken[pick] = true;
        seeds.push_back(pick);
        for (std::size_t c = 0; c < inst.customers.size(); ++c) {
            nearest[c] = std::min(nearest[c], euclidean(inst.customers[pick].location,
                                                        inst.customers[c].location));
        }
    }
    // More vehicles than customers: surplus vehicles share the depot as seed.
    return seeds;
}

namespace {

Point seed_location(const CvrpInstance& inst, const std::vector<Index>& seeds, Index vehicle) {
    return vehicle < seeds.size() ? inst.customers[seeds[vehicle]].location : inst.depot;
}

QuboModel clustering_objective(const CvrpInstance& inst, const std::vector<Index>& seeds,
                               const ClusteringLayout& layout) {
    QuboModel model(layout.num_assignment_vars());
    for (std::size_t c = 0; c < inst.customers.size(); ++c) {
        for (std::size_t v = 0; v < inst.vehicles; ++v) {
            model.add_linear(layout.index(c, v),
                             euclidean(inst.customers[c].location, seed_location(inst, seeds, v)));
        }
    }
    return model;
}

}  // namespace

CvrpClustering encode_cvrp_two_phase(const CvrpInstance& inst, double lambda) {
    inst.validate();
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw ParameterError("penalty weight must be positive and finite");
    }
    CvrpClustering out;
    out.layout = ClusteringLayout(inst.customers.size(), inst.vehicles);
    out.seeds = select_seeds(inst);
    out.penalty = lambda;
    out.model = clustering_objective(inst, out.seeds, out.layout);

    for (std::size_t c = 0; c < inst.customers.size(); ++c) {
        std::vector<double> a(out.model.num_vars(), 0.0);
        for (std::size_t v = 0; v < inst.vehicles; ++v) a[out.layout.index(c, v)] = 1.0;
        out.model = add_equality_constraint(out.model, a, 1.0, lambda);
    }
    for (std::size_t v = 0; v < inst.vehicles; ++v) {
        std::vector<double> a(out.model.num_vars(), 0.0);
        for (std::size_t c = 0; c < inst.customers.size(); ++c) {
            a[out.layout.index(c, v)] = static_cast<double>(inst.customers[c].demand);
        }
        out.model = add_inequality_constraint(out.model, a, inst.capacity, lambda).model;
    }
    return out;
}

CvrpClustering encode_cvrp_two_phase(const CvrpInstance& inst) {
    inst.validate();
    const ClusteringLayout layout(inst.customers.size(), inst.vehicles);
    const double lambda =
        default_penalty_weight(clustering_objective(inst, select_seeds(inst), layout));
    return encode_cvrp_two_phase(inst, lambda);
}

ClusterDecoding decode_clusters(std::span<const std::uint8_t> x, const CvrpInstance& inst,
                                const ClusteringLayout& layout) {
    if (x.size() < layout.num_assignment_vars()) {
        throw DimensionError("assignment shorter than the clustering block");
    }
    ClusterDecoding out;
    out.clusters.resize(layout.vehicles());
    std::vector<std::int64_t> load(layout.vehicles(), 0);
    for (std::size_t c = 0; c < layout.customers(); ++c) {
        int count = 0;
        for (std::size_t v = 0; v < layout.vehicles(); ++v) {
            if (x[layout.index(c, v)]) {
                ++count;
                out.clusters[v].push_back(c);
                load[v] += inst.customers[c].demand;
            }
        }
        if (count != 1) out.bad_customers.push_back(c);
    }
    for (std::size_t v = 0; v < layout.vehicles(); ++v) {
        if (load[v] > inst.capacity) out.overloaded_vehicles.push_back(v);
    }
    out.feasible = out.bad_customers.empty() && out.overloaded_vehicles.empty();
    return out;
}

std::vector<RouteProblem> build_route_problems(const CvrpInstance& inst,
                                               const ClusterDecoding& clusters) {
    if (!clusters.feasible) throw DomainError("cluster assignment is infeasible");
    std::vector<RouteProblem> routes;
    for (std::size_t v = 0; v < clusters.clusters.size(); ++v) {
        const auto& members = clusters.clusters[v];
        if (members.empty()) continue;
        std::vector<Point> nodes{inst.depot};
        for (Index c : members) nodes.push_back(inst.customers[c].location);
        std::vector<std::vector<double>> d(nodes.size(), std::vector<double>(nodes.size(), 0.0));
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                if (i != j) d[i][j] = euclidean(nodes[i], nodes[j]);
            }
        }
        routes.push_back(RouteProblem{v, members, TspInstance(std::move(d))});
    }
    return routes;
}

}  // namespace qtransport
