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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qtransport/brute_force.hpp"
#include "qtransport/cvrp.hpp"
#include "qtransport/errors.hpp"
#include "qtransport/io.hpp"
#include "qtransport/ising.hpp"
#include "qtransport/resources.hpp"
#include "qtransport/traffic.hpp"
#include "qtransport/tsp.hpp"

using namespace qtransport;
using qtransport::testing::bits;
using Catch::Approx;

namespace {

TspInstance unit_instance(std::size_t n) {
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    return TspInstance(d);
}

// Sum of the penalty part alone: full model minus objective.
double penalty_energy(const OneHotTsp& enc, const TspInstance& inst, const Assignment& x) {
    return evaluate_qubo(enc.model, x) - evaluate_qubo(tsp_one_hot_objective(inst, enc.layout), x);
}

}  // namespace

TEST_CASE("tsp instance validation", "[tsp]") {
    CHECK_THROWS_AS(TspInstance({{0.0, 1.0}}), DimensionError);
    CHECK_THROWS_AS(TspInstance({{0.0, -1.0}, {1.0, 0.0}}), DomainError);
    CHECK_THROWS_AS(TspInstance({{1.0, 1.0}, {1.0, 0.0}}), DomainError);
    CHECK_THROWS_AS(encode_tsp_one_hot(TspInstance(std::vector<std::vector<double>>{{0.0}})), ParameterError);
    CHECK_THROWS_AS(encode_tsp_binary(TspInstance(std::vector<std::vector<double>>{{0.0}})), ParameterError);
}

TEST_CASE("tour length closes the cycle", "[tsp]") {
    CHECK(tour_length(unit_instance(5), Tour{0, 1, 2, 3, 4}) == 5.0);
    std::mt19937_64 rng(21);
    const auto d = testing::random_integer_distances(rng, 3);
    const TspInstance inst(d);
    const double first = tour_length(inst, Tour{0, 1, 2});
    for (const auto& t : testing::all_tours(3)) CHECK(tour_length(inst, t) == first);
    CHECK_THROWS_AS(tour_length(inst, Tour{0, 0, 1}), DomainError);
    CHECK_THROWS_AS(tour_length(inst, Tour{0, 1}), DomainError);
}

TEST_CASE("one-hot layout sizes", "[tsp]") {
    CHECK(encode_tsp_one_hot(unit_instance(3)).model.num_vars() == 9);
    const OneHotLayout fixed(5, true);
    CHECK(fixed.num_vars() == 16);
    CHECK_FALSE(fixed.index(0, 0).has_value());
    CHECK_FALSE(fixed.index(0, 3).has_value());
    CHECK_FALSE(fixed.index(2, 0).has_value());
    CHECK(fixed.index(1, 1).has_value());
}

TEST_CASE("one-hot objective term count", "[tsp][resources]") {
    for (std::size_t n : {3u, 4u, 5u, 6u}) {
        std::mt19937_64 rng(n);
        const TspInstance inst(testing::random_integer_distances(rng, n));
        const OneHotLayout layout(n);
        const QuboModel obj = tsp_one_hot_objective(inst, layout);
        if (n > 3) {
            CHECK(obj.quadratic().size() == n * n * (n - 1));
        }
        CHECK(obj.quadratic().size() <= n * n * n);
    }
}

TEST_CASE("one-hot penalty vanishes exactly on permutation matrices", "[tsp][property]") {
    std::mt19937_64 rng(22);
    const TspInstance inst(testing::random_integer_distances(rng, 3));
    const OneHotTsp enc = encode_tsp_one_hot(inst);
    for (std::uint64_t k = 0; k < 512; ++k) {
        const Assignment x = bits(k, 9);
        const TourDecoding dec = decode_one_hot(x, enc.layout);
        const double pen = penalty_energy(enc, inst, x);
        REQUIRE((pen == 0.0) == dec.feasible);
        if (!dec.feasible) REQUIRE(pen >= enc.penalty);
    }
}

TEST_CASE("one-hot decoding", "[tsp]") {
    const OneHotLayout layout(4);
    Assignment identity(16, 0);
    for (Index i = 0; i < 4; ++i) identity[*layout.index(i, i)] = 1;
    const TourDecoding ok = decode_one_hot(identity, layout);
    CHECK(ok.feasible);
    CHECK(ok.tour == Tour{0, 1, 2, 3});

    const TourDecoding empty = decode_one_hot(Assignment(16, 0), layout);
    CHECK_FALSE(empty.feasible);
    CHECK(empty.bad_positions == std::vector<Index>{0, 1, 2, 3});

    Assignment doubled = identity;
    doubled[*layout.index(0, 0)] = 0;
    doubled[*layout.index(0, 1)] = 1;
    const TourDecoding bad = decode_one_hot(doubled, layout);
    CHECK_FALSE(bad.feasible);
    CHECK(std::find(bad.bad_positions.begin(), bad.bad_positions.end(), 1) !=
          bad.bad_positions.end());
}

TEST_CASE("decode inverts encode for every tour", "[tsp][property]") {
    for (std::size_t n = 2; n <= 6; ++n) {
        const OneHotLayout oh(n);
        const OneHotLayout fixed(n, true);
        const BinaryLayout bl(n);
        for (const auto& t : testing::all_tours(n)) {
            REQUIRE(decode_one_hot(one_hot_assignment(t, oh), oh).tour == t);
            REQUIRE(decode_binary(binary_assignment(t, bl), bl).tour == t);
            if (t[0] == 0) REQUIRE(decode_one_hot(one_hot_assignment(t, fixed), fixed).tour == t);
        }
    }
}

TEST_CASE("unit-distance one-hot minimum is a tour of length N", "[tsp]") {
    const TspInstance inst = unit_instance(4);
    const OneHotTsp enc = encode_tsp_one_hot(inst);
    const Minimum m = brute_force_min(CostFunction(enc.model));
    const TourDecoding dec = decode_one_hot(m.assignment, enc.layout);
    REQUIRE(dec.feasible);
    CHECK(tour_length(inst, dec.tour) == 4.0);
    CHECK(m.energy == 4.0);
}

TEST_CASE("one-hot minimum equals the permutation optimum", "[tsp]") {
    for (std::uint64_t seed : {31u, 32u, 33u}) {
        std::mt19937_64 rng(seed);
        const auto d = testing::random_integer_distances(rng, 4);
        const TspInstance inst(d);
        const double best = testing::permutation_optimum(d);
        for (bool fixed : {false, true}) {
            const OneHotTsp enc = encode_tsp_one_hot(inst, fixed);
            const Minimum m = brute_force_min(CostFunction(enc.model));
            const TourDecoding dec = decode_one_hot(m.assignment, enc.layout);
            REQUIRE(dec.feasible);
            CHECK(tour_length(inst, dec.tour) == best);
            CHECK(m.energy == best);
        }
    }
}

TEST_CASE("binary layout and the worked decoding example", "[tsp]") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(4) == 2);
    CHECK(ceil_log2(5) == 3);
    CHECK(BinaryLayout(4).num_vars() == 8);
    CHECK(BinaryLayout(16).bits_per_position() == 4);

    // Sixteen cities, four bits per position; position 3 holds bits 0,1,1,0.
    const BinaryLayout layout(16);
    Assignment x(layout.num_vars(), 0);
    x[layout.index(3, 1)] = 1;
    x[layout.index(3, 2)] = 1;
    CHECK(decode_position_code(x, layout, 3) == 6);

    const TourDecoding zeros = decode_binary(Assignment(8, 0), BinaryLayout(4));
    CHECK_FALSE(zeros.feasible);

    const BinaryLayout three(3);
    Assignment invalid = binary_assignment(Tour{0, 1, 2}, three);
    invalid[three.index(2, 0)] = 1;
    invalid[three.index(2, 1)] = 1;
    const TourDecoding bad = decode_binary(invalid, three);
    CHECK_FALSE(bad.feasible);
    CHECK(std::find(bad.bad_positions.begin(), bad.bad_positions.end(), 2) !=
          bad.bad_positions.end());
}

TEST_CASE("binary hobo equals tour length on every tour", "[tsp]") {
    std::mt19937_64 rng(23);
    const auto d = testing::random_integer_distances(rng, 4);
    const TspInstance inst(d);
    const BinaryTsp bin = encode_tsp_binary(inst);
    const OneHotTsp oh = encode_tsp_one_hot(inst);
    const QuboModel obj = tsp_one_hot_objective(inst, oh.layout);
    CHECK(bin.poly.degree() <= 2 * bin.layout.bits_per_position());
    for (const auto& t : testing::all_tours(4)) {
        const double len = tour_length(inst, t);
        CHECK(evaluate_hobo(bin.poly, binary_assignment(t, bin.layout)) == len);
        CHECK(evaluate_qubo(obj, one_hot_assignment(t, oh.layout)) == len);
    }
}

TEST_CASE("binary hobo minimum is a valid optimal tour for non-power-of-two N", "[tsp]") {
    for (std::size_t n : {3u, 5u}) {
        std::mt19937_64 rng(40 + n);
        const auto d = testing::random_integer_distances(rng, n);
        const BinaryTsp bin = encode_tsp_binary(TspInstance(d));
        CHECK(bin.poly.degree() <= 2 * bin.layout.bits_per_position());
        const Minimum m = brute_force_min(CostFunction(bin.poly));
        const TourDecoding dec = decode_binary(m.assignment, bin.layout);
        REQUIRE(dec.feasible);
        CHECK(m.energy == testing::permutation_optimum(d));
    }
}

TEST_CASE("traffic grid worked cases", "[traffic]") {
    TrafficGrid flat{1, 3, {2, 2, 2}, {2, 2, 2}, {0, 0, 0}};
    const IsingModel h0 = encode_traffic_grid(flat);
    CHECK(h0.field().empty());
    CHECK(h0.coupling().empty());

    TrafficGrid single{1, 1, {5}, {1}, {0}};
    const SpinMinimum one = brute_force_min_spins(encode_traffic_grid(single));
    CHECK(one.spins == Spins{kNorthSouth});
    single.q_ns = {1};
    single.q_ew = {5};
    CHECK(brute_force_min_spins(encode_traffic_grid(single)).spins == Spins{kEastWest});

    TrafficGrid grid{2, 2, {3, 1, 4, 1}, {5, 9, 2, 6}, {1, -1, 0, 1}, 0.0, 0.0, 1.0};
    const IsingModel h = encode_traffic_grid(grid);
    int ground = 0;
    double lowest = 1e300;
    std::vector<Spins> all;
    for (std::uint64_t k = 0; k < 16; ++k) {
        const Spins s = to_spins(bits(k, 4));
        lowest = std::min(lowest, evaluate_ising(h, s));
        all.push_back(s);
    }
    std::vector<Spins> minima;
    for (const auto& s : all) {
        if (evaluate_ising(h, s) == lowest) {
            ++ground;
            minima.push_back(s);
        }
    }
    CHECK(ground == 2);
    CHECK(std::find(minima.begin(), minima.end(), Spins(4, 1)) != minima.end());
    CHECK(std::find(minima.begin(), minima.end(), Spins(4, -1)) != minima.end());
}

TEST_CASE("traffic switching term favours the previous mode", "[traffic]") {
    TrafficGrid g{1, 1, {3}, {3}, {kNorthSouth}, 1.0, 2.0, 0.0};
    CHECK(brute_force_min_spins(encode_traffic_grid(g)).spins == Spins{kNorthSouth});
    g.prev = {kEastWest};
    CHECK(brute_force_min_spins(encode_traffic_grid(g)).spins == Spins{kEastWest});
}

TEST_CASE("traffic energy is symmetric under the global relabeling", "[traffic][property]") {
    std::mt19937_64 rng(24);
    std::uniform_real_distribution<double> q(0.0, 20.0), w(0.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3, n = rows * cols;
        TrafficGrid g{rows, cols, {}, {}, {}, w(rng), w(rng), w(rng)};
        for (std::size_t i = 0; i < n; ++i) {
            g.q_ns.push_back(q(rng));
            g.q_ew.push_back(q(rng));
            g.prev.push_back(static_cast<int>(rng() % 3) - 1);
        }
        TrafficGrid mirrored = g;
        std::swap(mirrored.q_ns, mirrored.q_ew);
        for (auto& p : mirrored.prev) p = -p;
        const IsingModel a = encode_traffic_grid(g), b = encode_traffic_grid(mirrored);
        for (int s = 0; s < 20; ++s) {
            Spins sigma(n);
            for (auto& v : sigma) v = (rng() & 1U) ? 1 : -1;
            Spins flipped = sigma;
            for (auto& v : flipped) v = -v;
            REQUIRE(std::abs(evaluate_ising(a, sigma) - evaluate_ising(b, flipped)) <= 1e-12);
        }
    }
}

TEST_CASE("traffic grid validation", "[traffic]") {
    CHECK_THROWS_AS(encode_traffic_grid(TrafficGrid{1, 1, {-1}, {0}, {0}}), DomainError);
    CHECK_THROWS_AS(encode_traffic_grid(TrafficGrid{1, 1, {1}, {0}, {2}}), DomainError);
    CHECK_THROWS_AS(encode_traffic_grid(TrafficGrid{1, 1, {1}, {0}, {0}, -1.0}), ParameterError);
    CHECK_THROWS_AS(encode_traffic_grid(TrafficGrid{1, 2, {1}, {0}, {0}}), DimensionError);
}

namespace {

CvrpInstance two_pairs() {
    CvrpInstance inst;
    inst.depot = {0, 0};
    inst.customers = {{{10, 0}, 1}, {{11, 0}, 1}, {{-10, 0}, 1}, {{-11, 0}, 1}};
    inst.capacity = 2;
    inst.vehicles = 2;
    return inst;
}

}  // namespace

TEST_CASE("cvrp validation", "[cvrp]") {
    CvrpInstance inst = two_pairs();
    inst.capacity = 1;
    CHECK_THROWS_AS(encode_cvrp_two_phase(inst), ParameterError);
    inst = two_pairs();
    inst.customers[0].demand = 0;
    CHECK_THROWS_AS(encode_cvrp_two_phase(inst), ParameterError);
    inst = two_pairs();
    CHECK_THROWS_AS(encode_cvrp_two_phase(inst, -1.0), ParameterError);
}

TEST_CASE("cvrp phase one splits two distant pairs", "[cvrp]") {
    const CvrpInstance inst = two_pairs();
    const CvrpClustering enc = encode_cvrp_two_phase(inst);
    const Minimum m = brute_force_min(CostFunction(enc.model));
    const ClusterDecoding dec = decode_clusters(m.assignment, inst, enc.layout);
    REQUIRE(dec.feasible);
    auto clusters = dec.clusters;
    for (auto& c : clusters) std::sort(c.begin(), c.end());
    std::sort(clusters.begin(), clusters.end());
    CHECK(clusters == std::vector<std::vector<Index>>{{0, 1}, {2, 3}});

    const auto routes = build_route_problems(inst, dec);
    REQUIRE(routes.size() == 2);
    for (const auto& r : routes) CHECK(r.tsp.num_cities() == 3);
}

TEST_CASE("cvrp single vehicle takes every customer", "[cvrp]") {
    CvrpInstance inst = two_pairs();
    inst.vehicles = 1;
    inst.capacity = 4;
    const CvrpClustering enc = encode_cvrp_two_phase(inst);
    const Minimum m = brute_force_min(CostFunction(enc.model));
    const ClusterDecoding dec = decode_clusters(m.assignment, inst, enc.layout);
    REQUIRE(dec.feasible);
    CHECK(dec.clusters.size() == 1);
    CHECK(dec.clusters[0].size() == 4);
    const auto routes = build_route_problems(inst, dec);
    REQUIRE(routes.size() == 1);
    CHECK(routes[0].tsp.num_cities() == 5);
}

TEST_CASE("cvrp phase one minimum matches the exhaustive clustering oracle", "[cvrp]") {
    std::mt19937_64 rng(25);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 6; ++trial) {
        CvrpInstance inst;
        inst.depot = {0, 0};
        for (int c = 0; c < 4; ++c) {
            inst.customers.push_back({{u(rng), u(rng)}, 1 + static_cast<std::int64_t>(rng() % 2)});
        }
        inst.vehicles = 2;
        inst.capacity = 4;
        const CvrpClustering enc = encode_cvrp_two_phase(inst);
        const auto oracle = testing::exhaustive_clustering(inst, enc.seeds);
        REQUIRE(oracle.feasible);
        const Minimum m = brute_force_min(CostFunction(enc.model));
        const ClusterDecoding dec = decode_clusters(m.assignment, inst, enc.layout);
        REQUIRE(dec.feasible);
        CHECK(m.energy == Approx(oracle.cost).margin(1e-9));
    }
}

TEST_CASE("two-phase routes are never shorter than the global optimum", "[cvrp]") {
    std::mt19937_64 rng(26);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    CvrpInstance inst;
    inst.depot = {0, 0};
    for (int c = 0; c < 5; ++c) inst.customers.push_back({{u(rng), u(rng)}, 1});
    inst.vehicles = 2;
    inst.capacity = 3;

    const CvrpClustering enc = encode_cvrp_two_phase(inst);
    const Minimum m = brute_force_min(CostFunction(enc.model));
    const ClusterDecoding dec = decode_clusters(m.assignment, inst, enc.layout);
    REQUIRE(dec.feasible);
    double two_phase = 0.0;
    for (const auto& r : build_route_problems(inst, dec)) {
        two_phase += testing::permutation_optimum(r.tsp.matrix());
    }

    // Global optimum: every assignment of customers to vehicles within
    // capacity, each route solved over every ordering.
    double global = 1e300;
    for (std::uint64_t code = 0; code < 32; ++code) {
        std::vector<std::vector<Index>> groups(2);
        for (Index c = 0; c < 5; ++c) groups[(code >> c) & 1U].push_back(c);
        if (groups[0].size() > 3 || groups[1].size() > 3) continue;
        double total = 0.0;
        for (const auto& g : groups) {
            if (g.empty()) continue;
            std::vector<Point> pts{inst.depot};
            for (Index c : g) pts.push_back(inst.customers[c].location);
            std::vector<std::vector<double>> d(pts.size(), std::vector<double>(pts.size()));
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = 0; j < pts.size(); ++j) d[i][j] = euclidean(pts[i], pts[j]);
            total += testing::permutation_optimum(d);
        }
        global = std::min(global, total);
    }
    CHECK(two_phase >= global - 1e-9);
}

TEST_CASE("resource reports count exactly", "[resources]") {
    CHECK(resource_report(QuboModel(0)) == ResourceReport{});
    for (std::size_t n : {4u, 8u, 16u}) {
        std::mt19937_64 rng(n);
        const TspInstance inst(testing::random_integer_distances(rng, n));
        CHECK(resource_report(encode_tsp_one_hot(inst).model).num_variables == n * n);
        CHECK(resource_report(encode_tsp_one_hot(inst).model).max_degree == 2);
        const ResourceReport b = resource_report(encode_tsp_binary(inst).poly);
        CHECK(b.num_variables == n * ceil_log2(n));
        CHECK(b.max_degree <= 2 * ceil_log2(n));
    }
    QuboModel q(3);
    q.add_quadratic(0, 1, 1.0);
    const ResourceReport r = resource_report(q);
    CHECK(r.num_quadratic_nonzero == 1);
    CHECK(r.density == Approx(1.0 / 3.0));
    const std::vector<std::pair<std::size_t, ResourceReport>> rows{{3, r}};
    CHECK(resource_csv(rows).rfind("size,num_vars,nnz,max_degree,density\n3,3,1,2,", 0) == 0);
}

TEST_CASE("model documents round-trip", "[io]") {
    std::mt19937_64 rng(27);
    const QuboModel q = testing::random_qubo(rng, 6);
    CHECK(qubo_from_json(parse_json(to_json(q).dump())) == q);

    const BinaryTsp bin = encode_tsp_binary(TspInstance(testing::random_integer_distances(rng, 4)));
    const PseudoBooleanPolynomial back = hobo_from_json(parse_json(to_json(bin.poly).dump()));
    for (std::uint64_t k = 0; k < 256; ++k) {
        CHECK(evaluate_hobo(back, bits(k, 8)) == evaluate_hobo(bin.poly, bits(k, 8)));
    }
    const CostFunction c = cost_from_json(to_json(CostFunction(to_ising(q))));
    for (std::uint64_t k = 0; k < 64; ++k) {
        CHECK(evaluate(c, bits(k, 6)) == Approx(evaluate_qubo(q, bits(k, 6))).margin(1e-9));
    }
}

TEST_CASE("model loader rejects malformed documents", "[io]") {
    CHECK_THROWS_AS(qubo_from_json(parse_json(R"({"num_vars": 2, "linear": [[2, 1.0]]})")),
                    FormatError);
    CHECK_THROWS_AS(parse_json("{not json"), FormatError);
    CHECK_THROWS_AS(tsp_from_json(parse_json(R"({"problem": "tsp"})")), FormatError);
    try {
        tsp_from_json(parse_json(R"({"problem": "tsp"})"));
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("distance") != std::string::npos);
    }
}

TEST_CASE("problem documents round-trip", "[io]") {
    const TrafficGrid g{2, 1, {1, 2}, {3, 4}, {1, -1}, 1.5, 0.5, 2.0};
    const TrafficGrid g2 = traffic_from_json(to_json(g));
    CHECK(g2.q_ns == g.q_ns);
    CHECK(g2.prev == g.prev);
    CHECK(g2.green_wave_weight == 2.0);
    const CvrpInstance c = two_pairs();
    const CvrpInstance c2 = cvrp_from_json(to_json(c));
    CHECK(c2.customers.size() == 4);
    CHECK(c2.capacity == 2);
    CHECK(c2.customers[3].location.x == -11.0);
}

TEST_CASE("matrix csv round-trips losslessly", "[io]") {
    std::mt19937_64 rng(28);
    std::normal_distribution<double> n(0.0, 1e3);
    std::vector<std::vector<double>> m(7, std::vector<double>(5));
    for (auto& row : m)
        for (auto& v : row) v = n(rng);
    m[0][0] = 0.1;
    m[1][1] = -0.0;
    m[2][2] = 1e-300;
    CHECK(matrix_from_csv(matrix_to_csv(m)) == m);
    CHECK_THROWS_AS(matrix_from_csv("1,2\n3\n"), FormatError);
    CHECK_THROWS_AS(matrix_from_csv("1,x\n"), FormatError);
}
