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

#include "qtransport/brute_force.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qtransport/errors.hpp"

namespace qtransport {

namespace {

constexpr std::uint64_t kRefreshInterval = 1024;
constexpr std::size_t kCandidateBuffer = 1 << 16;

void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap || n > 62) {
        throw ResourceError("exhaustive search over " + std::to_string(n) +
                            " variables exceeds the cap of " + std::to_string(cap));
    }
}

// Lexicographic rank of a basis index when x_0 is the most significant symbol.
std::uint64_t lex_key(std::uint64_t index, std::size_t n) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (index >> i & 1U) key |= std::uint64_t{1} << (n - 1 - i);
    }
    return key;
}

// Walks all 2^n assignments in Gray-code order, maintaining the energy by
// single-flip deltas, and calls visit(index, energy) for each.
template <class Visit>
void gray_walk(const CompiledCost& cost, Visit&& visit) {
    const std::size_t n = cost.num_vars();
    std::uint64_t index = 0;
    double e = cost.energy_of_index(index);
    visit(index, e);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto k = static_cast<Index>(std::countr_zero(step));
        e += cost.flip_delta_of_index(index, k);
        index ^= std::uint64_t{1} << k;
        if (step % kRefreshInterval == 0) e = cost.energy_of_index(index);
        visit(index, e);
    }
}

Assignment bits_of(std::uint64_t index, std::size_t n) {
    Assignment x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>(index >> i & 1U);
    return x;
}

}  // namespace

Minimum brute_force_min(const CostFunction& cost, std::size_t cap) {
    const std::size_t n = num_vars(cost);
    check_cap(n, cap);
    CompiledCost compiled(cost);

    double lowest = std::numeric_limits<double>::infinity();
    gray_walk(compiled, [&](std::uint64_t, double e) {
        if (e < lowest) lowest = e;
    });

    // Among states within tolerance of the minimum pick the lexicographically
    // smallest, confirming each candidate with a direct sum. Candidates are
    // buffered while few; a degenerate landscape falls back to a third walk.
    const double slack = 2.0 * tie_tolerance(lowest);
    double best_exact = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::uint64_t, double>> candidates;
    bool overflow = false;
    gray_walk(compiled, [&](std::uint64_t index, double e) {
        if (e > lowest + slack) return;
        const double exact = compiled.energy_of_index(index);
        best_exact = std::min(best_exact, exact);
        if (candidates.size() < kCandidateBuffer) {
            candidates.emplace_back(index, exact);
        } else {
            overflow = true;
        }
    });

    const double limit = best_exact + tie_tolerance(best_exact);
    std::uint64_t chosen = 0;
    std::uint64_t chosen_key = std::numeric_limits<std::uint64_t>::max();
    auto consider = [&](std::uint64_t index, double exact) {
        const std::uint64_t key = lex_key(index, n);
        if (key < chosen_key && exact <= limit) {
            chosen_key = key;
            chosen = index;
        }
    };
    if (!overflow) {
        for (const auto& [index, exact] : candidates) consider(index, exact);
    } else {
        gray_walk(compiled, [&](std::uint64_t index, double e) {
            if (e <= lowest + slack) consider(index, compiled.energy_of_index(index));
        });
    }

    Minimum result;
    result.assignment = bits_of(chosen, n);
    result.energy = evaluate(cost, result.assignment);
    return result;
}

SpinMinimum brute_force_min_spins(const IsingModel& model, std::size_t cap) {
    const std::size_t n = model.num_vars();
    check_cap(n, cap);
    const std::uint64_t total = std::uint64_t{1} << n;

    std::vector<double> energies(total);
    Spins s(n);
    double lowest = std::numeric_limits<double>::infinity();
    for (std::uint64_t index = 0; index < total; ++index) {
        for (std::size_t i = 0; i < n; ++i) s[i] = (index >> i & 1U) ? -1 : 1;
        energies[index] = evaluate_ising(model, s);
        if (energies[index] < lowest) lowest = energies[index];
    }

    const double limit = lowest + tie_tolerance(lowest);
    std::uint64_t chosen = 0;
    std::uint64_t chosen_key = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t index = 0; index < total; ++index) {
        if (energies[index] > limit) continue;
        const std::uint64_t key = lex_key(index, n);
        if (key < chosen_key) {
            chosen_key = key;
            chosen = index;
        }
    }

    SpinMinimum result;
    result.spins.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.spins[i] = (chosen >> i & 1U) ? -1 : 1;
    result.energy = energies[chosen];
    return result;
}

}  // namespace qtransport
