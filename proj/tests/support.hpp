#pragma once

// Shared helpers for the test suites: deterministic random inputs and
// brute-force oracles kept independent of the library code paths they check.

#include <optional>
#include <random>
#include <vector>

#include "tropeig/matrix.hpp"
#include "tropeig/rational.hpp"

namespace testsupport {

using tropeig::Rational;
using tropeig::TropMatrix;
using tropeig::TropVector;

class RandomRationals {
public:
    explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}

    Rational next(int num_lo = -20, int num_hi = 20, int den_lo = 1, int den_hi = 5) {
        std::uniform_int_distribution<int> num(num_lo, num_hi);
        std::uniform_int_distribution<int> den(den_lo, den_hi);
        return Rational(num(rng_), den(rng_));
    }

    TropMatrix matrix(int n) {
        TropMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = next();
        return a;
    }

    TropMatrix skew_matrix(int n) {
        TropMatrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                a(i, j) = next();
                a(j, i) = -a(i, j);
            }
        return a;
    }

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> dist(lo, hi);
        return dist(rng_);
    }

private:
    std::mt19937_64 rng_;
};

/// Maximum walk weight from i to j over walks of 1..max_len edges, by explicit
/// recursive enumeration of every vertex sequence.
inline std::optional<Rational> best_walk_weight(const TropMatrix& b, int from, int to,
                                                int max_len) {
    const int n = b.n();
    std::optional<Rational> best;
    auto dfs = [&](auto&& self, int v, int steps, const Rational& weight) -> void {
        if (steps >= 1 && v == to && (!best || weight > *best)) best = weight;
        if (steps == max_len) return;
        for (int w = 0; w < n; ++w) self(self, w, steps + 1, weight + b(v, w));
    };
    dfs(dfs, from, 0, Rational(0));
    return best;
}

/// Max weight over simple paths from -> to (simple cycles when from == to)
/// together with the number of maximizers, by Held-Karp style DP over
/// (visited set, last vertex). Structurally independent of the library's DFS.
inline std::pair<Rational, long long> best_simple_path(const TropMatrix& b, int from, int to) {
    const int n = b.n();
    struct Cell {
        std::optional<Rational> weight;
        long long count = 0;
    };
    // state: subset of visited vertices (excluding `to` unless from == to)
    std::vector<std::vector<Cell>> dp(static_cast<std::size_t>(1) << n,
                                      std::vector<Cell>(static_cast<std::size_t>(n)));
    dp[static_cast<std::size_t>(1) << from][static_cast<std::size_t>(from)] = {Rational(0), 1};
    Cell result;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        for (int v = 0; v < n; ++v) {
            const Cell& cell = dp[mask][static_cast<std::size_t>(v)];
            if (!cell.weight) continue;
            // close the path with the edge v -> to
            if (static_cast<int>(mask) != 0) {
                Rational total = *cell.weight + b(v, to);
                if (!result.weight || total > *result.weight) {
                    result.weight = total;
                    result.count = cell.count;
                } else if (total == *result.weight) {
                    result.count += cell.count;
                }
            }
            for (int w = 0; w < n; ++w) {
                if (w == to || (mask >> w) & 1) continue;
                std::size_t next = mask | (static_cast<std::size_t>(1) << w);
                Cell& slot = dp[next][static_cast<std::size_t>(w)];
                Rational total = *cell.weight + b(v, w);
                if (!slot.weight || total > *slot.weight) {
                    slot.weight = total;
                    slot.count = cell.count;
                } else if (total == *slot.weight) {
                    slot.count += cell.count;
                }
            }
        }
    }
    return {*result.weight, result.count};
}

}  // namespace testsupport
