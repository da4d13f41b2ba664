#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tropeig/errors.hpp"
#include "tropeig/rational.hpp"

namespace tropeig {

/// True iff the functional graph {i -> f(i)} on n vertices is connected as an
/// undirected graph. Such self-maps carry exactly one directed cycle.
inline bool is_connected_function(int n, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != n) return false;
    for (int v : f)
        if (v < 0 || v >= n) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int components = n;
    for (int i = 0; i < n; ++i) {
        int a = find(i), b = find(f[i]);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

/// A self-map of {0,...,n-1} whose functional graph is connected. The
/// combinatorial type of a generic matrix's eigenpair cone. Indices are
/// 0-based throughout the library; the CLI converts to 1-based documents.
class ConnectedFunction {
public:
    ConnectedFunction(int n, std::vector<int> image) : n_(n), image_(std::move(image)) {
        if (n_ < 1) throw InvalidDimensionError("connected function needs n >= 1");
        if (!is_connected_function(n_, image_))
            throw std::invalid_argument("map is not a connected function");
    }

    int n() const { return n_; }
    int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& image() const { return image_; }

    bool operator==(const ConnectedFunction&) const = default;

private:
    int n_;
    std::vector<int> image_;
};

/// The unique directed cycle of the functional graph, rotated so the smallest
/// vertex comes first.
inline std::vector<int> cycle_of(const ConnectedFunction& phi) {
    int v = 0;
    for (int step = 0; step < phi.n(); ++step) v = phi(v);  // walk onto the cycle
    std::vector<int> cycle{v};
    for (int w = phi(v); w != v; w = phi(w)) cycle.push_back(w);
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    return cycle;
}

/// A kite is a connected function whose cycle has length >= 3.
inline bool is_kite(const ConnectedFunction& phi) {
    return cycle_of(phi).size() >= 3;
}

/// All connected functions on {0,...,n-1} in lexicographic order of the image
/// tuple. Guarded: the list has 355081 entries already at n = 7.
inline std::vector<ConnectedFunction> enumerate_connected(int n) {
    if (n < 1) throw InvalidDimensionError("enumerate_connected needs n >= 1");
    if (n > 7) throw DimensionTooLargeError("enumerate_connected supports n <= 7");
    std::vector<ConnectedFunction> out;
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    while (true) {
        if (is_connected_function(n, f)) out.emplace_back(n, f);
        int pos = n - 1;
        while (pos >= 0 && f[pos] == n - 1) f[pos--] = 0;
        if (pos < 0) break;
        ++f[pos];
    }
    return out;
}

namespace detail {

// Sum over cycle lengths k of n!/(n-k)! * n^(n-k-1); the k = n term is the
// integer (n-1)! after cancelling n^(-1) against n!.
inline BigInt count_by_cycle_length(int n, int k_min) {
    BigInt total = 0;
    for (int k = k_min; k <= n; ++k) {
        BigInt falling = 1;
        for (int t = 0; t < k; ++t) falling *= n - t;
        if (k == n) {
            total += falling / n;
        } else {
            BigInt tail = 1;
            for (int e = 0; e < n - k - 1; ++e) tail *= n;
            total += falling * tail;
        }
    }
    return total;
}

}  // namespace detail

/// Closed-form count of connected functions on {0,...,n-1}.
inline BigInt count_connected(int n) {
    if (n < 1) throw InvalidDimensionError("count_connected needs n >= 1");
    return detail::count_by_cycle_length(n, 1);
}

/// Closed-form count of kites; defined for n >= 3 (shorter cycles cannot
/// reach length 3).
inline BigInt count_kites(int n) {
    if (n < 3) throw InvalidDimensionError("count_kites needs n >= 3");
    return detail::count_by_cycle_length(n, 3);
}

/// Face counts of a simplicial complex: counts[d] = number of d-dimensional
/// faces; the last entry counts the facets.
using FVector = std::vector<long long>;

/// f-vector of the simplicial complex on vertex set [n] x [n] whose facets are
/// the complements of connected functions. Computed by enumerating every
/// subset of every facet and deduplicating by vertex bitmask, which is why n
/// is capped at 4 (142 facets x 2^12 subsets).
inline FVector sigma_fvector(int n) {
    if (n < 1) throw InvalidDimensionError("sigma_fvector needs n >= 1");
    if (n > 4) throw DimensionTooLargeError("sigma_fvector supports n <= 4");
    const int dim = n * n - n;  // vertices per facet
    FVector counts(static_cast<std::size_t>(dim), 0);
    std::unordered_set<std::uint32_t> seen;
    for (const auto& phi : enumerate_connected(n)) {
        std::uint32_t facet = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j != phi(i)) facet |= std::uint32_t{1} << (i * n + j);
        for (std::uint32_t s = facet; s != 0; s = (s - 1) & facet) {
            if (seen.insert(s).second) ++counts[static_cast<std::size_t>(std::popcount(s)) - 1];
        }
    }
    return counts;
}

}  // namespace tropeig
