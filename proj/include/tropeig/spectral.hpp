#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "tropeig/errors.hpp"
#include "tropeig/matrix.hpp"
#include "tropeig/rational.hpp"

namespace tropeig {

/// (lambda, x) with A (*) x = lambda (*) x, exactly. The representative is
/// normalized so the last coordinate is 0 (the canonical lift from the
/// tropical projective torus).
struct Eigenpair {
    Rational lambda;
    TropVector x;
};

/// Zero-weight structure of the normalized matrix B = A - lambda: the
/// critical vertices, edges and cycles, and whether their union is connected
/// as an undirected graph (the eigenvector is unique exactly in that case).
struct CriticalData {
    Rational lambda;
    std::vector<int> critical_vertices;
    std::vector<std::pair<int, int>> critical_edges;
    std::vector<std::vector<int>> critical_cycles;
    bool is_connected = false;
};

/// Finitely generated tropical polytope, the shape of an eigenspace.
/// Generators are normalized with last coordinate 0 and deduplicated;
/// vertices are the generators that are not tropical combinations of the
/// others (there are at most n of them).
struct TropPolytope {
    int ambient_n = 0;
    std::vector<TropVector> generators;
    std::vector<TropVector> vertices;
};

/// One maximum-weight path between two vertices, with a uniqueness flag.
struct PathWitness {
    int from = 0;
    int to = 0;
    std::vector<int> vertices;
    Rational weight;
    bool unique = false;
};

/// Tropical eigenvalue = maximum cycle mean, by Karp's dynamic program:
/// with D_k(v) the maximum weight of a k-edge walk from a fixed source,
/// lambda = max_v min_{0 <= k < n} (D_n(v) - D_k(v)) / (n - k).
/// The graph is complete (all entries finite), hence strongly connected, and
/// the source choice is immaterial; vertex 0 is used.
inline Rational eigenvalue(const TropMatrix& a) {
    const int n = a.n();
    std::vector<std::vector<std::optional<Rational>>> walk(
        static_cast<std::size_t>(n) + 1,
        std::vector<std::optional<Rational>>(static_cast<std::size_t>(n)));
    walk[0][0] = Rational(0);
    for (int k = 1; k <= n; ++k) {
        for (int v = 0; v < n; ++v) {
            std::optional<Rational> best;
            for (int u = 0; u < n; ++u) {
                if (!walk[k - 1][u]) continue;
                Rational cand = *walk[k - 1][u] + a(u, v);
                if (!best || cand > *best) best = cand;
            }
            walk[k][v] = best;
        }
    }
    std::optional<Rational> lambda;
    for (int v = 0; v < n; ++v) {
        if (!walk[n][v]) continue;
        std::optional<Rational> inner;
        for (int k = 0; k < n; ++k) {
            if (!walk[k][v]) continue;
            Rational cand = (*walk[n][v] - *walk[k][v]) / (n - k);
            if (!inner || cand < *inner) inner = cand;
        }
        if (inner && (!lambda || *inner > *lambda)) lambda = inner;
    }
    return *lambda;
}

namespace detail {

// Enumerates simple directed cycles whose smallest vertex is `start`, visiting
// only vertices >= start, in DFS order with ascending neighbors. The callback
// receives the vertex list; the closing edge back to `start` is implicit.
template <typename Callback>
void for_each_simple_cycle(int n, int start, Callback&& cb) {
    std::vector<int> path{start};
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);
    on_path[static_cast<std::size_t>(start)] = true;
    auto dfs = [&](auto&& self) -> void {
        cb(path);
        for (int w = start + 1; w < n; ++w) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = true;
            path.push_back(w);
            self(self);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = false;
        }
    };
    dfs(dfs);
}

}  // namespace detail

/// Maximum cycle mean by brute-force enumeration of all simple directed
/// cycles; the independent cross-check for eigenvalue(). Factorially many
/// cycles, so n is capped at 8.
inline Rational eigenvalue_oracle(const TropMatrix& a) {
    const int n = a.n();
    if (n > 8) throw DimensionTooLargeError("eigenvalue_oracle supports n <= 8");
    std::optional<Rational> best;
    for (int start = 0; start < n; ++start) {
        detail::for_each_simple_cycle(n, start, [&](const std::vector<int>& path) {
            Rational weight = 0;
            for (std::size_t t = 0; t + 1 < path.size(); ++t) weight += a(path[t], path[t + 1]);
            weight += a(path.back(), path.front());
            Rational mean = weight / static_cast<int>(path.size());
            if (!best || mean > *best) best = mean;
        });
    }
    return *best;
}

/// B = A - lambda(A): every cycle becomes non-positive and the critical ones
/// have weight exactly 0.
inline TropMatrix normalize(const TropMatrix& a) {
    return trop_scale(a, -eigenvalue(a));
}

inline CriticalData critical_data(const TropMatrix& a) {
    const int n = a.n();
    CriticalData out;
    out.lambda = eigenvalue(a);
    TropMatrix b = trop_scale(a, -out.lambda);
    TropMatrix star = kleene_star(b);

    for (int i = 0; i < n; ++i)
        if (star(i, i) == 0) out.critical_vertices.push_back(i);

    // (i,j) is critical iff the edge closes a zero-weight cycle: the best
    // return path j -> i makes b_ij + star_ji = 0.
    std::vector<std::vector<bool>> critical(static_cast<std::size_t>(n),
                                            std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b(i, j) + star(j, i) == 0) {
                critical[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
                out.critical_edges.emplace_back(i, j);
            }

    for (int start = 0; start < n; ++start) {
        if (star(start, start) != 0) continue;
        std::vector<int> path{start};
        std::vector<bool> on_path(static_cast<std::size_t>(n), false);
        on_path[static_cast<std::size_t>(start)] = true;
        auto dfs = [&](auto&& self, int v) -> void {
            if (critical[static_cast<std::size_t>(v)][static_cast<std::size_t>(start)]) {
                Rational weight = 0;
                for (std::size_t t = 0; t + 1 < path.size(); ++t)
                    weight += b(path[t], path[t + 1]);
                weight += b(path.back(), start);
                if (weight == 0) out.critical_cycles.push_back(path);
            }
            for (int w = start + 1; w < n; ++w) {
                if (on_path[static_cast<std::size_t>(w)]) continue;
                if (!critical[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) continue;
                on_path[static_cast<std::size_t>(w)] = true;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                on_path[static_cast<std::size_t>(w)] = false;
            }
        };
        dfs(dfs, start);
    }

    // Connectivity of the union of critical cycles, self-loops ignored.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [i, j] : out.critical_edges)
        if (i != j) parent[find(i)] = find(j);
    out.is_connected = true;
    for (int v : out.critical_vertices)
        if (find(v) != find(out.critical_vertices.front())) out.is_connected = false;
    return out;
}

/// The unique eigenvector when the critical structure is connected: fixes the
/// smallest critical vertex l and reads off x_i as the maximal path weight
/// from i to l in B, then renormalizes so x_n = 0. Throws
/// NonUniqueEigenvectorError when the eigenspace is positive-dimensional.
inline Eigenpair eigenvector(const TropMatrix& a) {
    CriticalData cd = critical_data(a);
    if (!cd.is_connected)
        throw NonUniqueEigenvectorError(
            "critical cycles are disconnected; use eigenspace() for the full eigenpolytope");
    const int n = a.n();
    TropMatrix star = kleene_star(trop_scale(a, -cd.lambda));
    const int anchor = cd.critical_vertices.front();
    TropVector x(n);
    for (int i = 0; i < n; ++i) x[i] = star(i, anchor);
    return Eigenpair{cd.lambda, trop_scale(x, -x[n - 1])};
}

namespace detail {

// Is g a tropical combination of the given generators? Residuation check:
// the best scaling of each generator that stays below g either recovers g as
// an entrywise max or nothing does.
inline bool in_tropical_span(const TropVector& g, const std::vector<const TropVector*>& gens) {
    if (gens.empty()) return false;
    const int n = g.n();
    std::vector<std::optional<Rational>> best(static_cast<std::size_t>(n));
    for (const TropVector* h : gens) {
        Rational shift = g[0] - (*h)[0];
        for (int i = 1; i < n; ++i) {
            Rational cand = g[i] - (*h)[i];
            if (cand < shift) shift = cand;
        }
        for (int i = 0; i < n; ++i) {
            Rational cand = shift + (*h)[i];
            auto& slot = best[static_cast<std::size_t>(i)];
            if (!slot || cand > *slot) slot = cand;
        }
    }
    for (int i = 0; i < n; ++i)
        if (*best[static_cast<std::size_t>(i)] != g[i]) return false;
    return true;
}

}  // namespace detail

/// The full eigenspace as a tropical polytope: the tropical column span of the
/// zero-diagonal columns of the Kleene star of B = A - lambda.
inline TropPolytope eigenspace(const TropMatrix& a) {
    const int n = a.n();
    TropMatrix star = kleene_star(normalize(a));
    TropPolytope out;
    out.ambient_n = n;
    for (int j = 0; j < n; ++j) {
        if (star(j, j) != 0) continue;
        TropVector column(n);
        for (int i = 0; i < n; ++i) column[i] = star(i, j);
        column = trop_scale(column, -column[n - 1]);
        if (std::find(out.generators.begin(), out.generators.end(), column) ==
            out.generators.end())
            out.generators.push_back(column);
    }
    for (std::size_t g = 0; g < out.generators.size(); ++g) {
        std::vector<const TropVector*> others;
        for (std::size_t h = 0; h < out.generators.size(); ++h)
            if (h != g) others.push_back(&out.generators[h]);
        if (!detail::in_tropical_span(out.generators[g], others))
            out.vertices.push_back(out.generators[g]);
    }
    return out;
}

/// One maximum-weight path from i to l among simple paths (simple cycles when
/// i = l), together with whether the maximizer is unique. The weight always
/// equals the Kleene star entry. Exponential enumeration; intended for the
/// small dimensions this library targets.
inline PathWitness maximal_path(const TropMatrix& b, int i, int l) {
    const int n = b.n();
    if (i < 0 || i >= n || l < 0 || l >= n)
        throw DimensionMismatchError("maximal_path index out of range");
    TropMatrix star = kleene_star(b);  // validates the cycle condition
    PathWitness out;
    out.from = i;
    out.to = l;
    out.weight = star(i, l);
    long long maximizers = 0;

    std::vector<int> path{i};
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);
    on_path[static_cast<std::size_t>(i)] = true;
    Rational weight = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        for (int w = 0; w < n; ++w) {
            if (w == l) {
                Rational total = weight + b(v, w);
                if (total == out.weight) {
                    if (maximizers == 0) {
                        out.vertices = path;
                        out.vertices.push_back(l);
                    }
                    ++maximizers;
                }
            }
            if (on_path[static_cast<std::size_t>(w)] || w == l) continue;
            on_path[static_cast<std::size_t>(w)] = true;
            path.push_back(w);
            weight += b(v, w);
            self(self, w);
            weight -= b(v, w);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = false;
        }
    };
    dfs(dfs, i);
    out.unique = maximizers == 1;
    return out;
}

}  // namespace tropeig
