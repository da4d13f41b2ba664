#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "tropeig/combinat.hpp"
#include "tropeig/cones.hpp"
#include "tropeig/errors.hpp"
#include "tropeig/linalg.hpp"
#include "tropeig/matrix.hpp"
#include "tropeig/spectral.hpp"

namespace tropeig {

/// Matrix with a_ij + a_ji = 0 everywhere (hence zero diagonal); the additive
/// form of a pairwise-comparison table.
class SkewMatrix {
public:
    const TropMatrix& matrix() const { return m_; }
    int n() const { return m_.n(); }

private:
    explicit SkewMatrix(TropMatrix m) : m_(std::move(m)) {}
    friend SkewMatrix validate_skew(const TropMatrix&);
    TropMatrix m_;
};

inline SkewMatrix validate_skew(const TropMatrix& a) {
    const int n = a.n();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (a(i, j) + a(j, i) != 0)
                throw NotSkewError("matrix is not skew-symmetric at (" + std::to_string(i + 1) +
                                       "," + std::to_string(j + 1) + ")",
                                   i, j);
    return SkewMatrix(a);
}

/// lambda(A) together with membership in the lineality space. For skew
/// matrices lambda is never negative and vanishes exactly on the lineality
/// space; both facts are recomputed and cross-checked here.
inline std::pair<Rational, bool> skew_eigenvalue_sign(const SkewMatrix& a) {
    Rational lambda = eigenvalue(a.matrix());
    bool lineal = in_lineality(a.matrix());
    if ((lambda == 0) != lineal)
        throw Error("skew sign law violated: lambda and lineality membership disagree");
    return {lambda, lineal};
}

/// classify() specialized to skew matrices: a generic skew type is always a
/// kite (cycles of length <= 2 have zero mean and cannot be strictly
/// critical).
inline ClassifyResult classify_skew(const SkewMatrix& a) {
    ClassifyResult out = classify(a.matrix());
    if (out.generic() && !is_kite(*out.phi))
        throw Error("internal: generic skew matrix classified to a non-kite");
    return out;
}

/// Ranking read off a comparison matrix: indices sorted by descending
/// eigenvector entry. Exact ties are reported as groups (ascending index
/// inside a group), never broken silently.
struct RankingResult {
    TropVector eigenvector;
    std::vector<int> order;
    std::vector<std::vector<int>> ties;
};

/// Requires a generic matrix; degenerate inputs raise
/// NonUniqueEigenvectorError and callers should inspect eigenspace() instead.
inline RankingResult rank(const SkewMatrix& a) {
    ClassifyResult cls = classify_skew(a);
    if (!cls.generic())
        throw NonUniqueEigenvectorError("ranking requires a generic comparison matrix");
    Eigenpair ep = eigenvector(a.matrix());
    const int n = a.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return ep.x[i] > ep.x[j]; });
    std::vector<std::vector<int>> ties;
    for (std::size_t t = 0; t < order.size();) {
        std::size_t u = t + 1;
        while (u < order.size() && ep.x[order[u]] == ep.x[order[t]]) ++u;
        if (u - t >= 2) ties.emplace_back(order.begin() + t, order.begin() + u);
        t = u;
    }
    return RankingResult{ep.x, std::move(order), std::move(ties)};
}

/// Skew matrix interior to the eigenpair cone of a kite. The cycle part is
/// the permutation matrix difference (cycle edges +1, reversed edges -1);
/// tree vertices are attached one at a time by solving for their row: each
/// bound pair leaves an open interval for a_{v,j} - a_{v,phi(v)} and the
/// midpoint is taken, then the row is fixed by requiring it to sum to zero.
inline SkewMatrix realize_kite(const ConnectedFunction& phi) {
    if (!is_kite(phi)) throw NotAKiteError("realize_kite requires a cycle of length >= 3");
    const int n = phi.n();
    detail::PhiPaths paths(phi);
    const Rational lambda(1);  // cycle edges weigh 1 throughout the construction

    TropMatrix a(n);
    for (int v : paths.cycle) {
        a(v, phi(v)) = 1;
        a(phi(v), v) = -1;
    }

    std::vector<bool> active(static_cast<std::size_t>(n), false);
    for (int v : paths.cycle) active[static_cast<std::size_t>(v)] = true;

    // Attach order: peel leaves smallest-first, rebuild in reverse, so every
    // vertex arrives after everything it maps into.
    std::vector<int> peel;
    {
        std::vector<bool> present(static_cast<std::size_t>(n), true);
        for (int remaining = n - static_cast<int>(paths.cycle.size()); remaining > 0;
             --remaining) {
            std::vector<bool> has_preimage(static_cast<std::size_t>(n), false);
            for (int v = 0; v < n; ++v)
                if (present[static_cast<std::size_t>(v)])
                    has_preimage[static_cast<std::size_t>(phi(v))] = true;
            for (int v = 0; v < n; ++v) {
                if (present[static_cast<std::size_t>(v)] &&
                    !has_preimage[static_cast<std::size_t>(v)] &&
                    paths.cycle_pos[static_cast<std::size_t>(v)] < 0) {
                    peel.push_back(v);
                    present[static_cast<std::size_t>(v)] = false;
                    break;
                }
            }
        }
    }

    // Weight of the phi-path from v to the cycle vertex `target` in the
    // normalized entries of the active submatrix.
    auto path_weight = [&](int v, int target) {
        std::vector<int> chain = paths.path_vertices(phi, v, target);
        Rational weight = 0;
        for (std::size_t t = 0; t + 1 < chain.size(); ++t)
            weight += a(chain[t], chain[t + 1]) - lambda;
        return weight;
    };

    for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        const int v = *it;
        const int w = phi(v);
        std::vector<int> members;
        for (int j = 0; j < n; ++j)
            if (active[static_cast<std::size_t>(j)]) members.push_back(j);

        // s_j = a_{v,j} - a_{v,w} must sit strictly inside (U_j - 2, U_j)
        // scaled by lambda; pick the midpoint U_j - lambda.
        Rational sum_s = 0;
        std::vector<std::pair<int, Rational>> offsets;
        for (int j : members) {
            if (j == w) continue;
            int target = paths.anchor[static_cast<std::size_t>(j)];
            Rational upper = path_weight(w, target) - path_weight(j, target);
            Rational s = upper - lambda;
            offsets.emplace_back(j, s);
            sum_s += s;
        }
        Rational a_vw = -sum_s / static_cast<int>(members.size());
        a(v, w) = a_vw;
        a(w, v) = -a_vw;
        for (const auto& [j, s] : offsets) {
            a(v, j) = s + a_vw;
            a(j, v) = -a(v, j);
        }
        active[static_cast<std::size_t>(v)] = true;
    }
    return validate_skew(a);
}

/// Facet structure of the skew slice of a kite's eigenpair cone. The n(n-1)
/// facet forms are restricted to the coordinates a_{ij} with i < j
/// (substituting a_{ji} = -a_{ij}) and reduced modulo the span of the skew
/// lineality generators together with the eigenvalue functional; forms
/// parallel to the eigenvalue functional drop out and the rest pair up as
/// +-v, the upper and lower bounds of a cube.
struct SkewConeStructure {
    ConnectedFunction phi;
    std::vector<RatVec> facet_directions;  // canonical, antipodally paired
    int pair_count = 0;
    int independent_rank = 0;
};

inline SkewConeStructure skew_cone_structure(const ConnectedFunction& phi) {
    if (!is_kite(phi)) throw NotAKiteError("skew_cone_structure requires a kite");
    const int n = phi.n();
    if (n < 4)
        throw DimensionTooSmallError(
            "skew cone structure needs n >= 4; at n = 3 every facet form is parallel to the "
            "eigenvalue functional");

    const std::size_t coords = static_cast<std::size_t>(n) * (n - 1) / 2;
    auto coord_index = [n](int i, int j) {  // i < j
        return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
    };
    auto restrict_form = [&](const LinearForm& form) {
        RatVec v(coords, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                v[coord_index(i, j)] = form.coeff(i, j) - form.coeff(j, i);
        return v;
    };

    // Quotient: skew lineality generators plus the eigenvalue functional.
    std::vector<RatVec> span;
    for (int k = 0; k < n; ++k) {
        RatVec r(coords, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (i == k) r[coord_index(i, j)] += 1;
                if (j == k) r[coord_index(i, j)] -= 1;
            }
        span.push_back(std::move(r));
    }
    {
        std::vector<int> cycle = cycle_of(phi);
        RatVec lam(coords, Rational(0));
        Rational per_edge = Rational(1) / static_cast<int>(cycle.size());
        for (int v : cycle) {
            int u = phi(v);
            if (v < u)
                lam[coord_index(v, u)] += per_edge;
            else
                lam[coord_index(u, v)] -= per_edge;
        }
        span.push_back(std::move(lam));
    }
    auto basis = linalg::rref(span);

    SkewConeStructure out{phi, {}, 0, 0};
    for (const auto& ineq : cone_inequalities(phi).inequalities) {
        RatVec reduced = linalg::reduce_mod(restrict_form(ineq.form), basis);
        if (linalg::is_zero(reduced)) continue;
        RatVec direction = linalg::normalize_direction(std::move(reduced));
        if (std::find(out.facet_directions.begin(), out.facet_directions.end(), direction) ==
            out.facet_directions.end())
            out.facet_directions.push_back(std::move(direction));
    }

    std::vector<bool> paired(out.facet_directions.size(), false);
    std::vector<RatVec> representatives;
    for (std::size_t i = 0; i < out.facet_directions.size(); ++i) {
        if (paired[i]) continue;
        RatVec neg = linalg::negate(out.facet_directions[i]);
        for (std::size_t j = i + 1; j < out.facet_directions.size(); ++j) {
            if (!paired[j] && out.facet_directions[j] == neg) {
                paired[i] = paired[j] = true;
                ++out.pair_count;
                representatives.push_back(out.facet_directions[i]);
                break;
            }
        }
        if (!paired[i]) throw Error("internal: unpaired skew facet direction");
    }
    out.independent_rank = static_cast<int>(linalg::rank(representatives));
    return out;
}

}  // namespace tropeig
