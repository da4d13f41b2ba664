#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tropeig/combinat.hpp"
#include "tropeig/errors.hpp"
#include "tropeig/linalg.hpp"
#include "tropeig/matrix.hpp"
#include "tropeig/rational.hpp"
#include "tropeig/spectral.hpp"

namespace tropeig {

/// Homogeneous linear form on matrix space: sum of coeffs_{ij} * a_{ij}.
struct LinearForm {
    int n = 0;
    std::vector<Rational> coeffs;  // n*n, row-major
    Rational constant;             // kept for generality; facet forms are homogeneous

    explicit LinearForm(int dim)
        : n(dim), coeffs(static_cast<std::size_t>(dim) * dim), constant(0) {}

    const Rational& coeff(int i, int j) const {
        return coeffs[static_cast<std::size_t>(i) * n + j];
    }
    Rational& coeff(int i, int j) { return coeffs[static_cast<std::size_t>(i) * n + j]; }

    Rational evaluate(const TropMatrix& a) const {
        Rational value = constant;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (coeff(i, j) != 0) value += coeff(i, j) * a(i, j);
        return value;
    }
};

/// One facet inequality form(A) <= 0 of an eigenpair cone, indexed by the
/// non-edge of the connected function it corresponds to.
struct ConeInequality {
    std::pair<int, int> non_edge;
    LinearForm form;
};

/// Exact H-description of the eigenpair cone of a connected function:
/// n(n-1) inequalities, one per non-edge.
struct ConeDescription {
    ConnectedFunction phi;
    std::vector<ConeInequality> inequalities;
};

struct DegeneracyReport {
    bool critical_connected = true;
    std::vector<int> tied_rows;  // rows of the normal form with tied maxima
};

/// Outcome of classifying a matrix by its eigenpair type. Generic matrices
/// carry the connected function and, for every vertex off the critical cycle,
/// the critical vertex its maximal path runs into.
struct ClassifyResult {
    Rational lambda;
    std::optional<ConnectedFunction> phi;
    std::map<int, int> anchor;
    DegeneracyReport degeneracy;

    bool generic() const { return phi.has_value(); }
};

/// Spanning set of the lineality space shared by all eigenpair cones: the
/// all-ones matrix together with the row-minus-column indicator matrices.
struct LinealityBasis {
    int n = 0;
    std::vector<TropMatrix> basis;
};

inline LinealityBasis lineality_basis(int n) {
    LinealityBasis out;
    out.n = n;
    out.basis.push_back(TropMatrix::constant(n, Rational(1)));
    for (int v = 0; v < n; ++v) {
        TropMatrix r(n);
        for (int j = 0; j < n; ++j) {
            r(v, j) += 1;
            r(j, v) -= 1;
        }
        out.basis.push_back(r);
    }
    return out;
}

namespace detail {

// Per-function path data: which vertices sit on the cycle, the first cycle
// vertex each tree vertex runs into, and vertex chains realizing those runs.
struct PhiPaths {
    std::vector<int> cycle;
    std::vector<int> cycle_pos;  // position in cycle, or -1
    std::vector<int> anchor;     // first cycle vertex on the orbit of v

    explicit PhiPaths(const ConnectedFunction& phi) {
        const int n = phi.n();
        cycle = cycle_of(phi);
        cycle_pos.assign(static_cast<std::size_t>(n), -1);
        for (std::size_t p = 0; p < cycle.size(); ++p)
            cycle_pos[static_cast<std::size_t>(cycle[p])] = static_cast<int>(p);
        anchor.assign(static_cast<std::size_t>(n), -1);
        for (int v = 0; v < n; ++v) {
            int w = v;
            while (cycle_pos[static_cast<std::size_t>(w)] < 0) w = phi(w);
            anchor[static_cast<std::size_t>(v)] = w;
        }
    }

    // Vertex chain from v to the cycle vertex `target`: tree edges down to
    // anchor(v), then along the cycle without wrapping past `target`.
    std::vector<int> path_vertices(const ConnectedFunction& phi, int v, int target) const {
        std::vector<int> chain{v};
        int w = v;
        while (cycle_pos[static_cast<std::size_t>(w)] < 0) {
            w = phi(w);
            chain.push_back(w);
        }
        while (w != target) {
            w = phi(w);
            chain.push_back(w);
        }
        return chain;
    }
};

}  // namespace detail

/// Mean of a_{i,phi(i)} over the cycle of phi: the eigenvalue functional of
/// the eigenpair cone, defined on all of matrix space.
inline Rational lambda_phi(const TropMatrix& a, const ConnectedFunction& phi) {
    if (a.n() != phi.n()) throw DimensionMismatchError("lambda_phi dimension mismatch");
    std::vector<int> cycle = cycle_of(phi);
    Rational total = 0;
    for (int v : cycle) total += a(v, phi(v));
    return total / static_cast<int>(cycle.size());
}

/// Eigenvector functional of the eigenpair cone: x_i is the weight of the
/// phi-path from i to the smallest cycle vertex in B = A - lambda_phi,
/// renormalized so x_n = 0. Linear in the entries of A and defined
/// everywhere; agrees with eigenvector() on the interior of the cone.
inline TropVector x_phi(const TropMatrix& a, const ConnectedFunction& phi) {
    if (a.n() != phi.n()) throw DimensionMismatchError("x_phi dimension mismatch");
    const int n = a.n();
    detail::PhiPaths paths(phi);
    Rational lambda = lambda_phi(a, phi);
    TropVector x(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> chain = paths.path_vertices(phi, i, paths.cycle.front());
        Rational weight = 0;
        for (std::size_t t = 0; t + 1 < chain.size(); ++t)
            weight += a(chain[t], chain[t + 1]) - lambda;
        x[i] = weight;
    }
    return trop_scale(x, -x[n - 1]);
}

/// The n(n-1) facet inequalities of the eigenpair cone of phi, one per
/// non-edge (i,j). Expanding the path-difference bound in the entries of A:
///
///   form = a_ij - A(path i -> j*) + A(path j -> j*)
///          + (|path_i| - |path_j| - 1) * lambda_phi     <= 0
///
/// where j* is the cycle anchor of j and both paths follow phi. The form
/// equals the (i,j) entry of the normal form C = (a_ij - x_i + x_j - lambda)
/// as a linear function of A.
inline ConeDescription cone_inequalities(const ConnectedFunction& phi) {
    const int n = phi.n();
    detail::PhiPaths paths(phi);
    const int k = static_cast<int>(paths.cycle.size());

    ConeDescription out{phi, {}};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == phi(i)) continue;
            LinearForm form(n);
            form.coeff(i, j) += 1;
            const int target = paths.anchor[static_cast<std::size_t>(j)];
            std::vector<int> path_i = paths.path_vertices(phi, i, target);
            std::vector<int> path_j = paths.path_vertices(phi, j, target);
            for (std::size_t t = 0; t + 1 < path_i.size(); ++t)
                form.coeff(path_i[t], path_i[t + 1]) -= 1;
            for (std::size_t t = 0; t + 1 < path_j.size(); ++t)
                form.coeff(path_j[t], path_j[t + 1]) += 1;
            Rational lambda_multiple(static_cast<int>(path_i.size()) -
                                     static_cast<int>(path_j.size()) - 1);
            if (lambda_multiple != 0) {
                Rational per_edge = lambda_multiple / k;
                for (int v : paths.cycle) form.coeff(v, phi(v)) += per_edge;
            }
            out.inequalities.push_back(ConeInequality{{i, j}, std::move(form)});
        }
    }
    return out;
}

/// Strict membership: A lies in the open eigenpair cone of phi.
inline bool member_interior(const TropMatrix& a, const ConnectedFunction& phi) {
    for (const auto& ineq : cone_inequalities(phi).inequalities)
        if (!(ineq.form.evaluate(a) < 0)) return false;
    return true;
}

/// Weak membership: A lies in the closed eigenpair cone of phi.
inline bool member_closure(const TropMatrix& a, const ConnectedFunction& phi) {
    for (const auto& ineq : cone_inequalities(phi).inequalities)
        if (ineq.form.evaluate(a) > 0) return false;
    return true;
}

/// Normal form C = (a_ij - x_i + x_j - lambda) for the functionals of phi.
/// A is interior to the cone of phi iff C vanishes on the edges of phi and is
/// strictly negative elsewhere.
inline TropMatrix phi_normal_form(const TropMatrix& a, const ConnectedFunction& phi) {
    const int n = a.n();
    Rational lambda = lambda_phi(a, phi);
    TropVector x = x_phi(a, phi);
    TropMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c(i, j) = a(i, j) - x[i] + x[j] - lambda;
    return c;
}

/// Classifies a matrix by its eigenpair type. Generic means: the critical
/// cycles are connected and every row of the normal form C = (a_ij - x_i +
/// x_j - lambda) has a unique maximum; the argmax map is then the connected
/// function of the matrix. Boundary matrices yield a Degenerate report, not
/// an error.
inline ClassifyResult classify(const TropMatrix& a) {
    const int n = a.n();
    ClassifyResult out;
    CriticalData cd = critical_data(a);
    out.lambda = cd.lambda;
    if (!cd.is_connected) {
        out.degeneracy.critical_connected = false;
        return out;
    }
    TropMatrix star = kleene_star(trop_scale(a, -cd.lambda));
    const int anchor = cd.critical_vertices.front();
    TropVector x(n);
    for (int i = 0; i < n; ++i) x[i] = star(i, anchor);

    std::vector<int> image(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        Rational row_max = a(i, 0) - x[i] + x[0] - cd.lambda;
        int arg = 0;
        bool tied = false;
        for (int j = 1; j < n; ++j) {
            Rational c = a(i, j) - x[i] + x[j] - cd.lambda;
            if (c > row_max) {
                row_max = c;
                arg = j;
                tied = false;
            } else if (c == row_max) {
                tied = true;
            }
        }
        if (tied) out.degeneracy.tied_rows.push_back(i);
        image[static_cast<std::size_t>(i)] = arg;
    }
    if (!out.degeneracy.tied_rows.empty()) return out;

    out.phi = ConnectedFunction(n, image);
    detail::PhiPaths paths(*out.phi);
    for (int v = 0; v < n; ++v)
        if (paths.cycle_pos[static_cast<std::size_t>(v)] < 0)
            out.anchor[v] = paths.anchor[static_cast<std::size_t>(v)];
    return out;
}

/// A matrix interior to the eigenpair cone of phi: every edge of phi gets
/// weight 0 and every non-edge a strictly negative value, chosen on a
/// geometric schedule as tree vertices are attached one at a time so the
/// construction stays deterministic at any depth.
inline TropMatrix realize(const ConnectedFunction& phi) {
    const int n = phi.n();
    detail::PhiPaths paths(phi);

    // Peel tree vertices (smallest removable first), then rebuild in reverse.
    std::vector<bool> active(static_cast<std::size_t>(n), true);
    std::vector<int> peel_order;
    for (int remaining = n - static_cast<int>(paths.cycle.size()); remaining > 0; --remaining) {
        std::vector<bool> has_preimage(static_cast<std::size_t>(n), false);
        for (int v = 0; v < n; ++v)
            if (active[static_cast<std::size_t>(v)])
                has_preimage[static_cast<std::size_t>(phi(v))] = true;
        for (int v = 0; v < n; ++v) {
            if (active[static_cast<std::size_t>(v)] && !has_preimage[static_cast<std::size_t>(v)] &&
                paths.cycle_pos[static_cast<std::size_t>(v)] < 0) {
                peel_order.push_back(v);
                active[static_cast<std::size_t>(v)] = false;
                break;
            }
        }
    }

    TropMatrix a(n);
    Rational max_abs = 0;
    auto fill = [&](const std::vector<int>& members, const std::vector<int>& existing, int depth) {
        Rational penalty = Rational(1) + Rational(n) * max_abs;
        for (int d = 0; d < depth; ++d) penalty *= 3;
        for (int v : members) {
            for (int w : existing) {
                if (w != phi(v)) a(v, w) = -penalty;
                if (phi(w) != v) a(w, v) = -penalty;
            }
            if (phi(v) != v) a(v, v) = -penalty;
        }
        if (penalty > max_abs) max_abs = penalty;
    };

    std::vector<int> existing = paths.cycle;
    for (int v : paths.cycle) a(v, phi(v)) = 0;
    fill(paths.cycle, existing, 0);
    int depth = 1;
    for (auto it = peel_order.rbegin(); it != peel_order.rend(); ++it, ++depth) {
        a(*it, phi(*it)) = 0;
        fill({*it}, existing, depth);
        existing.push_back(*it);
    }
    return a;
}

/// True iff A lies in the span of the lineality basis, by exact rank.
inline bool in_lineality(const TropMatrix& a) {
    const int n = a.n();
    auto flatten = [n](const TropMatrix& m) {
        RatVec v(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(i) * n + j] = m(i, j);
        return v;
    };
    std::vector<RatVec> rows;
    for (const auto& b : lineality_basis(n).basis) rows.push_back(flatten(b));
    auto basis = linalg::rref(rows);
    return linalg::in_span(flatten(a), basis);
}

/// Witness that the eigenpair cones do not tile matrix space as a fan: a 3x3
/// matrix with two disjoint critical classes whose eigenpolytope is a
/// segment, together with the cones whose closures contain it and exact
/// perturbation data showing each segment endpoint as a limit of eigenvectors
/// of nearby generic matrices.
struct FanFailureWitness {
    TropMatrix matrix;
    std::vector<ConnectedFunction> cones;
    TropPolytope eigenpolytope;

    struct Sample {
        Rational epsilon;
        Rational lambda;
        TropVector eigenvector;
    };
    struct Perturbation {
        std::pair<int, int> entry;
        ConnectedFunction phi;
        std::vector<Sample> samples;
        TropVector limit;  // exact limit of the eigenvector as epsilon -> 0
        int vertex_index;  // which eigenpolytope vertex the limit hits
    };
    std::vector<Perturbation> perturbations;
};

inline FanFailureWitness fan_failure_witness() {
    const Rational m1(-1);
    TropMatrix w = TropMatrix::from_rows({{Rational(0), Rational(0), m1},
                                          {Rational(0), Rational(0), m1},
                                          {m1, m1, Rational(0)}});
    FanFailureWitness out{w, {}, eigenspace(w), {}};
    if (out.eigenpolytope.vertices.size() != 2)
        throw Error("fan failure witness: eigenpolytope is not a segment");

    for (const auto& phi : enumerate_connected(3))
        if (member_closure(w, phi)) out.cones.push_back(phi);
    if (out.cones.size() < 2) throw Error("fan failure witness: expected >= 2 incident cones");

    for (std::pair<int, int> entry : {std::pair<int, int>{0, 1}, std::pair<int, int>{2, 2}}) {
        std::vector<FanFailureWitness::Sample> samples;
        std::optional<ConnectedFunction> phi;
        for (const Rational& eps :
             {Rational(1), Rational(1, 2), Rational(1, 4)}) {
            TropMatrix a = w;
            a(entry.first, entry.second) = eps;
            ClassifyResult cls = classify(a);
            if (!cls.generic()) throw Error("fan failure witness: perturbed matrix not generic");
            if (!phi)
                phi = *cls.phi;
            else if (!(*phi == *cls.phi))
                throw Error("fan failure witness: perturbation changed type");
            Eigenpair ep = eigenvector(a);
            samples.push_back({eps, ep.lambda, ep.x});
        }
        // The eigenvector is affine in epsilon on this family, so two samples
        // determine the limit exactly and the third must confirm it.
        const int n = w.n();
        TropVector limit(n), slope(n);
        for (int i = 0; i < n; ++i) {
            limit[i] = samples[1].eigenvector[i] * 2 - samples[0].eigenvector[i];
            slope[i] = samples[0].eigenvector[i] - limit[i];
        }
        for (int i = 0; i < n; ++i)
            if (samples[2].eigenvector[i] != limit[i] + slope[i] / 4)
                throw Error("fan failure witness: eigenvector not affine in epsilon");
        int vertex_index = -1;
        for (std::size_t v = 0; v < out.eigenpolytope.vertices.size(); ++v)
            if (out.eigenpolytope.vertices[v] == limit) vertex_index = static_cast<int>(v);
        if (vertex_index < 0)
            throw Error("fan failure witness: limit is not an eigenpolytope vertex");
        out.perturbations.push_back({entry, *phi, std::move(samples), limit, vertex_index});
    }
    if (out.perturbations[0].vertex_index == out.perturbations[1].vertex_index)
        throw Error("fan failure witness: perturbations hit the same vertex");
    return out;
}

}  // namespace tropeig
