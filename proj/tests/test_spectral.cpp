#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "tropeig/matrix.hpp"
#include "tropeig/spectral.hpp"

#include "support.hpp"

using tropeig::CriticalData;
using tropeig::Eigenpair;
using tropeig::Rational;
using tropeig::TropMatrix;
using tropeig::TropPolytope;
using tropeig::TropVector;

namespace {

TropMatrix eq12_matrix() {
    const Rational m1(-1);
    return TropMatrix::from_rows({{Rational(0), Rational(0), m1},
                                  {Rational(0), Rational(0), m1},
                                  {m1, m1, Rational(0)}});
}

TropMatrix skew_example() {
    return TropMatrix::from_rows({{Rational(0), Rational(6), Rational(-3)},
                                  {Rational(-6), Rational(0), Rational(3)},
                                  {Rational(3), Rational(-3), Rational(0)}});
}

// a12 = 6, a23 = 3, a31 = 0, everything else -10: a generic matrix whose type
// is the 3-cycle.
TropMatrix cycle_realization() {
    const Rational far(-10);
    TropMatrix a = TropMatrix::constant(3, far);
    a(0, 1) = 6;
    a(1, 2) = 3;
    a(2, 0) = 0;
    return a;
}

}  // namespace

TEST_CASE("eigenvalue is the maximum cycle mean") {
    SECTION("constant matrix") {
        REQUIRE(tropeig::eigenvalue(TropMatrix::constant(3, Rational(7, 3))) == Rational(7, 3));
    }
    SECTION("segment-eigenspace matrix") {
        REQUIRE(tropeig::eigenvalue(eq12_matrix()) == 0);
    }
    SECTION("agrees with cycle enumeration on random matrices") {
        testsupport::RandomRationals rand(11);
        for (int trial = 0; trial < 60; ++trial) {
            int n = rand.uniform(3, 4);
            TropMatrix a = rand.matrix(n);
            REQUIRE(tropeig::eigenvalue(a) == tropeig::eigenvalue_oracle(a));
        }
    }
}

TEST_CASE("cycle enumeration oracle") {
    REQUIRE(tropeig::eigenvalue_oracle(TropMatrix::from_rows({{Rational(5)}})) == 5);
    REQUIRE(tropeig::eigenvalue_oracle(eq12_matrix()) == 0);
    REQUIRE(tropeig::eigenvalue_oracle(skew_example()) == 4);
    REQUIRE_THROWS_AS(tropeig::eigenvalue_oracle(TropMatrix(9)),
                      tropeig::DimensionTooLargeError);
}

TEST_CASE("normalization") {
    REQUIRE(tropeig::normalize(TropMatrix(3)) == TropMatrix(3));
    REQUIRE(tropeig::normalize(TropMatrix::constant(4, Rational(9, 2))) == TropMatrix(4));
    REQUIRE(tropeig::normalize(eq12_matrix()) == eq12_matrix());
}

TEST_CASE("critical data") {
    SECTION("all-zeros matrix: everything is critical") {
        CriticalData cd = tropeig::critical_data(TropMatrix(3));
        REQUIRE(cd.lambda == 0);
        REQUIRE(cd.critical_vertices == std::vector<int>{0, 1, 2});
        REQUIRE(cd.critical_edges.size() == 9);
        REQUIRE(cd.is_connected);
    }
    SECTION("segment-eigenspace matrix: disconnected critical classes") {
        CriticalData cd = tropeig::critical_data(eq12_matrix());
        REQUIRE(cd.critical_vertices == std::vector<int>{0, 1, 2});
        auto has_cycle = [&](const std::vector<int>& c) {
            return std::find(cd.critical_cycles.begin(), cd.critical_cycles.end(), c) !=
                   cd.critical_cycles.end();
        };
        REQUIRE(has_cycle({0}));
        REQUIRE(has_cycle({1}));
        REQUIRE(has_cycle({2}));
        REQUIRE(has_cycle({0, 1}));
        REQUIRE_FALSE(cd.is_connected);
    }
    SECTION("generic skew matrix: one critical 3-cycle") {
        CriticalData cd = tropeig::critical_data(skew_example());
        REQUIRE(cd.lambda == 4);
        REQUIRE(cd.critical_cycles == std::vector<std::vector<int>>{{0, 1, 2}});
        REQUIRE(cd.is_connected);
    }
    SECTION("critical vertices are never empty") {
        testsupport::RandomRationals rand(17);
        for (int trial = 0; trial < 30; ++trial) {
            CriticalData cd = tropeig::critical_data(rand.matrix(rand.uniform(2, 5)));
            REQUIRE_FALSE(cd.critical_vertices.empty());
        }
    }
}

TEST_CASE("eigenvector") {
    SECTION("constant matrix") {
        Eigenpair ep = tropeig::eigenvector(TropMatrix::constant(3, Rational(5)));
        REQUIRE(ep.lambda == 5);
        REQUIRE(ep.x == TropVector{Rational(0), Rational(0), Rational(0)});
    }
    SECTION("3-cycle realization") {
        Eigenpair ep = tropeig::eigenvector(cycle_realization());
        REQUIRE(ep.lambda == 3);
        REQUIRE(ep.x == TropVector{Rational(3), Rational(0), Rational(0)});
    }
    SECTION("skew example") {
        Eigenpair ep = tropeig::eigenvector(skew_example());
        REQUIRE(ep.lambda == 4);
        REQUIRE(ep.x == TropVector{Rational(1), Rational(-1), Rational(0)});
    }
    SECTION("disconnected critical classes are rejected") {
        REQUIRE_THROWS_AS(tropeig::eigenvector(eq12_matrix()),
                          tropeig::NonUniqueEigenvectorError);
    }
    SECTION("eigen-equation holds exactly on random matrices") {
        testsupport::RandomRationals rand(23);
        for (int trial = 0; trial < 60; ++trial) {
            TropMatrix a = rand.matrix(rand.uniform(2, 5));
            if (!tropeig::critical_data(a).is_connected) continue;
            Eigenpair ep = tropeig::eigenvector(a);
            REQUIRE(ep.x[a.n() - 1] == 0);
            REQUIRE(trop_apply(a, ep.x) == trop_scale(ep.x, ep.lambda));
            // a connected critical structure means a one-point eigenspace
            TropPolytope p = tropeig::eigenspace(a);
            REQUIRE(p.generators == std::vector<TropVector>{ep.x});
        }
    }
    SECTION("adding a constant shifts the eigenvalue, not the representative") {
        testsupport::RandomRationals rand(29);
        for (int trial = 0; trial < 20; ++trial) {
            TropMatrix a = rand.matrix(3);
            Rational c = rand.next();
            TropMatrix shifted = trop_scale(a, c);
            REQUIRE(tropeig::eigenvalue(shifted) == tropeig::eigenvalue(a) + c);
            if (tropeig::critical_data(a).is_connected)
                REQUIRE(tropeig::eigenvector(shifted).x == tropeig::eigenvector(a).x);
        }
    }
    SECTION("representative does not depend on the chosen critical anchor") {
        testsupport::RandomRationals rand(31);
        for (int trial = 0; trial < 25; ++trial) {
            TropMatrix a = rand.matrix(rand.uniform(2, 4));
            CriticalData cd = tropeig::critical_data(a);
            if (!cd.is_connected) continue;
            TropMatrix star = kleene_star(trop_scale(a, -cd.lambda));
            TropVector reference = tropeig::eigenvector(a).x;
            for (int anchor : cd.critical_vertices) {
                TropVector x(a.n());
                for (int i = 0; i < a.n(); ++i) x[i] = star(i, anchor);
                REQUIRE(trop_scale(x, -x[a.n() - 1]) == reference);
            }
        }
    }
}

TEST_CASE("eigenspace") {
    SECTION("generic matrix: a single vertex equal to the eigenvector") {
        TropPolytope p = tropeig::eigenspace(cycle_realization());
        REQUIRE(p.generators.size() == 1);
        REQUIRE(p.vertices.size() == 1);
        REQUIRE(p.vertices.front() == tropeig::eigenvector(cycle_realization()).x);
    }
    SECTION("segment-eigenspace matrix: two vertices") {
        TropPolytope p = tropeig::eigenspace(eq12_matrix());
        REQUIRE(p.vertices.size() == 2);
        REQUIRE(p.vertices[0] == TropVector{Rational(1), Rational(1), Rational(0)});
        REQUIRE(p.vertices[1] == TropVector{Rational(-1), Rational(-1), Rational(0)});
    }
    SECTION("all-zeros matrix: single vertex at the origin") {
        TropPolytope p = tropeig::eigenspace(TropMatrix(3));
        REQUIRE(p.generators.size() == 1);
        REQUIRE(p.vertices == std::vector<TropVector>{TropVector{Rational(0), Rational(0),
                                                                 Rational(0)}});
    }
    SECTION("every generator satisfies the eigen-equation; at most n vertices") {
        testsupport::RandomRationals rand(37);
        for (int trial = 0; trial < 40; ++trial) {
            TropMatrix a = rand.matrix(rand.uniform(2, 5));
            Rational lambda = tropeig::eigenvalue(a);
            TropPolytope p = tropeig::eigenspace(a);
            REQUIRE_FALSE(p.generators.empty());
            REQUIRE(p.vertices.size() <= static_cast<std::size_t>(a.n()));
            for (const TropVector& g : p.generators) {
                REQUIRE(g[a.n() - 1] == 0);
                REQUIRE(trop_apply(a, g) == trop_scale(g, lambda));
            }
        }
    }
}

TEST_CASE("maximal path witnesses") {
    SECTION("unique maximal path in a normalized cycle realization") {
        TropMatrix b = tropeig::normalize(cycle_realization());
        tropeig::PathWitness w = tropeig::maximal_path(b, 0, 2);
        REQUIRE(w.vertices == std::vector<int>{0, 1, 2});
        REQUIRE(w.weight == 3);
        REQUIRE(w.unique);
        auto [best, count] = testsupport::best_simple_path(b, 0, 2);
        REQUIRE(best == w.weight);
        REQUIRE(count == 1);
    }
    SECTION("self-loop witness") {
        TropMatrix b = TropMatrix::from_rows(
            {{Rational(0), Rational(-1)}, {Rational(-1), Rational(-1)}});
        tropeig::PathWitness w = tropeig::maximal_path(b, 0, 0);
        REQUIRE(w.vertices == std::vector<int>{0, 0});
        REQUIRE(w.weight == 0);
        REQUIRE(w.unique);
    }
    SECTION("tie between the direct edge and the detour") {
        tropeig::PathWitness w = tropeig::maximal_path(eq12_matrix(), 0, 2);
        REQUIRE(w.weight == -1);
        REQUIRE_FALSE(w.unique);
        auto [best, count] = testsupport::best_simple_path(eq12_matrix(), 0, 2);
        REQUIRE(best == -1);
        REQUIRE(count == 2);
    }
    SECTION("weights and uniqueness match the DP oracle on random inputs") {
        testsupport::RandomRationals rand(41);
        for (int trial = 0; trial < 25; ++trial) {
            int n = rand.uniform(2, 4);
            TropMatrix b = tropeig::normalize(rand.matrix(n));
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) {
                    tropeig::PathWitness w = tropeig::maximal_path(b, i, l);
                    auto [best, count] = testsupport::best_simple_path(b, i, l);
                    REQUIRE(w.weight == best);
                    REQUIRE(w.unique == (count == 1));
                }
        }
    }
    SECTION("positive cycles are rejected") {
        TropMatrix b = TropMatrix::from_rows({{Rational(1)}});
        REQUIRE_THROWS_AS(tropeig::maximal_path(b, 0, 0), tropeig::PositiveCycleError);
    }
}
