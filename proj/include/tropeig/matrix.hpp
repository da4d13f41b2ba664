#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "tropeig/errors.hpp"
#include "tropeig/rational.hpp"

namespace tropeig {

/// Dense square matrix over the max-plus semiring (u (+) v = max, u (*) v = u + v)
/// with exact rational entries. Every entry is finite, so the weighted digraph
/// of a matrix is complete; there is no -infinity element.
class TropMatrix {
public:
    explicit TropMatrix(int n) : n_(checked(n)), entries_(static_cast<std::size_t>(n) * n) {}

    static TropMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        TropMatrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.n_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.n_)
                throw DimensionMismatchError("matrix rows have unequal length");
            for (int j = 0; j < m.n_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static TropMatrix constant(int n, const Rational& value) {
        TropMatrix m(n);
        for (auto& e : m.entries_) e = value;
        return m;
    }

    int n() const { return n_; }
    const Rational& operator()(int i, int j) const { return entries_[idx(i, j)]; }
    Rational& operator()(int i, int j) { return entries_[idx(i, j)]; }

    bool operator==(const TropMatrix&) const = default;

private:
    static int checked(int n) {
        if (n < 1) throw InvalidDimensionError("matrix dimension must be >= 1");
        return n;
    }
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<Rational> entries_;
};

class TropVector {
public:
    explicit TropVector(int n) : entries_(static_cast<std::size_t>(checked(n))) {}
    TropVector(std::initializer_list<Rational> values) : entries_(values) {
        checked(static_cast<int>(entries_.size()));
    }
    explicit TropVector(std::vector<Rational> values) : entries_(std::move(values)) {
        checked(static_cast<int>(entries_.size()));
    }

    int n() const { return static_cast<int>(entries_.size()); }
    const Rational& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool operator==(const TropVector&) const = default;

private:
    static int checked(int n) {
        if (n < 1) throw InvalidDimensionError("vector dimension must be >= 1");
        return n;
    }
    std::vector<Rational> entries_;
};

/// Tropical matrix product: (A (*) B)_{ij} = max_k (a_{ik} + b_{kj}).
inline TropMatrix trop_mat_mul(const TropMatrix& a, const TropMatrix& b) {
    if (a.n() != b.n()) throw DimensionMismatchError("tropical product of unequal dimensions");
    const int n = a.n();
    TropMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational best = a(i, 0) + b(0, j);
            for (int k = 1; k < n; ++k) {
                Rational cand = a(i, k) + b(k, j);
                if (cand > best) best = cand;
            }
            out(i, j) = best;
        }
    }
    return out;
}

/// Tropical matrix-vector action: result_i = max_j (a_{ij} + x_j).
inline TropVector trop_apply(const TropMatrix& a, const TropVector& x) {
    if (a.n() != x.n()) throw DimensionMismatchError("tropical apply of unequal dimensions");
    const int n = a.n();
    TropVector out(n);
    for (int i = 0; i < n; ++i) {
        Rational best = a(i, 0) + x[0];
        for (int j = 1; j < n; ++j) {
            Rational cand = a(i, j) + x[j];
            if (cand > best) best = cand;
        }
        out[i] = best;
    }
    return out;
}

/// Entrywise max.
inline TropMatrix trop_add(const TropMatrix& a, const TropMatrix& b) {
    if (a.n() != b.n()) throw DimensionMismatchError("tropical sum of unequal dimensions");
    const int n = a.n();
    TropMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = a(i, j) > b(i, j) ? a(i, j) : b(i, j);
    return out;
}

/// Tropical scalar action: adds c to every entry.
inline TropMatrix trop_scale(const TropMatrix& a, const Rational& c) {
    const int n = a.n();
    TropMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = a(i, j) + c;
    return out;
}

inline TropVector trop_scale(const TropVector& x, const Rational& c) {
    TropVector out(x.n());
    for (int i = 0; i < x.n(); ++i) out[i] = x[i] + c;
    return out;
}

/// Kleene star B (+) B^2 (+) ... (+) B^n: entry (i,j) is the maximal weight of a
/// nonempty path from i to j. Every cycle of B must have non-positive weight,
/// otherwise the series diverges and PositiveCycleError is thrown.
///
/// Computed by Floyd-Warshall-style relaxation; with non-positive cycles the
/// relaxed value equals the best simple-path weight, which equals the best
/// walk weight of any length <= n.
inline TropMatrix kleene_star(const TropMatrix& b) {
    const int n = b.n();
    TropMatrix d = b;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational through = d(i, k) + d(k, j);
                if (through > d(i, j)) d(i, j) = through;
            }
    for (int i = 0; i < n; ++i)
        if (d(i, i) > 0)
            throw PositiveCycleError("matrix has a positive-weight cycle; Kleene star diverges");
    return d;
}

}  // namespace tropeig
