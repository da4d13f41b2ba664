#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "tropeig/rational.hpp"

namespace tropeig {

using RatVec = std::vector<Rational>;

namespace linalg {

/// Reduced row echelon basis of the row space. Rows come out with pivot 1,
/// pivots strictly increasing, and pivot columns cleared elsewhere.
inline std::vector<RatVec> rref(std::vector<RatVec> rows) {
    std::vector<RatVec> basis;
    for (auto& row : rows) {
        for (const auto& b : basis) {
            std::size_t p = 0;
            while (b[p] == 0) ++p;
            if (row[p] != 0) {
                Rational factor = row[p];
                for (std::size_t k = p; k < row.size(); ++k) row[k] -= factor * b[k];
            }
        }
        std::size_t pivot = 0;
        while (pivot < row.size() && row[pivot] == 0) ++pivot;
        if (pivot == row.size()) continue;
        Rational lead = row[pivot];
        for (std::size_t k = pivot; k < row.size(); ++k) row[k] /= lead;
        for (auto& b : basis) {
            if (b[pivot] != 0) {
                Rational factor = b[pivot];
                for (std::size_t k = pivot; k < row.size(); ++k) b[k] -= factor * row[k];
            }
        }
        basis.push_back(row);
    }
    // keep pivot order deterministic
    std::sort(basis.begin(), basis.end(), [](const RatVec& a, const RatVec& b) {
        std::size_t pa = 0, pb = 0;
        while (a[pa] == 0) ++pa;
        while (b[pb] == 0) ++pb;
        return pa < pb;
    });
    return basis;
}

inline std::size_t rank(const std::vector<RatVec>& rows) { return rref(rows).size(); }

/// Canonical coset representative of v modulo the span of an rref basis.
inline RatVec reduce_mod(RatVec v, const std::vector<RatVec>& rref_basis) {
    for (const auto& b : rref_basis) {
        std::size_t p = 0;
        while (b[p] == 0) ++p;
        if (v[p] != 0) {
            Rational factor = v[p];
            for (std::size_t k = p; k < v.size(); ++k) v[k] -= factor * b[k];
        }
    }
    return v;
}

inline bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool in_span(const RatVec& v, const std::vector<RatVec>& rref_basis) {
    return is_zero(reduce_mod(v, rref_basis));
}

/// Scales v so its first nonzero entry becomes +1 or -1; identifies a ray
/// direction up to positive scaling. Zero vectors pass through unchanged.
inline RatVec normalize_direction(RatVec v) {
    for (const auto& x : v) {
        if (x != 0) {
            Rational scale = x > 0 ? x : Rational(-x);
            for (auto& y : v) y /= scale;
            return v;
        }
    }
    return v;
}

inline RatVec negate(RatVec v) {
    for (auto& x : v) x = -x;
    return v;
}

}  // namespace linalg
}  // namespace tropeig
