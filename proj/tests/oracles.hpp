#pragma once

// Test-only oracles, kept independent of the library's elimination path:
// dense row reduction over Q with first-nonzero pivoting on a graded-lex
// column layout (the library echelonizes sparse polynomials on a min-leading
// layout instead).

#include "okbody/polynomial.hpp"
#include "okbody/rational.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace okbody::testing {

inline long dense_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    long rank = 0;
    size_t pivot_row = 0;
    for (size_t c = 0; c < cols && pivot_row < rows; ++c) {
        size_t sel = pivot_row;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][c] == 0) continue;
            const Rat f = m[r][c] / m[pivot_row][c];
            for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[pivot_row][k];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

// Rows are the polynomials, columns the union of supports in descending
// graded-lex order.
inline std::vector<std::vector<Rat>> coefficient_matrix(const std::vector<MultiPoly>& polys) {
    std::vector<Exponent> cols;
    {
        std::map<Exponent, bool> seen;
        for (const MultiPoly& p : polys)
            for (const auto& [e, c] : p.terms()) seen[e] = true;
        for (const auto& [e, b] : seen) cols.push_back(e);
        std::sort(cols.begin(), cols.end(), [](const Exponent& a, const Exponent& b) {
            if (total_degree(a) != total_degree(b)) return total_degree(a) > total_degree(b);
            return a > b;
        });
    }
    std::vector<std::vector<Rat>> m;
    for (const MultiPoly& p : polys) {
        std::vector<Rat> row;
        row.reserve(cols.size());
        for (const Exponent& e : cols) row.push_back(p.coefficient(e));
        m.push_back(std::move(row));
    }
    return m;
}

inline long span_dimension(const std::vector<MultiPoly>& polys) {
    if (polys.empty()) return 0;
    return dense_rank(coefficient_matrix(polys));
}

// dim{s in span(basis) : s vanishes at z to weighted order >= t} via the
// rank of the coefficient conditions, with weights (w1, w2) rational and
// threshold t rational: conditions are the recentered coefficients at
// exponents of weight < t.
inline long weighted_vanishing_subspace_dim(const std::vector<MultiPoly>& basis, const Point& z,
                                            const Rat& w1, const Rat& w2, const Rat& t) {
    std::vector<Exponent> conditions;
    if (t > 0) {
        const long amax = basis.empty() ? 0 : 64;
        for (long a = 0; Rat(a) * w1 < t && a <= amax; ++a)
            for (long b = 0; Rat(a) * w1 + Rat(b) * w2 < t && b <= amax; ++b)
                conditions.push_back(exps(static_cast<int>(a), static_cast<int>(b)));
    }
    if (conditions.empty()) return static_cast<long>(basis.size());
    std::vector<std::vector<Rat>> m;
    for (const MultiPoly& s : basis) {
        const MultiPoly shifted = recenter(s, z);
        std::vector<Rat> row;
        row.reserve(conditions.size());
        for (const Exponent& e : conditions) row.push_back(shifted.coefficient(e));
        m.push_back(std::move(row));
    }
    return static_cast<long>(basis.size()) - dense_rank(std::move(m));
}

inline long multiplicity_subspace_dim(const std::vector<MultiPoly>& basis, const Point& z, int t) {
    return weighted_vanishing_subspace_dim(basis, z, make_rat(1), make_rat(1), make_rat(t));
}

} // namespace okbody::testing
