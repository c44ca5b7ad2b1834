#pragma once

#include "okbody/section_model.hpp"
#include "okbody/valuation.hpp"

#include <utility>
#include <vector>

namespace okbody {

struct AdaptedEntry {
    MultiPoly section;
    Value value;
};

// Basis b_1..b_N of the section space such that every filtration step
// F^t = {v >= t} is spanned by the basis elements it contains.
//   * monomial-type valuations: one weight-order echelon pass in recentered
//     coordinates;
//   * explicit polynomial divisors: echelon bases of the subspace flag
//     F^k = D^k * (smaller space), assembled from the deepest step outward;
//   * arcs: greedy reduction, always resolving the smallest shared value
//     first, until all values are distinct.
std::vector<AdaptedEntry> adapted_basis(const SectionSpace& space, const Valuation& v);

// a_1 <= ... <= a_N with witnesses; ties ordered by the witness's minimal
// lex exponent for reproducible output.
struct VanishingSequence {
    int level = 1;
    std::vector<AdaptedEntry> entries;

    std::vector<Value> values() const;
    const Value& amin() const { return entries.front().value; }
    const Value& amax() const { return entries.back().value; }
    long dim_at(const Value& t) const; // #{j : a_j >= t} = dim F^t
};

VanishingSequence vanishing_sequence(const SectionModel& model, int m, const Valuation& v);

// dim F^t as a step function: jump locations with the dimensions held there.
struct FiltrationProfile {
    int level = 1;
    long full_dim = 0;
    std::vector<std::pair<Value, long>> jumps; // (a, #{j : a_j >= a}), a ascending

    long dim_at(const Value& t) const;
};

FiltrationProfile filtration_dims(const SectionModel& model, int m, const Valuation& v);

enum class GrowthVerdict { Linear, Superlinear, Inconclusive };

std::string growth_verdict_string(GrowthVerdict verdict);

// Scaled extremes per level plus their running one-sided bounds. By
// super/subadditivity the max-ratios increase toward their limit and the
// min-ratios decrease, so the running sup/inf are the best finite-sample
// estimates of the limits.
struct AsymptoticsReport {
    std::vector<int> levels;
    std::vector<Value> amax_values, amin_values;
    std::vector<Scalar> ratio_max, ratio_min;   // a_max(m)/m, a_min(m)/m
    std::vector<Scalar> running_sup, running_inf; // prefix sup/inf of the ratios
    Scalar fekete_sup, fekete_inf;                // final running bounds
    GrowthVerdict verdict = GrowthVerdict::Inconclusive;
};

// Verdict rule: Superlinear when the last max-ratio exceeds the first by a
// factor >= 3/2 and the ratios increase strictly on the tail (second half);
// Linear when all max-ratios agree with the last one within 1/m; otherwise
// Inconclusive.
AsymptoticsReport asymptotics(const SectionModel& model, const Valuation& v,
                              const std::vector<int>& m_list);

// True when a_min(mL, v) == 0 for every tested level.
bool amin_nef_check(const SectionModel& model, const Valuation& v, const std::vector<int>& m_list);

} // namespace okbody
