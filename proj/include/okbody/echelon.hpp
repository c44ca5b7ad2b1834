#pragma once

#include "okbody/monomial_order.hpp"
#include "okbody/polynomial.hpp"

#include <optional>
#include <vector>

namespace okbody {

struct EchelonRow {
    MultiPoly poly;
    Exponent leading;
};

// Reduced echelon basis of the span of `rows` with respect to `order`:
// pairwise distinct leading (minimal) exponents, leading coefficients 1,
// every row fully reduced against the others, output sorted by leading
// exponent ascending. Zero rows are discarded. Deterministic.
std::vector<EchelonRow> echelonize(const std::vector<MultiPoly>& rows, const MonomialOrder& order);

// Incremental variant: a pivot table keyed by leading exponent. Inserting a
// vector either creates a new pivot (returning its leading exponent) or
// reduces to zero (returning nullopt). Leadings of inserted spans only grow,
// which is what the concave-transform sweep exploits.
class IncrementalEchelon {
  public:
    explicit IncrementalEchelon(const MonomialOrder& order) : order_(order) {}

    std::optional<Exponent> insert(MultiPoly v);
    size_t rank() const { return pivots_.size(); }
    const std::vector<EchelonRow>& pivots() const { return pivots_; }

  private:
    MonomialOrder order_;
    std::vector<EchelonRow> pivots_; // kept sorted by leading ascending
};

// Basis of the kernel of a linear map given by (image, source) pairs:
// eliminates on image components; sources whose image reduces to zero span
// the kernel of span(sources) -> span(images).
std::vector<MultiPoly> kernel_basis(const std::vector<MultiPoly>& images,
                                    const std::vector<MultiPoly>& sources,
                                    const MonomialOrder& order);

} // namespace okbody
