#include "okbody/echelon.hpp"

#include "okbody/errors.hpp"

#include <algorithm>

namespace okbody {

namespace {

// Reduce v against pivots (sorted by leading ascending) until its leading is
// not a pivot leading or v vanishes. Optionally carries a companion vector
// through the same row operations.
void reduce_leading(MultiPoly& v, MultiPoly* carry, const std::vector<EchelonRow>& pivots,
                    const MonomialOrder& order, const std::vector<MultiPoly>* carries) {
    while (!v.is_zero()) {
        const Exponent e = leading_exponent(v, order);
        auto it = std::lower_bound(pivots.begin(), pivots.end(), e,
                                   [&](const EchelonRow& row, const Exponent& key) {
                                       return order.less(row.leading, key);
                                   });
        if (it == pivots.end() || it->leading != e) return;
        const Rat c = v.coefficient(e);
        v -= c * it->poly;
        if (carry && carries) {
            const size_t idx = static_cast<size_t>(it - pivots.begin());
            *carry -= c * (*carries)[idx];
        }
    }
}

void insert_pivot(std::vector<EchelonRow>& pivots, MultiPoly v, const Exponent& e,
                  const MonomialOrder& order) {
    v *= Rat(1) / v.coefficient(e);
    auto it = std::lower_bound(pivots.begin(), pivots.end(), e,
                               [&](const EchelonRow& row, const Exponent& key) {
                                   return order.less(row.leading, key);
                               });
    pivots.insert(it, EchelonRow{std::move(v), e});
}

} // namespace

std::vector<EchelonRow> echelonize(const std::vector<MultiPoly>& rows, const MonomialOrder& order) {
    std::vector<EchelonRow> pivots;
    for (const MultiPoly& r : rows) {
        MultiPoly v = r;
        reduce_leading(v, nullptr, pivots, order, nullptr);
        if (v.is_zero()) continue;
        const Exponent e = leading_exponent(v, order);
        insert_pivot(pivots, std::move(v), e, order);
    }
    // Back-reduction, largest leading first: each row ends up containing no
    // other pivot's leading, which makes the output canonical for the span.
    for (size_t i = pivots.size(); i-- > 0;) {
        for (size_t j = i + 1; j < pivots.size(); ++j) {
            const Rat c = pivots[i].poly.coefficient(pivots[j].leading);
            if (c != 0) pivots[i].poly -= c * pivots[j].poly;
        }
    }
    return pivots;
}

std::optional<Exponent> IncrementalEchelon::insert(MultiPoly v) {
    reduce_leading(v, nullptr, pivots_, order_, nullptr);
    if (v.is_zero()) return std::nullopt;
    const Exponent e = leading_exponent(v, order_);
    insert_pivot(pivots_, std::move(v), e, order_);
    return e;
}

std::vector<MultiPoly> kernel_basis(const std::vector<MultiPoly>& images,
                                    const std::vector<MultiPoly>& sources,
                                    const MonomialOrder& order) {
    if (images.size() != sources.size())
        throw ValidationError("kernel_basis: image/source length mismatch");
    std::vector<EchelonRow> pivots;
    std::vector<MultiPoly> carries;
    std::vector<MultiPoly> kernel;
    for (size_t i = 0; i < images.size(); ++i) {
        MultiPoly img = images[i];
        MultiPoly src = sources[i];
        reduce_leading(img, &src, pivots, order, &carries);
        if (img.is_zero()) {
            if (!src.is_zero()) kernel.push_back(std::move(src));
            continue;
        }
        const Exponent e = leading_exponent(img, order);
        const Rat c = img.coefficient(e);
        img *= Rat(1) / c;
        src *= Rat(1) / c;
        auto it = std::lower_bound(pivots.begin(), pivots.end(), e,
                                   [&](const EchelonRow& row, const Exponent& key) {
                                       return order.less(row.leading, key);
                                   });
        const size_t idx = static_cast<size_t>(it - pivots.begin());
        pivots.insert(it, EchelonRow{std::move(img), e});
        carries.insert(carries.begin() + static_cast<long>(idx), std::move(src));
    }
    return kernel;
}

} // namespace okbody
