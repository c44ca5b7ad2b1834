#include "okbody/okounkov.hpp"

#include "okbody/convex.hpp"
#include "okbody/echelon.hpp"
#include "okbody/errors.hpp"
#include "okbody/monomial_order.hpp"

#include <algorithm>

namespace okbody {

Exponent flag_nu(const MultiPoly& s) {
    if (s.is_zero()) throw ValidationError("zero section has no flag value");
    // Term maps are ordered lexicographically with x first, so the minimum
    // is the first key.
    return s.terms().begin()->first;
}

Rat LatticeBodyApprox::hull_area() const {
    Rat acc(0);
    const size_t n = hull.size();
    if (n < 3) return acc;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = hull[i];
        const Point& b = hull[(i + 1) % n];
        acc += a[0] * b[1] - b[0] * a[1];
    }
    return acc / 2;
}

namespace {

LatticeBodyApprox body_from_rows(const std::vector<MultiPoly>& rows, int m, int nvars) {
    const auto lex = MonomialOrder::lex(nvars);
    LatticeBodyApprox body;
    body.level = m;
    for (const EchelonRow& row : echelonize(rows, lex)) body.points.push_back(row.leading);
    std::sort(body.points.begin(), body.points.end());

    if (body.points.empty()) return body;
    if (nvars == 1) {
        Rat lo = make_rat(body.points.front()[0], m);
        Rat hi = make_rat(body.points.back()[0], m);
        body.hull.push_back({lo});
        if (hi != lo) body.hull.push_back({hi});
    } else {
        std::vector<Point> scaled;
        scaled.reserve(body.points.size());
        for (const Exponent& e : body.points)
            scaled.push_back({make_rat(e[0], m), make_rat(e[1], m)});
        body.hull = convex_hull_2d(std::move(scaled));
    }
    return body;
}

} // namespace

LatticeBodyApprox okounkov_points(const SectionModel& model, int m) {
    const SectionSpace space = section_basis(model, m);
    return body_from_rows(space.basis, m, model.nvars());
}

LatticeBodyApprox superlevel_body(const SectionModel& model, int m, const Valuation& v,
                                  const Scalar& t) {
    if (t.sign() < 0) throw ValidationError("superlevel threshold must be nonnegative");
    const SectionSpace space = section_basis(model, m);
    const std::vector<AdaptedEntry> adapted = adapted_basis(space, v);
    const Value threshold(t * Scalar(make_rat(m)));
    std::vector<MultiPoly> rows;
    for (const AdaptedEntry& e : adapted)
        if (e.value >= threshold) rows.push_back(e.section);
    return body_from_rows(rows, m, model.nvars());
}

const Scalar& ConcaveTransformTable::at(const Exponent& e) const {
    auto it = values.find(e);
    if (it == values.end())
        throw ValidationError("lattice point is not in the concave transform table");
    return it->second;
}

ConcaveTransformTable concave_transform(const SectionModel& model, int m, const Valuation& v) {
    const SectionSpace space = section_basis(model, m);
    std::vector<AdaptedEntry> adapted = adapted_basis(space, v);
    // Sweep the filtration top-down, growing one lex echelon. A lattice
    // point's first appearance happens at the largest value w whose step
    // contains it, so G_m(alpha) = w/m exactly.
    std::sort(adapted.begin(), adapted.end(),
              [](const AdaptedEntry& a, const AdaptedEntry& b) { return b.value < a.value; });
    IncrementalEchelon ech(MonomialOrder::lex(model.nvars()));
    ConcaveTransformTable table;
    table.level = m;
    for (const AdaptedEntry& e : adapted) {
        const auto lead = ech.insert(e.section);
        if (lead) table.values.emplace(*lead, e.value.finite() / Scalar(make_rat(m)));
    }
    return table;
}

Scalar extremal_vs_transform_check(const SectionModel& model, int m, const Valuation& divisor) {
    if (divisor.kind != Valuation::Kind::FlagLine && divisor.kind != Valuation::Kind::ExplicitPoly)
        throw ValidationError("extremal check requires a prime-divisor valuation");
    if (model.nvars() != 2) throw ValidationError("extremal check runs on surface models");

    const MultiPoly divisor_section = divisor.kind == Valuation::Kind::FlagLine
                                          ? MultiPoly::variable(2, 0)
                                          : divisor.divisor;
    if (divisor_section.degree() != model.degree)
        throw ValidationError("the divisor must be a level-one section of the model");

    const Exponent nu = flag_nu(divisor_section);
    const Point p = {make_rat(nu[0]), make_rat(nu[1])};

    const LatticeBodyApprox body = okounkov_points(model, m);
    const ConvexBody hull = ConvexBody::polytope_v(2, body.hull);
    const ConcaveTransformTable table = concave_transform(model, m, divisor);

    Scalar worst;
    for (const auto& [alpha, g] : table.values) {
        const Point x = {make_rat(alpha[0], m), make_rat(alpha[1], m)};
        const ExtremalEvaluation e = extremal_function(hull, p, x, make_rat(1, 1 << 20));
        Scalar dev = g - Scalar(e.value);
        if (dev.sign() < 0) dev = -dev;
        if (dev > worst) worst = dev;
    }
    return worst;
}

} // namespace okbody
