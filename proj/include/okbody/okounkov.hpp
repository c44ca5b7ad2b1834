#pragma once

#include "okbody/filtration.hpp"
#include "okbody/quadext.hpp"
#include "okbody/section_model.hpp"
#include "okbody/valuation.hpp"

#include <map>
#include <vector>

namespace okbody {

// Flag value of a section: the successive vanishing orders along the flag
// line {x=0} and then at the origin, which in the fixed chart is just the
// lex-minimal exponent of the support (x before y).
Exponent flag_nu(const MultiPoly& s);

// Finite-level lattice approximation of a body: the flag values of a section
// space at level m (N distinct points) and the convex hull of their
// rescalings by 1/m.
struct LatticeBodyApprox {
    int level = 1;
    std::vector<Exponent> points; // sorted lex
    std::vector<Point> hull;      // counterclockwise vertices (a segment in 1D)

    Rat hull_area() const; // shoelace, 2D only
};

LatticeBodyApprox okounkov_points(const SectionModel& model, int m);

// Flag values of the filtration step {v >= m t}; empty when t exceeds the
// top of the filtration.
LatticeBodyApprox superlevel_body(const SectionModel& model, int m, const Valuation& v,
                                  const Scalar& t);

// G_m(alpha) = (1/m) max{v(s) : s in H^0(mL) \ {0}, nu(s) = alpha}, one entry
// per lattice point of the level-m body.
struct ConcaveTransformTable {
    int level = 1;
    std::map<Exponent, Scalar> values;

    const Scalar& at(const Exponent& e) const;
};

ConcaveTransformTable concave_transform(const SectionModel& model, int m, const Valuation& v);

// Max over lattice points of |G_m(alpha) - E(alpha/m)| for a prime-divisor
// valuation whose divisor is a level-one section; E is the extremal function
// of the level-m hull at p = nu(divisor).
Scalar extremal_vs_transform_check(const SectionModel& model, int m, const Valuation& divisor);

} // namespace okbody
