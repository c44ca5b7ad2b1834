#pragma once

#include "okbody/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace okbody {

// normal . x <= offset
struct Halfspace {
    std::vector<Rat> normal;
    Rat offset;
};

// Quadratic constraint q(x) >= 0 with q(x) = c + lin.x + x^T quad x
// (quad symmetric). Exact rational sign evaluation only.
struct QuadConstraint {
    Rat c;
    std::vector<Rat> lin;
    std::vector<std::vector<Rat>> quad;

    Rat eval(const Point& x) const;
};

// Bounded closed convex bodies with an exact membership oracle. All kinds
// reduce membership to rational sign checks: V-polytopes are converted to
// facet halfspaces at construction (2D hulls; 3D simplices), and the capped
// quadric adds one quadratic constraint to a halfspace list.
class ConvexBody {
  public:
    enum class Kind { PolytopeH, PolytopeV, QuadricCapped };

    static ConvexBody polytope_h(int dim, std::vector<Halfspace> halfspaces);
    static ConvexBody polytope_v(int dim, std::vector<Point> vertices);
    static ConvexBody quadric_capped(int dim, std::vector<Halfspace> halfspaces, QuadConstraint q);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::optional<QuadConstraint>& quadric() const { return quadric_; }
    bool is_polytope() const { return !quadric_.has_value(); }

    bool member(const Point& x) const;

  private:
    ConvexBody(Kind k, int dim) : kind_(k), dim_(dim) {}

    Kind kind_;
    int dim_;
    std::vector<Halfspace> halfspaces_;
    std::vector<Point> vertices_;
    std::optional<QuadConstraint> quadric_;
};

struct ExtremalEvaluation {
    Point x;
    Rat value; // in [0,1]; dyadic when obtained by bisection
    Rat tol;
    bool exact = false;
};

// E(x) = sup{t in [0,1] | x in t*p + (1-t)*body}. Exact one-variable
// programs per halfspace on polytopes; bisection to `tol` otherwise.
ExtremalEvaluation extremal_function(const ConvexBody& body, const Point& p, const Point& x,
                                     const Rat& tol);

enum class ConicalVerdict { Conical, NonConical };

struct ConicalDirectionReport {
    Point direction;
    Rat reach_r;      // reach at radius r, normalized to [0,1]
    Rat reach_half;   // reach at radius r/2
};

struct ConicalReport {
    ConicalVerdict verdict = ConicalVerdict::Conical;
    Point worst_direction;
    Rat worst_gap;
    std::vector<ConicalDirectionReport> diagnostics;
};

// Compares the normalized reach of the body from p along each direction at
// radii r and r/2; a cone looks the same at both scales.
ConicalReport conical_test(const ConvexBody& body, const Point& p,
                           const std::vector<Point>& directions, const Rat& r, const Rat& tol);

// Primitive integer direction vectors with entries in [-range, range].
std::vector<Point> default_directions(int dim, int range);

// Exact 2D convex hull: monotone chain, counterclockwise output, collinear
// points dropped from the vertex list.
std::vector<Point> convex_hull_2d(std::vector<Point> points);

// Intersection numbers on a flag surface inside a threefold: the quadric
// piece of the local Okounkov body model near the flag curve. `cap` is the
// degree bound along the flag curve.
struct IntersectionData {
    Rat L2, LY2, Y2sq;   // (L^2), (L.Y2), (Y2^2) on the surface
    Rat LY1, Y1sq, Y1Y2; // (L.Y1), (Y1^2), (Y1.Y2) on the surface
    Rat cap;             // (L.Y2) computed on the ambient space

    static IntersectionData default_instance();
};

struct CappedQuadricBody {
    ConvexBody body;
    Point apex;               // (0,1,0): where the quadric touches the boundary
    Rat boundary_derivative;  // dq/dx2 at the apex, equals -2 (Z.Y2)
};

// Validates (i) (Y2^2) > 0, (ii) (Z^2) = 0 and (iii) (Z.Y2) > 0 for
// Z = L|_{Y1} - Y2, then builds the body
//   {x >= 0} ∩ {q(x1,x2) >= 0} ∩ {x1 (Y1.Y2) + x2 (Y2^2) + x3 <= cap} ∩ box
// with q(x1,x2) = (L|_{Y1} - x1 Y1|_{Y1} - x2 Y2)^2 expanded from the given
// intersection numbers. The box truncation cannot affect behavior near the
// apex, which is interior to the cap half-space.
CappedQuadricBody make_capped_quadric_body(const IntersectionData& data,
                                           const Rat& box = make_rat(4));

} // namespace okbody
