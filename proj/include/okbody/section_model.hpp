#pragma once

#include "okbody/polynomial.hpp"
#include "okbody/rational.hpp"

#include <string>
#include <vector>

namespace okbody {

// The three model geometries, realized in a fixed affine chart:
//   * the flag divisor is {x = 0} and the flag point is the origin;
//   * ProjLine(d): sections of level m are the polynomials of degree <= m*d
//     in x;
//   * ProjPlane(d): polynomials of degree <= m*d in x, y;
//   * BlowupPlane(lambda, q): the plane blown up at q, with the level-m
//     sections represented downstairs as the degree <= m polynomials with
//     multiplicity >= m*lambda at q. Vanishing order along the exceptional
//     curve is mult_q - m*lambda.
struct SectionModel {
    enum class Kind { ProjLine, ProjPlane, BlowupPlane };

    Kind kind = Kind::ProjPlane;
    int degree = 1;     // d for ProjLine/ProjPlane; 1 for BlowupPlane
    Rat lambda;         // BlowupPlane only, in [0,1)
    Point blowup_center; // q, BlowupPlane only

    static SectionModel proj_line(int d);
    static SectionModel proj_plane(int d);
    static SectionModel blowup_plane(const Rat& lambda, Point q = {make_rat(1), make_rat(0)});

    int nvars() const { return kind == Kind::ProjLine ? 1 : 2; }
    bool is_blowup() const { return kind == Kind::BlowupPlane; }

    // Throws ValidationError("incompatible level") when m*lambda is not an
    // integer on the blow-up.
    void check_level(int m) const;
};

struct SectionSpace {
    SectionModel model;
    int level = 1;
    std::vector<MultiPoly> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

SectionSpace section_basis(const SectionModel& model, int m);

long h0_closed_form(const SectionModel& model, int m);

// Basis of {polynomials of degree <= max_deg with multiplicity >= mult at
// q}, in two variables; the workhorse behind the blow-up model and the
// divisorial filtrations.
std::vector<MultiPoly> plane_subspace_with_multiplicity(int max_deg, int mult, const Point& q);

// "p1:<d>", "p2:<d>", "blp2:<num>/<den>" with optional "@qx,qy".
SectionModel parse_model_spec(const std::string& spec);
std::string model_spec_string(const SectionModel& model);

} // namespace okbody
