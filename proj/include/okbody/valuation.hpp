#pragma once

#include "okbody/polynomial.hpp"
#include "okbody/quadext.hpp"
#include "okbody/section_model.hpp"
#include "okbody/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace okbody {

// Value of a valuation on a section: a finite element of Q[sqrt2], or
// infinity for the zero section. Infinity compares above every finite value.
class Value {
  public:
    Value() : finite_(Scalar()) {}
    Value(const Scalar& v) : finite_(v) {} // NOLINT: implicit by design
    static Value infinity() {
        Value v;
        v.infinite_ = true;
        return v;
    }

    bool is_infinite() const { return infinite_; }
    const Scalar& finite() const; // throws on infinity
    Rat finite_rational() const { return finite().as_rational(); }

    std::string str() const { return infinite_ ? "inf" : finite_.str(); }

  private:
    Scalar finite_;
    bool infinite_ = false;
};

bool operator==(const Value& x, const Value& y);
bool operator<(const Value& x, const Value& y);
inline bool operator!=(const Value& x, const Value& y) { return !(x == y); }
inline bool operator>(const Value& x, const Value& y) { return y < x; }
inline bool operator<=(const Value& x, const Value& y) { return !(y < x); }
inline bool operator>=(const Value& x, const Value& y) { return !(x < y); }
Value operator+(const Value& x, const Value& y);

// Evaluators for real valuations on polynomial sections.
//   Monomial      min over the support of <weights, exponent>, in
//                 coordinates centered at `center`.
//   FlagLine      vanishing order along the flag line {x = 0}.
//   ExceptionalF  vanishing order along the exceptional curve of the
//                 blow-up model: mult_q(s) - m*lambda.
//   ExplicitPoly  largest k with D^k | s for a fixed irreducible D
//                 (irreducibility is the caller's responsibility).
//   Arc           vanishing order of t -> s(gamma(t)) for a formal arc;
//                 truncation grows on demand up to a hard cap.
struct Valuation {
    enum class Kind { Monomial, FlagLine, ExceptionalF, ExplicitPoly, Arc };

    Kind kind = Kind::Monomial;

    // Monomial
    std::vector<Scalar> weights;
    Point center;

    // ExplicitPoly
    MultiPoly divisor;

    // Arc: component generators, regenerated at any truncation order.
    std::function<TruncSeries(int)> arc_x, arc_y;
    Point arc_center;
    int arc_truncation_start = 32;
    int arc_truncation_cap = 1 << 14;

    static Valuation monomial(std::vector<Scalar> weights, Point center);
    static Valuation flag_line();
    static Valuation exceptional();
    static Valuation explicit_poly(MultiPoly divisor);
    // The arc t -> (t, e^t - 1) centered at the origin.
    static Valuation exp_arc();

    std::string spec_string() const;
};

// Value of v on a section s of the given model at the given level. The level
// only matters for ExceptionalF (the subtracted m*lambda depends on it).
Value evaluate(const Valuation& v, const MultiPoly& s, const SectionModel& model, int level);

// Colength of the valuation ideal {v >= m} in the local ring at the center.
// Monomial: exact lattice count. Arc: number of distinct values < m attained
// on polynomials of degree <= degree_cap, with a stability check at
// degree_cap + 2 (throws DegreeCapUnstable on disagreement).
long colength(const Valuation& v, int m, int degree_cap);

struct VolumeEstimate {
    Rat estimate;                 // 2 * colength(v, M) / M^2
    std::optional<Scalar> exact;  // 1/(c1*c2) for monomial valuations
};

// Surface-case volume of the valuation, estimated at evaluation level M.
VolumeEstimate valuation_volume(const Valuation& v, int M);

// "mon:<c1>,<c2>@<x>,<y>", "mon-sqrt2@<x>,<y>", "ordflag", "ordF",
// "ordpoly:<poly>", "arc-exp".
Valuation parse_valuation_spec(const std::string& spec);

} // namespace okbody
