#pragma once

#include "okbody/filtration.hpp"
#include "okbody/quadext.hpp"

#include <vector>

namespace okbody {

// Purely atomic probability measure on the line; atom locations may be
// irrational (elements of Q[sqrt2]), masses are rational.
struct StepMeasure {
    struct Atom {
        Scalar location;
        Rat mass;
    };
    std::vector<Atom> atoms; // locations strictly ascending
    Rat total_mass;

    Scalar cdf(const Scalar& x) const; // sum of masses at locations <= x
    Rat mass_below(const Scalar& bound, bool inclusive) const;
};

// Atoms at a_j/m, each basis element contributing 1/N.
StepMeasure empirical_measure(const VanishingSequence& seq);

// Continuous reference distributions with piecewise-polynomial CDFs and
// rational coefficients. CDF(t) = 0 left of the support, 1 right of it.
//   curve_uniform(d):          t/d on [0, d]
//   simplex_linear_form(a,b,c): pushforward of the normalized area measure
//                              on the standard simplex by a + b x + c y
//   blowup_exceptional(l):     ((l+t)^2 - l^2)/(1 - l^2) on [0, 1-l]
class ReferenceCDF {
  public:
    struct Piece {
        Rat lo;                  // left endpoint
        std::vector<Rat> coeffs; // c0 + c1 t + c2 t^2 + ...
    };

    static ReferenceCDF curve_uniform(int d);
    static ReferenceCDF simplex_linear_form(const Rat& a0, const Rat& a1, const Rat& a2);
    static ReferenceCDF blowup_exceptional(const Rat& lambda);
    static ReferenceCDF custom(std::vector<Piece> pieces, const Rat& hi);

    Scalar eval(const Scalar& t) const;
    const Rat& support_lo() const { return pieces_.front().lo; }
    const Rat& support_hi() const { return hi_; }

    // Exact integral of the density (the derivative of the CDF) over the
    // support; equals 1 for every valid reference.
    Rat density_integral() const;

  private:
    ReferenceCDF(std::vector<Piece> pieces, Rat hi);
    void validate() const;

    std::vector<Piece> pieces_;
    Rat hi_;
};

// sup_x |CDF_emp(x) - CDF_ref(x)|, attained at atom locations or their left
// limits; exact.
Scalar ks_distance(const StepMeasure& emp, const ReferenceCDF& ref);

// (dim F^{mt} - dim F^{mt+1}) / m for the divisorial filtration of ordF or
// the flag line: the level-mt rank of the restriction to the divisor.
Rat restricted_volume_empirical(const SectionModel& model, const Valuation& divisor, int m,
                                const Rat& t);

// max over the grid of |dim F^{mt}/N_m - (1 - CDF_ref(t))|.
Scalar dervol_identity_check(const SectionModel& model, const Valuation& v, int m,
                             const std::vector<Rat>& grid, const ReferenceCDF& ref);

} // namespace okbody
