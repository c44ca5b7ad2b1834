#pragma once

#include "okbody/rational.hpp"

#include <string>

namespace okbody {

// Element of the field Q[sqrt(2)], stored as a + b*sqrt(2). The field is
// closed under the four operations and carries an exact total order, so
// weight comparisons with irrational weights never need floating point.
// Rationally-valued quantities are the b == 0 case.
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0) {}
    QuadExt(const Rat& a) : a_(a), b_(0) {} // NOLINT: implicit by design
    QuadExt(long a) : a_(make_rat(a)), b_(0) {}
    QuadExt(const Rat& a, const Rat& b) : a_(a), b_(b) {}

    static QuadExt sqrt2() { return QuadExt(make_rat(0), make_rat(1)); }

    const Rat& rational_part() const { return a_; }
    const Rat& sqrt2_part() const { return b_; }

    bool is_rational() const { return b_ == 0; }
    // Throws ValidationError when the value is irrational.
    Rat as_rational() const;

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // Exact sign of a + b*sqrt(2); sqrt(2) irrational, so a^2 == 2 b^2
    // only for a == b == 0.
    int sign() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o); // exact field inverse

    std::string str() const; // "3/2", "sqrt2", "1+2*sqrt2", ...

    double to_double() const;

  private:
    Rat a_, b_;
};

QuadExt operator+(QuadExt x, const QuadExt& y);
QuadExt operator-(QuadExt x, const QuadExt& y);
QuadExt operator*(QuadExt x, const QuadExt& y);
QuadExt operator/(QuadExt x, const QuadExt& y);

inline bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.rational_part() == y.rational_part() && x.sqrt2_part() == y.sqrt2_part();
}
inline bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
inline bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
inline bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
inline bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
inline bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

// The scalar type used for valuation values and monomial weights.
using Scalar = QuadExt;

} // namespace okbody
