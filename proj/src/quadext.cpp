#include "okbody/quadext.hpp"

#include "okbody/errors.hpp"

#include <cmath>

namespace okbody {

Rat QuadExt::as_rational() const {
    if (!is_rational()) throw ValidationError("irrational value " + str() + " where a rational was required");
    return a_;
}

int QuadExt::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: compare a^2 with 2 b^2; equality impossible unless zero.
    const Rat lhs = a_ * a_;
    const Rat rhs = 2 * b_ * b_;
    if (lhs == rhs) return 0; // unreachable for nonzero values
    const bool a_dominates = lhs > rhs;
    return a_dominates ? sa : sb;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    const Rat na = a_ * o.a_ + 2 * b_ * o.b_;
    const Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_zero()) throw ValidationError("division by zero in Q[sqrt2]");
    // 1/(a + b*sqrt2) = (a - b*sqrt2)/(a^2 - 2 b^2)
    const Rat norm = o.a_ * o.a_ - 2 * o.b_ * o.b_;
    const QuadExt conj(o.a_ / norm, -o.b_ / norm);
    return (*this) *= conj;
}

QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

std::string QuadExt::str() const {
    if (b_ == 0) return rat_string(a_);
    std::string s2 = (b_ == 1) ? "sqrt2" : rat_string(b_) + "*sqrt2";
    if (a_ == 0) return s2;
    return rat_string(a_) + (sgn(b_) > 0 ? "+" : "") + s2;
}

double QuadExt::to_double() const { return rat_to_double(a_) + rat_to_double(b_) * std::sqrt(2.0); }

} // namespace okbody
