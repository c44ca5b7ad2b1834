#pragma once

#include "okbody/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace okbody {

// Exponent vectors are padded with zeros; only the first nvars entries of a
// MultiPoly's exponents may be nonzero. The array ordering (x before y
// before z) is the fixed chart convention used throughout.
using Exponent = std::array<int, 3>;

inline Exponent exps(int a, int b = 0, int c = 0) { return {a, b, c}; }

inline Exponent operator+(const Exponent& x, const Exponent& y) {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

// Sparse multivariate polynomial over Q in at most three variables.
class MultiPoly {
  public:
    explicit MultiPoly(int nvars = 2) : nvars_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly monomial(int nvars, const Exponent& e, const Rat& c = 1);
    static MultiPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // total degree, -1 for the zero polynomial
    const std::map<Exponent, Rat>& terms() const { return terms_; }

    Rat coefficient(const Exponent& e) const;
    void set_coefficient(const Exponent& e, const Rat& c); // erases zeros

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rat& c);
    MultiPoly operator-() const;

    Rat evaluate(const Point& z) const;

    std::string str() const;

  private:
    int nvars_;
    std::map<Exponent, Rat> terms_;
};

MultiPoly operator+(MultiPoly x, const MultiPoly& y);
MultiPoly operator-(MultiPoly x, const MultiPoly& y);
MultiPoly operator*(MultiPoly x, const MultiPoly& y);
MultiPoly operator*(MultiPoly x, const Rat& c);
MultiPoly operator*(const Rat& c, MultiPoly x);
bool operator==(const MultiPoly& x, const MultiPoly& y);

MultiPoly poly_pow(const MultiPoly& p, int k);

// Exact Taylor shift: returns q with q(u) = p(z + u).
MultiPoly recenter(const MultiPoly& p, const Point& z);

// Division with remainder by a single divisor (graded-lex leading terms):
// p = q*d + r where no term of r is divisible by the leading term of d.
// For a single divisor, r == 0 iff d divides p exactly.
struct DivisionResult {
    MultiPoly quotient;
    MultiPoly remainder;
};
DivisionResult divide(const MultiPoly& p, const MultiPoly& d);

// Largest k with d^k | p; p must be nonzero and d non-constant.
int divisibility_order(const MultiPoly& p, const MultiPoly& d);

// Order of vanishing at z: the least total degree in the support of the
// recentered polynomial (the multiplicity of the point).
int vanishing_order_at(const MultiPoly& p, const Point& z);

// Parses expressions like "x^2*y - 3/2*x + 1" (variables x, y, z).
MultiPoly parse_poly(const std::string& text, int nvars = 2);

} // namespace okbody
