#pragma once

#include "okbody/polynomial.hpp"
#include "okbody/quadext.hpp"

#include <vector>

namespace okbody {

// Total orders on exponent vectors. Throughout the project "leading"
// monomial means the MINIMUM of a polynomial's support under the order, so
// that a row's valuation equals the weight of its leading exponent.
class MonomialOrder {
  public:
    enum class Kind { Lex, WeightThenLex };

    static MonomialOrder lex(int nvars);
    // Weight comparison first (weights may be irrational, via Q[sqrt2]),
    // then lex tie-break. Q-linearly independent weights never tie.
    static MonomialOrder weight_then_lex(std::vector<Scalar> weights);

    Kind kind() const { return kind_; }
    int nvars() const { return nvars_; }
    const std::vector<Scalar>& weights() const { return weights_; }

    Scalar weight_of(const Exponent& e) const;

    // Strict total order.
    bool less(const Exponent& a, const Exponent& b) const;

  private:
    MonomialOrder(Kind k, int nvars, std::vector<Scalar> w)
        : kind_(k), nvars_(nvars), weights_(std::move(w)) {}

    Kind kind_;
    int nvars_;
    std::vector<Scalar> weights_;
};

// Minimal exponent of the support; throws ValidationError on zero input.
Exponent leading_exponent(const MultiPoly& p, const MonomialOrder& order);

} // namespace okbody
