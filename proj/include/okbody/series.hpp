#pragma once

#include "okbody/polynomial.hpp"
#include "okbody/rational.hpp"

#include <optional>
#include <vector>

namespace okbody {

// Univariate power series truncated at order T: coefficients of t^0..t^{T-1}.
// A series whose stored coefficients all vanish answers order() == nullopt,
// meaning "vanishing order >= T"; callers must re-run at a larger truncation
// instead of trusting a fabricated order.
class TruncSeries {
  public:
    explicit TruncSeries(int trunc) : coeffs_(static_cast<size_t>(trunc), Rat(0)) {}

    int truncation() const { return static_cast<int>(coeffs_.size()); }
    const Rat& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
    void set_coeff(int k, const Rat& c) { coeffs_[static_cast<size_t>(k)] = c; }

    bool stored_zero() const;
    // Exact vanishing order when < truncation; nullopt means ">= truncation".
    std::optional<int> order() const;
    // Coefficient at order(); series must have a finite order.
    Rat leading_coefficient() const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const Rat& c);

  private:
    std::vector<Rat> coeffs_;
};

TruncSeries operator+(TruncSeries a, const TruncSeries& b);
TruncSeries operator-(TruncSeries a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b); // truncated product

// t, truncated at T.
TruncSeries series_identity(int T);
// e^t - 1 = sum_{k>=1} t^k / k!, truncated at T.
TruncSeries series_exp_minus_one(int T);

// p(gamma_1(t), gamma_2(t)) mod t^T for a bivariate p. Throws
// TruncationExhausted when p != 0 but the composition is 0 mod t^T.
TruncSeries compose_arc(const MultiPoly& p, const TruncSeries& gamma1, const TruncSeries& gamma2, int T);

} // namespace okbody
