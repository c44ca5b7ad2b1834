#include "okbody/series.hpp"

#include "okbody/errors.hpp"

#include <algorithm>

namespace okbody {

bool TruncSeries::stored_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<int> TruncSeries::order() const {
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return static_cast<int>(k);
    return std::nullopt;
}

Rat TruncSeries::leading_coefficient() const {
    const auto o = order();
    if (!o) throw TruncationExhausted(truncation());
    return coeffs_[static_cast<size_t>(*o)];
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    const size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    coeffs_.resize(n);
    for (size_t k = 0; k < n; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    const size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    coeffs_.resize(n);
    for (size_t k = 0; k < n; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rat& c) {
    for (Rat& x : coeffs_) x *= c;
    return *this;
}

TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int T = std::min(a.truncation(), b.truncation());
    TruncSeries out(T);
    for (int i = 0; i < T; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j < T; ++j) {
            if (b.coeff(j) == 0) continue;
            out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return out;
}

TruncSeries series_identity(int T) {
    TruncSeries s(T);
    if (T > 1) s.set_coeff(1, Rat(1));
    return s;
}

TruncSeries series_exp_minus_one(int T) {
    TruncSeries s(T);
    Rat c(1);
    for (int k = 1; k < T; ++k) {
        c /= k; // 1/k! built incrementally, exactly
        s.set_coeff(k, c);
    }
    return s;
}

TruncSeries compose_arc(const MultiPoly& p, const TruncSeries& gamma1, const TruncSeries& gamma2, int T) {
    if (p.nvars() != 2) throw ValidationError("compose_arc expects a bivariate polynomial");
    if (gamma1.truncation() < T || gamma2.truncation() < T)
        throw ValidationError("arc components truncated below the requested order");

    // Power tables up to the degrees that actually occur.
    int max1 = 0, max2 = 0;
    for (const auto& [e, c] : p.terms()) {
        max1 = std::max(max1, e[0]);
        max2 = std::max(max2, e[1]);
    }
    std::vector<TruncSeries> pow1, pow2;
    TruncSeries one(T);
    one.set_coeff(0, Rat(1));
    pow1.push_back(one);
    pow2.push_back(one);
    for (int k = 1; k <= max1; ++k) pow1.push_back(pow1.back() * gamma1);
    for (int k = 1; k <= max2; ++k) pow2.push_back(pow2.back() * gamma2);

    TruncSeries acc(T);
    for (const auto& [e, c] : p.terms()) {
        TruncSeries term = pow1[static_cast<size_t>(e[0])] * pow2[static_cast<size_t>(e[1])];
        term *= c;
        acc += term;
    }
    if (!p.is_zero() && acc.stored_zero()) throw TruncationExhausted(T);
    return acc;
}

} // namespace okbody
