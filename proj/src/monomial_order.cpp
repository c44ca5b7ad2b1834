#include "okbody/monomial_order.hpp"

#include "okbody/errors.hpp"

namespace okbody {

MonomialOrder MonomialOrder::lex(int nvars) { return MonomialOrder(Kind::Lex, nvars, {}); }

MonomialOrder MonomialOrder::weight_then_lex(std::vector<Scalar> weights) {
    const int n = static_cast<int>(weights.size());
    if (n < 1 || n > 3) throw ValidationError("weight vector must have 1..3 entries");
    return MonomialOrder(Kind::WeightThenLex, n, std::move(weights));
}

Scalar MonomialOrder::weight_of(const Exponent& e) const {
    if (kind_ != Kind::WeightThenLex)
        throw ValidationError("weight_of is only defined for weight orders");
    Scalar acc;
    for (int i = 0; i < nvars_; ++i) acc += weights_[static_cast<size_t>(i)] * Scalar(make_rat(e[i]));
    return acc;
}

bool MonomialOrder::less(const Exponent& a, const Exponent& b) const {
    if (kind_ == Kind::WeightThenLex) {
        const Scalar wa = weight_of(a), wb = weight_of(b);
        if (wa != wb) return wa < wb;
    }
    return a < b; // std::array lex, x before y before z
}

Exponent leading_exponent(const MultiPoly& p, const MonomialOrder& order) {
    if (p.is_zero()) throw ValidationError("zero section has no leading exponent");
    auto it = p.terms().begin();
    Exponent best = it->first;
    for (++it; it != p.terms().end(); ++it)
        if (order.less(it->first, best)) best = it->first;
    return best;
}

} // namespace okbody
