#include "okbody/measures.hpp"

#include "okbody/errors.hpp"

#include <algorithm>

namespace okbody {

Scalar StepMeasure::cdf(const Scalar& x) const {
    Rat acc(0);
    for (const Atom& a : atoms) {
        if (a.location > x) break;
        acc += a.mass;
    }
    return Scalar(acc);
}

Rat StepMeasure::mass_below(const Scalar& bound, bool inclusive) const {
    Rat acc(0);
    for (const Atom& a : atoms) {
        if (inclusive ? a.location > bound : a.location >= bound) break;
        acc += a.mass;
    }
    return acc;
}

StepMeasure empirical_measure(const VanishingSequence& seq) {
    if (seq.entries.empty()) throw ValidationError("empirical measure of an empty sequence");
    const long n = static_cast<long>(seq.entries.size());
    const Rat unit = make_rat(1, n);
    const Scalar scale = Scalar(make_rat(1, seq.level));
    StepMeasure out;
    out.total_mass = 0;
    for (const AdaptedEntry& e : seq.entries) {
        const Scalar loc = e.value.finite() * scale;
        if (!out.atoms.empty() && out.atoms.back().location == loc)
            out.atoms.back().mass += unit;
        else
            out.atoms.push_back({loc, unit});
        out.total_mass += unit;
    }
    return out;
}

ReferenceCDF::ReferenceCDF(std::vector<Piece> pieces, Rat hi)
    : pieces_(std::move(pieces)), hi_(std::move(hi)) {
    validate();
}

namespace {

Rat eval_poly(const std::vector<Rat>& coeffs, const Rat& t) {
    Rat acc(0);
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
    return acc;
}

Scalar eval_poly(const std::vector<Rat>& coeffs, const Scalar& t) {
    Scalar acc;
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * t + Scalar(coeffs[k]);
    return acc;
}

} // namespace

void ReferenceCDF::validate() const {
    if (pieces_.empty()) throw ValidationError("reference CDF needs at least one piece");
    for (size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (!(pieces_[i].lo < pieces_[i + 1].lo))
            throw ValidationError("reference CDF breakpoints must increase");
    if (!(pieces_.back().lo < hi_)) throw ValidationError("reference CDF support is empty");
    if (eval_poly(pieces_.front().coeffs, pieces_.front().lo) != 0)
        throw ValidationError("reference CDF must vanish at the left endpoint");
    if (eval_poly(pieces_.back().coeffs, hi_) != 1)
        throw ValidationError("reference CDF must reach 1 at the right endpoint");
    // Continuity at interior breakpoints.
    for (size_t i = 0; i + 1 < pieces_.size(); ++i) {
        const Rat& b = pieces_[i + 1].lo;
        if (eval_poly(pieces_[i].coeffs, b) != eval_poly(pieces_[i + 1].coeffs, b))
            throw ValidationError("reference CDF is discontinuous at " + rat_string(b));
    }
    // Monotonicity: endpoint and midpoint checks of each derivative.
    for (size_t i = 0; i < pieces_.size(); ++i) {
        std::vector<Rat> deriv;
        for (size_t k = 1; k < pieces_[i].coeffs.size(); ++k)
            deriv.push_back(Rat(static_cast<long>(k)) * pieces_[i].coeffs[k]);
        const Rat lo = pieces_[i].lo;
        const Rat hi = (i + 1 < pieces_.size()) ? pieces_[i + 1].lo : hi_;
        const Rat mid = (lo + hi) / 2;
        for (const Rat& t : {lo, mid, hi})
            if (eval_poly(deriv, t) < 0)
                throw ValidationError("reference CDF density is negative at " + rat_string(t));
    }
}

Scalar ReferenceCDF::eval(const Scalar& t) const {
    if (t <= Scalar(support_lo())) return Scalar(make_rat(0));
    if (t >= Scalar(hi_)) return Scalar(make_rat(1));
    size_t i = 0;
    while (i + 1 < pieces_.size() && t >= Scalar(pieces_[i + 1].lo)) ++i;
    return eval_poly(pieces_[i].coeffs, t);
}

Rat ReferenceCDF::density_integral() const {
    // Integrate each piece's derivative and sum: exact term-wise power rule.
    Rat acc(0);
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const Rat lo = pieces_[i].lo;
        const Rat hi = (i + 1 < pieces_.size()) ? pieces_[i + 1].lo : hi_;
        const auto& c = pieces_[i].coeffs;
        for (size_t k = 1; k < c.size(); ++k) {
            // d/dt of c_k t^k integrates back to c_k t^k.
            Rat hik(1), lok(1);
            for (size_t j = 0; j < k; ++j) {
                hik *= hi;
                lok *= lo;
            }
            acc += c[k] * (hik - lok);
        }
    }
    return acc;
}

ReferenceCDF ReferenceCDF::curve_uniform(int d) {
    if (d < 1) throw ValidationError("curve degree must be positive");
    return ReferenceCDF({{make_rat(0), {make_rat(0), make_rat(1, d)}}}, make_rat(d));
}

ReferenceCDF ReferenceCDF::simplex_linear_form(const Rat& a0, const Rat& a1, const Rat& a2) {
    // Values at the simplex vertices, sorted.
    std::vector<Rat> s = {a0, a0 + a1, a0 + a2};
    std::sort(s.begin(), s.end());
    if (s[0] == s[2]) throw ValidationError("degenerate linear form on the simplex");
    std::vector<Piece> pieces;
    if (s[0] < s[1]) {
        // (t - s0)^2 / ((s1 - s0)(s2 - s0))
        const Rat den = (s[1] - s[0]) * (s[2] - s[0]);
        pieces.push_back({s[0], {s[0] * s[0] / den, -2 * s[0] / den, Rat(1) / den}});
    }
    if (s[1] < s[2]) {
        // 1 - (s2 - t)^2 / ((s2 - s1)(s2 - s0))
        const Rat den = (s[2] - s[1]) * (s[2] - s[0]);
        pieces.push_back({s[1], {1 - s[2] * s[2] / den, 2 * s[2] / den, -Rat(1) / den}});
    }
    return ReferenceCDF(std::move(pieces), s[2]);
}

ReferenceCDF ReferenceCDF::blowup_exceptional(const Rat& lambda) {
    if (lambda < 0 || lambda >= 1) throw ValidationError("blow-up weight must lie in [0,1)");
    // ((l + t)^2 - l^2) / (1 - l^2) on [0, 1 - l]
    const Rat den = 1 - lambda * lambda;
    return ReferenceCDF({{make_rat(0), {Rat(0), 2 * lambda / den, Rat(1) / den}}}, 1 - lambda);
}

ReferenceCDF ReferenceCDF::custom(std::vector<Piece> pieces, const Rat& hi) {
    return ReferenceCDF(std::move(pieces), hi);
}

Scalar ks_distance(const StepMeasure& emp, const ReferenceCDF& ref) {
    Scalar worst;
    Rat cum(0);
    for (const StepMeasure::Atom& a : emp.atoms) {
        const Scalar f = ref.eval(a.location);
        Scalar before = Scalar(cum) - f;
        if (before.sign() < 0) before = -before;
        cum += a.mass;
        Scalar after = Scalar(cum) - f;
        if (after.sign() < 0) after = -after;
        if (before > worst) worst = before;
        if (after > worst) worst = after;
    }
    return worst;
}

Rat restricted_volume_empirical(const SectionModel& model, const Valuation& divisor, int m,
                                const Rat& t) {
    if (divisor.kind != Valuation::Kind::ExceptionalF && divisor.kind != Valuation::Kind::FlagLine)
        throw ValidationError("restricted volume requires ordF or the flag line");
    if (divisor.kind == Valuation::Kind::ExceptionalF) {
        if (!rat_is_integer(Rat(m) * (model.lambda + t)))
            throw ValidationError("non-integral level: m*(lambda+t) = " +
                                  rat_string(Rat(m) * (model.lambda + t)));
    } else if (!rat_is_integer(Rat(m) * t)) {
        throw ValidationError("non-integral level: m*t = " + rat_string(Rat(m) * t));
    }
    const VanishingSequence seq = vanishing_sequence(model, m, divisor);
    const Value at(Scalar(Rat(m) * t));
    const Value next(Scalar(Rat(m) * t + 1));
    const long drop = seq.dim_at(at) - seq.dim_at(next);
    return Rat(drop) / m;
}

Scalar dervol_identity_check(const SectionModel& model, const Valuation& v, int m,
                             const std::vector<Rat>& grid, const ReferenceCDF& ref) {
    if (grid.empty()) throw ValidationError("dervol check needs a nonempty grid");
    const VanishingSequence seq = vanishing_sequence(model, m, v);
    const Rat n(static_cast<long>(seq.entries.size()));
    Scalar worst;
    for (const Rat& t : grid) {
        const long dim = seq.dim_at(Value(Scalar(Rat(m) * t)));
        Scalar dev = Scalar(Rat(dim) / n) - (Scalar(make_rat(1)) - ref.eval(Scalar(t)));
        if (dev.sign() < 0) dev = -dev;
        if (dev > worst) worst = dev;
    }
    return worst;
}

} // namespace okbody
