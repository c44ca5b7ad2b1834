#include "okbody/valuation.hpp"

#include "okbody/errors.hpp"
#include "okbody/monomial_order.hpp"

#include <algorithm>
#include <map>

namespace okbody {

const Scalar& Value::finite() const {
    if (infinite_) throw ValidationError("infinite value where a finite one was required");
    return finite_;
}

bool operator==(const Value& x, const Value& y) {
    if (x.is_infinite() || y.is_infinite()) return x.is_infinite() == y.is_infinite();
    return x.finite() == y.finite();
}

bool operator<(const Value& x, const Value& y) {
    if (x.is_infinite()) return false;
    if (y.is_infinite()) return true;
    return x.finite() < y.finite();
}

Value operator+(const Value& x, const Value& y) {
    if (x.is_infinite() || y.is_infinite()) return Value::infinity();
    return Value(x.finite() + y.finite());
}

Valuation Valuation::monomial(std::vector<Scalar> weights, Point center) {
    if (weights.empty() || weights.size() > 2)
        throw ValidationError("monomial valuation expects 1 or 2 weights");
    for (const Scalar& w : weights)
        if (w.sign() <= 0) throw ValidationError("monomial weights must be positive");
    if (center.size() != weights.size())
        throw ValidationError("monomial center dimension must match the weight count");
    Valuation v;
    v.kind = Kind::Monomial;
    v.weights = std::move(weights);
    v.center = std::move(center);
    return v;
}

Valuation Valuation::flag_line() {
    Valuation v;
    v.kind = Kind::FlagLine;
    return v;
}

Valuation Valuation::exceptional() {
    Valuation v;
    v.kind = Kind::ExceptionalF;
    return v;
}

Valuation Valuation::explicit_poly(MultiPoly divisor) {
    if (divisor.degree() < 1) throw ValidationError("divisor polynomial must be non-constant");
    Valuation v;
    v.kind = Kind::ExplicitPoly;
    v.divisor = std::move(divisor);
    return v;
}

Valuation Valuation::exp_arc() {
    Valuation v;
    v.kind = Kind::Arc;
    v.arc_x = [](int T) { return series_identity(T); };
    v.arc_y = [](int T) { return series_exp_minus_one(T); };
    v.arc_center = {make_rat(0), make_rat(0)};
    return v;
}

std::string Valuation::spec_string() const {
    switch (kind) {
        case Kind::Monomial: {
            const bool sqrt2 = weights.size() == 2 && weights[0] == Scalar(make_rat(1)) &&
                               weights[1] == Scalar::sqrt2();
            std::string head;
            if (sqrt2) {
                head = "mon-sqrt2";
            } else {
                head = "mon:";
                for (size_t i = 0; i < weights.size(); ++i) {
                    if (i) head += ",";
                    head += weights[i].as_rational() == weights[i].rational_part()
                                ? rat_string(weights[i].rational_part())
                                : weights[i].str();
                }
            }
            std::string tail = "@";
            for (size_t i = 0; i < center.size(); ++i) {
                if (i) tail += ",";
                tail += rat_string(center[i]);
            }
            return head + tail;
        }
        case Kind::FlagLine: return "ordflag";
        case Kind::ExceptionalF: return "ordF";
        case Kind::ExplicitPoly: return "ordpoly:" + divisor.str();
        case Kind::Arc: return "arc-exp";
    }
    return "?";
}

namespace {

Scalar monomial_min_weight(const MultiPoly& shifted, const std::vector<Scalar>& weights) {
    bool first = true;
    Scalar best;
    for (const auto& [e, c] : shifted.terms()) {
        Scalar w;
        for (size_t i = 0; i < weights.size(); ++i)
            w += weights[i] * Scalar(make_rat(e[static_cast<int>(i)]));
        if (first || w < best) {
            best = w;
            first = false;
        }
    }
    return best;
}

int arc_vanishing_order(const Valuation& v, const MultiPoly& s) {
    const MultiPoly shifted = recenter(s, v.arc_center);
    for (int T = v.arc_truncation_start; T <= v.arc_truncation_cap; T *= 2) {
        try {
            const TruncSeries composed = compose_arc(shifted, v.arc_x(T), v.arc_y(T), T);
            return *composed.order();
        } catch (const TruncationExhausted&) {
            if (2 * T > v.arc_truncation_cap) throw;
        }
    }
    throw TruncationExhausted(v.arc_truncation_cap);
}

} // namespace

Value evaluate(const Valuation& v, const MultiPoly& s, const SectionModel& model, int level) {
    if (s.is_zero()) return Value::infinity();
    switch (v.kind) {
        case Valuation::Kind::Monomial: {
            if (static_cast<int>(v.center.size()) != s.nvars())
                throw ValidationError("model mismatch: monomial center dimension differs from the chart");
            const MultiPoly shifted = recenter(s, v.center);
            return Value(monomial_min_weight(shifted, v.weights));
        }
        case Valuation::Kind::FlagLine: {
            int best = -1;
            for (const auto& [e, c] : s.terms())
                if (best < 0 || e[0] < best) best = e[0];
            return Value(Scalar(make_rat(best)));
        }
        case Valuation::Kind::ExceptionalF: {
            if (!model.is_blowup())
                throw ValidationError("model mismatch: ordF requires the blow-up model");
            model.check_level(level);
            const int mult = vanishing_order_at(s, model.blowup_center);
            return Value(Scalar(Rat(mult) - Rat(level) * model.lambda));
        }
        case Valuation::Kind::ExplicitPoly:
            return Value(Scalar(make_rat(divisibility_order(s, v.divisor))));
        case Valuation::Kind::Arc: {
            if (s.nvars() != 2) throw ValidationError("model mismatch: arc valuations live on surfaces");
            return Value(Scalar(make_rat(arc_vanishing_order(v, s))));
        }
    }
    throw ValidationError("unknown valuation kind");
}

namespace {

long monomial_colength(const std::vector<Scalar>& weights, int m) {
    if (weights.size() != 2)
        throw ValidationError("colength is implemented for surface-centered valuations");
    const Scalar bound(make_rat(m));
    long count = 0;
    for (long a = 0;; ++a) {
        const Scalar wa = weights[0] * Scalar(make_rat(a));
        if (!(wa < bound)) break;
        for (long b = 0;; ++b) {
            const Scalar w = wa + weights[1] * Scalar(make_rat(b));
            if (!(w < bound)) break;
            ++count;
        }
    }
    return count;
}

// Distinct values < m attained by the arc valuation on polynomials of degree
// <= cap. Standard semigroup sweep: bucket the composed monomial series by
// vanishing order, reduce duplicates upward (smallest order first), drop
// anything that reaches m. With T > m a dropped element can never matter.
long arc_attained_below(const Valuation& v, int m, int cap) {
    const int T = std::max(v.arc_truncation_start, m + 8);
    if (T > v.arc_truncation_cap) throw TruncationExhausted(v.arc_truncation_cap);
    const TruncSeries gx = v.arc_x(T), gy = v.arc_y(T);
    const bool at_origin = v.arc_center[0] == 0 && v.arc_center[1] == 0;

    std::vector<TruncSeries> pow1, pow2;
    if (at_origin) {
        TruncSeries one(T);
        one.set_coeff(0, Rat(1));
        pow1.push_back(one);
        pow2.push_back(one);
        for (int k = 1; k <= cap; ++k) {
            pow1.push_back(pow1.back() * gx);
            pow2.push_back(pow2.back() * gy);
        }
    }

    std::map<int, std::vector<TruncSeries>> buckets;
    for (int a = 0; a <= cap; ++a)
        for (int b = 0; a + b <= cap; ++b) {
            std::optional<TruncSeries> s;
            if (at_origin) {
                s = pow1[static_cast<size_t>(a)] * pow2[static_cast<size_t>(b)];
            } else {
                try {
                    s = compose_arc(recenter(MultiPoly::monomial(2, exps(a, b)), v.arc_center), gx, gy, T);
                } catch (const TruncationExhausted&) {
                    continue; // order >= T > m: cannot contribute
                }
            }
            const auto o = s->order();
            if (o && *o < m) buckets[*o].push_back(std::move(*s));
        }

    long guard = static_cast<long>(cap + 2) * (cap + 2) * m;
    long count = 0;
    for (auto it = buckets.begin(); it != buckets.end(); ++it) {
        auto& vec = it->second;
        if (vec.empty()) continue;
        ++count;
        const int o = it->first;
        const TruncSeries& keep = vec.front();
        for (size_t i = 1; i < vec.size(); ++i) {
            TruncSeries s = std::move(vec[i]);
            TruncSeries scaled = keep;
            scaled *= s.coeff(o) / keep.coeff(o);
            s -= scaled;
            const auto no = s.order();
            if (no && *no < m) buckets[*no].push_back(std::move(s));
            if (--guard < 0) throw NonTerminationGuard("non-termination guard tripped in arc colength");
        }
        vec.erase(vec.begin() + 1, vec.end());
    }
    return count;
}

} // namespace

long colength(const Valuation& v, int m, int degree_cap) {
    if (m < 1) throw ValidationError("colength level must be positive");
    switch (v.kind) {
        case Valuation::Kind::Monomial:
            return monomial_colength(v.weights, m);
        case Valuation::Kind::Arc: {
            const long c0 = arc_attained_below(v, m, degree_cap);
            const long c1 = arc_attained_below(v, m, degree_cap + 2);
            if (c0 != c1) throw DegreeCapUnstable(degree_cap);
            return c0;
        }
        default:
            throw ValidationError("colength requires a point-centered valuation (monomial or arc)");
    }
}

VolumeEstimate valuation_volume(const Valuation& v, int M) {
    if (M < 1) throw ValidationError("evaluation level must be positive");
    VolumeEstimate out;
    const int cap = v.kind == Valuation::Kind::Arc ? M + 3 : 0;
    const long len = colength(v, M, cap);
    out.estimate = Rat(2 * len) / Rat(static_cast<long>(M) * M);
    if (v.kind == Valuation::Kind::Monomial && v.weights.size() == 2)
        out.exact = Scalar(make_rat(1)) / (v.weights[0] * v.weights[1]);
    return out;
}

Valuation parse_valuation_spec(const std::string& spec) {
    auto parse_point = [](const std::string& text) {
        std::vector<Rat> coords;
        size_t pos = 0;
        while (pos <= text.size()) {
            const auto comma = text.find(',', pos);
            const std::string piece =
                text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            coords.push_back(parse_rat(piece));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return coords;
    };

    if (spec == "ordflag") return Valuation::flag_line();
    if (spec == "ordF") return Valuation::exceptional();
    if (spec == "arc-exp") return Valuation::exp_arc();
    if (spec.rfind("ordpoly:", 0) == 0) return Valuation::explicit_poly(parse_poly(spec.substr(8)));
    if (spec.rfind("mon-sqrt2@", 0) == 0) {
        const Point center = parse_point(spec.substr(10));
        return Valuation::monomial({Scalar(make_rat(1)), Scalar::sqrt2()}, center);
    }
    if (spec.rfind("mon:", 0) == 0) {
        const auto at = spec.find('@');
        if (at == std::string::npos)
            throw ValidationError("valuation spec '" + spec + "' is missing '@center'");
        const std::string wtext = spec.substr(4, at - 4);
        std::vector<Scalar> weights;
        for (const Rat& w : parse_point(wtext)) weights.emplace_back(w);
        const Point center = parse_point(spec.substr(at + 1));
        return Valuation::monomial(std::move(weights), center);
    }
    throw ValidationError("unknown valuation spec '" + spec + "'");
}

} // namespace okbody
