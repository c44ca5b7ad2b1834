#include "okbody/filtration.hpp"

#include "okbody/echelon.hpp"
#include "okbody/errors.hpp"
#include "okbody/monomial_order.hpp"
#include "okbody/parallel.hpp"

#include <algorithm>
#include <map>

namespace okbody {

namespace {

bool is_zero_point(const Point& z) {
    for (const Rat& c : z)
        if (c != 0) return false;
    return true;
}

// Monomial / FlagLine / ExceptionalF: recenter, weight-echelonize, read the
// value off the leading exponent, shift back. Adaptedness: in a reduced
// echelon basis the leading of any combination is the smallest participating
// leading, so its weight is the minimum of the participating weights.
std::vector<AdaptedEntry> weight_echelon_adapted(const SectionSpace& space, const Valuation& v) {
    const int n = space.model.nvars();
    Point center(static_cast<size_t>(n), make_rat(0));
    std::vector<Scalar> weights;
    Scalar offset;

    switch (v.kind) {
        case Valuation::Kind::Monomial:
            if (static_cast<int>(v.weights.size()) != n)
                throw ValidationError("model mismatch: weight count differs from chart dimension");
            center = v.center;
            weights = v.weights;
            break;
        case Valuation::Kind::FlagLine:
            weights.assign(static_cast<size_t>(n), Scalar(make_rat(0)));
            weights[0] = Scalar(make_rat(1));
            break;
        case Valuation::Kind::ExceptionalF:
            if (!space.model.is_blowup())
                throw ValidationError("model mismatch: ordF requires the blow-up model");
            center = space.model.blowup_center;
            weights.assign(2, Scalar(make_rat(1)));
            offset = Scalar(-Rat(space.level) * space.model.lambda);
            break;
        default:
            throw ValidationError("weight_echelon_adapted: unsupported valuation kind");
    }

    const bool shift = !is_zero_point(center);
    Point minus_center(center.size());
    for (size_t i = 0; i < center.size(); ++i) minus_center[i] = -center[i];

    std::vector<MultiPoly> rows;
    rows.reserve(space.basis.size());
    for (const MultiPoly& s : space.basis) rows.push_back(shift ? recenter(s, center) : s);

    const auto order = MonomialOrder::weight_then_lex(weights);
    std::vector<AdaptedEntry> out;
    for (const EchelonRow& row : echelonize(rows, order)) {
        const Scalar value = order.weight_of(row.leading) + offset;
        out.push_back({shift ? recenter(row.poly, minus_center) : row.poly, Value(value)});
    }
    return out;
}

// ExplicitPoly divisor D: the filtration steps are F^k = D^k * (smaller
// space). Assemble an adapted basis from the deepest step outward: rows of
// the echelon basis of F^k whose leadings are new relative to everything
// deeper lie in F^k \ F^{k+1}, hence have value exactly k.
std::vector<AdaptedEntry> divisor_flag_adapted(const SectionSpace& space, const Valuation& v) {
    const SectionModel& model = space.model;
    const int m = space.level;
    const int e = v.divisor.degree();
    const int max_deg = m * model.degree;
    const int kmax = max_deg / e;

    const auto lex = MonomialOrder::lex(model.nvars());

    auto step_basis = [&](int k) -> std::vector<MultiPoly> {
        const int rest = max_deg - e * k;
        if (rest < 0) return {};
        const MultiPoly dk = poly_pow(v.divisor, k);
        std::vector<MultiPoly> gs;
        if (model.is_blowup()) {
            const int mq = k > 0 ? vanishing_order_at(v.divisor, model.blowup_center) : 0;
            const long need = rat_to_long(Rat(m) * model.lambda) - static_cast<long>(k) * mq;
            gs = plane_subspace_with_multiplicity(rest, static_cast<int>(std::max(0L, need)),
                                                  model.blowup_center);
        } else if (model.nvars() == 1) {
            for (int a = 0; a <= rest; ++a) gs.push_back(MultiPoly::monomial(1, exps(a)));
        } else {
            for (int a = 0; a <= rest; ++a)
                for (int b = 0; a + b <= rest; ++b) gs.push_back(MultiPoly::monomial(2, exps(a, b)));
        }
        for (MultiPoly& g : gs) g *= dk;
        return gs;
    };

    std::vector<AdaptedEntry> out;
    std::map<Exponent, bool> taken;
    for (int k = kmax; k >= 0; --k) {
        for (const EchelonRow& row : echelonize(step_basis(k), lex)) {
            if (taken.contains(row.leading)) continue;
            taken[row.leading] = true;
            out.push_back({row.poly, Value(Scalar(make_rat(k)))});
        }
    }
    if (static_cast<int>(out.size()) != space.dimension())
        throw ComputeError("divisor filtration dimension mismatch: got " +
                           std::to_string(out.size()) + ", expected " +
                           std::to_string(space.dimension()));
    return out;
}

// Arc valuations: greedy reduction on cached series, smallest shared value
// first. Raising the truncation restarts the series from the current
// polynomials, so reduction progress is never lost.
std::vector<AdaptedEntry> arc_greedy_adapted(const SectionSpace& space, const Valuation& v) {
    const int N = space.dimension();
    std::vector<MultiPoly> polys = space.basis;
    int T = std::max(v.arc_truncation_start, N + 8);

    while (true) {
        if (T > v.arc_truncation_cap) throw TruncationExhausted(v.arc_truncation_cap);
        const TruncSeries gx = v.arc_x(T), gy = v.arc_y(T);
        std::vector<TruncSeries> series;
        series.reserve(static_cast<size_t>(N));
        bool exhausted = false;
        for (const MultiPoly& p : polys) {
            try {
                series.push_back(compose_arc(recenter(p, v.arc_center), gx, gy, T));
            } catch (const TruncationExhausted&) {
                exhausted = true;
                break;
            }
        }
        if (exhausted) {
            T *= 2;
            continue;
        }

        std::map<int, std::vector<int>> buckets;
        for (int i = 0; i < N; ++i) buckets[*series[static_cast<size_t>(i)].order()].push_back(i);

        // Guard per the greedy termination bound: N * (max value + truncation).
        long guard = static_cast<long>(N) * 2 * T;
        for (auto it = buckets.begin(); it != buckets.end() && !exhausted; ++it) {
            auto& idxs = it->second;
            const int o = it->first;
            for (size_t i = 1; i < idxs.size(); ++i) {
                const int keep = idxs[0];
                const int fix = idxs[i];
                const Rat c = series[static_cast<size_t>(fix)].coeff(o) /
                              series[static_cast<size_t>(keep)].coeff(o);
                polys[static_cast<size_t>(fix)] -= c * polys[static_cast<size_t>(keep)];
                TruncSeries scaled = series[static_cast<size_t>(keep)];
                scaled *= c;
                series[static_cast<size_t>(fix)] -= scaled;
                const auto no = series[static_cast<size_t>(fix)].order();
                if (!no) {
                    exhausted = true;
                    break;
                }
                buckets[*no].push_back(fix);
                if (--guard < 0)
                    throw NonTerminationGuard("non-termination guard tripped in arc adapted basis");
            }
            idxs.resize(1);
        }
        if (exhausted) {
            T *= 2;
            continue;
        }

        std::vector<AdaptedEntry> out;
        out.reserve(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i)
            out.push_back({polys[static_cast<size_t>(i)],
                           Value(Scalar(make_rat(*series[static_cast<size_t>(i)].order())))});
        return out;
    }
}

} // namespace

std::vector<AdaptedEntry> adapted_basis(const SectionSpace& space, const Valuation& v) {
    if (space.dimension() == 0) throw ValidationError("adapted basis of the zero space");
    switch (v.kind) {
        case Valuation::Kind::Monomial:
        case Valuation::Kind::FlagLine:
        case Valuation::Kind::ExceptionalF:
            return weight_echelon_adapted(space, v);
        case Valuation::Kind::ExplicitPoly:
            return divisor_flag_adapted(space, v);
        case Valuation::Kind::Arc:
            return arc_greedy_adapted(space, v);
    }
    throw ValidationError("unknown valuation kind");
}

std::vector<Value> VanishingSequence::values() const {
    std::vector<Value> out;
    out.reserve(entries.size());
    for (const AdaptedEntry& e : entries) out.push_back(e.value);
    return out;
}

long VanishingSequence::dim_at(const Value& t) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), t,
                               [](const AdaptedEntry& e, const Value& key) { return e.value < key; });
    return static_cast<long>(entries.end() - it);
}

VanishingSequence vanishing_sequence(const SectionModel& model, int m, const Valuation& v) {
    const SectionSpace space = section_basis(model, m);
    VanishingSequence seq;
    seq.level = m;
    seq.entries = adapted_basis(space, v);
    for (AdaptedEntry& e : seq.entries) {
        const Rat lead = e.section.terms().begin()->second; // lex-min term
        if (lead != 1) e.section *= Rat(1) / lead;
    }
    std::sort(seq.entries.begin(), seq.entries.end(), [](const AdaptedEntry& a, const AdaptedEntry& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.section.terms().begin()->first < b.section.terms().begin()->first;
    });
    return seq;
}

long FiltrationProfile::dim_at(const Value& t) const {
    // dim F^t = #{j : a_j >= t}: the count stored at the smallest jump >= t.
    auto it = std::lower_bound(jumps.begin(), jumps.end(), t,
                               [](const std::pair<Value, long>& j, const Value& key) {
                                   return j.first < key;
                               });
    if (it == jumps.end()) return 0;
    return it->second;
}

FiltrationProfile filtration_dims(const SectionModel& model, int m, const Valuation& v) {
    const VanishingSequence seq = vanishing_sequence(model, m, v);
    FiltrationProfile profile;
    profile.level = m;
    profile.full_dim = static_cast<long>(seq.entries.size());
    const auto vals = seq.values();
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i > 0 && vals[i] == vals[i - 1]) continue;
        profile.jumps.emplace_back(vals[i], static_cast<long>(vals.size() - i));
    }
    return profile;
}

std::string growth_verdict_string(GrowthVerdict verdict) {
    switch (verdict) {
        case GrowthVerdict::Linear: return "linear";
        case GrowthVerdict::Superlinear: return "superlinear";
        case GrowthVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

AsymptoticsReport asymptotics(const SectionModel& model, const Valuation& v,
                              const std::vector<int>& m_list) {
    if (m_list.empty()) throw ValidationError("asymptotics requires at least one level");
    for (const int m : m_list) model.check_level(m);
    // Per-level work fans out to the worker pool; results merge in m-order.
    std::vector<VanishingSequence> seqs(m_list.size());
    parallel_for_index(static_cast<int>(m_list.size()), [&](int i) {
        seqs[static_cast<size_t>(i)] = vanishing_sequence(model, m_list[static_cast<size_t>(i)], v);
    });
    AsymptoticsReport rep;
    for (size_t i = 0; i < m_list.size(); ++i) {
        const VanishingSequence& seq = seqs[i];
        const int m = m_list[i];
        rep.levels.push_back(m);
        rep.amax_values.push_back(seq.amax());
        rep.amin_values.push_back(seq.amin());
        rep.ratio_max.push_back(seq.amax().finite() / Scalar(make_rat(m)));
        rep.ratio_min.push_back(seq.amin().finite() / Scalar(make_rat(m)));
    }
    rep.fekete_sup = rep.ratio_max.front();
    rep.fekete_inf = rep.ratio_min.front();
    for (size_t i = 0; i < rep.ratio_max.size(); ++i) {
        if (rep.ratio_max[i] > rep.fekete_sup) rep.fekete_sup = rep.ratio_max[i];
        if (rep.ratio_min[i] < rep.fekete_inf) rep.fekete_inf = rep.ratio_min[i];
        rep.running_sup.push_back(rep.fekete_sup);
        rep.running_inf.push_back(rep.fekete_inf);
    }

    const size_t k = rep.ratio_max.size();
    bool linear = true;
    for (size_t i = 0; i < k; ++i) {
        Scalar gap = rep.ratio_max[i] - rep.ratio_max.back();
        if (gap.sign() < 0) gap = -gap;
        if (gap > Scalar(make_rat(1, rep.levels[i]))) linear = false;
    }
    bool superlinear = false;
    if (k >= 2) {
        superlinear =
            rep.ratio_max.back() >= Scalar(make_rat(3, 2)) * rep.ratio_max.front();
        for (size_t i = k / 2; i + 1 < k && superlinear; ++i)
            if (!(rep.ratio_max[i] < rep.ratio_max[i + 1])) superlinear = false;
    }
    rep.verdict = linear      ? GrowthVerdict::Linear
                  : superlinear ? GrowthVerdict::Superlinear
                                : GrowthVerdict::Inconclusive;
    return rep;
}

bool amin_nef_check(const SectionModel& model, const Valuation& v, const std::vector<int>& m_list) {
    for (const int m : m_list) {
        const VanishingSequence seq = vanishing_sequence(model, m, v);
        if (!(seq.amin() == Value(Scalar(make_rat(0))))) return false;
    }
    return true;
}

} // namespace okbody
