// Acceptance suite: runs the ten headline checks end to end and prints one
// PASS/FAIL line each. The exit code is the number of failed criteria.

#include "okbody/convex.hpp"
#include "okbody/measures.hpp"
#include "okbody/okounkov.hpp"

#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace okbody;

namespace {

const SectionModel kLine2 = SectionModel::proj_line(2);
const SectionModel kPlane = SectionModel::proj_plane(1);
const SectionModel kBlp = SectionModel::blowup_plane(make_rat(1, 2));

Valuation mon(long w1, long w2, long z1, long z2) {
    return Valuation::monomial({Scalar(make_rat(w1)), Scalar(make_rat(w2))},
                               {make_rat(z1), make_rat(z2)});
}

struct Reporter {
    int failures = 0;
    int index = 0;

    void report(const std::string& name, bool pass, const std::string& detail) {
        ++index;
        std::cout << "criterion " << index << " [" << name << "] "
                  << (pass ? "PASS" : "FAIL") << "  " << detail << "\n";
        if (!pass) ++failures;
    }
};

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << "violated: " << what;
        }
    }
    void note(const std::string& what) {
        detail << (detail.str().empty() ? "" : "; ") << what;
    }
};

// 1. Scaled vanishing orders on a degree-2 curve equidistribute toward the
//    uniform law on [0,2]; the level-m sequence is exactly 0..2m.
void curve_equidistribution(Reporter& rep) {
    Check c;
    const int m = 50;
    const VanishingSequence seq =
        vanishing_sequence(kLine2, m, Valuation::monomial({Scalar(make_rat(1))}, {make_rat(0)}));
    c.require(static_cast<long>(seq.entries.size()) == 2 * m + 1, "N = 2m+1");
    bool exact = true;
    for (size_t j = 0; j < seq.entries.size(); ++j)
        if (seq.entries[j].value != Value(Scalar(make_rat(static_cast<long>(j))))) exact = false;
    c.require(exact, "sequence equals (0,1,...,2m)");
    const Scalar ks = ks_distance(empirical_measure(seq), ReferenceCDF::curve_uniform(2));
    c.note("ks=" + ks.str());
    c.require(ks <= Scalar(make_rat(1, 20)), "ks <= 0.05");
    rep.report("curve-equidistribution", c.ok, c.detail.str());
}

// 2. Transform at the flag point: G_m = (a1+a2)/m exactly, and the scaled
//    sequences approach the quadratic law.
void plane_transform_at_flag_point(Reporter& rep) {
    Check c;
    for (int m = 1; m <= 10; ++m) {
        const ConcaveTransformTable t = concave_transform(kPlane, m, mon(1, 1, 0, 0));
        for (const auto& [alpha, g] : t.values)
            if (g != Scalar(make_rat(alpha[0] + alpha[1], m))) {
                c.require(false, "G_m = (a1+a2)/m at m=" + std::to_string(m));
                break;
            }
    }
    const ReferenceCDF ref = ReferenceCDF::simplex_linear_form(make_rat(0), make_rat(1), make_rat(1));
    std::vector<Scalar> ks;
    for (int m : {5, 10, 20})
        ks.push_back(ks_distance(empirical_measure(vanishing_sequence(kPlane, m, mon(1, 1, 0, 0))), ref));
    c.note("ks(5,10,20)=" + ks[0].str() + "," + ks[1].str() + "," + ks[2].str());
    c.require(ks[2] <= Scalar(make_rat(1, 10)), "ks(20) <= 0.10");
    c.require(ks[1] <= ks[0] && ks[2] <= ks[1], "ks non-increasing over m in {5,10,20}");
    rep.report("plane-transform-at-flag-point", c.ok, c.detail.str());
}

// 3. Transform at a general point approximates 1 - x from below within 2/m.
void plane_transform_generic_point(Reporter& rep) {
    Check c;
    for (int m : {4, 8}) {
        const ConcaveTransformTable t = concave_transform(kPlane, m, mon(1, 1, 1, 1));
        for (const auto& [alpha, g] : t.values) {
            const Scalar gap = Scalar(make_rat(m - alpha[0], m)) - g;
            if (gap.sign() < 0 || gap > Scalar(make_rat(2, m))) {
                c.require(false, "0 <= (1 - a1/m) - G_m <= 2/m at m=" + std::to_string(m));
                break;
            }
        }
    }
    const ConcaveTransformTable t2 = concave_transform(kPlane, 2, mon(1, 1, 1, 1));
    c.require(t2.at(exps(0, 0)) == Scalar(make_rat(1)), "G_2(0,0) = 1");
    rep.report("plane-transform-generic-point", c.ok, c.detail.str());
}

// 4. Blow-up transform goldens at lambda = 1/2, and the closed-form bound.
void blowup_transform_goldens(Reporter& rep) {
    Check c;
    const ConcaveTransformTable t8 = concave_transform(kBlp, 8, mon(1, 1, 1, 1));
    c.note("G_8(2,1)=" + t8.at(exps(2, 1)).str() + " G_8(4,2)=" + t8.at(exps(4, 2)).str());
    c.require(t8.at(exps(2, 1)) == Scalar(make_rat(3, 4)), "G_8(2,1) = 3/4");
    c.require(t8.at(exps(4, 2)) == Scalar(make_rat(1, 4)), "G_8(4,2) = 1/4");
    for (int m : {4, 8}) {
        const ConcaveTransformTable t = concave_transform(kBlp, m, mon(1, 1, 1, 1));
        for (const auto& [alpha, g] : t.values) {
            const Rat x = make_rat(alpha[0], m), y = make_rat(alpha[1], m);
            const Scalar bound = (x + y <= make_rat(1, 2)) ? Scalar(1 - x)
                                                           : Scalar(2 - 2 * x - y - make_rat(1, 2));
            if (g > bound) {
                c.require(false, "G_m below the closed form at m=" + std::to_string(m));
                break;
            }
        }
    }
    rep.report("blowup-transform-goldens", c.ok, c.detail.str());
}

// 5. Exceptional divisor: exact extreme ratios, the limit law at m = 16, and
//    the restriction rank at t = 1/4.
void blowup_exceptional_asymptotics(Reporter& rep) {
    Check c;
    for (int m : {2, 4, 8, 16}) {
        const VanishingSequence seq = vanishing_sequence(kBlp, m, Valuation::exceptional());
        if (!(seq.amax().finite() == Scalar(make_rat(m, 2))))
            c.require(false, "a_max(m)/m = 1/2 at m=" + std::to_string(m));
    }
    const Scalar ks = ks_distance(
        empirical_measure(vanishing_sequence(kBlp, 16, Valuation::exceptional())),
        ReferenceCDF::blowup_exceptional(make_rat(1, 2)));
    c.note("ks(16)=" + ks.str());
    c.require(ks <= Scalar(make_rat(3, 20)), "ks(16) <= 0.15");
    const Rat rv = restricted_volume_empirical(kBlp, Valuation::exceptional(), 8, make_rat(1, 4));
    c.note("restvol=" + rat_string(rv));
    c.require(rv == make_rat(7, 8), "restricted volume (t=1/4, m=8) = 7/8");
    rep.report("blowup-exceptional-asymptotics", c.ok, c.detail.str());
}

// 6. Scaled filtration dimensions against the reference survival functions.
void superlevel_volume_identity(Reporter& rep) {
    Check c;
    std::vector<Rat> grid;
    for (int k = 0; k <= 8; ++k) grid.push_back(make_rat(k, 8));
    const Scalar dev1 = dervol_identity_check(
        kPlane, mon(1, 1, 0, 0), 16, grid,
        ReferenceCDF::simplex_linear_form(make_rat(0), make_rat(1), make_rat(1)));
    const Scalar dev2 = dervol_identity_check(kBlp, Valuation::exceptional(), 16, grid,
                                              ReferenceCDF::blowup_exceptional(make_rat(1, 2)));
    c.note("dev(plane)=" + dev1.str() + " dev(blowup)=" + dev2.str());
    c.require(dev1 <= Scalar(make_rat(3, 16)), "plane deviation <= 3/16");
    c.require(dev2 <= Scalar(make_rat(3, 16)), "blow-up deviation <= 3/16");
    rep.report("superlevel-volume-identity", c.ok, c.detail.str());
}

// 7. The exponential arc: colength m, repetition-free sequences, superlinear
//    growth, escaping mass, vanishing volume.
void arc_nonlinear_growth(Reporter& rep) {
    Check c;
    const Valuation arc = Valuation::exp_arc();
    for (int m = 1; m <= 12; ++m)
        if (colength(arc, m, m + 3) != m) {
            c.require(false, "colength(a_m) = m at m=" + std::to_string(m));
            break;
        }
    std::vector<VanishingSequence> seqs;
    for (int m = 1; m <= 5; ++m) seqs.push_back(vanishing_sequence(kPlane, m, arc));
    for (const VanishingSequence& seq : seqs) {
        std::set<Rat> distinct;
        for (const Value& v : seq.values()) distinct.insert(v.finite_rational());
        if (distinct.size() != seq.entries.size())
            c.require(false, "all values distinct at m=" + std::to_string(seq.level));
        const long n = h0_closed_form(kPlane, seq.level);
        if (seq.amax().finite_rational() < Rat(n - 1))
            c.require(false, "a_max >= N_m - 1 at m=" + std::to_string(seq.level));
    }
    const Scalar r2 = seqs[1].amax().finite() / Scalar(make_rat(2));
    const Scalar r5 = seqs[4].amax().finite() / Scalar(make_rat(5));
    c.note("a_max/m at 2,5 = " + r2.str() + "," + r5.str());
    c.require(r5 >= Scalar(make_rat(3, 2)) * r2, "ratio grows by a factor >= 1.5");
    // Mass in the window [0,4): the level-5 top atom at exactly 4 escapes.
    const Rat mass4 = empirical_measure(seqs[3]).mass_below(Scalar(make_rat(4)), false);
    const Rat mass5 = empirical_measure(seqs[4]).mass_below(Scalar(make_rat(4)), false);
    c.note("mass[0,4) at 4,5 = " + rat_string(mass4) + "," + rat_string(mass5));
    c.require(mass5 < mass4, "window mass strictly decreases from m=4 to m=5");
    const VolumeEstimate vol = valuation_volume(arc, 40);
    c.require(vol.estimate == make_rat(1, 20) && !vol.exact.has_value(),
              "volume estimate at M=40 equals 1/20");
    rep.report("arc-nonlinear-growth", c.ok, c.detail.str());
}

// 8. Valuation volumes: the skew-weight estimate, plus the finite-level
//    reading of the volume comparison inequality exactly as specified.
void valuation_volume_bounds(Reporter& rep) {
    Check c;
    const VolumeEstimate est = valuation_volume(mon(2, 3, 0, 0), 120);
    Rat dev = est.estimate - make_rat(1, 6);
    if (dev < 0) dev = -dev;
    c.note("estimate(2,3;120)=" + rat_string(est.estimate));
    c.require(dev <= make_rat(1, 50), "|estimate - 1/6| <= 0.02");

    // a_max(m)/m >= (2 N_m / m^2 * c1 c2)^(1/2) for weights (1,1), compared
    // via squares. The scaled dimension 2 N_m/m^2 approaches the volume from
    // above while a_max(m)/m is already at its limit, so the finite-level
    // inequality runs the wrong way; it is reported as measured.
    for (int m : {4, 8, 16}) {
        const VanishingSequence seq = vanishing_sequence(kPlane, m, mon(1, 1, 0, 0));
        const Rat lhs = seq.amax().finite_rational() / m;
        const Rat rhs_sq = Rat(2 * h0_closed_form(kPlane, m)) / (Rat(m) * m);
        std::ostringstream msg;
        msg << "a_max(" << m << ")/m = " << rat_string(lhs) << " vs sqrt(" << rat_string(rhs_sq)
            << ")";
        c.note(msg.str());
        c.require(lhs * lhs >= rhs_sq, "a_max(m)/m >= sqrt(2 N_m/m^2) at m=" + std::to_string(m));
    }
    rep.report("valuation-volume-bounds", c.ok, c.detail.str());
}

// 9. Exact structural properties across the whole model/valuation suite.
void structural_property_suite(Reporter& rep) {
    Check c;
    std::mt19937_64 rng(20240817);

    struct Combo {
        SectionModel model;
        Valuation v;
        std::vector<int> levels;
    };
    const std::vector<int> all = {1, 2, 3, 4, 5, 6, 7, 8};
    const std::vector<int> even = {2, 4, 6, 8};
    const std::vector<Combo> combos = {
        {kPlane, mon(1, 1, 0, 0), all},
        {kPlane, mon(1, 1, 1, 1), all},
        {kPlane, mon(2, 3, 0, 0), all},
        {kPlane,
         Valuation::monomial({Scalar(make_rat(1)), Scalar::sqrt2()}, {make_rat(0), make_rat(0)}),
         all},
        {kPlane, Valuation::flag_line(), all},
        {kPlane, Valuation::explicit_poly(parse_poly("x+y-1")), all},
        {kPlane, Valuation::exp_arc(), all},
        {kBlp, Valuation::exceptional(), even},
        {kBlp, mon(1, 1, 1, 1), even},
        {SectionModel::proj_line(2), Valuation::monomial({Scalar(make_rat(1))}, {make_rat(0)}), all},
    };

    auto random_section = [&](const SectionSpace& space) {
        MultiPoly s(space.model.nvars());
        for (const MultiPoly& f : space.basis) {
            const int coef = static_cast<int>(rng() % 9) - 4;
            if (coef != 0) s += make_rat(coef) * f;
        }
        if (s.is_zero()) s = space.basis.front();
        return s;
    };

    // Multiplicativity and the ultrametric inequality, 200 random pairs per
    // model (spread over its valuations).
    for (const Combo& combo : combos) {
        const int m1 = combo.levels[1], m2 = combo.levels[2];
        const SectionSpace s1 = section_basis(combo.model, m1);
        const SectionSpace s2 = section_basis(combo.model, m2);
        for (int it = 0; it < 200; ++it) {
            const MultiPoly a = random_section(s1);
            const MultiPoly b = random_section(s2);
            if (evaluate(combo.v, a * b, combo.model, m1 + m2) !=
                evaluate(combo.v, a, combo.model, m1) + evaluate(combo.v, b, combo.model, m2)) {
                c.require(false, "multiplicativity (" + combo.v.spec_string() + ")");
                break;
            }
            const MultiPoly a2 = random_section(s1);
            const Value v1 = evaluate(combo.v, a, combo.model, m1);
            const Value v2 = evaluate(combo.v, a2, combo.model, m1);
            const Value vs = evaluate(combo.v, a + a2, combo.model, m1);
            if (!(vs >= (v1 < v2 ? v1 : v2))) {
                c.require(false, "ultrametric (" + combo.v.spec_string() + ")");
                break;
            }
        }
    }

    // Super/subadditivity of the extremes across level pairs.
    for (const Combo& combo : combos) {
        const std::vector<std::pair<int, int>> pairs = {
            {combo.levels[0], combo.levels[0]},
            {combo.levels[0], combo.levels[1]},
            {combo.levels[1], combo.levels[1]}};
        for (const auto& [m1, m2] : pairs) {
            const VanishingSequence a = vanishing_sequence(combo.model, m1, combo.v);
            const VanishingSequence b = vanishing_sequence(combo.model, m2, combo.v);
            const VanishingSequence ab = vanishing_sequence(combo.model, m1 + m2, combo.v);
            if (!(ab.amax().finite() >= a.amax().finite() + b.amax().finite()))
                c.require(false, "a_max superadditive (" + combo.v.spec_string() + ")");
            if (!(ab.amin().finite() <= a.amin().finite() + b.amin().finite()))
                c.require(false, "a_min subadditive (" + combo.v.spec_string() + ")");
        }
    }

    // Pushforward identity: the transform values over the lattice points
    // reproduce the vanishing sequence as a multiset, at every level <= 8.
    for (const Combo& combo : combos) {
        for (const int m : combo.levels) {
            const ConcaveTransformTable table = concave_transform(combo.model, m, combo.v);
            const VanishingSequence seq = vanishing_sequence(combo.model, m, combo.v);
            std::multiset<std::pair<Rat, Rat>> lhs, rhs;
            for (const auto& [alpha, g] : table.values) {
                const Scalar w = g * Scalar(make_rat(m));
                lhs.insert({w.rational_part(), w.sqrt2_part()});
            }
            for (const Value& w : seq.values())
                rhs.insert({w.finite().rational_part(), w.finite().sqrt2_part()});
            if (lhs != rhs) {
                c.require(false, "pushforward identity (" + combo.v.spec_string() + ", m=" +
                                     std::to_string(m) + ")");
                break;
            }
        }
    }

    // Pulling back through the trivial blow-up changes nothing.
    const SectionModel trivial = SectionModel::blowup_plane(make_rat(0));
    for (const Valuation& v :
         {mon(1, 1, 0, 0), mon(1, 1, 1, 1), Valuation::flag_line(), Valuation::exp_arc()}) {
        for (int m : {1, 2, 3}) {
            const auto a = vanishing_sequence(kPlane, m, v).values();
            const auto b = vanishing_sequence(trivial, m, v).values();
            if (a.size() != b.size() || !std::equal(a.begin(), a.end(), b.begin()))
                c.require(false, "trivial blow-up invariance (" + v.spec_string() + ")");
        }
    }

    // Maximal rational rank: N_m pairwise distinct values for weights (1, sqrt2).
    const Valuation vq =
        Valuation::monomial({Scalar(make_rat(1)), Scalar::sqrt2()}, {make_rat(0), make_rat(0)});
    for (int m = 1; m <= 8; ++m) {
        const VanishingSequence seq = vanishing_sequence(kPlane, m, vq);
        std::set<std::pair<Rat, Rat>> distinct;
        for (const Value& v : seq.values())
            distinct.insert({v.finite().rational_part(), v.finite().sqrt2_part()});
        if (distinct.size() != seq.entries.size())
            c.require(false, "sqrt2 distinctness at m=" + std::to_string(m));
    }

    rep.report("structural-property-suite", c.ok, c.detail.str());
}

// 10. The capped quadric body: validated construction, extremal values along
//     the curved boundary, and conical verdicts.
void quadric_body_extremal_discontinuity(Reporter& rep) {
    Check c;
    const Rat tol = make_rat(1, 1 << 20);
    CappedQuadricBody qb = make_capped_quadric_body(IntersectionData::default_instance());
    c.require(qb.boundary_derivative == make_rat(-2), "boundary derivative certificate");

    c.require(extremal_function(qb.body, qb.apex, qb.apex, tol).value == 1, "E(apex) = 1");
    for (long k = 2; k <= 8; ++k) {
        const Point xk = {make_rat(1, k), 1 - make_rat(1, k * k), make_rat(0)};
        const Rat e = extremal_function(qb.body, qb.apex, xk, tol).value;
        if (!(e <= make_rat(1, 2)))
            c.require(false, "E(x_k) <= 0.5 at k=" + std::to_string(k));
    }

    const ConicalReport apex_rep =
        conical_test(qb.body, qb.apex, default_directions(3, 8), make_rat(1, 8), make_rat(1, 64));
    c.note("worst conical gap at apex = " + rat_string(apex_rep.worst_gap));
    c.require(apex_rep.verdict == ConicalVerdict::NonConical, "apex is non-conical");

    const ConvexBody simplex3 = ConvexBody::polytope_v(
        3, {{make_rat(0), make_rat(0), make_rat(0)},
            {make_rat(1), make_rat(0), make_rat(0)},
            {make_rat(0), make_rat(1), make_rat(0)},
            {make_rat(0), make_rat(0), make_rat(1)}});
    for (const Point& v : simplex3.vertices()) {
        const ConicalReport r =
            conical_test(simplex3, v, default_directions(3, 8), make_rat(1, 32), make_rat(1, 64));
        if (r.verdict != ConicalVerdict::Conical) c.require(false, "simplex vertex conical");
    }

    std::mt19937_64 rng(3141);
    auto sample_member = [&]() {
        while (true) {
            Point x = {make_rat(static_cast<long>(rng() % 257), 64),
                       make_rat(static_cast<long>(rng() % 257), 64),
                       make_rat(static_cast<long>(rng() % 257), 64)};
            if (qb.body.member(x)) return x;
        }
    };
    for (int it = 0; it < 100; ++it) {
        const Point a = sample_member();
        const Point b = sample_member();
        const Point mid = {(a[0] + b[0]) / 2, (a[1] + b[1]) / 2, (a[2] + b[2]) / 2};
        const Rat ea = extremal_function(qb.body, qb.apex, a, tol).value;
        const Rat eb = extremal_function(qb.body, qb.apex, b, tol).value;
        const Rat em = extremal_function(qb.body, qb.apex, mid, tol).value;
        if (!(em >= (ea + eb) / 2 - 2 * tol)) {
            c.require(false, "three-point concavity");
            break;
        }
    }

    rep.report("quadric-body-extremal-discontinuity", c.ok, c.detail.str());
}

} // namespace

int main() {
    Reporter rep;
    curve_equidistribution(rep);
    plane_transform_at_flag_point(rep);
    plane_transform_generic_point(rep);
    blowup_transform_goldens(rep);
    blowup_exceptional_asymptotics(rep);
    superlevel_volume_identity(rep);
    arc_nonlinear_growth(rep);
    valuation_volume_bounds(rep);
    structural_property_suite(rep);
    quadric_body_extremal_discontinuity(rep);
    std::cout << (rep.failures == 0 ? "all criteria passed"
                                    : std::to_string(rep.failures) + " criterion(s) failed")
              << "\n";
    return rep.failures;
}
