#include "okbody/section_model.hpp"

#include "okbody/echelon.hpp"
#include "okbody/errors.hpp"

#include <algorithm>

namespace okbody {

SectionModel SectionModel::proj_line(int d) {
    if (d < 1) throw ValidationError("ProjLine degree must be positive");
    SectionModel m;
    m.kind = Kind::ProjLine;
    m.degree = d;
    return m;
}

SectionModel SectionModel::proj_plane(int d) {
    if (d < 1) throw ValidationError("ProjPlane degree must be positive");
    SectionModel m;
    m.kind = Kind::ProjPlane;
    m.degree = d;
    return m;
}

SectionModel SectionModel::blowup_plane(const Rat& lambda, Point q) {
    if (lambda < 0 || lambda >= 1) throw ValidationError("blow-up weight must lie in [0,1)");
    if (q.size() != 2) throw ValidationError("blow-up center must be a plane point");
    if (q[0] == 0) throw ValidationError("blow-up center must avoid the flag line {x=0}");
    SectionModel m;
    m.kind = Kind::BlowupPlane;
    m.degree = 1;
    m.lambda = lambda;
    m.blowup_center = std::move(q);
    return m;
}

void SectionModel::check_level(int m) const {
    if (m < 1) throw ValidationError("level must be positive");
    if (kind == Kind::BlowupPlane && !rat_is_integer(Rat(m) * lambda))
        throw ValidationError("incompatible level: m*lambda = " + rat_string(Rat(m) * lambda) +
                              " is not an integer");
}

std::vector<MultiPoly> plane_subspace_with_multiplicity(int max_deg, int mult, const Point& q) {
    std::vector<MultiPoly> monomials;
    for (int a = 0; a <= max_deg; ++a)
        for (int b = 0; a + b <= max_deg; ++b)
            monomials.push_back(MultiPoly::monomial(2, exps(a, b)));
    if (mult <= 0) return monomials;

    // Work in coordinates centered at q: the multiplicity condition becomes
    // "all terms of total degree < mult vanish", and a weight echelon basis
    // splits the space along total degree. Shift back afterwards.
    const Point minus_q = {-q[0], -q[1]};
    std::vector<MultiPoly> shifted;
    shifted.reserve(monomials.size());
    for (const MultiPoly& p : monomials) shifted.push_back(recenter(p, q));

    const auto order = MonomialOrder::weight_then_lex({Scalar(make_rat(1)), Scalar(make_rat(1))});
    std::vector<MultiPoly> out;
    for (const EchelonRow& row : echelonize(shifted, order)) {
        if (total_degree(row.leading) >= mult) out.push_back(recenter(row.poly, minus_q));
    }
    return out;
}

SectionSpace section_basis(const SectionModel& model, int m) {
    model.check_level(m);
    SectionSpace space;
    space.model = model;
    space.level = m;
    switch (model.kind) {
        case SectionModel::Kind::ProjLine: {
            for (int a = 0; a <= m * model.degree; ++a)
                space.basis.push_back(MultiPoly::monomial(1, exps(a)));
            break;
        }
        case SectionModel::Kind::ProjPlane: {
            const int D = m * model.degree;
            for (int a = 0; a <= D; ++a)
                for (int b = 0; a + b <= D; ++b)
                    space.basis.push_back(MultiPoly::monomial(2, exps(a, b)));
            break;
        }
        case SectionModel::Kind::BlowupPlane: {
            const long mult = rat_to_long(Rat(m) * model.lambda);
            space.basis = plane_subspace_with_multiplicity(m, static_cast<int>(mult), model.blowup_center);
            break;
        }
    }
    return space;
}

long h0_closed_form(const SectionModel& model, int m) {
    model.check_level(m);
    auto choose2 = [](long n) { return n * (n - 1) / 2; };
    switch (model.kind) {
        case SectionModel::Kind::ProjLine:
            return static_cast<long>(m) * model.degree + 1;
        case SectionModel::Kind::ProjPlane:
            return choose2(static_cast<long>(m) * model.degree + 2);
        case SectionModel::Kind::BlowupPlane: {
            const long s = rat_to_long(Rat(m) * model.lambda);
            return choose2(static_cast<long>(m) + 2) - choose2(s + 1);
        }
    }
    throw ValidationError("unknown model kind");
}

SectionModel parse_model_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "p1" || head == "p2") {
        if (rest.empty()) throw ValidationError("model spec '" + spec + "' is missing the degree");
        int d = 0;
        try {
            d = std::stoi(rest);
        } catch (const std::exception&) {
            throw ValidationError("bad degree in model spec '" + spec + "'");
        }
        return head == "p1" ? SectionModel::proj_line(d) : SectionModel::proj_plane(d);
    }
    if (head == "blp2") {
        if (rest.empty()) throw ValidationError("model spec '" + spec + "' is missing lambda");
        std::string lam = rest;
        Point q = {make_rat(1), make_rat(0)};
        const auto at = rest.find('@');
        if (at != std::string::npos) {
            lam = rest.substr(0, at);
            const std::string qs = rest.substr(at + 1);
            const auto comma = qs.find(',');
            if (comma == std::string::npos)
                throw ValidationError("bad center in model spec '" + spec + "'");
            q = {parse_rat(qs.substr(0, comma)), parse_rat(qs.substr(comma + 1))};
        }
        return SectionModel::blowup_plane(parse_rat(lam), std::move(q));
    }
    throw ValidationError("unknown model spec '" + spec + "' (expected p1:<d>, p2:<d>, blp2:<num>/<den>)");
}

std::string model_spec_string(const SectionModel& model) {
    switch (model.kind) {
        case SectionModel::Kind::ProjLine:
            return "p1:" + std::to_string(model.degree);
        case SectionModel::Kind::ProjPlane:
            return "p2:" + std::to_string(model.degree);
        case SectionModel::Kind::BlowupPlane:
            return "blp2:" + rat_string(model.lambda) + "@" + rat_string(model.blowup_center[0]) +
                   "," + rat_string(model.blowup_center[1]);
    }
    return "?";
}

} // namespace okbody
