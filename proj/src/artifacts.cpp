#include "okbody/artifacts.hpp"

#include "okbody/errors.hpp"

#include <algorithm>
#include <sstream>

namespace okbody {

Json meta_json(const ArtifactMeta& meta) {
    Json j;
    j["format_version"] = ArtifactMeta::format_version;
    j["tool"] = "okbody";
    j["command"] = meta.command;
    Json cfg = Json::object();
    for (const auto& [k, v] : meta.config) cfg[k] = v;
    j["config"] = cfg;
    return j;
}

std::string meta_csv_header(const ArtifactMeta& meta) {
    std::ostringstream out;
    out << "# okbody " << meta.command << " format=" << ArtifactMeta::format_version << "\n";
    out << "# config:";
    for (const auto& [k, v] : meta.config) out << " " << k << "=" << v;
    out << "\n";
    return out.str();
}

Json scalar_json(const Scalar& s) {
    if (s.is_rational()) return rat_string(s.rational_part());
    Json j;
    j["rat"] = rat_string(s.rational_part());
    j["sqrt2"] = rat_string(s.sqrt2_part());
    return j;
}

Json value_json(const Value& v) {
    if (v.is_infinite()) return "inf";
    return scalar_json(v.finite());
}

Json point_json(const Point& p) {
    Json j = Json::array();
    for (const Rat& c : p) j.push_back(rat_string(c));
    return j;
}

Json sequence_json(const ArtifactMeta& meta, const VanishingSequence& seq) {
    Json j = meta_json(meta);
    j["m"] = seq.level;
    j["N"] = seq.entries.size();
    Json vals = Json::array();
    Json witnesses = Json::array();
    for (const AdaptedEntry& e : seq.entries) {
        vals.push_back(value_json(e.value));
        witnesses.push_back(e.section.str());
    }
    j["values"] = vals;
    j["witnesses"] = witnesses;
    return j;
}

std::string sequence_csv(const ArtifactMeta& meta, const VanishingSequence& seq) {
    std::ostringstream out;
    out << meta_csv_header(meta);
    out << "m,j,a_j_num,a_j_den\n";
    for (size_t i = 0; i < seq.entries.size(); ++i) {
        const Scalar& v = seq.entries[i].value.finite();
        if (!v.is_rational())
            throw ValidationError(
                "sequence has irrational values; CSV columns are rational (use --out json)");
        out << seq.level << "," << (i + 1) << "," << v.rational_part().get_num().get_str() << ","
            << v.rational_part().get_den().get_str() << "\n";
    }
    return out.str();
}

Json profile_json(const ArtifactMeta& meta, const FiltrationProfile& profile) {
    Json j = meta_json(meta);
    j["m"] = profile.level;
    j["N"] = profile.full_dim;
    Json jumps = Json::array();
    for (const auto& [t, dim] : profile.jumps) {
        Json row;
        row["t"] = value_json(t);
        row["dim"] = dim;
        jumps.push_back(row);
    }
    j["jumps"] = jumps;
    return j;
}

std::string profile_csv(const ArtifactMeta& meta, const FiltrationProfile& profile) {
    std::ostringstream out;
    out << meta_csv_header(meta);
    out << "m,t_num,t_den,dim\n";
    for (const auto& [t, dim] : profile.jumps) {
        const Scalar& s = t.finite();
        if (!s.is_rational())
            throw ValidationError(
                "profile has irrational jumps; CSV columns are rational (use --out json)");
        out << profile.level << "," << s.rational_part().get_num().get_str() << ","
            << s.rational_part().get_den().get_str() << "," << dim << "\n";
    }
    return out.str();
}

Json asymptotics_json(const ArtifactMeta& meta, const AsymptoticsReport& report) {
    Json j = meta_json(meta);
    Json per_m = Json::array();
    for (size_t i = 0; i < report.levels.size(); ++i) {
        Json row;
        row["m"] = report.levels[i];
        row["a_max"] = value_json(report.amax_values[i]);
        row["a_min"] = value_json(report.amin_values[i]);
        row["ratio_max"] = scalar_json(report.ratio_max[i]);
        row["ratio_min"] = scalar_json(report.ratio_min[i]);
        row["running_sup"] = scalar_json(report.running_sup[i]);
        row["running_inf"] = scalar_json(report.running_inf[i]);
        per_m.push_back(row);
    }
    j["per_m"] = per_m;
    j["fekete"] = {{"sup_ratio_max", scalar_json(report.fekete_sup)},
                   {"inf_ratio_min", scalar_json(report.fekete_inf)}};
    j["verdict"] = growth_verdict_string(report.verdict);
    return j;
}

namespace {

Json points_array(const LatticeBodyApprox& body) {
    Json pts = Json::array();
    for (const Exponent& e : body.points) {
        Json p = Json::array();
        p.push_back(e[0]);
        p.push_back(e[1]);
        pts.push_back(p);
    }
    return pts;
}

Json hull_array(const LatticeBodyApprox& body) {
    Json hull = Json::array();
    for (const Point& v : body.hull) hull.push_back(point_json(v));
    return hull;
}

} // namespace

Json body_json(const ArtifactMeta& meta, const LatticeBodyApprox& body) {
    Json j = meta_json(meta);
    j["m"] = body.level;
    j["points"] = points_array(body);
    j["hull"] = hull_array(body);
    return j;
}

Json transform_json(const ArtifactMeta& meta, const LatticeBodyApprox& body,
                    const ConcaveTransformTable& table) {
    Json j = body_json(meta, body);
    Json g = Json::array();
    bool rational = true;
    for (const auto& [alpha, value] : table.values)
        if (!value.is_rational()) rational = false;
    for (const auto& [alpha, value] : table.values) {
        Json row = Json::array();
        row.push_back(alpha[0]);
        row.push_back(alpha[1]);
        if (rational) {
            row.push_back(value.rational_part().get_num().get_str());
            row.push_back(value.rational_part().get_den().get_str());
        } else {
            row.push_back(scalar_json(value));
        }
        g.push_back(row);
    }
    j["G"] = g;
    return j;
}

Json equidist_json(const ArtifactMeta& meta, int m, const Scalar& ks) {
    Json j = meta_json(meta);
    j["m"] = m;
    if (ks.is_rational()) {
        j["ks_num"] = ks.rational_part().get_num().get_str();
        j["ks_den"] = ks.rational_part().get_den().get_str();
    } else {
        j["ks"] = scalar_json(ks);
    }
    return j;
}

std::string equidist_csv(const ArtifactMeta& meta, const StepMeasure& emp, const ReferenceCDF& ref) {
    std::ostringstream out;
    out << meta_csv_header(meta);
    out << "t,cdf_emp,cdf_ref,deviation\n";
    Rat cum(0);
    for (const StepMeasure::Atom& atom : emp.atoms) {
        cum += atom.mass;
        const Scalar f = ref.eval(atom.location);
        Scalar dev = Scalar(cum) - f;
        if (dev.sign() < 0) dev = -dev;
        out << atom.location.str() << "," << rat_string(cum) << "," << f.str() << "," << dev.str()
            << "\n";
    }
    return out.str();
}

std::string conical_csv(const ArtifactMeta& meta, const ConicalReport& report) {
    std::ostringstream out;
    out << meta_csv_header(meta);
    out << "direction,reach_r,reach_half\n";
    for (const ConicalDirectionReport& row : report.diagnostics) {
        out << "\"(";
        for (size_t i = 0; i < row.direction.size(); ++i) {
            if (i) out << " ";
            out << rat_string(row.direction[i]);
        }
        out << ")\"," << rat_string(row.reach_r) << "," << rat_string(row.reach_half) << "\n";
    }
    return out.str();
}

namespace {

struct SvgMapper {
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    static constexpr double size = 420.0, margin = 40.0;

    void include(double x, double y) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    double sx(double x) const {
        return margin + (x - min_x) / (max_x - min_x) * (size - 2 * margin);
    }
    double sy(double y) const {
        return size - margin - (y - min_y) / (max_y - min_y) * (size - 2 * margin);
    }
};

void svg_polygon(std::ostringstream& out, const SvgMapper& map, const std::vector<Point>& hull,
                 const char* stroke) {
    if (hull.size() < 2) return;
    out << "<polygon points=\"";
    for (const Point& v : hull)
        out << map.sx(rat_to_double(v[0])) << "," << map.sy(rat_to_double(v.size() > 1 ? v[1] : Rat(0)))
            << " ";
    out << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"/>\n";
}

} // namespace

std::string body_svg(const LatticeBodyApprox& body) {
    SvgMapper map;
    for (const Point& v : body.hull)
        map.include(rat_to_double(v[0]), v.size() > 1 ? rat_to_double(v[1]) : 0.0);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"420\" height=\"420\">\n";
    svg_polygon(out, map, body.hull, "#333");
    for (const Exponent& e : body.points) {
        const double x = map.sx(static_cast<double>(e[0]) / body.level);
        const double y = map.sy(static_cast<double>(e[1]) / body.level);
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"2.5\" fill=\"#1f6fb2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string transform_svg(const LatticeBodyApprox& body, const ConcaveTransformTable& table) {
    SvgMapper map;
    for (const Point& v : body.hull)
        map.include(rat_to_double(v[0]), v.size() > 1 ? rat_to_double(v[1]) : 0.0);
    double gmax = 0;
    for (const auto& [e, g] : table.values) gmax = std::max(gmax, g.to_double());
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"420\" height=\"420\">\n";
    svg_polygon(out, map, body.hull, "#333");
    // Nested superlevel hulls at quartile thresholds of G: the level sets of
    // the transform, rendered from the already-computed table.
    const char* shades[] = {"#9ecae1", "#6baed6", "#3182bd"};
    for (int q = 1; q <= 3; ++q) {
        const double threshold = gmax * q / 4.0;
        std::vector<Point> pts;
        for (const auto& [e, g] : table.values)
            if (g.to_double() >= threshold)
                pts.push_back({make_rat(e[0], body.level), make_rat(e[1], body.level)});
        if (pts.size() >= 3) svg_polygon(out, map, convex_hull_2d(std::move(pts)), shades[q - 1]);
    }
    for (const auto& [e, g] : table.values) {
        const double x = map.sx(static_cast<double>(e[0]) / body.level);
        const double y = map.sy(static_cast<double>(e[1]) / body.level);
        const double shade = gmax > 0 ? g.to_double() / gmax : 0.0;
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"2.5\" fill=\"rgb("
            << static_cast<int>(40 + 180 * (1 - shade)) << ",60,"
            << static_cast<int>(60 + 160 * shade) << ")\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

namespace {

Rat json_rat(const Json& j) {
    if (j.is_number_integer()) return make_rat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw ValidationError("expected a rational (integer or \"n/d\" string) in body spec");
}

Point json_point(const Json& j) {
    Point p;
    for (const auto& c : j) p.push_back(json_rat(c));
    return p;
}

std::vector<Halfspace> json_halfspaces(const Json& j) {
    std::vector<Halfspace> hs;
    for (const auto& h : j) {
        Halfspace half;
        half.normal = json_point(h.at("normal"));
        half.offset = json_rat(h.at("offset"));
        hs.push_back(std::move(half));
    }
    return hs;
}

} // namespace

ConvexBody body_from_json(const Json& spec) {
    const std::string kind = spec.at("kind").get<std::string>();
    const int dim = spec.at("dim").get<int>();
    if (kind == "polytopeH") return ConvexBody::polytope_h(dim, json_halfspaces(spec.at("halfspaces")));
    if (kind == "polytopeV") {
        std::vector<Point> vertices;
        for (const auto& v : spec.at("vertices")) vertices.push_back(json_point(v));
        return ConvexBody::polytope_v(dim, std::move(vertices));
    }
    if (kind == "quadricCapped") {
        QuadConstraint q;
        const Json& jq = spec.at("quadric");
        q.c = json_rat(jq.at("c"));
        q.lin = json_point(jq.at("lin"));
        for (const auto& row : jq.at("quad")) q.quad.push_back(json_point(row));
        return ConvexBody::quadric_capped(dim, json_halfspaces(spec.at("halfspaces")), std::move(q));
    }
    throw ValidationError("unknown body kind '" + kind + "'");
}

} // namespace okbody
