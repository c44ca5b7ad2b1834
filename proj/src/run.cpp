#include "okbody/run.hpp"

#include "okbody/artifacts.hpp"
#include "okbody/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace okbody {

namespace {

struct CliOptions {
    std::string model_spec;
    std::string val_spec;
    std::string m_text = "1";
    std::string t_text;
    std::string ref_spec;
    std::string out_formats = "json";
    std::string outdir = ".";
    std::string tol_text = "1/1048576";
    std::string body_file;
    std::string p_text, x_text;
    int volume_level = 40;
    // Quadric-model intersection numbers (defaults per the library).
    std::string L2 = "3", LY2 = "2", Y2sq = "1", LY1 = "1", Y1sq = "-1", Y1Y2 = "1", cap = "2";
};

std::vector<int> parse_m_list(const std::string& text) {
    std::vector<int> ms;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            ms.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw ValidationError("bad --m value '" + piece + "'");
        }
        if (ms.back() < 1) throw ValidationError("--m must be positive, got '" + piece + "'");
    }
    if (ms.empty()) throw ValidationError("--m is empty");
    return ms;
}

int parse_single_m(const std::string& text) {
    const std::vector<int> ms = parse_m_list(text);
    if (ms.size() != 1) throw ValidationError("--m expects a single level here");
    return ms.front();
}

Point parse_point_text(const std::string& text, const char* flag) {
    Point p;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) p.push_back(parse_rat(piece));
    if (p.empty()) throw ValidationError(std::string("empty point for ") + flag);
    return p;
}

ReferenceCDF parse_ref_spec(const std::string& spec) {
    if (spec.rfind("uniform:", 0) == 0) return ReferenceCDF::curve_uniform(std::stoi(spec.substr(8)));
    if (spec == "simplex") return ReferenceCDF::simplex_linear_form(make_rat(0), make_rat(1), make_rat(1));
    if (spec.rfind("simplex:", 0) == 0) {
        const Point c = parse_point_text(spec.substr(8), "--ref");
        if (c.size() != 3) throw ValidationError("--ref simplex:<a0>,<a1>,<a2> needs 3 coefficients");
        return ReferenceCDF::simplex_linear_form(c[0], c[1], c[2]);
    }
    if (spec.rfind("blowup:", 0) == 0) return ReferenceCDF::blowup_exceptional(parse_rat(spec.substr(7)));
    throw ValidationError("unknown --ref '" + spec +
                          "' (expected uniform:<d>, simplex, simplex:<a0>,<a1>,<a2>, blowup:<l>)");
}

struct Formats {
    bool csv = false, json = false, svg = false;
};

Formats parse_formats(const std::string& text) {
    Formats f;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece == "csv") f.csv = true;
        else if (piece == "json") f.json = true;
        else if (piece == "svg") f.svg = true;
        else throw ValidationError("unknown --out format '" + piece + "'");
    }
    if (!f.csv && !f.json && !f.svg) throw ValidationError("--out selected no formats");
    return f;
}

void write_file(const std::string& outdir, const std::string& name, const std::string& contents) {
    std::filesystem::create_directories(outdir);
    const std::filesystem::path path = std::filesystem::path(outdir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ComputeError("cannot write " + path.string());
    out << contents;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

// One deterministic key order for the embedded config block.
ArtifactMeta make_meta(const std::string& command, const CliOptions& opt,
                       std::initializer_list<const char*> keys) {
    ArtifactMeta meta;
    meta.command = command;
    for (const char* key : keys) {
        const std::string k = key;
        if (k == "model") meta.config["model"] = opt.model_spec;
        else if (k == "val") meta.config["val"] = opt.val_spec;
        else if (k == "m") meta.config["m"] = opt.m_text;
        else if (k == "t") meta.config["t"] = opt.t_text;
        else if (k == "ref") meta.config["ref"] = opt.ref_spec;
        else if (k == "tol") meta.config["tol"] = opt.tol_text;
        else if (k == "M") meta.config["M"] = std::to_string(opt.volume_level);
    }
    return meta;
}

int execute(const std::string& command, const CliOptions& opt, std::ostream& out) {
    const Formats formats = parse_formats(opt.out_formats);
    if (formats.svg && command != "okounkov" && command != "transform")
        throw ValidationError("--out svg applies to okounkov and transform only");

    if (command == "vanish" || command == "dims") {
        const SectionModel model = parse_model_spec(opt.model_spec);
        const Valuation v = parse_valuation_spec(opt.val_spec);
        const int m = parse_single_m(opt.m_text);
        const ArtifactMeta meta = make_meta(command, opt, {"model", "val", "m"});
        if (command == "vanish") {
            const VanishingSequence seq = vanishing_sequence(model, m, v);
            if (formats.json) write_file(opt.outdir, "vanish.json", json_text(sequence_json(meta, seq)));
            if (formats.csv) write_file(opt.outdir, "vanish.csv", sequence_csv(meta, seq));
            out << "vanish: m=" << m << " N=" << seq.entries.size()
                << " a_min=" << seq.amin().str() << " a_max=" << seq.amax().str() << "\n";
        } else {
            const FiltrationProfile profile = filtration_dims(model, m, v);
            if (formats.json) write_file(opt.outdir, "dims.json", json_text(profile_json(meta, profile)));
            if (formats.csv) write_file(opt.outdir, "dims.csv", profile_csv(meta, profile));
            out << "dims: m=" << m << " N=" << profile.full_dim << " jumps=" << profile.jumps.size()
                << "\n";
        }
        return 0;
    }

    if (command == "asym") {
        const SectionModel model = parse_model_spec(opt.model_spec);
        const Valuation v = parse_valuation_spec(opt.val_spec);
        const std::vector<int> ms = parse_m_list(opt.m_text);
        const AsymptoticsReport report = asymptotics(model, v, ms);
        const ArtifactMeta meta = make_meta(command, opt, {"model", "val", "m"});
        if (formats.json) write_file(opt.outdir, "asym.json", json_text(asymptotics_json(meta, report)));
        out << "asym: levels=" << ms.size() << " verdict=" << growth_verdict_string(report.verdict)
            << " sup(a_max/m)=" << report.fekete_sup.str() << "\n";
        return 0;
    }

    if (command == "okounkov" || command == "transform") {
        const SectionModel model = parse_model_spec(opt.model_spec);
        const int m = parse_single_m(opt.m_text);
        if (command == "okounkov") {
            const ArtifactMeta meta = make_meta(command, opt, {"model", "m"});
            const LatticeBodyApprox body = okounkov_points(model, m);
            if (formats.json) write_file(opt.outdir, "okounkov.json", json_text(body_json(meta, body)));
            if (formats.svg) write_file(opt.outdir, "okounkov.svg", body_svg(body));
            out << "okounkov: m=" << m << " points=" << body.points.size()
                << " hull_vertices=" << body.hull.size() << "\n";
        } else {
            const Valuation v = parse_valuation_spec(opt.val_spec);
            const ArtifactMeta meta = make_meta(command, opt, {"model", "val", "m"});
            const LatticeBodyApprox body = okounkov_points(model, m);
            const ConcaveTransformTable table = concave_transform(model, m, v);
            if (formats.json)
                write_file(opt.outdir, "transform.json", json_text(transform_json(meta, body, table)));
            if (formats.svg) write_file(opt.outdir, "transform.svg", transform_svg(body, table));
            out << "transform: m=" << m << " points=" << table.values.size() << "\n";
        }
        return 0;
    }

    if (command == "equidist") {
        const SectionModel model = parse_model_spec(opt.model_spec);
        const Valuation v = parse_valuation_spec(opt.val_spec);
        const int m = parse_single_m(opt.m_text);
        if (opt.ref_spec.empty()) throw ValidationError("--ref is required for equidist");
        const ReferenceCDF ref = parse_ref_spec(opt.ref_spec);
        const StepMeasure emp = empirical_measure(vanishing_sequence(model, m, v));
        const Scalar ks = ks_distance(emp, ref);
        const ArtifactMeta meta = make_meta(command, opt, {"model", "val", "m", "ref"});
        if (formats.json) write_file(opt.outdir, "equidist.json", json_text(equidist_json(meta, m, ks)));
        if (formats.csv) write_file(opt.outdir, "equidist.csv", equidist_csv(meta, emp, ref));
        out << "equidist: m=" << m << " ks=" << ks.str() << "\n";
        return 0;
    }

    if (command == "restvol") {
        const SectionModel model = parse_model_spec(opt.model_spec);
        const Valuation v = parse_valuation_spec(opt.val_spec);
        const int m = parse_single_m(opt.m_text);
        if (opt.t_text.empty()) throw ValidationError("--t is required for restvol");
        const Rat t = parse_rat(opt.t_text);
        const Rat value = restricted_volume_empirical(model, v, m, t);
        const ArtifactMeta meta = make_meta(command, opt, {"model", "val", "m", "t"});
        Json j = meta_json(meta);
        j["m"] = m;
        j["t"] = rat_string(t);
        j["restricted_volume"] = rat_string(value);
        if (formats.json) write_file(opt.outdir, "restvol.json", json_text(j));
        out << "restvol: m=" << m << " t=" << rat_string(t) << " value=" << rat_string(value) << "\n";
        return 0;
    }

    if (command == "valvol") {
        const Valuation v = parse_valuation_spec(opt.val_spec);
        const VolumeEstimate est = valuation_volume(v, opt.volume_level);
        const ArtifactMeta meta = make_meta(command, opt, {"val", "M"});
        Json j = meta_json(meta);
        j["M"] = opt.volume_level;
        j["estimate"] = rat_string(est.estimate);
        if (est.exact) j["exact"] = scalar_json(*est.exact);
        if (formats.json) write_file(opt.outdir, "valvol.json", json_text(j));
        out << "valvol: M=" << opt.volume_level << " estimate=" << rat_string(est.estimate);
        if (est.exact) out << " exact=" << est.exact->str();
        out << "\n";
        return 0;
    }

    if (command == "extremal") {
        if (opt.body_file.empty()) throw ValidationError("--body is required for extremal");
        std::ifstream in(opt.body_file);
        if (!in) throw ValidationError("cannot read --body file '" + opt.body_file + "'");
        Json spec;
        try {
            in >> spec;
        } catch (const std::exception& e) {
            throw ValidationError("bad JSON in --body: " + std::string(e.what()));
        }
        const ConvexBody body = body_from_json(spec);
        const Point p = parse_point_text(opt.p_text, "--p");
        const Point x = parse_point_text(opt.x_text, "--x");
        const Rat tol = parse_rat(opt.tol_text);
        const ExtremalEvaluation e = extremal_function(body, p, x, tol);
        ArtifactMeta meta = make_meta(command, opt, {"tol"});
        meta.config["body"] = opt.body_file;
        meta.config["p"] = opt.p_text;
        meta.config["x"] = opt.x_text;
        Json j = meta_json(meta);
        j["value"] = rat_string(e.value);
        j["exact"] = e.exact;
        if (formats.json) write_file(opt.outdir, "extremal.json", json_text(j));
        out << "extremal: E=" << rat_string(e.value) << (e.exact ? " (exact)" : "") << "\n";
        return 0;
    }

    if (command == "theoremb") {
        IntersectionData data;
        data.L2 = parse_rat(opt.L2);
        data.LY2 = parse_rat(opt.LY2);
        data.Y2sq = parse_rat(opt.Y2sq);
        data.LY1 = parse_rat(opt.LY1);
        data.Y1sq = parse_rat(opt.Y1sq);
        data.Y1Y2 = parse_rat(opt.Y1Y2);
        data.cap = parse_rat(opt.cap);
        const CappedQuadricBody qb = make_capped_quadric_body(data);
        const Rat tol = parse_rat(opt.tol_text);

        const ConicalReport conical =
            conical_test(qb.body, qb.apex, default_directions(3, 8), make_rat(1, 8), make_rat(1, 64));
        const Rat e_apex = extremal_function(qb.body, qb.apex, qb.apex, tol).value;
        Json seq = Json::array();
        for (long k = 2; k <= 8; ++k) {
            const Point xk = {make_rat(1, k), 1 - make_rat(1, k * k), make_rat(0)};
            Json row;
            row["k"] = k;
            row["x"] = point_json(xk);
            row["E"] = rat_string(extremal_function(qb.body, qb.apex, xk, tol).value);
            seq.push_back(row);
        }

        ArtifactMeta meta = make_meta(command, opt, {"tol"});
        meta.config["intersection"] = rat_string(data.L2) + "," + rat_string(data.LY2) + "," +
                                      rat_string(data.Y2sq) + "," + rat_string(data.LY1) + "," +
                                      rat_string(data.Y1sq) + "," + rat_string(data.Y1Y2) + "," +
                                      rat_string(data.cap);
        Json j = meta_json(meta);
        j["apex"] = point_json(qb.apex);
        j["boundary_derivative"] = rat_string(qb.boundary_derivative);
        j["conical_at_apex"] = conical.verdict == ConicalVerdict::Conical;
        j["worst_gap"] = rat_string(conical.worst_gap);
        j["worst_direction"] = point_json(conical.worst_direction);
        j["E_apex"] = rat_string(e_apex);
        j["E_along_boundary"] = seq;
        if (formats.json) write_file(opt.outdir, "theoremb.json", json_text(j));
        if (formats.csv) write_file(opt.outdir, "theoremb.csv", conical_csv(meta, conical));
        out << "theoremb: conical_at_apex="
            << (conical.verdict == ConicalVerdict::Conical ? "yes" : "no")
            << " E_apex=" << rat_string(e_apex) << "\n";
        return 0;
    }

    throw ValidationError("unknown command '" + command + "'");
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact valuation filtrations, lattice bodies and equidistribution diagnostics"};
    app.set_config("--config", "", "read flags from a TOML file (identical keys)");
    app.require_subcommand(1);

    // All flags live on the root; subcommands pass unmatched flags up, so
    // "okbody vanish --model ..." and flat config files both work.
    CliOptions opt;
    app.add_option("--model", opt.model_spec, "model spec: p1:<d>, p2:<d>, blp2:<num>/<den>");
    app.add_option("--val", opt.val_spec,
                   "valuation spec: mon:<c1>,<c2>@<x>,<y>, mon-sqrt2@<x>,<y>, ordflag, ordF, "
                   "ordpoly:<poly>, arc-exp");
    app.add_option("--m", opt.m_text, "level, or comma-separated levels for asym");
    app.add_option("--t", opt.t_text, "threshold (rational)");
    app.add_option("--ref", opt.ref_spec, "reference law: uniform:<d>, simplex[:a0,a1,a2], blowup:<l>");
    app.add_option("--out", opt.out_formats, "formats: csv,json,svg (default json)");
    app.add_option("--outdir", opt.outdir, "output directory (default .)");
    app.add_option("--tol", opt.tol_text, "bisection tolerance (default 1/2^20)");
    app.add_option("--M", opt.volume_level, "evaluation level for valvol");
    app.add_option("--body", opt.body_file, "JSON body spec file for extremal");
    app.add_option("--p", opt.p_text, "base point for extremal");
    app.add_option("--x", opt.x_text, "query point for extremal");
    app.add_option("--L2", opt.L2, "intersection numbers for theoremb");
    app.add_option("--LY2", opt.LY2);
    app.add_option("--Y2sq", opt.Y2sq);
    app.add_option("--LY1", opt.LY1);
    app.add_option("--Y1sq", opt.Y1sq);
    app.add_option("--Y1Y2", opt.Y1Y2);
    app.add_option("--cap", opt.cap);

    const std::vector<std::string> commands = {"vanish", "dims",    "asym",     "okounkov",
                                               "transform", "equidist", "restvol", "valvol",
                                               "extremal", "theoremb"};
    for (const std::string& name : commands) app.add_subcommand(name)->fallthrough();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.what() << "\n";
        return 2;
    }

    try {
        return execute(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const ComputeError& e) {
        err << "computation failed: " << e.what() << "\n";
        return 3;
    }
}

} // namespace okbody
