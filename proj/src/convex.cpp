#include "okbody/convex.hpp"

#include "okbody/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace okbody {

Rat QuadConstraint::eval(const Point& x) const {
    Rat acc = c;
    const size_t n = x.size();
    for (size_t i = 0; i < n && i < lin.size(); ++i) acc += lin[i] * x[i];
    for (size_t i = 0; i < n && i < quad.size(); ++i)
        for (size_t j = 0; j < n && j < quad[i].size(); ++j) acc += quad[i][j] * x[i] * x[j];
    return acc;
}

std::vector<Point> convex_hull_2d(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    auto cross = [](const Point& o, const Point& a, const Point& b) -> Rat {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<Point> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

namespace {

Rat dot(const std::vector<Rat>& a, const Point& x) {
    Rat acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * x[i];
    return acc;
}

std::vector<Halfspace> edges_to_halfspaces(const std::vector<Point>& ccw_hull) {
    std::vector<Halfspace> hs;
    const size_t n = ccw_hull.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = ccw_hull[i];
        const Point& b = ccw_hull[(i + 1) % n];
        const Rat dx = b[0] - a[0], dy = b[1] - a[1];
        Halfspace h;
        h.normal = {dy, -dx}; // outward for a counterclockwise polygon
        h.offset = h.normal[0] * a[0] + h.normal[1] * a[1];
        hs.push_back(std::move(h));
    }
    return hs;
}

std::vector<Halfspace> simplex_3d_halfspaces(const std::vector<Point>& v) {
    std::vector<Halfspace> hs;
    for (size_t opp = 0; opp < 4; ++opp) {
        std::vector<size_t> face;
        for (size_t i = 0; i < 4; ++i)
            if (i != opp) face.push_back(i);
        const Point& a = v[face[0]];
        const Point& b = v[face[1]];
        const Point& c = v[face[2]];
        const Rat u1 = b[0] - a[0], u2 = b[1] - a[1], u3 = b[2] - a[2];
        const Rat w1 = c[0] - a[0], w2 = c[1] - a[1], w3 = c[2] - a[2];
        Halfspace h;
        h.normal = {u2 * w3 - u3 * w2, u3 * w1 - u1 * w3, u1 * w2 - u2 * w1};
        h.offset = dot(h.normal, a);
        const Rat side = dot(h.normal, v[opp]);
        if (side == h.offset) throw ValidationError("3D vertex polytopes must be non-degenerate simplices");
        if (side > h.offset) {
            for (Rat& x : h.normal) x = -x;
            h.offset = -h.offset;
        }
        hs.push_back(std::move(h));
    }
    return hs;
}

} // namespace

ConvexBody ConvexBody::polytope_h(int dim, std::vector<Halfspace> halfspaces) {
    if (dim < 1 || dim > 3) throw ValidationError("body dimension must be 1..3");
    ConvexBody b(Kind::PolytopeH, dim);
    b.halfspaces_ = std::move(halfspaces);
    for (const Halfspace& h : b.halfspaces_)
        if (static_cast<int>(h.normal.size()) != dim)
            throw ValidationError("halfspace dimension mismatch");
    return b;
}

ConvexBody ConvexBody::polytope_v(int dim, std::vector<Point> vertices) {
    if (vertices.empty()) throw ValidationError("vertex polytope needs vertices");
    for (const Point& p : vertices)
        if (static_cast<int>(p.size()) != dim) throw ValidationError("vertex dimension mismatch");
    ConvexBody b(Kind::PolytopeV, dim);
    if (dim == 1) {
        Rat lo = vertices.front()[0], hi = lo;
        for (const Point& p : vertices) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        b.halfspaces_ = {{{make_rat(1)}, hi}, {{make_rat(-1)}, -lo}};
        b.vertices_ = {{lo}, {hi}};
    } else if (dim == 2) {
        const std::vector<Point> hull = convex_hull_2d(vertices);
        if (hull.size() < 3)
            throw ValidationError("2D vertex polytope must have a non-degenerate hull");
        b.halfspaces_ = edges_to_halfspaces(hull);
        b.vertices_ = hull;
    } else {
        std::vector<Point> vs = vertices;
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        if (vs.size() != 4)
            throw ValidationError("3D vertex polytopes are supported for simplices (4 vertices) only");
        b.halfspaces_ = simplex_3d_halfspaces(vs);
        b.vertices_ = vs;
    }
    return b;
}

ConvexBody ConvexBody::quadric_capped(int dim, std::vector<Halfspace> halfspaces, QuadConstraint q) {
    ConvexBody b = polytope_h(dim, std::move(halfspaces));
    b.kind_ = Kind::QuadricCapped;
    b.quadric_ = std::move(q);
    return b;
}

bool ConvexBody::member(const Point& x) const {
    if (static_cast<int>(x.size()) != dim_) throw ValidationError("dimension mismatch in membership");
    for (const Halfspace& h : halfspaces_)
        if (dot(h.normal, x) > h.offset) return false;
    if (quadric_ && quadric_->eval(x) < 0) return false;
    return true;
}

namespace {

Point ray_point(const Point& p, const Point& u, const Rat& s) {
    Point y(p.size());
    for (size_t i = 0; i < p.size(); ++i) y[i] = p[i] + s * u[i];
    return y;
}

int bisection_steps(const Rat& tol) {
    int k = 2;
    Rat w(1);
    while (w > tol && k < 64) {
        w /= 2;
        ++k;
    }
    return k;
}

} // namespace

ExtremalEvaluation extremal_function(const ConvexBody& body, const Point& p, const Point& x,
                                     const Rat& tol) {
    if (!body.member(p)) throw ValidationError("extremal base point lies outside the body");
    if (!body.member(x)) throw ValidationError("extremal query point lies outside the body");

    ExtremalEvaluation out;
    out.x = x;
    out.tol = tol;

    if (x == p) {
        out.value = 1;
        out.exact = true;
        return out;
    }

    if (body.is_polytope()) {
        // x - t p in (1-t) * body per halfspace: t (b - n.p) <= b - n.x.
        bool bounded = false;
        Rat best(1);
        for (const Halfspace& h : body.halfspaces()) {
            const Rat denom = h.offset - dot(h.normal, p);
            if (denom == 0) continue; // constraint active at p: no bound on t
            const Rat bound = (h.offset - dot(h.normal, x)) / denom;
            if (!bounded || bound < best) best = std::min(best, bound);
            bounded = true;
        }
        out.value = bounded ? std::max(Rat(0), std::min(Rat(1), best)) : Rat(0);
        out.exact = true;
        return out;
    }

    // Bisection on t: y(t) = (x - t p)/(1 - t) stays in the body on an
    // initial interval [0, E(x)].
    Rat lo(0), hi(1);
    const int steps = bisection_steps(tol);
    for (int k = 0; k < steps; ++k) {
        const Rat mid = (lo + hi) / 2;
        const Rat denom = 1 - mid;
        Point y(x.size());
        for (size_t i = 0; i < x.size(); ++i) y[i] = (x[i] - mid * p[i]) / denom;
        if (body.member(y))
            lo = mid;
        else
            hi = mid;
    }
    out.value = lo;
    return out;
}

namespace {

// Normalized reach of the body from p along u: (max {s <= r : p + s u in
// body}) / r, to within 2^-steps.
Rat normalized_reach(const ConvexBody& body, const Point& p, const Point& u, const Rat& r,
                     int steps) {
    if (body.member(ray_point(p, u, r))) return Rat(1);
    Rat lo(0), hi = r;
    for (int k = 0; k < steps; ++k) {
        const Rat mid = (lo + hi) / 2;
        if (body.member(ray_point(p, u, mid)))
            lo = mid;
        else
            hi = mid;
    }
    return lo / r;
}

} // namespace

ConicalReport conical_test(const ConvexBody& body, const Point& p,
                           const std::vector<Point>& directions, const Rat& r, const Rat& tol) {
    if (!body.member(p)) throw ValidationError("conical test point lies outside the body");
    if (directions.empty()) throw ValidationError("conical test needs directions");
    const int steps = bisection_steps(tol) + 4;
    ConicalReport rep;
    rep.worst_gap = 0;
    for (const Point& u : directions) {
        ConicalDirectionReport row;
        row.direction = u;
        row.reach_r = normalized_reach(body, p, u, r, steps);
        row.reach_half = normalized_reach(body, p, u, r / 2, steps);
        Rat gap = row.reach_r - row.reach_half;
        if (gap < 0) gap = -gap;
        if (gap > rep.worst_gap) {
            rep.worst_gap = gap;
            rep.worst_direction = u;
        }
        rep.diagnostics.push_back(std::move(row));
    }
    rep.verdict = rep.worst_gap > tol ? ConicalVerdict::NonConical : ConicalVerdict::Conical;
    return rep;
}

std::vector<Point> default_directions(int dim, int range) {
    if (dim < 1 || dim > 3) throw ValidationError("direction dimension must be 1..3");
    std::set<std::vector<long>> primitive;
    std::vector<long> v(static_cast<size_t>(dim), 0);
    const long R = range;
    auto emit = [&]() {
        long g = 0;
        for (long c : v) g = std::gcd(g, std::abs(c));
        if (g == 0) return;
        std::vector<long> w(v);
        for (long& c : w) c /= g;
        primitive.insert(std::move(w));
    };
    // Enumerate the integer box [-R, R]^dim.
    std::vector<long> idx(static_cast<size_t>(dim), -R);
    while (true) {
        v = idx;
        emit();
        int i = 0;
        for (; i < dim; ++i) {
            if (idx[static_cast<size_t>(i)] < R) {
                ++idx[static_cast<size_t>(i)];
                break;
            }
            idx[static_cast<size_t>(i)] = -R;
        }
        if (i == dim) break;
    }
    std::vector<Point> out;
    out.reserve(primitive.size());
    for (const auto& w : primitive) {
        Point u(w.size());
        for (size_t i = 0; i < w.size(); ++i) u[i] = make_rat(w[i]);
        out.push_back(std::move(u));
    }
    return out;
}

IntersectionData IntersectionData::default_instance() {
    IntersectionData d;
    d.L2 = make_rat(3);
    d.LY2 = make_rat(2);
    d.Y2sq = make_rat(1);
    d.LY1 = make_rat(1);
    d.Y1sq = make_rat(-1);
    d.Y1Y2 = make_rat(1);
    d.cap = make_rat(2);
    return d;
}

CappedQuadricBody make_capped_quadric_body(const IntersectionData& data, const Rat& box) {
    const Rat Zsq = data.L2 - 2 * data.LY2 + data.Y2sq;
    const Rat ZY2 = data.LY2 - data.Y2sq;
    if (!(data.Y2sq > 0))
        throw ValidationError("conditions (i)-(iii) violated: (Y2^2) = " + rat_string(data.Y2sq) +
                              " is not positive");
    if (Zsq != 0)
        throw ValidationError("conditions (i)-(iii) violated: (Z^2) = " + rat_string(Zsq) +
                              " is not zero");
    if (!(ZY2 > 0))
        throw ValidationError("conditions (i)-(iii) violated: (Z.Y2) = " + rat_string(ZY2) +
                              " is not positive");
    if (!(box > 1)) throw ValidationError("bounding box must contain the apex");

    std::vector<Halfspace> hs;
    for (int i = 0; i < 3; ++i) {
        std::vector<Rat> up(3, Rat(0)), down(3, Rat(0));
        up[static_cast<size_t>(i)] = 1;
        down[static_cast<size_t>(i)] = -1;
        hs.push_back({up, box});
        hs.push_back({down, Rat(0)});
    }
    hs.push_back({{data.Y1Y2, data.Y2sq, make_rat(1)}, data.cap});

    QuadConstraint q;
    q.c = data.L2;
    q.lin = {-2 * data.LY1, -2 * data.LY2, Rat(0)};
    q.quad = {{data.Y1sq, data.Y1Y2, Rat(0)}, {data.Y1Y2, data.Y2sq, Rat(0)}, {Rat(0), Rat(0), Rat(0)}};

    CappedQuadricBody out{ConvexBody::quadric_capped(3, std::move(hs), std::move(q)),
                          {make_rat(0), make_rat(1), make_rat(0)},
                          -2 * ZY2};
    if (!out.body.member(out.apex))
        throw ValidationError("conditions (i)-(iii) violated: the apex is not in the body");
    return out;
}

} // namespace okbody
