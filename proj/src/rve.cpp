#include "sgehom/rve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "sgehom/errors.hpp"

namespace sgehom {

namespace {

using Vec3 = std::array<double, 3>;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string("degenerate geometry: ") + what + " must be positive");
}

double circumradius(const RegularPolygon& p) { return p.side / (2.0 * std::sin(std::numbers::pi / p.n)); }

ConvexPolygon polygon_of(const RegularPolygon& p) {
    if (p.n < 3) throw DomainError("degenerate geometry: regular polygon needs n >= 3");
    require_positive(p.side, "side");
    const double r = circumradius(p);
    ConvexPolygon out;
    for (int k = 0; k < p.n; ++k) {
        const double t = 2.0 * std::numbers::pi * k / p.n;
        out.vertices.push_back({r * std::cos(t), r * std::sin(t)});
    }
    return out;
}

struct PolygonMoments {
    double area;
    double cx, cy;
    double j_centroid;
};

PolygonMoments polygon_moments(const ConvexPolygon& p) {
    const auto& v = p.vertices;
    const std::size_t n = v.size();
    if (n < 3) throw DomainError("degenerate geometry: polygon needs at least 3 vertices");
    const double ox = v[0][0], oy = v[0][1];
    double a2 = 0, sx = 0, sy = 0, ixx = 0, iyy = 0, turning = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& p0 = v[k];
        const auto& p1 = v[(k + 1) % n];
        const auto& p2 = v[(k + 2) % n];
        const double e1x = p1[0] - p0[0], e1y = p1[1] - p0[1];
        const double e2x = p2[0] - p1[0], e2y = p2[1] - p1[1];
        const double turn = e1x * e2y - e1y * e2x;
        if (!(turn > 0.0)) throw DomainError("degenerate geometry: polygon must be strictly convex and counterclockwise");
        turning += std::atan2(turn, e1x * e2x + e1y * e2y);

        const double x0 = p0[0] - ox, y0 = p0[1] - oy, x1 = p1[0] - ox, y1 = p1[1] - oy;
        const double c = x0 * y1 - x1 * y0;
        a2 += c;
        sx += (x0 + x1) * c;
        sy += (y0 + y1) * c;
        ixx += (y0 * y0 + y0 * y1 + y1 * y1) * c;
        iyy += (x0 * x0 + x0 * x1 + x1 * x1) * c;
    }
    if (std::fabs(turning - 2.0 * std::numbers::pi) > 1e-9)
        throw DomainError("degenerate geometry: polygon is self-intersecting");
    const double area = a2 / 2.0;
    const double cx = sx / (3.0 * a2), cy = sy / (3.0 * a2);
    const double j_origin = (ixx + iyy) / 12.0;
    return {area, cx + ox, cy + oy, j_origin - area * (cx * cx + cy * cy)};
}

struct PolyhedronMoments {
    double volume;
    Vec3 centroid;
    double i0_centroid;
};

// Convex polyhedron given by its vertices and outward face normals; faces
// are fan-triangulated about their centre and coned to the vertex centroid,
// which lies inside.
PolyhedronMoments polyhedron_moments(const std::vector<Vec3>& verts, const std::vector<Vec3>& normals) {
    Vec3 inner{0, 0, 0};
    for (const auto& p : verts)
        for (int k = 0; k < 3; ++k) inner[k] += p[k] / static_cast<double>(verts.size());

    double vol = 0, i0 = 0;
    Vec3 first{0, 0, 0};
    for (const auto& nrm : normals) {
        double top = -1e300;
        for (const auto& p : verts) top = std::max(top, dot(p, nrm));
        std::vector<Vec3> face;
        for (const auto& p : verts)
            if (std::fabs(dot(p, nrm) - top) <= 1e-12 * (1.0 + std::fabs(top))) face.push_back(sub(p, inner));
        Vec3 fc{0, 0, 0};
        for (const auto& p : face)
            for (int k = 0; k < 3; ++k) fc[k] += p[k] / static_cast<double>(face.size());
        Vec3 u = sub(face[0], fc);
        const Vec3 w = cross(nrm, u);
        std::sort(face.begin(), face.end(), [&](const Vec3& a, const Vec3& b) {
            const Vec3 da = sub(a, fc), db = sub(b, fc);
            return std::atan2(dot(da, w), dot(da, u)) < std::atan2(dot(db, w), dot(db, u));
        });
        for (std::size_t k = 0; k < face.size(); ++k) {
            const Vec3& a = fc;
            const Vec3& b = face[k];
            const Vec3& c = face[(k + 1) % face.size()];
            const double v = std::fabs(dot(a, cross(b, c))) / 6.0;
            vol += v;
            for (int q = 0; q < 3; ++q) first[q] += v * (a[q] + b[q] + c[q]) / 4.0;
            i0 += v / 10.0 * (dot(a, a) + dot(b, b) + dot(c, c) + dot(a, b) + dot(a, c) + dot(b, c));
        }
    }
    const Vec3 c{first[0] / vol, first[1] / vol, first[2] / vol};
    return {vol, {c[0] + inner[0], c[1] + inner[1], c[2] + inner[2]}, i0 - vol * dot(c, c)};
}

std::vector<Vec3> truncated_octahedron_vertices(double edge) {
    const double s = edge / std::numbers::sqrt2;
    std::vector<Vec3> out;
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms)
        for (double s1 : {-1.0, 1.0})
            for (double s2 : {-1.0, 1.0}) {
                Vec3 v{};
                v[p[0]] = 0.0;
                v[p[1]] = s1 * s;
                v[p[2]] = s2 * 2.0 * s;
                out.push_back(v);
            }
    return out;
}

std::vector<Vec3> truncated_octahedron_normals() {
    std::vector<Vec3> out;
    for (int k = 0; k < 3; ++k)
        for (double sg : {-1.0, 1.0}) {
            Vec3 n{0, 0, 0};
            n[k] = sg;
            out.push_back(n);
        }
    const double r = 1.0 / std::sqrt(3.0);
    for (double a : {-1.0, 1.0})
        for (double b : {-1.0, 1.0})
            for (double c : {-1.0, 1.0}) out.push_back({a * r, b * r, c * r});
    return out;
}

PolyhedronMoments truncated_octahedron_moments(const TruncatedOctahedron& t) {
    require_positive(t.edge, "edge");
    return polyhedron_moments(truncated_octahedron_vertices(t.edge), truncated_octahedron_normals());
}

bool inside_polygon(const ConvexPolygon& p, double x, double y) {
    const auto& v = p.vertices;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto& a = v[k];
        const auto& b = v[(k + 1) % v.size()];
        if ((b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) < 0.0) return false;
    }
    return true;
}

}  // namespace

int shape_dimension(const RveShape& s) {
    return std::visit(overloaded{[](const Circle&) { return 2; }, [](const RegularPolygon&) { return 2; },
                                 [](const ConvexPolygon&) { return 2; }, [](const auto&) { return 3; }},
                      s);
}

double measure(const RveShape& s) {
    return std::visit(
        overloaded{
            [](const Circle& c) {
                require_positive(c.radius, "radius");
                return std::numbers::pi * c.radius * c.radius;
            },
            [](const RegularPolygon& p) { return polygon_moments(polygon_of(p)).area; },
            [](const ConvexPolygon& p) { return polygon_moments(p).area; },
            [](const Sphere& b) {
                require_positive(b.radius, "radius");
                return 4.0 / 3.0 * std::numbers::pi * b.radius * b.radius * b.radius;
            },
            [](const Cube& c) {
                require_positive(c.side, "side");
                return c.side * c.side * c.side;
            },
            [](const TruncatedOctahedron& t) { return truncated_octahedron_moments(t).volume; },
        },
        s);
}

double specific_second_moment(const RveShape& s) {
    return std::visit(
        overloaded{
            [](const Circle& c) {
                require_positive(c.radius, "radius");
                return c.radius * c.radius / 2.0;
            },
            [](const RegularPolygon& p) {
                if (p.n < 3) throw DomainError("degenerate geometry: regular polygon needs n >= 3");
                require_positive(p.side, "side");
                const double r = circumradius(p);
                return r * r / 6.0 * (2.0 + std::cos(2.0 * std::numbers::pi / p.n));
            },
            [](const ConvexPolygon& p) {
                const auto m = polygon_moments(p);
                return m.j_centroid / m.area;
            },
            [](const Sphere& b) {
                require_positive(b.radius, "radius");
                return 0.6 * b.radius * b.radius;
            },
            [](const Cube& c) {
                require_positive(c.side, "side");
                return c.side * c.side / 4.0;
            },
            [](const TruncatedOctahedron& t) {
                const auto m = truncated_octahedron_moments(t);
                return m.i0_centroid / m.volume;
            },
        },
        s);
}

std::array<double, 3> centroid(const RveShape& s) {
    if (const auto* p = std::get_if<ConvexPolygon>(&s)) {
        const auto m = polygon_moments(*p);
        return {m.cx, m.cy, 0.0};
    }
    measure(s);
    return {0.0, 0.0, 0.0};
}

double radius_of_inertia(const RveShape& s, RhoConvention conv) {
    const double m = specific_second_moment(s);
    if (conv == RhoConvention::Raw) return std::sqrt(m);
    return std::sqrt((shape_dimension(s) == 2 ? kRho2Factor2D : kRho2Factor3D) * m);
}

RveShape scaled(const RveShape& s, double k) {
    require_positive(k, "scale factor");
    return std::visit(overloaded{
                          [k](const Circle& c) -> RveShape { return Circle{c.radius * k}; },
                          [k](const RegularPolygon& p) -> RveShape { return RegularPolygon{p.n, p.side * k}; },
                          [k](const ConvexPolygon& p) -> RveShape {
                              ConvexPolygon out = p;
                              for (auto& v : out.vertices) v = {v[0] * k, v[1] * k};
                              return out;
                          },
                          [k](const Sphere& b) -> RveShape { return Sphere{b.radius * k}; },
                          [k](const Cube& c) -> RveShape { return Cube{c.side * k}; },
                          [k](const TruncatedOctahedron& t) -> RveShape { return TruncatedOctahedron{t.edge * k}; },
                      },
                      s);
}

ConvexPolygon translated(const ConvexPolygon& p, double dx, double dy) {
    ConvexPolygon out = p;
    for (auto& v : out.vertices) v = {v[0] + dx, v[1] + dy};
    return out;
}

McEstimate mc_second_moment(const RveShape& s, std::size_t samples, std::uint64_t seed) {
    if (samples < 10000) throw DomainError("Monte Carlo estimate needs at least 10^4 samples");
    measure(s);
    const int dim = shape_dimension(s);

    std::optional<ConvexPolygon> poly;
    if (const auto* p = std::get_if<RegularPolygon>(&s)) poly = polygon_of(*p);
    if (const auto* p = std::get_if<ConvexPolygon>(&s)) poly = *p;

    Vec3 lo{0, 0, 0}, hi{0, 0, 0};
    double to_s = 0.0;
    if (poly) {
        lo = {1e300, 1e300, 0};
        hi = {-1e300, -1e300, 0};
        for (const auto& v : poly->vertices)
            for (int k = 0; k < 2; ++k) {
                lo[k] = std::min(lo[k], v[k]);
                hi[k] = std::max(hi[k], v[k]);
            }
    } else {
        const double half = std::visit(overloaded{[](const Circle& c) { return c.radius; },
                                                  [](const Sphere& b) { return b.radius; },
                                                  [](const Cube& c) { return c.side / 2.0; },
                                                  [&](const TruncatedOctahedron& t) {
                                                      to_s = t.edge / std::numbers::sqrt2;
                                                      return 2.0 * to_s;
                                                  },
                                                  [](const auto&) { return 0.0; }},
                                       s);
        for (int k = 0; k < dim; ++k) {
            lo[k] = -half;
            hi[k] = half;
        }
    }

    auto inside = [&](const Vec3& x) {
        if (poly) return inside_polygon(*poly, x[0], x[1]);
        return std::visit(overloaded{[&](const Circle& c) { return x[0] * x[0] + x[1] * x[1] <= c.radius * c.radius; },
                                     [&](const Sphere& b) { return dot(x, x) <= b.radius * b.radius; },
                                     [&](const Cube&) { return true; },
                                     [&](const TruncatedOctahedron&) {
                                         return std::fabs(x[0]) + std::fabs(x[1]) + std::fabs(x[2]) <= 3.0 * to_s;
                                     },
                                     [](const auto&) { return false; }},
                          s);
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Vec3> pts;
    pts.reserve(samples);
    std::size_t proposals = 0;
    Vec3 mean{0, 0, 0};
    while (pts.size() < samples) {
        Vec3 x{0, 0, 0};
        for (int k = 0; k < dim; ++k) x[k] = lo[k] + (hi[k] - lo[k]) * unit(rng);
        ++proposals;
        if (!inside(x)) continue;
        pts.push_back(x);
        for (int k = 0; k < 3; ++k) mean[k] += x[k];
    }
    const double n = static_cast<double>(samples);
    for (double& v : mean) v /= n;
    double sum = 0.0, sum2 = 0.0;
    for (const auto& x : pts) {
        const Vec3 r = sub(x, mean);
        const double q = dot(r, r);
        sum += q;
        sum2 += q * q;
    }
    const double est = sum / n;
    const double var = std::max(0.0, sum2 / n - est * est);
    return {est, std::sqrt(var * n / (n - 1.0) / n), proposals};
}

double rve_ratio(const RveShape& m, const RveShape& n, RhoConvention conv) {
    const int dm = shape_dimension(m);
    if (dm != shape_dimension(n)) throw DimensionError("rve_ratio needs two shapes of the same dimension");
    const double k2 = std::pow(measure(m) / measure(n), 2.0 / dm);
    const double rm = radius_of_inertia(m, conv), rn = radius_of_inertia(n, conv);
    return (rm * rm) / (rn * rn * k2);
}

}  // namespace sgehom
