#ifndef K3_POLYTOPE_HPP
#define K3_POLYTOPE_HPP

// Exact geometry of full-dimensional integral polytopes in a rank-3 lattice:
// convex hulls, polar duals, face lattices, lattice-point enumeration and
// interior counts. No floating point anywhere.

#include "k3/numeric.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace k3 {

struct LatticePoint {
    std::array<Int, 3> coords{};

    LatticePoint() = default;
    LatticePoint(Int x, Int y, Int z) : coords{std::move(x), std::move(y), std::move(z)} {}

    const Int& operator[](std::size_t i) const { return coords[i]; }
    Int& operator[](std::size_t i) { return coords[i]; }

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
        return a.coords < b.coords;
    }

    LatticePoint operator-(const LatticePoint& o) const {
        return {coords[0] - o.coords[0], coords[1] - o.coords[1], coords[2] - o.coords[2]};
    }
    LatticePoint operator+(const LatticePoint& o) const {
        return {coords[0] + o.coords[0], coords[1] + o.coords[1], coords[2] + o.coords[2]};
    }
    bool is_origin() const { return coords[0] == 0 && coords[1] == 0 && coords[2] == 0; }

    std::string str() const;
};

struct RationalPoint {
    std::array<Rat, 3> coords{};

    RationalPoint() = default;
    RationalPoint(Rat x, Rat y, Rat z) : coords{std::move(x), std::move(y), std::move(z)} {}
    explicit RationalPoint(const LatticePoint& p)
        : coords{Rat(p[0]), Rat(p[1]), Rat(p[2])} {}

    const Rat& operator[](std::size_t i) const { return coords[i]; }

    bool is_integral() const {
        return is_integer(coords[0]) && is_integer(coords[1]) && is_integer(coords[2]);
    }
    LatticePoint to_lattice() const {
        if (!is_integral()) throw ComputationError("RationalPoint not integral");
        return {num(coords[0]), num(coords[1]), num(coords[2])};
    }
    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

inline Int dot(const LatticePoint& a, const LatticePoint& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline LatticePoint cross(const LatticePoint& a, const LatticePoint& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Int content(const LatticePoint& v) {
    return gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
}

// Inward facet inequality <normal, x> >= -offset with primitive normal.
struct HalfSpace {
    LatticePoint normal;
    Int offset;

    Int eval(const LatticePoint& p) const { return dot(normal, p) + offset; }
    Rat eval(const RationalPoint& p) const {
        return Rat(normal[0]) * p[0] + Rat(normal[1]) * p[1] + Rat(normal[2]) * p[2] + Rat(offset);
    }
    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
    friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

struct FaceRef {
    int dim = 0; // 0 vertex, 1 edge, 2 facet
    std::vector<int> vertex_indices; // sorted indices into Polytope::vertices

    friend bool operator==(const FaceRef&, const FaceRef&) = default;
    friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

struct DegenerateInput : ComputationError {
    using ComputationError::ComputationError;
};
struct OriginNotInterior : ComputationError {
    using ComputationError::ComputationError;
};
struct NotAFace : ComputationError {
    using ComputationError::ComputationError;
};

class Polytope {
public:
    std::vector<LatticePoint> vertices; // lexicographically sorted
    std::vector<HalfSpace> facets;
    std::vector<FaceRef> faces; // all faces, dim 0..2, sorted

    static Polytope hull(std::vector<LatticePoint> points);

    const std::vector<LatticePoint>& lattice_points() const {
        if (!lp_cache_) lp_cache_ = enumerate_lattice_points();
        return *lp_cache_;
    }

    std::vector<FaceRef> edges() const {
        std::vector<FaceRef> out;
        for (const auto& f : faces)
            if (f.dim == 1) out.push_back(f);
        return out;
    }
    // One FaceRef per entry of `facets`, in the same order.
    std::vector<FaceRef> facet_faces() const {
        std::vector<FaceRef> out;
        for (const auto& h : facets) {
            FaceRef f;
            f.dim = 2;
            for (std::size_t vi = 0; vi < vertices.size(); ++vi)
                if (h.eval(vertices[vi]) == 0) f.vertex_indices.push_back((int)vi);
            out.push_back(std::move(f));
        }
        return out;
    }

    bool contains(const LatticePoint& p) const {
        for (const auto& h : facets)
            if (h.eval(p) < 0) return false;
        return true;
    }
    bool contains(const RationalPoint& p) const {
        for (const auto& h : facets)
            if (h.eval(p) < 0) return false;
        return true;
    }
    bool strictly_contains(const LatticePoint& p) const {
        for (const auto& h : facets)
            if (h.eval(p) <= 0) return false;
        return true;
    }

    // facets whose hyperplane contains every vertex of the face
    std::vector<int> tight_facets(const FaceRef& face) const;
    std::vector<int> tight_facets(const LatticePoint& p) const;

    int find_face(const FaceRef& face) const; // index into faces, -1 if absent
    bool has_face(const FaceRef& face) const { return find_face(face) >= 0; }

    bool same_vertex_set(const Polytope& o) const { return vertices == o.vertices; }

private:
    mutable std::optional<std::vector<LatticePoint>> lp_cache_;
    std::vector<LatticePoint> enumerate_lattice_points() const;
};

inline std::string LatticePoint::str() const {
    std::string s = "(";
    for (int i = 0; i < 3; ++i) {
        if (i) s += ",";
        s += coords[i].str();
    }
    return s + ")";
}

namespace detail {

// Supporting plane through a, b, c with all points on the inner side; nullopt
// if degenerate or not supporting.
inline std::optional<HalfSpace> supporting_plane(const LatticePoint& a, const LatticePoint& b,
                                                 const LatticePoint& c,
                                                 const std::vector<LatticePoint>& pts) {
    LatticePoint n = cross(b - a, c - a);
    Int g = content(n);
    if (g == 0) return std::nullopt;
    n = {n[0] / g, n[1] / g, n[2] / g};
    Int off = -dot(n, a);
    bool any_pos = false, any_neg = false;
    for (const auto& p : pts) {
        int s = sign(dot(n, p) + off);
        any_pos |= s > 0;
        any_neg |= s < 0;
        if (any_pos && any_neg) return std::nullopt;
    }
    if (any_neg) return HalfSpace{{-n[0], -n[1], -n[2]}, -off};
    return HalfSpace{n, off};
}

} // namespace detail

// Gift-wrapping hull: start from one supporting facet and fold across edges
// until the boundary closes up. Exact integer predicates throughout.
inline Polytope Polytope::hull(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 4) throw DegenerateInput("need at least 4 distinct points");

    // full-dimensionality: some triple with p0 spans
    const std::size_t n = points.size();
    std::optional<HalfSpace> first;
    for (std::size_t i = 1; i < n && !first; ++i)
        for (std::size_t j = i + 1; j < n && !first; ++j)
            first = detail::supporting_plane(points[0], points[i], points[j], points);
    {
        // verify not all coplanar
        bool full = false;
        for (std::size_t i = 1; i < n && !full; ++i)
            for (std::size_t j = i + 1; j < n && !full; ++j)
                for (std::size_t k = j + 1; k < n && !full; ++k)
                    if (!cross(points[i] - points[0], points[j] - points[0]).is_origin() &&
                        dot(cross(points[i] - points[0], points[j] - points[0]),
                            points[k] - points[0]) != 0)
                        full = true;
        if (!full) throw DegenerateInput("points are coplanar");
    }
    if (!first) throw ComputationError("no initial supporting facet found");

    // wrap: each facet plane, with the set of input points on it
    std::set<HalfSpace> planes{*first};
    std::vector<HalfSpace> queue{*first};
    auto points_on = [&](const HalfSpace& h) {
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < n; ++i)
            if (h.eval(points[i]) == 0) on.push_back(i);
        return on;
    };
    while (!queue.empty()) {
        HalfSpace h = queue.back();
        queue.pop_back();
        auto on = points_on(h);
        // fold over each boundary edge of this facet: for every pair on the
        // plane, try to find the adjacent supporting facet through it
        for (std::size_t ii = 0; ii < on.size(); ++ii)
            for (std::size_t jj = ii + 1; jj < on.size(); ++jj) {
                const auto& a = points[on[ii]];
                const auto& b = points[on[jj]];
                for (std::size_t k = 0; k < n; ++k) {
                    if (h.eval(points[k]) == 0) continue;
                    auto nh = detail::supporting_plane(a, b, points[k], points);
                    if (nh && !planes.count(*nh)) {
                        planes.insert(*nh);
                        queue.push_back(*nh);
                    }
                }
            }
    }

    Polytope poly;
    poly.facets.assign(planes.begin(), planes.end());

    // vertices: points lying on >= 3 facet planes whose normals span R^3
    std::vector<LatticePoint> verts;
    for (const auto& p : points) {
        std::vector<LatticePoint> tight;
        for (const auto& h : poly.facets)
            if (h.eval(p) == 0) tight.push_back(h.normal);
        bool vertex = false;
        for (std::size_t i = 0; i < tight.size() && !vertex; ++i)
            for (std::size_t j = i + 1; j < tight.size() && !vertex; ++j)
                for (std::size_t k = j + 1; k < tight.size() && !vertex; ++k)
                    if (dot(cross(tight[i], tight[j]), tight[k]) != 0) vertex = true;
        if (vertex) verts.push_back(p);
    }
    std::sort(verts.begin(), verts.end());
    poly.vertices = std::move(verts);

    // face lattice from facet incidences
    std::vector<std::vector<int>> facet_verts(poly.facets.size());
    for (std::size_t f = 0; f < poly.facets.size(); ++f)
        for (std::size_t v = 0; v < poly.vertices.size(); ++v)
            if (poly.facets[f].eval(poly.vertices[v]) == 0) facet_verts[f].push_back((int)v);

    std::set<FaceRef> faces;
    for (std::size_t v = 0; v < poly.vertices.size(); ++v)
        faces.insert(FaceRef{0, {(int)v}});
    for (const auto& fv : facet_verts) faces.insert(FaceRef{2, fv});
    // edges: two adjacent facets share exactly the edge's 2 endpoints
    for (std::size_t f = 0; f < facet_verts.size(); ++f)
        for (std::size_t g = f + 1; g < facet_verts.size(); ++g) {
            std::vector<int> shared;
            std::set_intersection(facet_verts[f].begin(), facet_verts[f].end(),
                                  facet_verts[g].begin(), facet_verts[g].end(),
                                  std::back_inserter(shared));
            if (shared.size() == 2) faces.insert(FaceRef{1, shared});
        }
    poly.faces.assign(faces.begin(), faces.end());
    return poly;
}

inline std::vector<LatticePoint> Polytope::enumerate_lattice_points() const {
    // bounding-box scan with facet filtering; fixture polytopes are tiny
    std::array<Int, 3> lo, hi;
    for (int i = 0; i < 3; ++i) {
        lo[i] = vertices.front()[i];
        hi[i] = vertices.front()[i];
        for (const auto& v : vertices) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    }
    std::vector<LatticePoint> out;
    for (Int x = lo[0]; x <= hi[0]; ++x)
        for (Int y = lo[1]; y <= hi[1]; ++y)
            for (Int z = lo[2]; z <= hi[2]; ++z) {
                LatticePoint p{x, y, z};
                if (contains(p)) out.push_back(p);
            }
    return out; // already lexicographic
}

inline std::vector<int> Polytope::tight_facets(const FaceRef& face) const {
    std::vector<int> out;
    for (std::size_t f = 0; f < facets.size(); ++f) {
        bool all = true;
        for (int vi : face.vertex_indices)
            if (facets[f].eval(vertices[vi]) != 0) { all = false; break; }
        if (all) out.push_back((int)f);
    }
    return out;
}

inline std::vector<int> Polytope::tight_facets(const LatticePoint& p) const {
    std::vector<int> out;
    for (std::size_t f = 0; f < facets.size(); ++f)
        if (facets[f].eval(p) == 0) out.push_back((int)f);
    return out;
}

inline int Polytope::find_face(const FaceRef& face) const {
    auto it = std::lower_bound(faces.begin(), faces.end(), face);
    if (it != faces.end() && *it == face) return (int)(it - faces.begin());
    return -1;
}

inline Polytope convex_hull(std::vector<LatticePoint> points) {
    return Polytope::hull(std::move(points));
}

// ---- polar dual ----

struct PolarDual {
    bool integral = false;
    std::vector<RationalPoint> dual_vertices; // one per facet of the primal, facet order
    std::optional<Polytope> polytope;         // present iff integral
};

inline PolarDual polar_dual(const Polytope& p) {
    LatticePoint origin{0, 0, 0};
    if (!p.strictly_contains(origin))
        throw OriginNotInterior("polar dual requires the origin strictly inside");
    PolarDual out;
    out.integral = true;
    for (const auto& h : p.facets) {
        RationalPoint v{Rat(h.normal[0]) / Rat(h.offset), Rat(h.normal[1]) / Rat(h.offset),
                        Rat(h.normal[2]) / Rat(h.offset)};
        out.integral &= v.is_integral();
        out.dual_vertices.push_back(std::move(v));
    }
    if (out.integral) {
        std::vector<LatticePoint> vs;
        for (const auto& v : out.dual_vertices) vs.push_back(v.to_lattice());
        out.polytope = convex_hull(std::move(vs));
    }
    return out;
}

inline Polytope polar_dual_polytope(const Polytope& p) {
    auto d = polar_dual(p);
    if (!d.integral) throw ComputationError("polar dual is not integral");
    return *std::move(d.polytope);
}

inline bool is_reflexive(const Polytope& p) {
    LatticePoint origin{0, 0, 0};
    if (!p.strictly_contains(origin)) return false;
    // unique interior lattice point
    for (const auto& q : p.lattice_points())
        if (p.strictly_contains(q) && !q.is_origin()) return false;
    // integral dual == every facet has offset 1 (normals are primitive)
    for (const auto& h : p.facets)
        if (h.offset != 1) return false;
    return true;
}

// l*(F): lattice points in the relative interior of a face
inline Int count_interior(const FaceRef& face, const Polytope& p) {
    if (!p.has_face(face)) throw NotAFace("face not in the polytope's face lattice");
    if (face.dim == 0) return 0;
    if (face.dim == 1) {
        const auto d = p.vertices[face.vertex_indices[1]] - p.vertices[face.vertex_indices[0]];
        return content(d) - 1;
    }
    // facet: points whose tight-facet set equals the face's
    auto ft = p.tight_facets(face);
    Int cnt = 0;
    for (const auto& q : p.lattice_points())
        if (p.tight_facets(q) == ft) ++cnt;
    return cnt;
}

// polar correspondence: dual of F is { y in p* : <y,x> = -1 for all x in F }
inline FaceRef dual_face(const FaceRef& face, const Polytope& p, const Polytope& p_dual) {
    if (!p.has_face(face)) throw NotAFace("face not in the polytope's face lattice");
    std::vector<int> dual_verts;
    for (std::size_t w = 0; w < p_dual.vertices.size(); ++w) {
        bool all = true;
        for (int vi : face.vertex_indices)
            if (dot(p_dual.vertices[w], p.vertices[vi]) != -1) { all = false; break; }
        if (all) dual_verts.push_back((int)w);
    }
    FaceRef df{2 - face.dim, dual_verts};
    if (!p_dual.has_face(df)) throw ComputationError("polar correspondence broke down");
    return df;
}

// ordered interior lattice points of an edge, from the first endpoint
inline std::vector<LatticePoint> edge_interior_points(const FaceRef& edge, const Polytope& p) {
    const auto& a = p.vertices[edge.vertex_indices[0]];
    const auto& b = p.vertices[edge.vertex_indices[1]];
    auto d = b - a;
    Int g = content(d);
    LatticePoint step{d[0] / g, d[1] / g, d[2] / g};
    std::vector<LatticePoint> out;
    LatticePoint cur = a;
    for (Int k = 1; k < g; ++k) {
        cur = cur + step;
        out.push_back(cur);
    }
    return out;
}

} // namespace k3

#endif
