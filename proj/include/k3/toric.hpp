#ifndef K3_TORIC_HPP
#define K3_TORIC_HPP

// Divisor intersection graph and Picard Gram matrix of the generic K3
// hypersurface attached to a reflexive 3-polytope.
//
// Nodes of the graph: one divisor per vertex v of the polar dual (self
// intersection 2*l*(F) - 2, F the facet dual to v), and, for each edge of the
// dual with t interior lattice points whose dual edge has l* interior points,
// k = l* + 1 parallel chains of t components, each with self intersection -2.
// Facet-interior points of the dual contribute no divisor meeting a generic
// section. Three relations sum_v <v, e_j> * (components of v) = 0 cut the node
// span down to the Picard lattice.

#include <map>
#include <string>
#include <vector>

#include "gram.hpp"
#include "matrix.hpp"
#include "polytope.hpp"

namespace k3 {

struct RankMismatch : ComputationError {
    using ComputationError::ComputationError;
};
struct RankOutOfRange : ComputationError {
    using ComputationError::ComputationError;
};

struct DivisorNode {
    LatticePoint source;
    size_t component_index = 0; // 0 for unsplit
    Int self_int = 0;
    bool from_vertex = false;
    std::string label;
};

struct IntersectionGraph {
    std::vector<DivisorNode> nodes;
    Mat gram_full;
    std::vector<std::vector<Int>> relations; // 3 vectors over nodes
};

struct PicardBasis {
    std::vector<size_t> node_indices;
    Mat gram;
};

// Formula (1): rank L0 = sum over edges G of Delta of l*(G) * l*(G*).
inline Int rank_L0(const Polytope& delta) {
    Polytope dual = polar_dual_polytope(delta);
    Int total = 0;
    for (const FaceRef& e : delta.edges()) {
        FaceRef de = dual_face(e, delta, dual);
        total += count_interior(e, delta) * count_interior(de, dual);
    }
    return total;
}

// Formula (2) as realized by the divisor graph: number of vertex and
// edge-component divisors of the dual polytope, minus the 3 relations.
inline Int picard_rank(const Polytope& delta) {
    Polytope dual = polar_dual_polytope(delta);
    Int n = Int(dual.vertices.size());
    for (const FaceRef& e : dual.edges()) n += count_interior(e, dual);
    n += rank_L0(delta);
    Int rho = n - 3;
    if (rho < 1 || rho > 20)
        throw RankOutOfRange("picard_rank: computed rho = " + rho.str() + " outside [1,20]");
    return rho;
}

// Build the graph. The optional node_order lists the source lattice points
// (dual vertices and dual-edge interior points) in the desired order; default
// is dual vertices (lex) followed by edge points (lex).
inline IntersectionGraph build_intersection_graph(
    const Polytope& delta, const std::vector<LatticePoint>& node_order = {}) {
    if (!is_reflexive(delta)) throw InputError("build_intersection_graph: polytope is not reflexive");
    Polytope dual = polar_dual_polytope(delta);

    // self-intersections of vertex divisors
    std::map<LatticePoint, Int> vert_self;
    for (size_t vi = 0; vi < dual.vertices.size(); ++vi) {
        FaceRef f = dual_face(FaceRef{0, {(int)vi}}, dual, delta);
        vert_self[dual.vertices[vi]] = 2 * count_interior(f, delta) - 2;
    }

    // edge data: interior points (ordered) and the chain multiplicity k
    struct EdgeInfo {
        FaceRef edge;
        std::vector<LatticePoint> pts;
        Int k;
    };
    std::vector<EdgeInfo> edges;
    std::map<LatticePoint, std::pair<size_t, size_t>> edge_source; // point -> (edge id, position)
    for (const FaceRef& e : dual.edges()) {
        EdgeInfo info;
        info.edge = e;
        info.pts = edge_interior_points(e, dual);
        FaceRef de = dual_face(e, dual, delta);
        info.k = count_interior(de, delta) + 1;
        for (size_t pos = 0; pos < info.pts.size(); ++pos)
            edge_source[info.pts[pos]] = {edges.size(), pos};
        edges.push_back(std::move(info));
    }

    std::vector<LatticePoint> order = node_order;
    if (order.empty()) {
        order = dual.vertices;
        for (const auto& [p, src] : edge_source) order.push_back(p);
        std::sort(order.begin() + dual.vertices.size(), order.end());
    }

    IntersectionGraph g;
    std::map<std::pair<LatticePoint, size_t>, size_t> index; // (source, component) -> node idx
    size_t vertex_count = 0, source_pos = 0;
    for (const LatticePoint& p : order) {
        ++source_pos;
        if (vert_self.count(p)) {
            DivisorNode nd{p, 0, vert_self[p], true, "D" + std::to_string(source_pos)};
            index[{p, 0}] = g.nodes.size();
            g.nodes.push_back(nd);
            ++vertex_count;
        } else if (edge_source.count(p)) {
            size_t k = edges[edge_source[p].first].k.convert_to<size_t>();
            for (size_t c = 0; c < k; ++c) {
                std::string label = "D" + std::to_string(source_pos) + std::string(c, '\'');
                DivisorNode nd{p, c, Int(-2), false, label};
                index[{p, c}] = g.nodes.size();
                g.nodes.push_back(nd);
            }
        } else {
            throw InputError("build_intersection_graph: node-order point " + p.str() +
                             " is not a dual vertex or dual-edge interior point");
        }
    }
    if (vertex_count != dual.vertices.size() || index.size() < dual.vertices.size() + edge_source.size())
        throw InputError("build_intersection_graph: node order does not cover all sources");

    size_t n = g.nodes.size();
    g.gram_full.assign(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) g.gram_full[i][i] = g.nodes[i].self_int;

    for (const EdgeInfo& info : edges) {
        const LatticePoint& va = dual.vertices[info.edge.vertex_indices[0]];
        const LatticePoint& vb = dual.vertices[info.edge.vertex_indices[1]];
        size_t ia = index.at({va, 0}), ib = index.at({vb, 0});
        if (info.pts.empty()) {
            // endpoints meet with multiplicity l*(dual edge) + 1
            g.gram_full[ia][ib] = g.gram_full[ib][ia] = info.k;
        } else {
            for (size_t c = 0; c < info.k.convert_to<size_t>(); ++c) {
                std::vector<size_t> chain{ia};
                for (const LatticePoint& p : info.pts) chain.push_back(index.at({p, c}));
                chain.push_back(ib);
                for (size_t u = 0; u + 1 < chain.size(); ++u)
                    g.gram_full[chain[u]][chain[u + 1]] = g.gram_full[chain[u + 1]][chain[u]] = 1;
            }
        }
    }

    // relations: coefficient of every component of source v is <v, e_j> = v_j
    g.relations.assign(3, std::vector<Int>(n));
    for (size_t j = 0; j < 3; ++j)
        for (size_t i = 0; i < n; ++i) g.relations[j][i] = g.nodes[i].source[j];
    return g;
}

// Basis selection: drop the first three nodes when their 3x3 relation block is
// unimodular (matching the printed bases {D4, D5, ...}); otherwise drop the
// last three; otherwise the first unimodular triple found.
inline PicardBasis picard_gram(const IntersectionGraph& g, const Polytope& delta) {
    size_t n = g.nodes.size();
    auto block_det = [&](size_t a, size_t b, size_t c) {
        Mat m(3, std::vector<Int>(3));
        size_t idx[3] = {a, b, c};
        for (size_t r = 0; r < 3; ++r)
            for (size_t s = 0; s < 3; ++s) m[r][s] = g.relations[r][idx[s]];
        return determinant(m);
    };
    std::vector<size_t> drop;
    if (n >= 3 && abs(block_det(0, 1, 2)) == 1) {
        drop = {0, 1, 2};
    } else if (n >= 3 && abs(block_det(n - 3, n - 2, n - 1)) == 1) {
        drop = {n - 3, n - 2, n - 1};
    } else {
        for (size_t a = 0; a < n && drop.empty(); ++a)
            for (size_t b = a + 1; b < n && drop.empty(); ++b)
                for (size_t c = b + 1; c < n && drop.empty(); ++c)
                    if (abs(block_det(a, b, c)) == 1) drop = {a, b, c};
        if (drop.empty()) throw RankMismatch("picard_gram: relations do not have full rank 3");
    }
    PicardBasis basis;
    for (size_t i = 0; i < n; ++i)
        if (i != drop[0] && i != drop[1] && i != drop[2]) basis.node_indices.push_back(i);
    basis.gram.assign(basis.node_indices.size(), std::vector<Int>(basis.node_indices.size()));
    for (size_t i = 0; i < basis.node_indices.size(); ++i)
        for (size_t j = 0; j < basis.node_indices.size(); ++j)
            basis.gram[i][j] = g.gram_full[basis.node_indices[i]][basis.node_indices[j]];
    Int rho = picard_rank(delta);
    if (Int(basis.node_indices.size()) != rho)
        throw RankMismatch("picard_gram: basis size " + std::to_string(basis.node_indices.size()) +
                           " != rho = " + rho.str());
    return basis;
}

} // namespace k3

#endif
