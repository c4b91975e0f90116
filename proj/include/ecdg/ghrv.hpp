#pragma once

#include <span>
#include <vector>

#include "ecdg/core.hpp"

namespace ecdg {

/// Longest-path layering of a maximal acyclic subgraph. `layers[i]` holds the vertices whose
/// longest path inside `acyclic_edges` has length exactly i; layers form a proper colouring of
/// the underlying graph of the digraph they were built from.
struct Layering {
    std::vector<Edge> acyclic_edges;
    std::vector<VertexSet> layers;
    /// Layer of each vertex, indexed by vertex id; -1 for vertices outside the layering.
    std::vector<int> depth;

    /// Highest layer index (layers.size() - 1).
    int k() const noexcept { return static_cast<int>(layers.size()) - 1; }
    int layer_of(Vertex v) const { return v < depth.size() ? depth[v] : -1; }
};

/// Sorts edges by (from, to), the default greedy order.
std::vector<Edge> lexicographic_order(std::vector<Edge> edges);

/// Greedy maximal acyclic subgraph: edges are offered in the given order and kept unless
/// their head already reaches their tail. Edges must join members of `vertices`.
std::vector<Edge> maximal_acyclic_subgraph(const VertexSet& vertices, std::span<const Edge> ordered);

/// Longest-path layering of `acyclic` over `vertices`, checked against every edge of `edges_d`.
/// Throws PreconditionError (with a cycle) if `acyclic` is cyclic and CertificateError if some
/// edge of `edges_d` stays inside a layer.
Layering layer(const VertexSet& vertices, std::span<const Edge> edges_d, std::span<const Edge> acyclic);

/// Edges of `edges_d` (either orientation) joining two vertices of the same layer.
std::vector<Edge> verify_proper(std::span<const Edge> edges_d, const Layering& layering);

/// maximal_acyclic_subgraph in lexicographic order followed by layer.
Layering ghrv_layering(const VertexSet& vertices, std::span<const Edge> edges_d);
Layering ghrv_layering(const Digraph& d);

VertexSet all_vertices(Vertex n);

}  // namespace ecdg
