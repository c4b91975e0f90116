#pragma once

#include <cstddef>
#include <vector>

namespace ecdg {

/// Bipartite graph with sides 0..left-1 and 0..right-1; adjacency from the left side.
struct BipartiteGraph {
    std::size_t left = 0;
    std::size_t right = 0;
    std::vector<std::vector<std::size_t>> adjacency;
};

struct Matching {
    std::size_t size = 0;
    std::vector<long> left_mate;   ///< -1 when unmatched
    std::vector<long> right_mate;  ///< -1 when unmatched
};

/// Maximum cardinality matching by augmenting paths, deterministic in adjacency order.
Matching maximum_matching(const BipartiteGraph& graph);

struct VertexCover {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;

    std::size_t size() const noexcept { return left.size() + right.size(); }
};

/// König's construction from the alternating forest of unmatched left vertices. The cover has
/// exactly `matching.size` vertices and touches every edge.
VertexCover koenig_cover_from_left(const BipartiteGraph& graph, const Matching& matching);

/// The mirror construction, grown from unmatched right vertices.
VertexCover koenig_cover_from_right(const BipartiteGraph& graph, const Matching& matching);

}  // namespace ecdg
