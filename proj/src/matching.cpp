#include "ecdg/matching.hpp"

#include <algorithm>
#include <deque>

namespace ecdg {

namespace {

bool augment(const BipartiteGraph& graph, std::size_t u, std::vector<char>& visited, Matching& m) {
    for (std::size_t v : graph.adjacency[u]) {
        if (visited[v]) {
            continue;
        }
        visited[v] = 1;
        if (m.right_mate[v] < 0 || augment(graph, static_cast<std::size_t>(m.right_mate[v]), visited, m)) {
            m.left_mate[u] = static_cast<long>(v);
            m.right_mate[v] = static_cast<long>(u);
            return true;
        }
    }
    return false;
}

std::vector<std::vector<std::size_t>> right_adjacency(const BipartiteGraph& graph) {
    std::vector<std::vector<std::size_t>> adjacency(graph.right);
    for (std::size_t u = 0; u < graph.left; ++u) {
        for (std::size_t v : graph.adjacency[u]) {
            adjacency[v].push_back(u);
        }
    }
    return adjacency;
}

// Alternating reachability from the unmatched vertices of one side. `near` is the adjacency
// of the starting side, `near_mate`/`far_mate` the mate arrays of the two sides.
void alternating_reach(const std::vector<std::vector<std::size_t>>& near, const std::vector<long>& near_mate,
                       const std::vector<long>& far_mate, std::vector<char>& near_seen,
                       std::vector<char>& far_seen) {
    std::deque<std::size_t> queue;
    for (std::size_t u = 0; u < near.size(); ++u) {
        if (near_mate[u] < 0) {
            near_seen[u] = 1;
            queue.push_back(u);
        }
    }
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : near[u]) {
            if (far_seen[v]) {
                continue;
            }
            far_seen[v] = 1;
            const long back = far_mate[v];
            if (back >= 0 && !near_seen[static_cast<std::size_t>(back)]) {
                near_seen[static_cast<std::size_t>(back)] = 1;
                queue.push_back(static_cast<std::size_t>(back));
            }
        }
    }
}

}  // namespace

Matching maximum_matching(const BipartiteGraph& graph) {
    Matching m;
    m.left_mate.assign(graph.left, -1);
    m.right_mate.assign(graph.right, -1);
    std::vector<char> visited(graph.right);
    for (std::size_t u = 0; u < graph.left; ++u) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(graph, u, visited, m)) {
            ++m.size;
        }
    }
    return m;
}

VertexCover koenig_cover_from_left(const BipartiteGraph& graph, const Matching& matching) {
    std::vector<char> left_seen(graph.left, 0);
    std::vector<char> right_seen(graph.right, 0);
    alternating_reach(graph.adjacency, matching.left_mate, matching.right_mate, left_seen, right_seen);
    VertexCover cover;
    for (std::size_t u = 0; u < graph.left; ++u) {
        if (!left_seen[u]) {
            cover.left.push_back(u);
        }
    }
    for (std::size_t v = 0; v < graph.right; ++v) {
        if (right_seen[v]) {
            cover.right.push_back(v);
        }
    }
    return cover;
}

VertexCover koenig_cover_from_right(const BipartiteGraph& graph, const Matching& matching) {
    const auto adjacency = right_adjacency(graph);
    std::vector<char> right_seen(graph.right, 0);
    std::vector<char> left_seen(graph.left, 0);
    alternating_reach(adjacency, matching.right_mate, matching.left_mate, right_seen, left_seen);
    VertexCover cover;
    for (std::size_t u = 0; u < graph.left; ++u) {
        if (left_seen[u]) {
            cover.left.push_back(u);
        }
    }
    for (std::size_t v = 0; v < graph.right; ++v) {
        if (!right_seen[v]) {
            cover.right.push_back(v);
        }
    }
    return cover;
}

}  // namespace ecdg
