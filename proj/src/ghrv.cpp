#include "ecdg/ghrv.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace ecdg {

namespace {

// Maps vertex ids onto 0..m-1 for a fixed vertex set.
class LocalIndex {
public:
    explicit LocalIndex(const VertexSet& vertices) : vertices_(vertices) {
        const Vertex top = vertices.empty() ? 0 : vertices.back();
        local_.assign(static_cast<std::size_t>(top) + 1, -1);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            local_[vertices[i]] = static_cast<int>(i);
        }
    }

    int operator()(Vertex v) const { return v < local_.size() ? local_[v] : -1; }

    std::size_t require(Vertex v) const {
        const int i = (*this)(v);
        if (i < 0) {
            throw InputError("edge endpoint " + std::to_string(v) + " is not in the vertex set");
        }
        return static_cast<std::size_t>(i);
    }

    Vertex vertex(std::size_t i) const { return vertices_[i]; }
    std::size_t size() const { return vertices_.size(); }

private:
    const VertexSet& vertices_;
    std::vector<int> local_;
};

class BitRows {
public:
    explicit BitRows(std::size_t n) : words_((n + 63) / 64), bits_(n * words_, 0) {}

    bool test(std::size_t row, std::size_t col) const {
        return (bits_[row * words_ + col / 64] >> (col % 64)) & 1u;
    }
    void set(std::size_t row, std::size_t col) { bits_[row * words_ + col / 64] |= 1ULL << (col % 64); }
    void merge(std::size_t into, std::size_t from) {
        for (std::size_t w = 0; w < words_; ++w) {
            bits_[into * words_ + w] |= bits_[from * words_ + w];
        }
    }

private:
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// Some directed cycle (closed: first vertex repeated) in a local adjacency, or empty.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>>& out) {
    const std::size_t m = out.size();
    std::vector<int> state(m, 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::size_t> parent(m, 0);
    for (std::size_t root = 0; root < m; ++root) {
        if (state[root] != 0) {
            continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        state[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < out[v].size()) {
                const std::size_t w = out[v][next++];
                if (state[w] == 1) {
                    std::vector<std::size_t> cycle{w};
                    for (std::size_t x = v; x != w; x = parent[x]) {
                        cycle.push_back(x);
                    }
                    cycle.push_back(w);
                    std::reverse(cycle.begin(), cycle.end());
                    return cycle;
                }
                if (state[w] == 0) {
                    state[w] = 1;
                    parent[w] = v;
                    stack.emplace_back(w, 0);
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return {};
}

}  // namespace

VertexSet all_vertices(Vertex n) {
    VertexSet vertices(n);
    for (Vertex v = 1; v <= n; ++v) {
        vertices[v - 1] = v;
    }
    return vertices;
}

std::vector<Edge> lexicographic_order(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<Edge> maximal_acyclic_subgraph(const VertexSet& vertices, std::span<const Edge> ordered) {
    const LocalIndex local(vertices);
    const std::size_t m = local.size();
    // reach.test(x, y): y is reachable from x in the subgraph kept so far (x != y).
    BitRows reach(m);
    BitRows kept(m);
    std::vector<Edge> result;
    for (const Edge& e : ordered) {
        if (e.from == e.to) {
            throw InputError("loop at vertex " + std::to_string(e.from));
        }
        const std::size_t a = local.require(e.from);
        const std::size_t b = local.require(e.to);
        if (kept.test(a, b) || reach.test(b, a)) {
            continue;
        }
        kept.set(a, b);
        result.push_back(e);
        if (reach.test(a, b)) {
            continue;
        }
        for (std::size_t x = 0; x < m; ++x) {
            if (x == a || reach.test(x, a)) {
                reach.merge(x, b);
                reach.set(x, b);
            }
        }
    }
    return result;
}

Layering layer(const VertexSet& vertices, std::span<const Edge> edges_d, std::span<const Edge> acyclic) {
    const LocalIndex local(vertices);
    const std::size_t m = local.size();
    std::vector<std::vector<std::size_t>> out(m);
    std::vector<std::size_t> indegree(m, 0);
    for (const Edge& e : acyclic) {
        const std::size_t a = local.require(e.from);
        const std::size_t b = local.require(e.to);
        out[a].push_back(b);
        ++indegree[b];
    }

    std::vector<std::size_t> order;
    order.reserve(m);
    for (std::size_t v = 0; v < m; ++v) {
        if (indegree[v] == 0) {
            order.push_back(v);
        }
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (std::size_t w : out[order[head]]) {
            if (--indegree[w] == 0) {
                order.push_back(w);
            }
        }
    }
    if (order.size() != m) {
        std::vector<Vertex> witness;
        for (std::size_t i : find_cycle(out)) {
            witness.push_back(local.vertex(i));
        }
        throw PreconditionError("layering needs an acyclic subgraph", std::move(witness));
    }

    // Longest path by dynamic programming over the reverse topological order; exact and
    // polynomial only because the subgraph is acyclic.
    std::vector<int> longest(m, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (std::size_t w : out[*it]) {
            longest[*it] = std::max(longest[*it], longest[w] + 1);
        }
    }

    Layering result;
    result.acyclic_edges.assign(acyclic.begin(), acyclic.end());
    const int top = m == 0 ? -1 : *std::max_element(longest.begin(), longest.end());
    result.layers.resize(static_cast<std::size_t>(top + 1));
    result.depth.assign(vertices.empty() ? 1 : static_cast<std::size_t>(vertices.back()) + 1, -1);
    for (std::size_t i = 0; i < m; ++i) {
        const Vertex v = local.vertex(i);
        result.depth[v] = longest[i];
        result.layers[static_cast<std::size_t>(longest[i])].push_back(v);
    }

    const auto violations = verify_proper(edges_d, result);
    if (!violations.empty()) {
        const Edge& e = violations.front();
        throw CertificateError("layering is not proper: edge (" + std::to_string(e.from) + "," +
                               std::to_string(e.to) + ") stays inside layer " +
                               std::to_string(result.layer_of(e.from)) +
                               "; the acyclic subgraph is not maximal");
    }
    return result;
}

std::vector<Edge> verify_proper(std::span<const Edge> edges_d, const Layering& layering) {
    std::vector<Edge> violations;
    for (const Edge& e : edges_d) {
        const int a = layering.layer_of(e.from);
        const int b = layering.layer_of(e.to);
        if (a < 0 || b < 0 || a == b) {
            violations.push_back(e);
        }
    }
    return violations;
}

Layering ghrv_layering(const VertexSet& vertices, std::span<const Edge> edges_d) {
    const auto ordered = lexicographic_order({edges_d.begin(), edges_d.end()});
    const auto acyclic = maximal_acyclic_subgraph(vertices, ordered);
    return layer(vertices, edges_d, acyclic);
}

Layering ghrv_layering(const Digraph& d) {
    const auto edges = d.edges();
    return ghrv_layering(all_vertices(d.vertex_count()), edges);
}

}  // namespace ecdg
