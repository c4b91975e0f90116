#include "ecdg/core.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace ecdg {

VertexSet make_vertex_set(std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

DirectedPath::DirectedPath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw InputError("a directed path needs at least one vertex");
    }
    std::vector<Vertex> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("a directed path must not repeat vertices");
    }
}

Digraph::Digraph(Vertex n, std::span<const Edge> edges)
    : n_(n), adjacency_(static_cast<std::size_t>(n) * n, 0), out_(static_cast<std::size_t>(n) + 1) {
    for (const Edge& e : edges) {
        if (e.from < 1 || e.to < 1 || e.from > n || e.to > n) {
            throw InputError("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                             ") leaves the vertex range 1.." + std::to_string(n));
        }
        if (e.from == e.to) {
            throw InputError("loop at vertex " + std::to_string(e.from));
        }
        auto& cell = adjacency_[index(e.from, e.to)];
        if (cell == 0) {
            cell = 1;
            out_[e.from].push_back(e.to);
            ++edge_count_;
        }
    }
    for (auto& list : out_) {
        std::sort(list.begin(), list.end());
    }
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex u = 1; u <= n_; ++u) {
        for (Vertex v : out_[u]) {
            result.push_back({u, v});
        }
    }
    return result;
}

ColouredDigraph::ColouredDigraph(Vertex n, Colour colour_count, Colour fill)
    : n_(n), colour_count_(colour_count) {
    if (colour_count < 1 || colour_count > 255) {
        throw InputError("colour count must lie in 1..255");
    }
    if (fill < 1 || fill > colour_count) {
        throw InputError("fill colour out of range");
    }
    colours_.assign(static_cast<std::size_t>(n) * n, static_cast<std::uint8_t>(fill));
    for (Vertex v = 1; v <= n; ++v) {
        colours_[static_cast<std::size_t>(v - 1) * n + (v - 1)] = 0;
    }
}

void ColouredDigraph::check_pair(Vertex u, Vertex v) const {
    if (u == v) {
        throw InputError("loop query at vertex " + std::to_string(u));
    }
    if (u < 1 || v < 1 || u > n_ || v > n_) {
        throw InputError("vertex out of range 1.." + std::to_string(n_));
    }
}

Colour ColouredDigraph::colour_of(Vertex u, Vertex v) const {
    check_pair(u, v);
    return at(u, v);
}

void ColouredDigraph::set_colour(Vertex u, Vertex v, Colour c) {
    check_pair(u, v);
    if (c < 1 || c > colour_count_) {
        throw InputError("colour " + std::to_string(c) + " out of range 1.." +
                         std::to_string(colour_count_));
    }
    colours_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] = static_cast<std::uint8_t>(c);
}

Digraph mono_subgraph(const ColouredDigraph& g, Colour c) {
    std::vector<Edge> edges;
    const Vertex n = g.vertex_count();
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (u != v && g.at(u, v) == c) {
                edges.push_back({u, v});
            }
        }
    }
    return Digraph(n, edges);
}

namespace {

// Longest path starting at each vertex, or nullopt when d has a cycle.
std::optional<std::vector<std::size_t>> dag_longest_from(const Digraph& d) {
    const Vertex n = d.vertex_count();
    std::vector<std::size_t> indegree(n + 1, 0);
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v : d.out(u)) {
            ++indegree[v];
        }
    }
    std::vector<Vertex> order;
    order.reserve(n);
    for (Vertex v = 1; v <= n; ++v) {
        if (indegree[v] == 0) {
            order.push_back(v);
        }
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (Vertex v : d.out(order[head])) {
            if (--indegree[v] == 0) {
                order.push_back(v);
            }
        }
    }
    if (order.size() != n) {
        return std::nullopt;
    }
    std::vector<std::size_t> longest(n + 1, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        for (Vertex v : d.out(*it)) {
            longest[*it] = std::max(longest[*it], longest[v] + 1);
        }
    }
    return longest;
}

bool extend_path(const Digraph& d, std::vector<Vertex>& path, std::vector<char>& on_path,
                 std::size_t remaining) {
    if (remaining == 0) {
        return true;
    }
    for (Vertex w : d.out(path.back())) {
        if (on_path[w]) {
            continue;
        }
        path.push_back(w);
        on_path[w] = 1;
        if (extend_path(d, path, on_path, remaining - 1)) {
            return true;
        }
        on_path[w] = 0;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<DirectedPath> find_path_of_length(const Digraph& d, std::size_t length,
                                                PathSearch mode) {
    const Vertex n = d.vertex_count();
    if (n == 0 || length >= n) {
        return std::nullopt;
    }
    if (length == 0) {
        return DirectedPath({1});
    }

    if (mode == PathSearch::automatic) {
        if (auto longest = dag_longest_from(d)) {
            // In a DAG every walk is a path, so a greedy descent along vertices with enough
            // remaining depth reproduces the DFS order exactly.
            const auto& lp = *longest;
            for (Vertex s = 1; s <= n; ++s) {
                if (lp[s] < length) {
                    continue;
                }
                std::vector<Vertex> path{s};
                for (std::size_t remaining = length; remaining > 0; --remaining) {
                    for (Vertex w : d.out(path.back())) {
                        if (lp[w] + 1 >= remaining) {
                            path.push_back(w);
                            break;
                        }
                    }
                }
                return DirectedPath(std::move(path));
            }
            return std::nullopt;
        }
    }

    std::vector<char> on_path(n + 1, 0);
    std::vector<Vertex> path;
    path.reserve(length + 1);
    for (Vertex s = 1; s <= n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        if (extend_path(d, path, on_path, length)) {
            return DirectedPath(std::move(path));
        }
        on_path[s] = 0;
    }
    return std::nullopt;
}

std::optional<DirectedPath> has_mono_path_of_length(const ColouredDigraph& g, Colour c,
                                                    std::size_t length) {
    if (c < 1 || c > g.colour_count()) {
        throw InputError("colour " + std::to_string(c) + " out of range");
    }
    return find_path_of_length(mono_subgraph(g, c), length);
}

DirectedPath longest_path_exact(const Digraph& d, Vertex cap) {
    const Vertex n = d.vertex_count();
    if (n == 0) {
        throw InputError("longest path of an empty digraph");
    }
    if (n > cap || n > 24) {
        throw ScaleError("oracle scale exceeded: n = " + std::to_string(n) + ", cap = " +
                         std::to_string(std::min<Vertex>(cap, 24)));
    }

    // reach[mask] has bit v set iff some path visits exactly `mask` and ends at v (0-based).
    std::vector<std::uint32_t> out_mask(n, 0);
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v : d.out(u)) {
            out_mask[u - 1] |= 1u << (v - 1);
        }
    }
    const std::uint32_t full = n == 32 ? ~0u : (1u << n);
    std::vector<std::uint32_t> reach(full, 0);
    for (Vertex v = 0; v < n; ++v) {
        reach[1u << v] = 1u << v;
    }
    std::uint32_t best_mask = 1;
    int best_count = 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::uint32_t ends = reach[mask];
        if (ends == 0) {
            continue;
        }
        const int count = std::popcount(mask);
        if (count > best_count) {
            best_count = count;
            best_mask = mask;
        }
        while (ends != 0) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t next = out_mask[v] & ~mask;
            while (next != 0) {
                const int w = std::countr_zero(next);
                next &= next - 1;
                reach[mask | (1u << w)] |= 1u << w;
            }
        }
    }

    std::vector<Vertex> reversed;
    std::uint32_t mask = best_mask;
    std::uint32_t end_bits = reach[mask];
    int v = std::countr_zero(end_bits);
    while (true) {
        reversed.push_back(static_cast<Vertex>(v + 1));
        const std::uint32_t prev = mask ^ (1u << v);
        if (prev == 0) {
            break;
        }
        std::uint32_t candidates = reach[prev];
        int u = -1;
        while (candidates != 0) {
            const int c = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (out_mask[c] & (1u << v)) {
                u = c;
                break;
            }
        }
        if (u < 0) {
            throw CertificateError("longest path reconstruction lost its predecessor");
        }
        mask = prev;
        v = u;
    }
    std::reverse(reversed.begin(), reversed.end());
    return DirectedPath(std::move(reversed));
}

DirectedPath longest_mono_path_exact(const ColouredDigraph& g, Colour c, Vertex cap) {
    if (c < 1 || c > g.colour_count()) {
        throw InputError("colour " + std::to_string(c) + " out of range");
    }
    if (g.vertex_count() > cap) {
        throw ScaleError("oracle scale exceeded: n = " + std::to_string(g.vertex_count()) +
                         ", cap = " + std::to_string(cap));
    }
    return longest_path_exact(mono_subgraph(g, c), cap);
}

Rational prefix_density(const VertexSet& s, Vertex n) {
    if (n == 0) {
        throw InputError("prefix density needs n >= 1");
    }
    const auto count = std::count_if(s.begin(), s.end(), [n](Vertex v) { return v >= 1 && v <= n; });
    return Rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(n));
}

void write_edge_list(std::ostream& out, const ColouredDigraph& g) {
    const Vertex n = g.vertex_count();
    out << n << ' ' << g.colour_count() << '\n';
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (u != v) {
                out << u << ' ' << v << ' ' << g.at(u, v) << '\n';
            }
        }
    }
}

ColouredDigraph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&line_no](const std::string& why) -> InputError {
        return InputError("edge list line " + std::to_string(line_no) + ": " + why);
    };
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                return true;
            }
        }
        return false;
    };

    if (!next_line()) {
        throw InputError("edge list is empty");
    }
    long long n = 0;
    long long colours = 0;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> n >> colours) || (header >> extra)) {
            throw fail("expected header 'n colour_count'");
        }
    }
    if (n < 1 || n > 65535) {
        throw fail("vertex count out of range");
    }
    if (colours < 1 || colours > 255) {
        throw fail("colour count out of range 1..255");
    }

    ColouredDigraph g(static_cast<Vertex>(n), static_cast<Colour>(colours), 1);
    std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::size_t pairs = 0;
    while (next_line()) {
        std::istringstream row(line);
        long long u = 0;
        long long v = 0;
        long long c = 0;
        std::string extra;
        if (!(row >> u >> v >> c) || (row >> extra)) {
            throw fail("expected 'u v c'");
        }
        if (u < 1 || v < 1 || u > n || v > n) {
            throw fail("vertex out of range");
        }
        if (u == v) {
            throw fail("loop");
        }
        if (c < 1 || c > colours) {
            throw fail("colour out of range");
        }
        auto& mark = seen[static_cast<std::size_t>(u - 1) * n + (v - 1)];
        if (mark) {
            throw fail("pair (" + std::to_string(u) + "," + std::to_string(v) + ") repeated");
        }
        mark = 1;
        ++pairs;
        g.set_colour(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Colour>(c));
    }
    if (pairs != static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1)) {
        throw InputError("edge list covers " + std::to_string(pairs) + " of " +
                         std::to_string(n * (n - 1)) + " ordered pairs");
    }
    return g;
}

}  // namespace ecdg
