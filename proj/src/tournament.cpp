#include "ecdg/tournament.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace ecdg {

namespace {

bool in_complement(const Digraph& g, Vertex u, Vertex v) { return u != v && !g.has_edge(u, v); }

std::vector<Vertex> shortest_complement_cycle(const Digraph& g) {
    const Vertex n = g.vertex_count();
    std::vector<Vertex> best;
    std::vector<int> dist(n + 1);
    std::vector<Vertex> parent(n + 1);
    for (Vertex s = 1; s <= n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<Vertex> queue{s};
        Vertex closing = 0;
        while (!queue.empty() && closing == 0) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v = 1; v <= n; ++v) {
                if (!in_complement(g, u, v)) {
                    continue;
                }
                if (v == s) {
                    closing = u;
                    break;
                }
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if (closing == 0) {
            continue;
        }
        const std::size_t length = static_cast<std::size_t>(dist[closing]) + 1;
        if (!best.empty() && length >= best.size() - 1) {
            continue;
        }
        std::vector<Vertex> cycle{s};
        for (Vertex x = closing; x != s; x = parent[x]) {
            cycle.push_back(x);
        }
        cycle.push_back(s);
        std::reverse(cycle.begin() + 1, cycle.end() - 1);
        best = std::move(cycle);
    }
    return best;
}

}  // namespace

TransitiveTournament::TransitiveTournament(std::vector<Vertex> order) : order_(std::move(order)) {
    const Vertex n = static_cast<Vertex>(order_.size());
    position_.assign(static_cast<std::size_t>(n) + 1, n);
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const Vertex v = order_[i];
        if (v < 1 || v > n || position_[v] != n) {
            throw InputError("a tournament order must be a permutation of 1..n");
        }
        position_[v] = i;
    }
}

bool TransitiveTournament::contains(Vertex u, Vertex v) const {
    if (u == v || u >= position_.size() || v >= position_.size() || u == 0 || v == 0) {
        return false;
    }
    return position_[u] < position_[v];
}

std::vector<Edge> TransitiveTournament::edges() const {
    std::vector<Edge> result;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        for (std::size_t j = i + 1; j < order_.size(); ++j) {
            result.push_back({order_[i], order_[j]});
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

ComplementCheck complement_acyclic(const Digraph& g) {
    const Vertex n = g.vertex_count();
    // Kahn's algorithm on the complement, which is never materialized.
    std::vector<std::size_t> indegree(n + 1, 0);
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (in_complement(g, u, v)) {
                ++indegree[v];
            }
        }
    }
    std::vector<Vertex> ready;
    for (Vertex v = 1; v <= n; ++v) {
        if (indegree[v] == 0) {
            ready.push_back(v);
        }
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
        const Vertex u = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex v = 1; v <= n; ++v) {
            if (in_complement(g, u, v) && --indegree[v] == 0) {
                ready.push_back(v);
            }
        }
    }
    if (removed == n) {
        return {true, {}};
    }
    return {false, shortest_complement_cycle(g)};
}

TransitiveTournament extract_tournament(const Digraph& g) {
    const Vertex n = g.vertex_count();
    std::vector<char> remaining(n + 1, 1);
    std::vector<Vertex> reversed;
    reversed.reserve(n);
    for (Vertex step = 0; step < n; ++step) {
        Vertex source = 0;
        for (Vertex v = 1; v <= n && source == 0; ++v) {
            if (!remaining[v]) {
                continue;
            }
            bool is_source = true;
            for (Vertex w = 1; w <= n; ++w) {
                if (remaining[w] && in_complement(g, w, v)) {
                    is_source = false;
                    break;
                }
            }
            if (is_source) {
                source = v;
            }
        }
        if (source == 0) {
            const ComplementCheck check = complement_acyclic(g);
            throw PreconditionError("the complement has a directed cycle; no spanning transitive "
                                    "tournament exists",
                                    check.cycle);
        }
        // A complement source receives an edge of g from every remaining vertex, so it can
        // sit after all of them.
        reversed.push_back(source);
        remaining[source] = 0;
    }
    std::reverse(reversed.begin(), reversed.end());
    return TransitiveTournament(std::move(reversed));
}

bool brute_force_tournament_exists(const Digraph& g) {
    const Vertex n = g.vertex_count();
    if (n > kTournamentOracleCap) {
        throw ScaleError("oracle scale exceeded: n = " + std::to_string(n) + ", cap = " +
                         std::to_string(kTournamentOracleCap));
    }
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{1});
    do {
        bool inside = true;
        for (std::size_t i = 0; i < order.size() && inside; ++i) {
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                if (!g.has_edge(order[i], order[j])) {
                    inside = false;
                    break;
                }
            }
        }
        if (inside) {
            return true;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

}  // namespace ecdg
