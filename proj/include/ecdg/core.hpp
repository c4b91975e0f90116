#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "ecdg/errors.hpp"

namespace ecdg {

/// Vertices are the positive integers 1..n.
using Vertex = std::uint32_t;

/// Colours are 1..colour_count; colour_count is the distinguished clique colour.
using Colour = std::uint32_t;

using Rational = boost::rational<std::int64_t>;

struct Edge {
    Vertex from = 0;
    Vertex to = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates in place.
VertexSet make_vertex_set(std::vector<Vertex> members);

/// A simple directed path. Never empty; a single vertex has length 0.
class DirectedPath {
public:
    explicit DirectedPath(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    std::size_t length() const noexcept { return vertices_.size() - 1; }
    Vertex front() const noexcept { return vertices_.front(); }
    Vertex back() const noexcept { return vertices_.back(); }

    friend bool operator==(const DirectedPath&, const DirectedPath&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// A plain digraph on vertices 1..n without loops or parallel edges.
class Digraph {
public:
    Digraph() = default;
    Digraph(Vertex n, std::span<const Edge> edges);

    Vertex vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool has_edge(Vertex u, Vertex v) const noexcept {
        return u >= 1 && v >= 1 && u <= n_ && v <= n_ && adjacency_[index(u, v)] != 0;
    }

    /// Out-neighbours of v in ascending order.
    std::span<const Vertex> out(Vertex v) const { return out_[v]; }

    /// All edges, ascending by (from, to).
    std::vector<Edge> edges() const;

private:
    std::size_t index(Vertex u, Vertex v) const noexcept {
        return static_cast<std::size_t>(u - 1) * n_ + (v - 1);
    }

    Vertex n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> adjacency_;
    std::vector<std::vector<Vertex>> out_;  // indexed by vertex id, slot 0 unused
};

/// Complete symmetric digraph on 1..n with a total colouring of the ordered pairs.
class ColouredDigraph {
public:
    /// Every ordered pair starts out coloured `fill`.
    ColouredDigraph(Vertex n, Colour colour_count, Colour fill);

    Vertex vertex_count() const noexcept { return n_; }
    Colour colour_count() const noexcept { return colour_count_; }

    /// Throws InputError on loops and out-of-range vertices.
    Colour colour_of(Vertex u, Vertex v) const;
    void set_colour(Vertex u, Vertex v, Colour c);

    /// No validation; u != v, both in range.
    Colour at(Vertex u, Vertex v) const noexcept {
        return colours_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)];
    }

    friend bool operator==(const ColouredDigraph&, const ColouredDigraph&) = default;

private:
    void check_pair(Vertex u, Vertex v) const;

    Vertex n_;
    Colour colour_count_;
    std::vector<std::uint8_t> colours_;
};

/// The ordered pairs of colour `c`. Empty when `c` is unused.
Digraph mono_subgraph(const ColouredDigraph& g, Colour c);

enum class PathSearch {
    automatic,   ///< DAG dynamic programming when the digraph is acyclic, DFS otherwise
    exhaustive,  ///< always depth-limited DFS
};

/// Lexicographically least simple path with exactly `length` edges, if any.
/// Both search modes return the same witness.
std::optional<DirectedPath> find_path_of_length(const Digraph& d, std::size_t length,
                                                PathSearch mode = PathSearch::automatic);

std::optional<DirectedPath> has_mono_path_of_length(const ColouredDigraph& g, Colour c,
                                                    std::size_t length);

inline constexpr Vertex kDefaultOracleCap = 20;

/// A maximum-length simple path, found exactly by dynamic programming over vertex subsets.
/// Throws ScaleError("oracle scale exceeded") when n > cap.
DirectedPath longest_path_exact(const Digraph& d, Vertex cap = kDefaultOracleCap);

DirectedPath longest_mono_path_exact(const ColouredDigraph& g, Colour c,
                                     Vertex cap = kDefaultOracleCap);

/// |s ∩ {1..n}| / n.
Rational prefix_density(const VertexSet& s, Vertex n);

// Edge-list text format: "n colour_count", then one "u v c" line per ordered pair.
void write_edge_list(std::ostream& out, const ColouredDigraph& g);
ColouredDigraph read_edge_list(std::istream& in);

}  // namespace ecdg
