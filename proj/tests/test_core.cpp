#include <random>
#include <sstream>

#include "doctest.h"
#include "ecdg/core.hpp"
#include "ecdg/generators.hpp"
#include "oracles.hpp"

using namespace ecdg;

namespace {

ColouredDigraph cube(std::vector<int> ell, Vertex n) { return materialize(cube_colouring_rule(round_robin_cube_spec(ell)), n); }

}  // namespace

TEST_CASE("colour_of on the cube colouring and the binary halving colouring") {
    const ColouredDigraph g = cube({2, 3}, 60);
    CHECK(g.colour_of(4, 1) == 1);
    CHECK(g.colour_of(1, 7) == 3);
    const ColouredDigraph b = materialize(binary_halving_rule(), 8);
    CHECK(b.colour_of(2, 1) == 1);
    CHECK(b.colour_of(1, 2) == 2);
}

TEST_CASE("colour_of rejects loops and out-of-range vertices") {
    const ColouredDigraph g = cube({2, 3}, 6);
    CHECK_THROWS_AS(g.colour_of(3, 3), InputError);
    CHECK_THROWS_AS(g.colour_of(0, 3), InputError);
    CHECK_THROWS_AS(g.colour_of(1, 7), InputError);
    ColouredDigraph h = g;
    CHECK_THROWS_AS(h.set_colour(1, 2, 4), InputError);
    CHECK_THROWS_AS(h.set_colour(1, 2, 0), InputError);
}

TEST_CASE("directed paths are simple and nonempty") {
    CHECK_THROWS_AS(DirectedPath({}), InputError);
    CHECK_THROWS_AS(DirectedPath({1, 2, 1}), InputError);
    CHECK(DirectedPath({5}).length() == 0);
    CHECK(DirectedPath({3, 1, 2}).length() == 2);
}

TEST_CASE("monochromatic path search on the cube colouring") {
    const ColouredDigraph g = cube({2, 3}, 60);
    CHECK_FALSE(has_mono_path_of_length(g, 1, 2));
    CHECK_FALSE(has_mono_path_of_length(g, 2, 3));
    const auto red = has_mono_path_of_length(g, 1, 1);
    REQUIRE(red);
    CHECK(red->vertices() == std::vector<Vertex>{4, 1});
    const auto trivial = has_mono_path_of_length(g, 2, 0);
    REQUIRE(trivial);
    CHECK(trivial->vertices() == std::vector<Vertex>{1});
    CHECK_THROWS_AS(has_mono_path_of_length(g, 4, 1), InputError);
}

TEST_CASE("both search modes return the lexicographically least witness") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const Vertex n = 2 + static_cast<Vertex>(trial % 8);
        const ColouredDigraph g = oracle::random_colouring(n, 2 + trial % 2, rng);
        for (Colour c = 1; c <= g.colour_count(); ++c) {
            const Digraph d = mono_subgraph(g, c);
            for (std::size_t len = 0; len <= n; ++len) {
                const auto fast = find_path_of_length(d, len, PathSearch::automatic);
                const auto slow = find_path_of_length(d, len, PathSearch::exhaustive);
                REQUIRE(fast.has_value() == slow.has_value());
                if (fast) {
                    CHECK(fast->vertices() == slow->vertices());
                }
            }
        }
    }
}

TEST_CASE("the DAG fast path agrees with exhaustive search on acyclic inputs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Vertex n = 3 + static_cast<Vertex>(trial % 9);
        std::vector<Edge> edges;
        std::bernoulli_distribution coin(0.45);
        for (Vertex u = 1; u <= n; ++u) {
            for (Vertex v = u + 1; v <= n; ++v) {
                if (coin(rng)) {
                    edges.push_back(trial % 2 ? Edge{u, v} : Edge{v, u});
                }
            }
        }
        const Digraph d(n, edges);
        for (std::size_t len = 0; len < n; ++len) {
            const auto fast = find_path_of_length(d, len, PathSearch::automatic);
            const auto slow = find_path_of_length(d, len, PathSearch::exhaustive);
            REQUIRE(fast.has_value() == slow.has_value());
            if (fast) {
                CHECK(fast->vertices() == slow->vertices());
            }
        }
    }
}

TEST_CASE("path search agrees with the exact longest path") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        const Vertex n = 1 + static_cast<Vertex>(trial % 12);
        const ColouredDigraph g = oracle::random_colouring(n, 3, rng);
        for (Colour c = 1; c <= 3; ++c) {
            const std::size_t longest = longest_mono_path_exact(g, c).length();
            const auto edge = [&](Vertex u, Vertex v) { return u != v && g.at(u, v) == c; };
            CHECK(longest == oracle::longest_path(n, edge));
            CHECK(oracle::is_path_in(longest_mono_path_exact(g, c).vertices(), edge));
            for (std::size_t len = 0; len <= n; ++len) {
                const auto found = has_mono_path_of_length(g, c, len);
                CHECK(found.has_value() == (longest >= len));
                if (found) {
                    CHECK(found->length() == len);
                    CHECK(oracle::is_path_in(found->vertices(), edge));
                }
            }
        }
    }
}

TEST_CASE("exact longest path on small fixed digraphs") {
    const ColouredDigraph mono(3, 1, 1);
    CHECK(longest_mono_path_exact(mono, 1).length() == 2);
    const ColouredDigraph one(4, 2, 1);
    CHECK(longest_mono_path_exact(one, 2).length() == 0);
    CHECK(longest_mono_path_exact(ColouredDigraph(1, 1, 1), 1).length() == 0);
    CHECK_THROWS_AS(longest_mono_path_exact(ColouredDigraph(21, 1, 1), 1), ScaleError);
    CHECK(longest_mono_path_exact(ColouredDigraph(21, 1, 1), 1, 21).length() == 20);
}

TEST_CASE("longest red path of the binary halving colouring is pinned") {
    // Pinned from an independent backtracking computation; red is a transitive tournament
    // ordered by bit reversal, so the path is its unique Hamiltonian path.
    const ColouredDigraph g12 = materialize(binary_halving_rule(), 12);
    const DirectedPath p12 = longest_mono_path_exact(g12, 1);
    CHECK(p12.length() == 11);
    CHECK(p12.vertices() == std::vector<Vertex>{8, 4, 12, 2, 10, 6, 1, 9, 5, 3, 11, 7});
    const ColouredDigraph g16 = materialize(binary_halving_rule(), 16);
    const DirectedPath p16 = longest_mono_path_exact(g16, 1);
    CHECK(p16.length() == 15);
    CHECK(p16.vertices() == std::vector<Vertex>{16, 8, 4, 12, 2, 10, 6, 14, 1, 9, 5, 13, 3, 11, 7, 15});
}

TEST_CASE("prefix density is exact") {
    CHECK(prefix_density({1, 2, 3, 4}, 4) == Rational(1));
    CHECK(prefix_density({2, 4, 6, 8, 10, 12}, 10) == Rational(1, 2));
    VertexSet first;
    for (Vertex v = 1; v <= 60; v += 6) {
        first.push_back(v);
    }
    CHECK(prefix_density(first, 60) == Rational(1, 6));
    CHECK(prefix_density({}, 5) == Rational(0));
    CHECK_THROWS_AS(prefix_density({1}, 0), InputError);
}

TEST_CASE("mono_subgraph partitions the ordered pairs") {
    const ColouredDigraph g = cube({2, 3}, 6);
    const Digraph red = mono_subgraph(g, 1);
    // Row 1 to row 0, every column pair.
    CHECK(red.edge_count() == 9);
    for (const Edge& e : red.edges()) {
        CHECK(e.from >= 4);
        CHECK(e.to <= 3);
    }
    std::size_t total = 0;
    for (Colour c = 1; c <= 3; ++c) {
        total += mono_subgraph(g, c).edge_count();
    }
    CHECK(total == 30);
    CHECK(mono_subgraph(ColouredDigraph(5, 2, 1), 2).edge_count() == 0);
}

TEST_CASE("edge lists round-trip and reject malformed input") {
    std::mt19937_64 rng(3);
    const ColouredDigraph g = oracle::random_colouring(9, 4, rng);
    std::stringstream text;
    write_edge_list(text, g);
    CHECK(read_edge_list(text) == g);

    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_edge_list(in);
    };
    CHECK(parse("2 2\n1 2 1\n\n2 1 2\n").colour_of(2, 1) == 2);
    CHECK_THROWS_AS(parse("2 2\n1 2 1\n"), InputError);
    CHECK_THROWS_AS(parse("2 2\n1 2 1\n1 2 1\n"), InputError);
    CHECK_THROWS_AS(parse("2 2\n1 1 1\n2 1 1\n"), InputError);
    CHECK_THROWS_AS(parse("2 2\n1 3 1\n2 1 1\n"), InputError);
    CHECK_THROWS_AS(parse("2 2\n1 2 3\n2 1 1\n"), InputError);
    CHECK_THROWS_AS(parse("2 2\n1 2 x\n2 1 1\n"), InputError);
    CHECK_THROWS_AS(parse(""), InputError);
    CHECK(parse("1 3\n").vertex_count() == 1);
}
