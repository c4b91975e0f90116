#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ecdg/core.hpp"

namespace ecdg {

/// A stateless colouring of the complete symmetric digraph on all positive integers.
class ColouringRule {
public:
    using Function = std::function<Colour(Vertex, Vertex)>;

    ColouringRule(Colour colour_count, Function rule, std::string description);

    /// Throws InputError when u == v or either endpoint is 0.
    Colour operator()(Vertex u, Vertex v) const;

    Colour colour_count() const noexcept { return colour_count_; }
    const std::string& description() const noexcept { return description_; }

private:
    Colour colour_count_;
    Function rule_;
    std::string description_;
};

/// Position of a vertex (or class) in the cube prod {0..l_k - 1}; entry 0 is most significant.
using Coords = std::vector<int>;

/// A cube partition: the order vector plus the vertex -> cube position map.
class CubeSpec {
public:
    using Assignment = std::function<Coords(Vertex)>;

    CubeSpec(std::vector<int> ell, Assignment assign);

    const std::vector<int>& ell() const noexcept { return ell_; }
    std::size_t dimension() const noexcept { return ell_.size(); }
    std::size_t class_count() const noexcept { return class_count_; }

    Coords coords(Vertex v) const;

    /// Mixed-radix rank of a cube position, radices l_1..l_r, l_1 most significant.
    std::size_t class_index(const Coords& c) const;
    Coords coords_of_index(std::size_t index) const;

private:
    std::vector<int> ell_;
    std::size_t class_count_;
    Assignment assign_;
};

/// Validates an order vector (each entry >= 1) and returns the cube size prod l_k.
std::size_t cube_size(std::span<const int> ell);

/// Vertex v sits at the mixed-radix digits of (v - 1) mod prod l_k.
CubeSpec round_robin_cube_spec(std::vector<int> ell);

/// Colours: 1 = red, 2 = blue. For distinct m, n the endpoint whose bit at the lowest
/// differing position is 0 sends its edge in red and receives in blue.
ColouringRule binary_halving_rule();

ColouringRule cube_colouring_rule(const CubeSpec& spec);

/// Edge of the slide digraph: exactly one coordinate strictly drops (first type)
/// or no coordinate rises above the target's (second type).
bool slide_edge(const CubeSpec& spec, Vertex u, Vertex v);

/// Same tests on class positions.
bool is_first_type_slide(const Coords& from, const Coords& to);
bool is_second_type_slide(const Coords& from, const Coords& to);

/// Picks a colour from the admissible set {k : from_k > to_k} (ascending, 1-based) for the
/// off-slide edge (u, v). Must be deterministic.
using Chooser = std::function<Colour(std::span<const Colour> admissible, Vertex u, Vertex v)>;

Chooser min_chooser();
Chooser max_chooser();
/// Per-edge pseudorandom pick from a stateless hash of (seed, u, v).
Chooser seeded_chooser(std::uint64_t seed);

/// Cube colouring on the slide digraph and inside classes; chooser-picked colours on every
/// off-slide ordered class pair. Requires r >= 2.
ColouringRule example4_rule(const CubeSpec& spec, Chooser chooser = min_chooser());

ColouredDigraph materialize(const ColouringRule& rule, Vertex n);

/// Bit reversal of (v mod 2^k) read as a k-bit string.
std::uint64_t bit_reversal(Vertex v, int k);

/// Red edges must climb in bit-reversal order mod 2^k, blue edges must descend.
/// Returns the offending edges (ascending). Throws InputError unless g is 2-coloured.
std::vector<Edge> verify_bit_reversal_monotone(const ColouredDigraph& g, int k);

struct LexViolation {
    Edge edge;
    Colour colour = 0;
    /// 'a': clique-colour edge across classes not lexicographically increasing.
    /// 'b': colour-i edge without a strict drop in coordinate i and equal earlier coordinates.
    char clause = 'a';
};

std::vector<LexViolation> verify_lex_monotone(const ColouredDigraph& g, const CubeSpec& spec);

/// Generator spec text: "binary", "cube l1,..,lr", "example4 l1,..,lr chooser=<min|max|seed:N>".
ColouringRule parse_generator_spec(const std::string& text);

/// Parses "2,3" into {2, 3}; the empty string is the empty vector.
std::vector<int> parse_ell(const std::string& text);

}  // namespace ecdg
