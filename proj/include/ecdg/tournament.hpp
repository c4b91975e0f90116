#pragma once

#include <vector>

#include "ecdg/core.hpp"

namespace ecdg {

/// Orientation of the complete graph on 1..n induced by a linear order: every pair points
/// from the earlier vertex to the later one.
class TransitiveTournament {
public:
    explicit TransitiveTournament(std::vector<Vertex> order);

    const std::vector<Vertex>& order() const noexcept { return order_; }
    bool contains(Vertex u, Vertex v) const;
    /// Position of v in the order (0-based).
    std::size_t position(Vertex v) const { return position_.at(v); }
    std::vector<Edge> edges() const;

private:
    std::vector<Vertex> order_;
    std::vector<std::size_t> position_;  // indexed by vertex id
};

struct ComplementCheck {
    bool acyclic = true;
    /// Shortest directed cycle of the complement, first vertex repeated at the end.
    std::vector<Vertex> cycle;
};

/// Is the complement of g inside the complete symmetric digraph on 1..n acyclic?
ComplementCheck complement_acyclic(const Digraph& g);

/// Source peeling on the complement: the smallest source goes last, then the rest recursively.
/// The result is spanning, transitive and contained in g. Throws PreconditionError with a
/// complement cycle when no such tournament exists.
TransitiveTournament extract_tournament(const Digraph& g);

inline constexpr Vertex kTournamentOracleCap = 6;

/// Tries all n! orders. Throws ScaleError for n > 6.
bool brute_force_tournament_exists(const Digraph& g);

}  // namespace ecdg
