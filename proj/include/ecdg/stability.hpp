#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecdg/core.hpp"
#include "ecdg/generators.hpp"
#include "ecdg/partition.hpp"

namespace ecdg {

/// Decision for one ordered pair (from, to) of partition classes.
struct PairDecision {
    std::size_t from = 0;
    std::size_t to = 0;
    /// Maximum matching among clique-colour [from, to]-edges on the vertices still present
    /// when the pair was last examined.
    std::size_t matching = 0;
    /// Matching at most the threshold: after deleting `cover`, every [from, to]-edge has a
    /// colour in 1..r.
    bool colour_r_only = false;
    /// Minimum vertex cover that was deleted; its size equals `matching`.
    VertexSet cover;
};

/// Auxiliary digraph on class indices: (a, b) is an edge iff pair (a, b) is colour-[r]-only.
struct ClassGraph {
    std::size_t class_count = 0;
    std::vector<PairDecision> pairs;  ///< every ordered pair of distinct classes, ascending
    VertexSet deleted;
    /// The auxiliary digraph with class index i as vertex i + 1.
    Digraph graph;

    const PairDecision& pair(std::size_t from, std::size_t to) const;
};

/// Examines ordered class pairs repeatedly until no further pair becomes colour-[r]-only,
/// deleting a König cover each time a pair's clique-colour matching drops to `threshold` or
/// below. Between the two König covers the one touching more clique-colour edges of
/// colour-[r]-only candidates is preferred, so repeat offenders are deleted first.
ClassGraph class_graph(const ColouredDigraph& g, const CliquePartition& classes, std::size_t threshold);

struct SlideViolation {
    Edge edge;
    Colour expected = 0;
    Colour actual = 0;
};

struct RecoveryCheck {
    int number = 0;
    bool checked = false;
    bool passed = false;
    std::size_t failures = 0;
    std::vector<Edge> witnesses;  ///< first few offending pairs
    std::string detail;
};

struct StabilityReport {
    std::vector<int> ell;
    Colour clique_colour = 1;
    std::size_t threshold = 0;

    CliquePartition partition;
    ClassGraph classes;

    /// False when the complement of the auxiliary digraph has a cycle; `density_cycle` then
    /// holds its class positions (first repeated at the end) and nothing below is computed.
    bool reconstructed = false;
    std::vector<Coords> density_cycle;

    /// Class indices in the order of the spanning transitive tournament.
    std::vector<std::size_t> tournament_order;
    /// Recovered cube position by vertex id; nullopt for deleted vertices and slot 0.
    std::vector<std::optional<Coords>> recovered;
    VertexSet deleted;
    std::vector<SlideViolation> slide_violations;
    std::array<RecoveryCheck, 5> checks;
    /// (recovered position, partition position) for each nonempty recovered class.
    std::vector<std::pair<Coords, Coords>> relabelling;

    bool checks_pass() const;
    /// Reconstructed, zero slide violations, all recovery checks hold.
    bool clean() const;
};

/// Partition, class digraph, transitive tournament, longest-path recovery inside its lift,
/// then the per-edge recovery checks. Throws HypothesisError if the path hypothesis fails.
StabilityReport reconstruct(const ColouredDigraph& g, std::span<const int> ell, std::size_t threshold = 0);

/// Recovered positions as a cube partition over the surviving vertices.
CubeSpec recovered_spec(const StabilityReport& report);

/// Does the recovery equal `reference` on every surviving vertex after some permutation of
/// coordinates that preserves the order vector?
bool matches_up_to_symmetry(const StabilityReport& report, const CubeSpec& reference);

struct ObservationResult {
    bool first_passed = true;
    bool second_passed = true;
    std::size_t first_failures = 0;
    std::size_t second_failures = 0;
    std::vector<Edge> first_witnesses;
    std::vector<Edge> second_witnesses;

    bool passed() const noexcept { return first_passed && second_passed; }
};

/// (1) no edge from position I to J has a colour k with I_k <= J_k;
/// (2) edges from I to J with I_k > J_k for every k have a colour in 1..r.
/// Uses the recovered positions, or the partition positions when recovery stopped early.
ObservationResult verify_observations(const StabilityReport& report, const ColouredDigraph& g);

void write_stability_report(std::ostream& out, const StabilityReport& report,
                            const ObservationResult& observations);
void write_stability_csv(std::ostream& out, const StabilityReport& report,
                         const ObservationResult& observations);

}  // namespace ecdg
