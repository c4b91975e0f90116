#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "ecdg/core.hpp"
#include "ecdg/generators.hpp"

namespace ecdg {

/// Partition of 1..n into cliques of the clique colour, indexed by the cube prod {0..l_k - 1}.
/// `classes[i]` is the class at cube position `coords_of(i)`; empty classes are kept.
struct CliquePartition {
    std::vector<int> ell;
    Colour clique_colour = 1;
    std::vector<VertexSet> classes;

    Coords coords_of(std::size_t index) const;
    std::size_t index_of(const Coords& c) const;
};

/// Throws HypothesisError when some colour i <= r has a path of length l_i.
void check_path_hypothesis(const ColouredDigraph& g, std::span<const int> ell);

/// Peels colours r, r-1, ..., 1 with longest-path layerings; the class reached through layer
/// i_r at depth r, then i_(r-1), ..., is labelled (i_1, ..., i_r). Every class is certified a
/// clique of colour r + 1 before returning.
CliquePartition partition(const ColouredDigraph& g, std::span<const int> ell);

/// Exhaustive check that each class is a clique of the clique colour and the classes
/// partition 1..n. Returns a description of the first failure, or an empty string.
std::string certify_partition(const ColouredDigraph& g, const CliquePartition& p);

struct LabelledPath {
    Coords label;
    DirectedPath path;
};

/// One path per nonempty class, vertices ascending.
using PathCover = std::vector<LabelledPath>;

PathCover path_cover(const CliquePartition& p);

struct ClassDensity {
    Coords label;
    std::size_t count = 0;
    Rational density;
};

struct DensityReport {
    std::vector<ClassDensity> rows;
    Rational max;
    /// 1/prod(l) - prod(l)/n, which the maximum never falls below.
    Rational bound;
};

DensityReport density_report(const CliquePartition& p, Vertex n);

/// "i1,...,ir: v1 v2 ..." per class.
void write_partition(std::ostream& out, const CliquePartition& p);
/// Vertices of each path in order, one path per line.
void write_path_cover(std::ostream& out, const PathCover& cover);

}  // namespace ecdg
