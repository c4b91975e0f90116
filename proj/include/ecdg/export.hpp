#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "ecdg/core.hpp"
#include "ecdg/partition.hpp"

namespace ecdg {

inline constexpr Vertex kDotVertexLimit = 200;

struct DotOptions {
    /// Emit only edges of this colour.
    std::optional<Colour> colour;
    /// Emit only slide-digraph edges of the round-robin cube partition with this order vector.
    std::optional<std::vector<int>> slide;
    /// Refuse larger digraphs (InputError) unless raised.
    Vertex max_n = kDotVertexLimit;
};

/// Colour name used for colour c out of `colour_count`: 1 red, the last colour blue,
/// 2 green when there are at least three colours.
const char* dot_colour_name(Colour c, Colour colour_count);

void export_dot(std::ostream& out, const ColouredDigraph& g, const DotOptions& options = {});

/// "# ecdg-density v1", then one class,i1..ir,count,density row per class.
void write_density_csv(std::ostream& out, const DensityReport& report);
void write_density_text(std::ostream& out, const DensityReport& report, Vertex n);

}  // namespace ecdg
