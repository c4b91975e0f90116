#include "ecdg/partition.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "ecdg/ghrv.hpp"

namespace ecdg {

namespace {

std::string format_path(const std::vector<Vertex>& vertices) {
    std::string text;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        text += (i ? "," : "") + std::to_string(vertices[i]);
    }
    return text;
}

void check_colour_count(const ColouredDigraph& g, std::span<const int> ell) {
    cube_size(ell);
    if (g.colour_count() != ell.size() + 1) {
        throw InputError("a " + std::to_string(g.colour_count()) + "-colouring needs " +
                         std::to_string(g.colour_count() - 1) + " order entries, got " +
                         std::to_string(ell.size()));
    }
}

void peel(const ColouredDigraph& g, std::span<const int> ell, const VertexSet& members,
          std::size_t colours_left, Coords& label, const CubeSpec& cube, std::vector<VertexSet>& classes) {
    if (colours_left == 0) {
        classes[cube.class_index(label)] = members;
        return;
    }
    const Colour colour = static_cast<Colour>(colours_left);
    std::vector<Edge> edges;
    for (Vertex u : members) {
        for (Vertex v : members) {
            if (u != v && g.at(u, v) == colour) {
                edges.push_back({u, v});
            }
        }
    }
    const Layering layering = ghrv_layering(members, edges);
    const auto width = static_cast<std::size_t>(ell[colours_left - 1]);
    if (layering.layers.size() > width) {
        throw CertificateError("colour " + std::to_string(colour) + " layering has " +
                               std::to_string(layering.layers.size()) + " layers, more than " +
                               std::to_string(width));
    }
    const VertexSet none;
    for (std::size_t i = 0; i < width; ++i) {
        label[colours_left - 1] = static_cast<int>(i);
        peel(g, ell, i < layering.layers.size() ? layering.layers[i] : none, colours_left - 1, label,
             cube, classes);
    }
}

}  // namespace

Coords CliquePartition::coords_of(std::size_t index) const {
    return round_robin_cube_spec(ell).coords_of_index(index);
}

std::size_t CliquePartition::index_of(const Coords& c) const {
    return round_robin_cube_spec(ell).class_index(c);
}

void check_path_hypothesis(const ColouredDigraph& g, std::span<const int> ell) {
    check_colour_count(g, ell);
    for (std::size_t i = 0; i < ell.size(); ++i) {
        const Colour colour = static_cast<Colour>(i + 1);
        if (auto witness = has_mono_path_of_length(g, colour, static_cast<std::size_t>(ell[i]))) {
            throw HypothesisError("colour " + std::to_string(colour) + " has a path of length " +
                                      std::to_string(ell[i]) + ": " + format_path(witness->vertices()),
                                  colour, ell[i], witness->vertices());
        }
    }
}

CliquePartition partition(const ColouredDigraph& g, std::span<const int> ell) {
    check_path_hypothesis(g, ell);
    const CubeSpec cube = round_robin_cube_spec({ell.begin(), ell.end()});

    CliquePartition result;
    result.ell.assign(ell.begin(), ell.end());
    result.clique_colour = g.colour_count();
    result.classes.assign(cube.class_count(), {});

    Coords label(ell.size(), 0);
    peel(g, ell, all_vertices(g.vertex_count()), ell.size(), label, cube, result.classes);

    if (auto failure = certify_partition(g, result); !failure.empty()) {
        throw CertificateError("partition certificate failed: " + failure);
    }
    return result;
}

std::string certify_partition(const ColouredDigraph& g, const CliquePartition& p) {
    const Vertex n = g.vertex_count();
    std::vector<int> owner(n + 1, -1);
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
        for (Vertex v : p.classes[c]) {
            if (v < 1 || v > n) {
                return "vertex " + std::to_string(v) + " out of range";
            }
            if (owner[v] >= 0) {
                return "vertex " + std::to_string(v) + " appears in two classes";
            }
            owner[v] = static_cast<int>(c);
        }
    }
    for (Vertex v = 1; v <= n; ++v) {
        if (owner[v] < 0) {
            return "vertex " + std::to_string(v) + " is in no class";
        }
    }
    for (const VertexSet& members : p.classes) {
        for (Vertex u : members) {
            for (Vertex v : members) {
                if (u != v && g.at(u, v) != p.clique_colour) {
                    return "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has colour " +
                           std::to_string(g.at(u, v)) + " inside a class";
                }
            }
        }
    }
    return {};
}

PathCover path_cover(const CliquePartition& p) {
    PathCover cover;
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
        if (!p.classes[c].empty()) {
            cover.push_back({p.coords_of(c), DirectedPath(p.classes[c])});
        }
    }
    return cover;
}

DensityReport density_report(const CliquePartition& p, Vertex n) {
    if (n == 0) {
        throw InputError("density report needs n >= 1");
    }
    DensityReport report;
    report.max = Rational(0);
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
        const auto& members = p.classes[c];
        const auto count = static_cast<std::size_t>(
            std::count_if(members.begin(), members.end(), [n](Vertex v) { return v <= n; }));
        const Rational d = prefix_density(members, n);
        report.rows.push_back({p.coords_of(c), count, d});
        report.max = std::max(report.max, d);
    }
    const auto cells = static_cast<std::int64_t>(p.classes.size());
    report.bound = Rational(1, cells) - Rational(cells, static_cast<std::int64_t>(n));
    return report;
}

void write_partition(std::ostream& out, const CliquePartition& p) {
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
        const Coords label = p.coords_of(c);
        for (std::size_t k = 0; k < label.size(); ++k) {
            out << (k ? "," : "") << label[k];
        }
        out << ':';
        for (Vertex v : p.classes[c]) {
            out << ' ' << v;
        }
        out << '\n';
    }
}

void write_path_cover(std::ostream& out, const PathCover& cover) {
    for (const auto& item : cover) {
        const auto& vertices = item.path.vertices();
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            out << (i ? " " : "") << vertices[i];
        }
        out << '\n';
    }
}

}  // namespace ecdg
