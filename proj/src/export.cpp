#include "ecdg/export.hpp"

#include <array>
#include <ostream>
#include <string>

#include "ecdg/generators.hpp"

namespace ecdg {

namespace {

std::string rational_text(const Rational& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string label_text(const Coords& c, char sep) {
    std::string text;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) {
            text += sep;
        }
        text += std::to_string(c[k]);
    }
    return text;
}

}  // namespace

const char* dot_colour_name(Colour c, Colour colour_count) {
    static constexpr std::array<const char*, 6> extra = {"orange", "purple", "brown", "magenta", "gold", "cyan"};
    if (c == 1) {
        return "red";
    }
    if (c == colour_count) {
        return "blue";
    }
    if (c == 2) {
        return "green";
    }
    return extra[(c - 3) % extra.size()];
}

void export_dot(std::ostream& out, const ColouredDigraph& g, const DotOptions& options) {
    const Vertex n = g.vertex_count();
    if (n > options.max_n) {
        throw InputError("refusing to draw " + std::to_string(n) + " vertices (limit " +
                         std::to_string(options.max_n) + ")");
    }
    if (options.colour && (*options.colour < 1 || *options.colour > g.colour_count())) {
        throw InputError("colour " + std::to_string(*options.colour) + " out of range");
    }
    std::optional<CubeSpec> spec;
    if (options.slide) {
        spec = round_robin_cube_spec(*options.slide);
    }
    out << "digraph G {\n";
    for (Vertex v = 1; v <= n; ++v) {
        out << "  " << v << ";\n";
    }
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (u == v) {
                continue;
            }
            const Colour c = g.at(u, v);
            if (options.colour && c != *options.colour) {
                continue;
            }
            if (spec && !slide_edge(*spec, u, v)) {
                continue;
            }
            out << "  " << u << " -> " << v << " [color=" << dot_colour_name(c, g.colour_count())
                << ", label=" << c << "];\n";
        }
    }
    out << "}\n";
}

void write_density_csv(std::ostream& out, const DensityReport& report) {
    out << "# ecdg-density v1\n";
    out << "class";
    const std::size_t r = report.rows.empty() ? 0 : report.rows.front().label.size();
    for (std::size_t k = 1; k <= r; ++k) {
        out << ",i" << k;
    }
    out << ",count,density\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const ClassDensity& row = report.rows[i];
        out << i;
        for (int c : row.label) {
            out << ',' << c;
        }
        out << ',' << row.count << ',' << rational_text(row.density) << '\n';
    }
}

void write_density_text(std::ostream& out, const DensityReport& report, Vertex n) {
    for (const ClassDensity& row : report.rows) {
        out << '(' << label_text(row.label, ',') << "): " << row.count << '/' << n << " = "
            << rational_text(row.density) << '\n';
    }
    out << "max: " << rational_text(report.max) << '\n';
    out << "lower bound: " << rational_text(report.bound) << '\n';
}

}  // namespace ecdg
