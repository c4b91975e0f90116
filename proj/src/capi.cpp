#include "ecdg/ecdg.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "ecdg/core.hpp"
#include "ecdg/export.hpp"
#include "ecdg/generators.hpp"
#include "ecdg/ghrv.hpp"
#include "ecdg/partition.hpp"
#include "ecdg/stability.hpp"
#include "ecdg/tournament.hpp"

struct ecdg_graph {
    ecdg::ColouredDigraph g;
};

struct ecdg_partition {
    ecdg::CliquePartition p;
    ecdg::Vertex n = 0;
};

struct ecdg_stability {
    ecdg::StabilityReport report;
    ecdg::ObservationResult observations;
};

namespace {

thread_local std::string last_error;

std::string path_text(const std::vector<std::uint32_t>& vertices) {
    std::string text;
    for (std::uint32_t v : vertices) {
        text += (text.empty() ? "" : " ") + std::to_string(v);
    }
    return text;
}

ecdg_status fail(ecdg_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs `body`, translating exceptions into status codes and the thread's error message.
ecdg_status guarded(const std::function<void()>& body) {
    try {
        body();
        last_error.clear();
        return ECDG_OK;
    } catch (const ecdg::HypothesisError& e) {
        return fail(ECDG_HYPOTHESIS, std::string(e.what()) + "; witness: " + path_text(e.witness()));
    } catch (const ecdg::PreconditionError& e) {
        std::string message = e.what();
        if (!e.witness().empty()) {
            message += "; witness: " + path_text(e.witness());
        }
        return fail(ECDG_PRECONDITION, message);
    } catch (const ecdg::InputError& e) {
        return fail(ECDG_INPUT, e.what());
    } catch (const ecdg::ScaleError& e) {
        return fail(ECDG_SCALE, e.what());
    } catch (const ecdg::CertificateError& e) {
        return fail(ECDG_CERTIFICATE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(ECDG_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ECDG_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <typename T>
void require(const T* pointer, const char* what) {
    if (pointer == nullptr) {
        throw ecdg::InputError(std::string(what) + " is null");
    }
}

std::vector<int> ell_of(const char* text) { return ecdg::parse_ell(text == nullptr ? "" : text); }

std::vector<ecdg::Colour> colours_of(const char* text, ecdg::Colour colour_count) {
    std::vector<ecdg::Colour> colours;
    for (int c : ecdg::parse_ell(text == nullptr ? "" : text)) {
        if (c < 1 || static_cast<ecdg::Colour>(c) > colour_count) {
            throw ecdg::InputError("colour " + std::to_string(c) + " out of range 1.." +
                                   std::to_string(colour_count));
        }
        colours.push_back(static_cast<ecdg::Colour>(c));
    }
    if (colours.empty()) {
        for (ecdg::Colour c = 1; c <= colour_count; ++c) {
            colours.push_back(c);
        }
    }
    return colours;
}

ecdg::Digraph subgraph_of(const ecdg::ColouredDigraph& g, const std::vector<ecdg::Colour>& colours) {
    std::vector<bool> wanted(g.colour_count() + 1, false);
    for (ecdg::Colour c : colours) {
        wanted[c] = true;
    }
    std::vector<ecdg::Edge> edges;
    for (ecdg::Vertex u = 1; u <= g.vertex_count(); ++u) {
        for (ecdg::Vertex v = 1; v <= g.vertex_count(); ++v) {
            if (u != v && wanted[g.at(u, v)]) {
                edges.push_back({u, v});
            }
        }
    }
    return ecdg::Digraph(g.vertex_count(), edges);
}

}  // namespace

extern "C" {

const char* ecdg_last_error(void) { return last_error.c_str(); }

const char* ecdg_status_name(ecdg_status status) {
    switch (status) {
        case ECDG_OK: return "ok";
        case ECDG_INPUT: return "input error";
        case ECDG_HYPOTHESIS: return "hypothesis violated";
        case ECDG_PRECONDITION: return "precondition violated";
        case ECDG_SCALE: return "scale exceeded";
        case ECDG_CERTIFICATE: return "certificate failed";
        case ECDG_IO: return "i/o error";
        case ECDG_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void ecdg_string_free(char* text) { std::free(text); }

ecdg_status ecdg_graph_load(const char* path, ecdg_graph** out) {
    if (path == nullptr || out == nullptr) {
        return fail(ECDG_INPUT, "null argument");
    }
    std::ifstream in(path);
    if (!in) {
        return fail(ECDG_IO, std::string("cannot open ") + path);
    }
    return guarded([&] { *out = new ecdg_graph{ecdg::read_edge_list(in)}; });
}

ecdg_status ecdg_graph_parse(const char* text, ecdg_graph** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        std::istringstream in(text);
        *out = new ecdg_graph{ecdg::read_edge_list(in)};
    });
}

ecdg_status ecdg_graph_generate(const char* spec, uint32_t n, ecdg_graph** out) {
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        if (n < 1) {
            throw ecdg::InputError("n must be at least 1");
        }
        *out = new ecdg_graph{ecdg::materialize(ecdg::parse_generator_spec(spec), n)};
    });
}

ecdg_status ecdg_graph_save(const ecdg_graph* g, const char* path) {
    if (g == nullptr || path == nullptr) {
        return fail(ECDG_INPUT, "null argument");
    }
    std::ofstream out(path);
    if (!out) {
        return fail(ECDG_IO, std::string("cannot write ") + path);
    }
    ecdg::write_edge_list(out, g->g);
    out.flush();
    return out ? ECDG_OK : fail(ECDG_IO, std::string("write failed: ") + path);
}

ecdg_status ecdg_graph_edge_list(const ecdg_graph* g, char** text) {
    return guarded([&] {
        require(g, "graph");
        require(text, "text");
        std::ostringstream out;
        ecdg::write_edge_list(out, g->g);
        *text = copy_string(out.str());
    });
}

void ecdg_graph_free(ecdg_graph* g) { delete g; }

uint32_t ecdg_graph_vertex_count(const ecdg_graph* g) { return g == nullptr ? 0 : g->g.vertex_count(); }

uint32_t ecdg_graph_colour_count(const ecdg_graph* g) { return g == nullptr ? 0 : g->g.colour_count(); }

ecdg_status ecdg_graph_colour_of(const ecdg_graph* g, uint32_t u, uint32_t v, uint32_t* colour) {
    return guarded([&] {
        require(g, "graph");
        require(colour, "colour");
        *colour = g->g.colour_of(u, v);
    });
}

ecdg_status ecdg_graph_set_colour(ecdg_graph* g, uint32_t u, uint32_t v, uint32_t colour) {
    return guarded([&] {
        require(g, "graph");
        g->g.set_colour(u, v, colour);
    });
}

ecdg_status ecdg_mono_path(const ecdg_graph* g, uint32_t colour, size_t length, int* found, uint32_t* vertices,
                           size_t capacity, size_t* count) {
    return guarded([&] {
        require(g, "graph");
        require(found, "found");
        const auto path = ecdg::has_mono_path_of_length(g->g, colour, length);
        *found = path ? 1 : 0;
        if (count != nullptr) {
            *count = path ? path->vertices().size() : 0;
        }
        if (path && vertices != nullptr) {
            const auto& vs = path->vertices();
            std::copy_n(vs.begin(), std::min(capacity, vs.size()), vertices);
        }
    });
}

ecdg_status ecdg_longest_mono_path(const ecdg_graph* g, uint32_t colour, uint32_t cap, size_t* length) {
    return guarded([&] {
        require(g, "graph");
        require(length, "length");
        *length = ecdg::longest_mono_path_exact(g->g, colour, cap).length();
    });
}

ecdg_status ecdg_verify_bit_reversal(const ecdg_graph* g, int k, size_t* violations) {
    return guarded([&] {
        require(g, "graph");
        require(violations, "violations");
        *violations = ecdg::verify_bit_reversal_monotone(g->g, k).size();
    });
}

ecdg_status ecdg_verify_lex(const ecdg_graph* g, const char* ell, size_t* violations) {
    return guarded([&] {
        require(g, "graph");
        require(violations, "violations");
        *violations = ecdg::verify_lex_monotone(g->g, ecdg::round_robin_cube_spec(ell_of(ell))).size();
    });
}

ecdg_status ecdg_verify_report(const ecdg_graph* g, const char* ell, size_t* violations, char** text) {
    return guarded([&] {
        require(g, "graph");
        require(violations, "violations");
        require(text, "text");
        const std::vector<int> order = ell_of(ell);
        if (g->g.colour_count() != order.size() + 1) {
            throw ecdg::InputError("the graph has " + std::to_string(g->g.colour_count()) +
                                   " colours but the order vector needs " + std::to_string(order.size() + 1));
        }
        std::size_t found = 0;
        std::ostringstream out;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const auto colour = static_cast<ecdg::Colour>(i + 1);
            const auto path = ecdg::has_mono_path_of_length(g->g, colour, static_cast<std::size_t>(order[i]));
            if (path) {
                ++found;
                out << "colour-" << colour << " path of length " << order[i] << ": "
                    << path_text(path->vertices()) << "; ";
            } else {
                out << "no colour-" << colour << " path of length " << order[i] << "; ";
            }
        }
        const auto lex = ecdg::verify_lex_monotone(g->g, ecdg::round_robin_cube_spec(order));
        out << "lex-monotone: " << lex.size() << " violations\n";
        for (const auto& violation : lex) {
            out << "  (" << violation.edge.from << ',' << violation.edge.to << ") colour " << violation.colour
                << " clause " << violation.clause << '\n';
        }
        *violations = found + lex.size();
        *text = copy_string(out.str());
    });
}

ecdg_status ecdg_partition_compute(const ecdg_graph* g, const char* ell, ecdg_partition** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = new ecdg_partition{ecdg::partition(g->g, ell_of(ell)), g->g.vertex_count()};
    });
}

void ecdg_partition_free(ecdg_partition* p) { delete p; }

size_t ecdg_partition_class_count(const ecdg_partition* p) { return p == nullptr ? 0 : p->p.classes.size(); }

ecdg_status ecdg_partition_members(const ecdg_partition* p, size_t index, uint32_t* members, size_t capacity,
                                   size_t* count) {
    return guarded([&] {
        require(p, "partition");
        require(count, "count");
        if (index >= p->p.classes.size()) {
            throw ecdg::InputError("class index out of range");
        }
        const auto& cls = p->p.classes[index];
        *count = cls.size();
        if (members != nullptr) {
            std::copy_n(cls.begin(), std::min(capacity, cls.size()), members);
        }
    });
}

ecdg_status ecdg_partition_render(const ecdg_partition* p, char** text) {
    return guarded([&] {
        require(p, "partition");
        require(text, "text");
        std::ostringstream out;
        ecdg::write_partition(out, p->p);
        *text = copy_string(out.str());
    });
}

ecdg_status ecdg_pathcover_render(const ecdg_partition* p, char** text) {
    return guarded([&] {
        require(p, "partition");
        require(text, "text");
        std::ostringstream out;
        ecdg::write_path_cover(out, ecdg::path_cover(p->p));
        *text = copy_string(out.str());
    });
}

ecdg_status ecdg_density_render(const ecdg_partition* p, uint32_t n, int csv, char** text) {
    return guarded([&] {
        require(p, "partition");
        require(text, "text");
        const ecdg::Vertex at = n == 0 ? p->n : n;
        const auto report = ecdg::density_report(p->p, at);
        std::ostringstream out;
        if (csv) {
            ecdg::write_density_csv(out, report);
        } else {
            ecdg::write_density_text(out, report, at);
        }
        *text = copy_string(out.str());
    });
}

ecdg_status ecdg_ghrv_render(const ecdg_graph* g, const char* colours, char** text) {
    return guarded([&] {
        require(g, "graph");
        require(text, "text");
        const ecdg::Digraph d = subgraph_of(g->g, colours_of(colours, g->g.colour_count()));
        const ecdg::Layering layering = ecdg::ghrv_layering(d);
        std::ostringstream out;
        out << "acyclic edges: " << layering.acyclic_edges.size() << " of " << d.edge_count() << '\n';
        out << "layers: " << layering.layers.size() << '\n';
        for (std::size_t i = 0; i < layering.layers.size(); ++i) {
            out << i << ':';
            for (ecdg::Vertex v : layering.layers[i]) {
                out << ' ' << v;
            }
            out << '\n';
        }
        *text = copy_string(out.str());
    });
}

ecdg_status ecdg_tournament_render(const ecdg_graph* g, const char* colours, int* exists, char** text) {
    return guarded([&] {
        require(g, "graph");
        require(exists, "exists");
        require(text, "text");
        const ecdg::Digraph d = subgraph_of(g->g, colours_of(colours, g->g.colour_count()));
        const ecdg::ComplementCheck check = ecdg::complement_acyclic(d);
        std::ostringstream out;
        if (check.acyclic) {
            *exists = 1;
            out << "order: " << path_text(ecdg::extract_tournament(d).order()) << '\n';
        } else {
            *exists = 0;
            out << "no spanning transitive tournament; complement cycle: " << path_text(check.cycle) << '\n';
        }
        *text = copy_string(out.str());
    });
}

ecdg_status ecdg_stability_compute(const ecdg_graph* g, const char* ell, size_t threshold, ecdg_stability** out) {
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        auto result = std::make_unique<ecdg_stability>();
        result->report = ecdg::reconstruct(g->g, ell_of(ell), threshold);
        result->observations = ecdg::verify_observations(result->report, g->g);
        *out = result.release();
    });
}

void ecdg_stability_free(ecdg_stability* s) { delete s; }

int ecdg_stability_reconstructed(const ecdg_stability* s) { return s != nullptr && s->report.reconstructed; }

int ecdg_stability_clean(const ecdg_stability* s) { return s != nullptr && s->report.clean(); }

int ecdg_stability_observations_pass(const ecdg_stability* s) {
    return s != nullptr && s->observations.passed();
}

size_t ecdg_stability_deleted_count(const ecdg_stability* s) {
    return s == nullptr ? 0 : s->report.deleted.size();
}

size_t ecdg_stability_violation_count(const ecdg_stability* s) {
    return s == nullptr ? 0 : s->report.slide_violations.size();
}

ecdg_status ecdg_stability_render(const ecdg_stability* s, int csv, char** text) {
    return guarded([&] {
        require(s, "stability");
        require(text, "text");
        std::ostringstream out;
        if (csv) {
            ecdg::write_stability_csv(out, s->report, s->observations);
        } else {
            ecdg::write_stability_report(out, s->report, s->observations);
        }
        *text = copy_string(out.str());
    });
}

ecdg_status ecdg_export_dot(const ecdg_graph* g, uint32_t colour, const char* slide_ell, uint32_t max_n,
                            char** text) {
    return guarded([&] {
        require(g, "graph");
        require(text, "text");
        ecdg::DotOptions options;
        if (colour != 0) {
            options.colour = colour;
        }
        if (slide_ell != nullptr && *slide_ell != '\0') {
            options.slide = ecdg::parse_ell(slide_ell);
        }
        if (max_n != 0) {
            options.max_n = max_n;
        }
        std::ostringstream out;
        ecdg::export_dot(out, g->g, options);
        *text = copy_string(out.str());
    });
}

}  // extern "C"
