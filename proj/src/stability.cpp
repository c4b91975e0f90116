#include "ecdg/stability.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "ecdg/matching.hpp"
#include "ecdg/tournament.hpp"

namespace ecdg {

namespace {

constexpr std::size_t kWitnessCap = 16;

void record(RecoveryCheck& check, Edge e) {
    ++check.failures;
    if (check.witnesses.size() < kWitnessCap) {
        check.witnesses.push_back(e);
    }
}

std::string format_coords(const Coords& c, char sep = ',') {
    std::string text;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) {
            text += sep;
        }
        text += std::to_string(c[k]);
    }
    return text;
}

struct PairGraph {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
    BipartiteGraph graph;
};

PairGraph clique_colour_edges(const ColouredDigraph& g, const VertexSet& from, const VertexSet& to,
                              const std::vector<char>& alive, Colour clique) {
    PairGraph pg;
    for (Vertex u : from) {
        if (alive[u]) {
            pg.left.push_back(u);
        }
    }
    for (Vertex v : to) {
        if (alive[v]) {
            pg.right.push_back(v);
        }
    }
    pg.graph.left = pg.left.size();
    pg.graph.right = pg.right.size();
    pg.graph.adjacency.resize(pg.left.size());
    for (std::size_t i = 0; i < pg.left.size(); ++i) {
        for (std::size_t j = 0; j < pg.right.size(); ++j) {
            if (g.at(pg.left[i], pg.right[j]) == clique) {
                pg.graph.adjacency[i].push_back(j);
            }
        }
    }
    return pg;
}

}  // namespace

const PairDecision& ClassGraph::pair(std::size_t from, std::size_t to) const {
    if (from == to || from >= class_count || to >= class_count) {
        throw InputError("no such class pair");
    }
    return pairs[from * (class_count - 1) + (to < from ? to : to - 1)];
}

ClassGraph class_graph(const ColouredDigraph& g, const CliquePartition& classes, std::size_t threshold) {
    const std::size_t count = classes.classes.size();
    const Vertex n = g.vertex_count();
    const Colour clique = classes.clique_colour;
    std::vector<char> alive(n + 1, 1);

    // Clique-colour degree inside the pairs that start out colour-[r]-only; decides between
    // the two König covers.
    std::vector<std::size_t> weight(n + 1, 0);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            if (a == b) {
                continue;
            }
            const PairGraph pg = clique_colour_edges(g, classes.classes[a], classes.classes[b], alive, clique);
            if (maximum_matching(pg.graph).size > threshold) {
                continue;
            }
            for (std::size_t i = 0; i < pg.left.size(); ++i) {
                for (std::size_t j : pg.graph.adjacency[i]) {
                    ++weight[pg.left[i]];
                    ++weight[pg.right[j]];
                }
            }
        }
    }

    ClassGraph result;
    result.class_count = count;
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            if (a != b) {
                result.pairs.push_back({a, b, 0, false, {}});
            }
        }
    }

    std::vector<Vertex> deleted;
    for (bool changed = true; changed;) {
        changed = false;
        for (PairDecision& decision : result.pairs) {
            if (decision.colour_r_only) {
                continue;
            }
            const PairGraph pg = clique_colour_edges(g, classes.classes[decision.from],
                                                     classes.classes[decision.to], alive, clique);
            const Matching matching = maximum_matching(pg.graph);
            decision.matching = matching.size;
            if (matching.size > threshold) {
                continue;
            }
            const VertexCover from_left = koenig_cover_from_left(pg.graph, matching);
            const VertexCover from_right = koenig_cover_from_right(pg.graph, matching);
            auto score = [&](const VertexCover& cover) {
                std::size_t total = 0;
                for (std::size_t i : cover.left) {
                    total += weight[pg.left[i]];
                }
                for (std::size_t j : cover.right) {
                    total += weight[pg.right[j]];
                }
                return total;
            };
            const VertexCover& cover = score(from_right) > score(from_left) ? from_right : from_left;
            std::vector<Vertex> removed;
            for (std::size_t i : cover.left) {
                removed.push_back(pg.left[i]);
            }
            for (std::size_t j : cover.right) {
                removed.push_back(pg.right[j]);
            }
            for (Vertex v : removed) {
                alive[v] = 0;
                deleted.push_back(v);
            }
            decision.cover = make_vertex_set(std::move(removed));
            decision.colour_r_only = true;
            changed = true;
        }
    }

    result.deleted = make_vertex_set(std::move(deleted));
    std::vector<Edge> edges;
    for (const PairDecision& decision : result.pairs) {
        if (decision.colour_r_only) {
            edges.push_back({static_cast<Vertex>(decision.from + 1), static_cast<Vertex>(decision.to + 1)});
        }
    }
    result.graph = Digraph(static_cast<Vertex>(count), edges);
    return result;
}

bool StabilityReport::checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const RecoveryCheck& c) { return c.checked && c.passed; });
}

bool StabilityReport::clean() const { return reconstructed && slide_violations.empty() && checks_pass(); }

StabilityReport reconstruct(const ColouredDigraph& g, std::span<const int> ell, std::size_t threshold) {
    StabilityReport report;
    report.ell.assign(ell.begin(), ell.end());
    report.threshold = threshold;
    report.partition = partition(g, ell);
    report.clique_colour = report.partition.clique_colour;
    report.classes = class_graph(g, report.partition, threshold);
    report.deleted = report.classes.deleted;
    for (int i = 0; i < 5; ++i) {
        report.checks[static_cast<std::size_t>(i)].number = i + 1;
    }

    const ComplementCheck complement = complement_acyclic(report.classes.graph);
    if (!complement.acyclic) {
        for (Vertex c : complement.cycle) {
            report.density_cycle.push_back(report.partition.coords_of(c - 1));
        }
        return report;
    }
    report.reconstructed = true;

    const TransitiveTournament tournament = extract_tournament(report.classes.graph);
    for (Vertex c : tournament.order()) {
        report.tournament_order.push_back(c - 1);
    }

    const Vertex n = g.vertex_count();
    const std::size_t r = ell.size();
    const Colour clique = report.clique_colour;

    std::vector<std::size_t> owner(n + 1, 0);
    for (std::size_t c = 0; c < report.partition.classes.size(); ++c) {
        for (Vertex v : report.partition.classes[c]) {
            owner[v] = c;
        }
    }
    std::vector<char> alive(n + 1, 1);
    alive[0] = 0;
    for (Vertex v : report.deleted) {
        alive[v] = 0;
    }
    std::vector<Vertex> survivors;
    for (Vertex v = 1; v <= n; ++v) {
        if (alive[v]) {
            survivors.push_back(v);
        }
    }
    std::vector<std::size_t> rank(n + 1, 0);
    for (Vertex v : survivors) {
        rank[v] = tournament.position(static_cast<Vertex>(owner[v] + 1));
    }
    // Edge of the lifted tournament: classes differ and the source class comes first.
    auto lifted = [&](Vertex u, Vertex v) { return owner[u] != owner[v] && rank[u] < rank[v]; };

    for (auto& check : report.checks) {
        check.checked = true;
    }

    // Recover positions coordinate by coordinate: within each group sharing the first m - 1
    // coordinates, coordinate m is the longest colour-m path in the lift. The lift is acyclic,
    // so a sweep against the tournament order computes it exactly.
    std::vector<Coords> labels(n + 1, Coords(r, 0));
    std::vector<int> longest(n + 1, 0);
    for (std::size_t m = 1; m <= r; ++m) {
        const Colour colour = static_cast<Colour>(m);
        std::map<Coords, std::vector<Vertex>> groups;
        for (Vertex v : survivors) {
            groups[Coords(labels[v].begin(), labels[v].begin() + static_cast<std::ptrdiff_t>(m - 1))].push_back(v);
        }
        for (auto& [prefix, members] : groups) {
            std::stable_sort(members.begin(), members.end(),
                             [&](Vertex a, Vertex b) { return rank[a] > rank[b]; });
            for (std::size_t i = 0; i < members.size(); ++i) {
                const Vertex w = members[i];
                int best = 0;
                Vertex next = w;
                for (std::size_t j = 0; j < i; ++j) {
                    const Vertex x = members[j];
                    if (lifted(w, x) && g.at(w, x) == colour && longest[x] + 1 > best) {
                        best = longest[x] + 1;
                        next = x;
                    }
                }
                longest[w] = best;
                labels[w][m - 1] = best;
                if (best >= ell[m - 1]) {
                    record(report.checks[0], {w, next});
                }
            }
        }
    }

    report.recovered.assign(n + 1, std::nullopt);
    for (Vertex v : survivors) {
        report.recovered[v] = labels[v];
    }

    // Recovered classes must coincide with the partition classes.
    std::map<Coords, std::set<std::size_t>> partition_of_label;
    std::map<std::size_t, std::set<Coords>> labels_of_partition;
    std::map<Coords, Vertex> representative;
    for (Vertex v : survivors) {
        partition_of_label[labels[v]].insert(owner[v]);
        labels_of_partition[owner[v]].insert(labels[v]);
        representative.emplace(labels[v], v);
    }
    for (const auto& [label, owners] : partition_of_label) {
        if (owners.size() != 1) {
            const Vertex a = representative[label];
            for (Vertex v : survivors) {
                if (labels[v] == label && owner[v] != owner[a]) {
                    record(report.checks[2], {a, v});
                    break;
                }
            }
            continue;
        }
        report.relabelling.emplace_back(label, report.partition.coords_of(*owners.begin()));
    }
    for (const auto& [cls, seen] : labels_of_partition) {
        if (seen.size() != 1) {
            const Vertex a = representative[*seen.begin()];
            const Vertex b = representative[*std::next(seen.begin())];
            record(report.checks[2], {a, b});
        }
    }

    // Lift colours, drops, clique pairs and the slide digraph, pair by pair.
    for (Vertex u : survivors) {
        for (Vertex v : survivors) {
            if (u == v) {
                continue;
            }
            const Coords& from = labels[u];
            const Coords& to = labels[v];
            const Colour c = g.at(u, v);
            if (lifted(u, v)) {
                const auto shared = static_cast<std::size_t>(
                    std::mismatch(from.begin(), from.end(), to.begin()).first - from.begin());
                if (c <= shared) {
                    record(report.checks[1], {u, v});
                }
            }
            if (is_first_type_slide(from, to)) {
                std::size_t k = 0;
                while (from[k] <= to[k]) {
                    ++k;
                }
                const Colour expected = static_cast<Colour>(k + 1);
                if (!lifted(u, v) || c != expected) {
                    record(report.checks[3], {u, v});
                }
                if (c != expected) {
                    report.slide_violations.push_back({{u, v}, expected, c});
                }
            } else if (is_second_type_slide(from, to)) {
                if (c != clique) {
                    record(report.checks[4], {u, v});
                    report.slide_violations.push_back({{u, v}, clique, c});
                }
            }
        }
    }

    const char* details[5] = {
        "every vertex has a longest colour-m path shorter than l_m",
        "no lifted edge inside a recovered class of depth j has a colour in 1..j",
        "recovered classes equal the partition classes",
        "one-coordinate drops are lifted edges of that coordinate's colour",
        "coordinatewise non-decreasing pairs have the clique colour",
    };
    for (std::size_t i = 0; i < 5; ++i) {
        report.checks[i].passed = report.checks[i].failures == 0;
        report.checks[i].detail = details[i];
    }
    return report;
}

CubeSpec recovered_spec(const StabilityReport& report) {
    if (!report.reconstructed) {
        throw InputError("recovery stopped before positions were assigned");
    }
    auto table = report.recovered;
    return CubeSpec(report.ell, [table = std::move(table)](Vertex v) {
        if (v >= table.size() || !table[v]) {
            throw InputError("vertex " + std::to_string(v) + " was deleted or is out of range");
        }
        return *table[v];
    });
}

bool matches_up_to_symmetry(const StabilityReport& report, const CubeSpec& reference) {
    if (!report.reconstructed || reference.ell() != report.ell) {
        return false;
    }
    const std::size_t r = report.ell.size();
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        bool preserves = true;
        for (std::size_t k = 0; k < r; ++k) {
            preserves = preserves && report.ell[k] == report.ell[perm[k]];
        }
        if (!preserves) {
            continue;
        }
        bool all = true;
        for (Vertex v = 1; v < report.recovered.size() && all; ++v) {
            if (!report.recovered[v]) {
                continue;
            }
            const Coords expected = reference.coords(v);
            for (std::size_t k = 0; k < r; ++k) {
                if ((*report.recovered[v])[k] != expected[perm[k]]) {
                    all = false;
                    break;
                }
            }
        }
        if (all) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

ObservationResult verify_observations(const StabilityReport& report, const ColouredDigraph& g) {
    const Vertex n = g.vertex_count();
    const std::size_t r = report.ell.size();
    std::vector<std::optional<Coords>> labels(n + 1);
    if (report.reconstructed) {
        labels = report.recovered;
    } else {
        for (std::size_t c = 0; c < report.partition.classes.size(); ++c) {
            for (Vertex v : report.partition.classes[c]) {
                labels[v] = report.partition.coords_of(c);
            }
        }
        for (Vertex v : report.deleted) {
            labels[v].reset();
        }
    }

    ObservationResult result;
    for (Vertex u = 1; u <= n; ++u) {
        if (!labels[u]) {
            continue;
        }
        for (Vertex v = 1; v <= n; ++v) {
            if (u == v || !labels[v]) {
                continue;
            }
            const Coords& from = *labels[u];
            const Coords& to = *labels[v];
            const Colour c = g.at(u, v);
            if (c <= r && from[c - 1] <= to[c - 1]) {
                ++result.first_failures;
                if (result.first_witnesses.size() < kWitnessCap) {
                    result.first_witnesses.push_back({u, v});
                }
            }
            bool strictly_above = r > 0;
            for (std::size_t k = 0; k < r && strictly_above; ++k) {
                strictly_above = from[k] > to[k];
            }
            if (strictly_above && c > r) {
                ++result.second_failures;
                if (result.second_witnesses.size() < kWitnessCap) {
                    result.second_witnesses.push_back({u, v});
                }
            }
        }
    }
    result.first_passed = result.first_failures == 0;
    result.second_passed = result.second_failures == 0;
    return result;
}

namespace {

std::string pass_fail(bool passed) { return passed ? "pass" : "FAIL"; }

const char* check_name(int number) {
    static constexpr const char* names[5] = {"depth-bound", "lift-prefix", "class-match", "drop-colour",
                                             "clique-pairs"};
    return names[number - 1];
}

std::string format_edges(const std::vector<Edge>& edges) {
    std::string text;
    for (const Edge& e : edges) {
        text += " (" + std::to_string(e.from) + "," + std::to_string(e.to) + ")";
    }
    return text;
}

}  // namespace

void write_stability_report(std::ostream& out, const StabilityReport& report,
                            const ObservationResult& observations) {
    out << "threshold: " << report.threshold << '\n';
    out << "partition classes: " << report.partition.classes.size() << '\n';
    out << "deleted (" << report.deleted.size() << "):";
    for (Vertex v : report.deleted) {
        out << ' ' << v;
    }
    out << '\n';
    out << "colour-[r]-only class pairs: " << report.classes.graph.edge_count() << '\n';
    if (!report.reconstructed) {
        out << "status: auxiliary complement has a cycle (density ceiling exceeded):";
        for (std::size_t i = 0; i < report.density_cycle.size(); ++i) {
            out << (i ? " -> " : " ") << '(' << format_coords(report.density_cycle[i]) << ')';
        }
        out << '\n';
    } else {
        out << "status: reconstructed\n";
        out << "tournament order:";
        for (std::size_t c : report.tournament_order) {
            out << " (" << format_coords(report.partition.coords_of(c)) << ')';
        }
        out << '\n';
        out << "recovered coordinates:\n";
        for (Vertex v = 1; v < report.recovered.size(); ++v) {
            if (report.recovered[v]) {
                out << "  " << v << ": " << format_coords(*report.recovered[v]) << '\n';
            }
        }
        out << "slide violations: " << report.slide_violations.size() << '\n';
        for (const SlideViolation& s : report.slide_violations) {
            out << "  (" << s.edge.from << ',' << s.edge.to << ") expected " << s.expected << " actual "
                << s.actual << '\n';
        }
        for (const RecoveryCheck& check : report.checks) {
            out << "check " << check_name(check.number) << ": " << pass_fail(check.passed) << " (" << check.detail << ")";
            if (!check.passed) {
                out << ", " << check.failures << " failures:" << format_edges(check.witnesses);
            }
            out << '\n';
        }
    }
    out << "forward-colour: " << pass_fail(observations.first_passed);
    if (!observations.first_passed) {
        out << ", " << observations.first_failures << " failures:" << format_edges(observations.first_witnesses);
    }
    out << '\n';
    out << "strict-drop: " << pass_fail(observations.second_passed);
    if (!observations.second_passed) {
        out << ", " << observations.second_failures << " failures:" << format_edges(observations.second_witnesses);
    }
    out << '\n';
}

void write_stability_csv(std::ostream& out, const StabilityReport& report, const ObservationResult& observations) {
    out << "# ecdg-stability v1\n";
    out << "record,u,v,expected,actual,detail\n";
    for (Vertex v : report.deleted) {
        out << "deleted," << v << ",,,,\n";
    }
    if (!report.reconstructed) {
        std::string cycle;
        for (std::size_t i = 0; i < report.density_cycle.size(); ++i) {
            cycle += (i ? ">" : "") + format_coords(report.density_cycle[i], ';');
        }
        out << "cycle,,,,," << cycle << '\n';
    }
    for (Vertex v = 1; v < report.recovered.size(); ++v) {
        if (report.recovered[v]) {
            out << "coords," << v << ",,,," << format_coords(*report.recovered[v], ';') << '\n';
        }
    }
    for (const SlideViolation& s : report.slide_violations) {
        out << "violation," << s.edge.from << ',' << s.edge.to << ',' << s.expected << ',' << s.actual << ",\n";
    }
    if (report.reconstructed) {
        for (const RecoveryCheck& check : report.checks) {
            out << "check,,,,," << check_name(check.number) << ':' << (check.passed ? "pass" : "fail") << '\n';
        }
    }
    out << "check,,,,,forward-colour:" << (observations.first_passed ? "pass" : "fail") << '\n';
    out << "check,,,,,strict-drop:" << (observations.second_passed ? "pass" : "fail") << '\n';
}

}  // namespace ecdg
