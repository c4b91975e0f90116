// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ecdg/generators.hpp"
#include "ecdg/ghrv.hpp"
#include "ecdg/partition.hpp"
#include "ecdg/stability.hpp"
#include "ecdg/tournament.hpp"
#include "oracles.hpp"
#include "perturb.hpp"

using namespace ecdg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool condition, const std::string& why) {
        if (!condition && passed) {
            passed = false;
            detail = why;
        }
    }
};

ColouredDigraph cube(const std::vector<int>& ell, Vertex n) {
    return materialize(cube_colouring_rule(round_robin_cube_spec(ell)), n);
}

Outcome path_bounds() {
    Outcome o;
    const auto start = Clock::now();
    const ColouredDigraph g = cube({2, 3}, 600);
    const bool red = find_path_of_length(mono_subgraph(g, 1), 2, PathSearch::exhaustive).has_value();
    const bool green = find_path_of_length(mono_subgraph(g, 2), 3, PathSearch::exhaustive).has_value();
    const double elapsed = seconds_since(start);
    o.require(!red, "found a colour-1 path of length 2");
    o.require(!green, "found a colour-2 path of length 3");
    o.require(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
    if (o.passed) {
        o.detail = "n=600, no colour-1 path of length 2, no colour-2 path of length 3, " + std::to_string(elapsed) + " s";
    }
    return o;
}

Outcome partition_classes() {
    Outcome o;
    const ColouredDigraph g = cube({2, 3}, 600);
    const CliquePartition p = partition(g, std::vector<int>{2, 3});
    o.require(p.classes.size() == 6, "class count " + std::to_string(p.classes.size()));
    o.require(certify_partition(g, p).empty(), "certificate: " + certify_partition(g, p));
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
        VertexSet residue;
        for (Vertex v = static_cast<Vertex>(c + 1); v <= 600; v += 6) {
            residue.push_back(v);
        }
        o.require(p.classes[c] == residue, "class " + std::to_string(c) + " is not a residue class");
        o.require(p.coords_of(c) == oracle::cube_position({2, 3}, static_cast<Vertex>(c + 1)),
                  "class " + std::to_string(c) + " has the wrong position");
    }
    const PathCover cover = path_cover(p);
    o.require(cover.size() == 6, "path count " + std::to_string(cover.size()));
    std::vector<int> seen(601, 0);
    for (const auto& item : cover) {
        const auto& vs = item.path.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            ++seen[vs[i]];
            if (i + 1 < vs.size()) {
                o.require(g.at(vs[i], vs[i + 1]) == 3, "path edge not of colour 3");
            }
        }
    }
    for (Vertex v = 1; v <= 600; ++v) {
        o.require(seen[v] == 1, "vertex " + std::to_string(v) + " covered " + std::to_string(seen[v]) + " times");
    }
    if (o.passed) {
        o.detail = "6 certified colour-3 cliques = residues mod 6; 6 disjoint colour-3 paths cover 1..600";
    }
    return o;
}

Outcome density_shadow() {
    Outcome o;
    const CliquePartition p = partition(cube({2, 3}, 600), std::vector<int>{2, 3});
    o.require(density_report(p, 600).max == Rational(1, 6), "max density at 600 is not 1/6");
    for (Vertex n = 1; n <= 600; ++n) {
        Rational best(0);
        for (const VertexSet& c : p.classes) {
            best = std::max(best, prefix_density(c, n));
        }
        o.require(best >= Rational(1, 6) - Rational(6, n), "bound fails at n=" + std::to_string(n));
    }
    if (o.passed) {
        o.detail = "max = 1/6 at n=600; max >= 1/6 - 6/n for every n <= 600";
    }
    return o;
}

Outcome binary_invariants() {
    Outcome o;
    const ColouredDigraph g = materialize(binary_halving_rule(), 512);
    for (int k = 1; k <= 9; ++k) {
        const auto v = verify_bit_reversal_monotone(g, k);
        o.require(v.empty(), std::to_string(v.size()) + " violations at k=" + std::to_string(k));
    }
    for (Vertex u = 1; u <= 512; ++u) {
        for (Vertex v = u + 1; v <= 512; ++v) {
            o.require((g.at(u, v) == 1) != (g.at(v, u) == 1), "antisymmetry fails");
        }
    }
    // Pinned from an independent backtracking search over the same colouring.
    const std::vector<Vertex> pinned = {16, 8, 4, 12, 2, 10, 6, 14, 1, 9, 5, 13, 3, 11, 7, 15};
    const DirectedPath longest = longest_mono_path_exact(materialize(binary_halving_rule(), 16), 1);
    o.require(longest.length() == 15, "longest red path has length " + std::to_string(longest.length()));
    o.require(longest.vertices() == pinned, "longest red path differs from the pinned path");
    if (o.passed) {
        o.detail = "n=512, k=1..9 zero violations, antisymmetric; n=16 longest red path 15 as pinned";
    }
    return o;
}

Outcome layering() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const Vertex n = 1 + static_cast<Vertex>(rng() % 12);
        std::bernoulli_distribution coin(0.05 + 0.9 * std::uniform_real_distribution<double>(0, 1)(rng));
        std::vector<Edge> edges;
        for (Vertex u = 1; u <= n; ++u) {
            for (Vertex v = 1; v <= n; ++v) {
                if (u != v && coin(rng)) {
                    edges.push_back({u, v});
                }
            }
        }
        const Digraph d(n, edges);
        const Layering l = ghrv_layering(d);
        const std::size_t longest = oracle::longest_path(n, [&](Vertex u, Vertex v) { return d.has_edge(u, v); });
        const std::string at = " (trial " + std::to_string(trial) + ")";
        o.require(l.layers.size() <= longest + 1, "too many layers" + at);
        o.require(longest_path_exact(d).length() == longest, "exact longest path disagrees" + at);
        o.require(verify_proper(edges, l).empty(), "layering not proper" + at);
        const std::set<Edge> kept(l.acyclic_edges.begin(), l.acyclic_edges.end());
        for (const Edge& e : edges) {
            if (kept.count(e)) {
                o.require(l.layer_of(e.to) < l.layer_of(e.from), "kept edge does not descend" + at);
            } else {
                o.require(l.layer_of(e.from) < l.layer_of(e.to), "rejected edge does not climb" + at);
            }
        }
    }
    if (o.passed) {
        o.detail = "200 random digraphs (n<=12): layers <= longest+1, proper, kept/rejected inequalities hold";
    }
    return o;
}

Outcome tournaments() {
    Outcome o;
    const auto start = Clock::now();
    std::vector<Edge> pairs;
    for (Vertex u = 1; u <= 4; ++u) {
        for (Vertex v = 1; v <= 4; ++v) {
            if (u != v) {
                pairs.push_back({u, v});
            }
        }
    }
    std::size_t extracted = 0;
    for (std::uint32_t mask = 0; mask < 4096; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1) {
                edges.push_back(pairs[i]);
            }
        }
        const Digraph g(4, edges);
        const bool acyclic = complement_acyclic(g).acyclic;
        o.require(acyclic == brute_force_tournament_exists(g), "disagreement at mask " + std::to_string(mask));
        if (!acyclic) {
            continue;
        }
        ++extracted;
        const TransitiveTournament t = extract_tournament(g);
        o.require(std::set<Vertex>(t.order().begin(), t.order().end()).size() == 4, "not spanning");
        for (const Edge& e : t.edges()) {
            o.require(g.has_edge(e.from, e.to), "tournament edge outside g");
        }
        for (Vertex a = 1; a <= 4; ++a) {
            for (Vertex b = 1; b <= 4; ++b) {
                if (a != b) {
                    o.require(t.contains(a, b) != t.contains(b, a), "not a tournament");
                }
                for (Vertex c = 1; c <= 4; ++c) {
                    if (t.contains(a, b) && t.contains(b, c)) {
                        o.require(t.contains(a, c), "not transitive");
                    }
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < 10.0, "took " + std::to_string(elapsed) + " s");
    if (o.passed) {
        o.detail = "4096 subgraphs agree with the permutation oracle; " + std::to_string(extracted) +
                   " extractions transitive, spanning, inside g; " + std::to_string(elapsed) + " s";
    }
    return o;
}

struct Instance {
    std::string name;
    std::vector<int> ell;
    Vertex n;
    ColouredDigraph g;
};

std::vector<Instance> round_trip_instances() {
    const std::vector<std::vector<int>> shapes = {{2}, {3}, {2, 2}, {2, 3}, {3, 2}, {2, 2, 2}};
    std::vector<Instance> out;
    for (const auto& ell : shapes) {
        const auto size = static_cast<Vertex>(cube_size(ell));
        std::set<Vertex> sizes = {24, std::min<Vertex>(24 * size, 120) / size * size};
        std::string tag;
        for (int l : ell) {
            tag += (tag.empty() ? "" : ",") + std::to_string(l);
        }
        for (Vertex n : sizes) {
            out.push_back({"cube " + tag + " n=" + std::to_string(n), ell, n, cube(ell, n)});
            if (ell.size() >= 2) {
                const CubeSpec spec = round_robin_cube_spec(ell);
                out.push_back({"example " + tag + " min n=" + std::to_string(n), ell, n,
                               materialize(example4_rule(spec, min_chooser()), n)});
                out.push_back({"example " + tag + " max n=" + std::to_string(n), ell, n,
                               materialize(example4_rule(spec, max_chooser()), n)});
            }
        }
    }
    return out;
}

Outcome round_trip(const std::vector<Instance>& instances) {
    Outcome o;
    for (const Instance& inst : instances) {
        const StabilityReport r = reconstruct(inst.g, inst.ell, 0);
        o.require(r.reconstructed, inst.name + ": recovery stopped");
        o.require(r.deleted.empty(), inst.name + ": deleted set not empty");
        o.require(r.slide_violations.empty(), inst.name + ": slide violations");
        for (const RecoveryCheck& c : r.checks) {
            o.require(c.passed, inst.name + ": internal check " + std::to_string(c.number) + " failed");
        }
        o.require(matches_up_to_symmetry(r, round_robin_cube_spec(inst.ell)), inst.name + ": positions differ");
    }
    if (o.passed) {
        o.detail = std::to_string(instances.size()) +
                   " instances: empty deleted set, zero slide violations, all checks pass, positions match";
    }
    return o;
}

Outcome observations(const std::vector<Instance>& instances) {
    Outcome o;
    std::size_t injected = 0;
    for (const Instance& inst : instances) {
        const StabilityReport r = reconstruct(inst.g, inst.ell, 0);
        o.require(verify_observations(r, inst.g).passed(), inst.name + ": observations fail");
        if (inst.ell.size() < 2) {
            continue;
        }
        // Off the slide digraph: every coordinate drops. Move the first such edge to the clique colour.
        const CubeSpec spec = round_robin_cube_spec(inst.ell);
        Edge target{0, 0};
        for (Vertex u = 1; u <= inst.n && target.from == 0; ++u) {
            for (Vertex v = 1; v <= inst.n; ++v) {
                const Coords a = spec.coords(u);
                const Coords b = spec.coords(v);
                bool all_drop = true;
                for (std::size_t k = 0; k < a.size(); ++k) {
                    all_drop = all_drop && a[k] > b[k];
                }
                if (u != v && all_drop) {
                    target = {u, v};
                    break;
                }
            }
        }
        ColouredDigraph bad = inst.g;
        bad.set_colour(target.from, target.to, bad.colour_count());
        const StabilityReport rb = reconstruct(bad, inst.ell, 0);
        const ObservationResult ob = verify_observations(rb, bad);
        const bool witnessed = std::find(ob.second_witnesses.begin(), ob.second_witnesses.end(), target) !=
                               ob.second_witnesses.end();
        o.require(!ob.second_passed && witnessed, inst.name + ": injected edge not reported");
        ++injected;
    }
    if (o.passed) {
        o.detail = "both pass on all " + std::to_string(instances.size()) + " instances; " +
                   std::to_string(injected) + " injected clique-colour edges reported as witnesses";
    }
    return o;
}

Outcome perturbation() {
    Outcome o;
    const std::vector<int> ell{2, 3};
    const ColouredDigraph base = cube(ell, 120);
    std::size_t largest = 0;
    constexpr int kSeeds = 60;
    for (int seed = 1; seed <= kSeeds; ++seed) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        ColouredDigraph g = base;
        perturb::recolour_around(g, ell, 2, rng);
        const std::string at = " (seed " + std::to_string(seed) + ")";
        o.require(perturb::hypothesis_holds(g, ell), "hypothesis lost" + at);
        const StabilityReport r = reconstruct(g, ell, 2);
        o.require(r.reconstructed, "recovery stopped" + at);
        o.require(r.slide_violations.empty(), std::to_string(r.slide_violations.size()) + " slide violations" + at);
        o.require(r.deleted.size() <= 4, "deleted " + std::to_string(r.deleted.size()) + " vertices" + at);
        largest = std::max(largest, r.deleted.size());

        // Adversarial variant: every edge at the two centres takes the clique colour.
        ColouredDigraph flat = base;
        for (Vertex c : {static_cast<Vertex>(1 + rng() % 120), static_cast<Vertex>(1 + rng() % 120)}) {
            for (Vertex v = 1; v <= 120; ++v) {
                if (v != c) {
                    flat.set_colour(c, v, 3);
                    flat.set_colour(v, c, 3);
                }
            }
        }
        const StabilityReport rf = reconstruct(flat, ell, 2);
        o.require(rf.reconstructed && rf.slide_violations.empty() && rf.deleted.size() <= 4,
                  "clique-colour centres not absorbed" + at);
        largest = std::max(largest, rf.deleted.size());
    }
    if (o.passed) {
        o.detail = std::to_string(kSeeds) + " seeds x 2 recolourings: zero slide violations outside the deleted set, "
                   "largest |F| = " + std::to_string(largest);
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Instance> instances = round_trip_instances();
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, path_bounds},
        {2, partition_classes},
        {3, density_shadow},
        {4, binary_invariants},
        {5, layering},
        {6, tournaments},
        {7, [&] { return round_trip(instances); }},
        {8, [&] { return observations(instances); }},
        {9, perturbation},
    };
    bool all = true;
    for (const auto& [number, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        all = all && o.passed;
        std::printf("criterion %d: %s: %s\n", number, o.passed ? "PASS" : "FAIL", o.detail.c_str());
    }
    return all ? 0 : 1;
}
