#include <random>
#include <sstream>

#include "doctest.h"
#include "ecdg/generators.hpp"
#include "ecdg/stability.hpp"
#include "oracles.hpp"
#include "perturb.hpp"

using namespace ecdg;

namespace {

ColouredDigraph cube(std::vector<int> ell, Vertex n) { return materialize(cube_colouring_rule(round_robin_cube_spec(ell)), n); }

void expect_clean_round_trip(const ColouredDigraph& g, const std::vector<int>& ell) {
    const StabilityReport report = reconstruct(g, ell);
    CHECK(report.reconstructed);
    CHECK(report.deleted.empty());
    CHECK(report.slide_violations.empty());
    for (const RecoveryCheck& check : report.checks) {
        CHECK_MESSAGE(check.passed, "check " << check.number << " failed " << check.failures << " times");
    }
    CHECK(report.clean());
    CHECK(matches_up_to_symmetry(report, round_robin_cube_spec(ell)));
    CHECK(verify_observations(report, g).passed());
    // The slide digraph under the recovered positions carries exactly the cube colours.
    const CubeSpec recovered = recovered_spec(report);
    const ColouringRule reference = cube_colouring_rule(recovered);
    for (Vertex u = 1; u <= g.vertex_count(); ++u) {
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            if (u != v && slide_edge(recovered, u, v)) {
                REQUIRE(g.at(u, v) == reference(u, v));
            }
        }
    }
}

}  // namespace

TEST_CASE("class graph on the cube colouring") {
    const ColouredDigraph g = cube({2, 3}, 60);
    const CliquePartition p = partition(g, std::vector<int>{2, 3});
    const ClassGraph cg = class_graph(g, p, 0);
    CHECK(cg.deleted.empty());
    for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = 0; b < 6; ++b) {
            if (a == b) {
                continue;
            }
            const PairDecision& d = cg.pair(a, b);
            CHECK(d.from == a);
            CHECK(d.to == b);
            if (p.coords_of(a) > p.coords_of(b)) {
                CHECK(d.colour_r_only);
                CHECK(d.matching == 0);
                CHECK(cg.graph.has_edge(static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1)));
            } else {
                CHECK_FALSE(d.colour_r_only);
                CHECK(d.matching == 10);
            }
        }
    }
    CHECK_THROWS_AS(cg.pair(2, 2), InputError);
}

TEST_CASE("class graph ignores a few recoloured forward edges") {
    const ColouredDigraph g = cube({2, 3}, 60);
    const CliquePartition p = partition(g, std::vector<int>{2, 3});
    ColouredDigraph h = g;
    h.set_colour(1, 4, 1);
    h.set_colour(7, 10, 1);
    const ClassGraph cg = class_graph(h, p, 2);
    const PairDecision& d = cg.pair(p.index_of({0, 0}), p.index_of({1, 0}));
    CHECK_FALSE(d.colour_r_only);
    // Two missing edges still leave a perfect matching.
    CHECK(d.matching == 10);
    CHECK(cg.deleted.empty());
}

TEST_CASE("König deletions match the matching size") {
    std::mt19937_64 rng(8);
    const std::vector<int> ell{2, 3};
    for (int trial = 0; trial < 10; ++trial) {
        ColouredDigraph g = cube(ell, 60);
        perturb::recolour_around(g, ell, 2, rng);
        const CliquePartition p = partition(g, ell);
        const ClassGraph cg = class_graph(g, p, 2);
        std::size_t total = 0;
        for (const PairDecision& d : cg.pairs) {
            if (d.colour_r_only) {
                CHECK(d.cover.size() == d.matching);
                CHECK(d.matching <= 2);
                total += d.cover.size();
            } else {
                CHECK(d.cover.empty());
            }
        }
        CHECK(cg.deleted.size() == total);
    }
}

TEST_CASE("round trip on cube colourings") {
    const std::vector<std::vector<int>> shapes = {{2}, {3}, {2, 2}, {2, 3}, {3, 2}, {2, 2, 2}, {4, 2}, {1, 3}, {2, 1, 2}};
    for (const auto& ell : shapes) {
        const auto size = static_cast<Vertex>(cube_size(ell));
        for (Vertex n : {size, 5 * size, 120 - 120 % size}) {
            CAPTURE(n);
            expect_clean_round_trip(cube(ell, n), ell);
        }
    }
}

TEST_CASE("recovered coordinates are the identity relabelling on the cube colouring") {
    const ColouredDigraph g = cube({2, 3}, 60);
    const StabilityReport report = reconstruct(g, std::vector<int>{2, 3});
    const CubeSpec spec = round_robin_cube_spec({2, 3});
    for (Vertex v = 1; v <= 60; ++v) {
        REQUIRE(report.recovered[v]);
        CHECK(*report.recovered[v] == spec.coords(v));
    }
    CHECK_FALSE(report.recovered[0]);
    for (const auto& [recovered, original] : report.relabelling) {
        CHECK(recovered == original);
    }
    CHECK(report.relabelling.size() == 6);
}

TEST_CASE("round trip on example colourings") {
    for (const auto& ell : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 2}, {2, 2, 2}}) {
        const CubeSpec spec = round_robin_cube_spec(ell);
        for (const Chooser& chooser : {min_chooser(), max_chooser(), seeded_chooser(21), seeded_chooser(22)}) {
            expect_clean_round_trip(materialize(example4_rule(spec, chooser), 60), ell);
        }
    }
}

TEST_CASE("two equal orders recover up to a swap") {
    // Equal order entries make the coordinates interchangeable; the comparison allows it.
    const ColouredDigraph g = cube({2, 2}, 16);
    const StabilityReport report = reconstruct(g, std::vector<int>{2, 2});
    const CubeSpec swapped({2, 2}, [](Vertex v) {
        Coords c = oracle::cube_position({2, 2}, v);
        std::swap(c[0], c[1]);
        return c;
    });
    CHECK(matches_up_to_symmetry(report, swapped));
    const CubeSpec shifted({2, 2}, [](Vertex v) { return oracle::cube_position({2, 2}, v + 1); });
    CHECK_FALSE(matches_up_to_symmetry(report, shifted));
}

TEST_CASE("a cyclic class complement stops recovery with a witness") {
    ColouredDigraph g(4, 2, 2);
    g.set_colour(1, 2, 1);
    g.set_colour(3, 4, 1);
    const StabilityReport report = reconstruct(g, std::vector<int>{2});
    CHECK_FALSE(report.reconstructed);
    REQUIRE(report.density_cycle.size() == 3);
    CHECK(report.density_cycle.front() == report.density_cycle.back());
    CHECK_FALSE(report.clean());
    CHECK_THROWS_AS(recovered_spec(report), InputError);
    const ObservationResult obs = verify_observations(report, g);
    CHECK(obs.first_passed);
    CHECK_FALSE(obs.second_passed);
    CHECK_FALSE(obs.second_witnesses.empty());
    std::ostringstream text;
    write_stability_report(text, report, obs);
    CHECK(text.str().find("cycle") != std::string::npos);
}

TEST_CASE("an injected off-slide clique-colour edge is detected") {
    const std::vector<int> ell{2, 3};
    ColouredDigraph g = cube(ell, 60);
    // Vertex 5 sits at (1,1) and vertex 1 at (0,0): both coordinates drop.
    g.set_colour(5, 1, 3);
    const StabilityReport report = reconstruct(g, ell);
    const ObservationResult obs = verify_observations(report, g);
    CHECK_FALSE(obs.second_passed);
    CHECK(std::find(obs.second_witnesses.begin(), obs.second_witnesses.end(), Edge{5, 1}) != obs.second_witnesses.end());
}

TEST_CASE("two-colour recovery covers every edge") {
    // With one short colour the slide digraph is complete, so recovery pins every colour.
    const std::vector<int> ell{3};
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 5; ++trial) {
        ColouredDigraph g = cube(ell, 30);
        const auto moved = perturb::recolour_around(g, ell, 1, rng);
        const StabilityReport report = reconstruct(g, ell, 1);
        REQUIRE(report.reconstructed);
        CHECK(report.slide_violations.empty());
        for (Vertex u = 1; u <= 30; ++u) {
            for (Vertex v = 1; v <= 30; ++v) {
                if (u != v && report.recovered[u] && report.recovered[v]) {
                    const bool forward = (*report.recovered[u])[0] <= (*report.recovered[v])[0];
                    CHECK(g.at(u, v) == (forward ? 2u : 1u));
                }
            }
        }
        CHECK(report.deleted.size() <= moved.centres.size() * 3);
    }
}

TEST_CASE("perturbations around two vertices stay inside the deleted set") {
    const std::vector<int> ell{2, 3};
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        std::mt19937_64 rng(seed);
        ColouredDigraph g = cube(ell, 120);
        perturb::recolour_around(g, ell, 2, rng);
        REQUIRE(perturb::hypothesis_holds(g, ell));
        const StabilityReport report = reconstruct(g, ell, 2);
        CAPTURE(seed);
        CHECK(report.reconstructed);
        CHECK(report.slide_violations.empty());
        CHECK(report.deleted.size() <= 4);
    }
}

TEST_CASE("report writers") {
    const ColouredDigraph g = cube({2, 3}, 12);
    const StabilityReport report = reconstruct(g, std::vector<int>{2, 3});
    const ObservationResult obs = verify_observations(report, g);
    std::ostringstream text;
    write_stability_report(text, report, obs);
    CHECK(text.str().find("status: reconstructed") != std::string::npos);
    CHECK(text.str().find("  4: 1,0\n") != std::string::npos);
    CHECK(text.str().find("slide violations: 0") != std::string::npos);
    std::ostringstream csv;
    write_stability_csv(csv, report, obs);
    const std::string out = csv.str();
    CHECK(out.rfind("# ecdg-stability v1\nrecord,u,v,expected,actual,detail\n", 0) == 0);
    CHECK(out.find("coords,4,,,,1;0\n") != std::string::npos);
    CHECK(out.find("violation,") == std::string::npos);
}

TEST_CASE("reconstruct rejects colourings that break the hypothesis") {
    CHECK_THROWS_AS(reconstruct(cube({2, 3}, 12), std::vector<int>{1, 3}), HypothesisError);
}
