// Command-line front end over the C interface.
//
// Exit codes: 0 success, 1 violations found (or the path hypothesis fails), 2 bad input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecdg/ecdg.h"

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kInputError = 2;

struct GraphDeleter {
    void operator()(ecdg_graph* g) const { ecdg_graph_free(g); }
};
struct PartitionDeleter {
    void operator()(ecdg_partition* p) const { ecdg_partition_free(p); }
};
struct StabilityDeleter {
    void operator()(ecdg_stability* s) const { ecdg_stability_free(s); }
};
using Graph = std::unique_ptr<ecdg_graph, GraphDeleter>;
using Partition = std::unique_ptr<ecdg_partition, PartitionDeleter>;
using Stability = std::unique_ptr<ecdg_stability, StabilityDeleter>;

// Thrown when a library call fails; carries the exit code.
struct Failure {
    int code;
};

int exit_code_of(ecdg_status status) {
    return status == ECDG_HYPOTHESIS || status == ECDG_PRECONDITION ? kViolations : kInputError;
}

void check(ecdg_status status) {
    if (status != ECDG_OK) {
        std::cerr << "error (" << ecdg_status_name(status) << "): " << ecdg_last_error() << '\n';
        throw Failure{exit_code_of(status)};
    }
}

std::string take(char* text) {
    std::string copy = text == nullptr ? "" : text;
    ecdg_string_free(text);
    return copy;
}

struct Options {
    std::vector<std::string> input;
    std::string ell;
    std::string colours;
    std::string out;
    std::string slide;
    std::uint32_t n = 0;
    std::uint32_t colour = 0;
    std::uint32_t max_n = 0;
    std::size_t threshold = 0;
    int bit_reversal = -1;
    bool csv = false;
};

// A single existing path is an edge-list file; anything else is a generator spec needing --n.
Graph load(const Options& o) {
    ecdg_graph* g = nullptr;
    if (o.input.size() == 1 && std::filesystem::is_regular_file(o.input.front())) {
        check(ecdg_graph_load(o.input.front().c_str(), &g));
        return Graph(g);
    }
    std::string spec;
    for (const std::string& token : o.input) {
        spec += (spec.empty() ? "" : " ") + token;
    }
    if (o.n == 0) {
        std::cerr << "error: '" << spec << "' is not a file; generator specs need --n\n";
        throw Failure{kInputError};
    }
    check(ecdg_graph_generate(spec.c_str(), o.n, &g));
    return Graph(g);
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file || !(file << text)) {
        std::cerr << "error: cannot write " << o.out << '\n';
        throw Failure{kInputError};
    }
}

Partition compute_partition(const ecdg_graph* g, const Options& o) {
    ecdg_partition* p = nullptr;
    check(ecdg_partition_compute(g, o.ell.c_str(), &p));
    return Partition(p);
}

int run_gen(const Options& o) {
    Graph g = load(o);
    char* text = nullptr;
    check(ecdg_graph_edge_list(g.get(), &text));
    emit(o, take(text));
    return kOk;
}

int run_verify(const Options& o) {
    Graph g = load(o);
    if (o.bit_reversal >= 0) {
        const std::uint32_t n = ecdg_graph_vertex_count(g.get());
        int top = o.bit_reversal;
        if (top == 0) {
            while (top < 31 && (std::uint64_t{1} << (top + 1)) <= n) {
                ++top;
            }
            top = std::max(top, 1);
        }
        std::size_t total = 0;
        std::string text;
        for (int k = o.bit_reversal == 0 ? 1 : top; k <= top; ++k) {
            std::size_t violations = 0;
            check(ecdg_verify_bit_reversal(g.get(), k, &violations));
            text += "bit-reversal k=" + std::to_string(k) + ": " + std::to_string(violations) + " violations\n";
            total += violations;
        }
        emit(o, text);
        return total == 0 ? kOk : kViolations;
    }
    std::size_t violations = 0;
    char* text = nullptr;
    check(ecdg_verify_report(g.get(), o.ell.c_str(), &violations, &text));
    emit(o, take(text));
    return violations == 0 ? kOk : kViolations;
}

int run_partition(const Options& o, bool paths) {
    Graph g = load(o);
    Partition p = compute_partition(g.get(), o);
    char* text = nullptr;
    check(paths ? ecdg_pathcover_render(p.get(), &text) : ecdg_partition_render(p.get(), &text));
    emit(o, take(text));
    return kOk;
}

int run_density(const Options& o) {
    Graph g = load(o);
    Partition p = compute_partition(g.get(), o);
    char* text = nullptr;
    check(ecdg_density_render(p.get(), 0, o.csv ? 1 : 0, &text));
    emit(o, take(text));
    return kOk;
}

int run_ghrv(const Options& o) {
    Graph g = load(o);
    char* text = nullptr;
    check(ecdg_ghrv_render(g.get(), o.colours.c_str(), &text));
    emit(o, take(text));
    return kOk;
}

int run_tournament(const Options& o) {
    Graph g = load(o);
    int exists = 0;
    char* text = nullptr;
    check(ecdg_tournament_render(g.get(), o.colours.c_str(), &exists, &text));
    emit(o, take(text));
    return exists ? kOk : kViolations;
}

int run_stability(const Options& o) {
    Graph g = load(o);
    ecdg_stability* raw = nullptr;
    check(ecdg_stability_compute(g.get(), o.ell.c_str(), o.threshold, &raw));
    Stability s(raw);
    char* text = nullptr;
    check(ecdg_stability_render(s.get(), o.csv ? 1 : 0, &text));
    emit(o, take(text));
    return ecdg_stability_clean(s.get()) && ecdg_stability_observations_pass(s.get()) ? kOk : kViolations;
}

int run_export(const Options& o) {
    Graph g = load(o);
    char* text = nullptr;
    check(ecdg_export_dot(g.get(), o.colour, o.slide.c_str(), o.max_n, &text));
    emit(o, take(text));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge-coloured complete symmetric digraphs: generate, verify, partition, reconstruct"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* cmd) {
        cmd->add_option("input", o.input, "edge-list file, or a generator spec such as: cube 2,3")
            ->required()
            ->expected(1, -1);
        cmd->add_option("--n", o.n, "prefix size when the input is a generator spec")->check(CLI::Range(1u, 100000u));
        cmd->add_option("--out", o.out, "write output here instead of stdout");
    };
    auto ell = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--ell", o.ell, "order vector, e.g. 2,3");
        if (required) {
            opt->required();
        }
    };

    auto* gen = app.add_subcommand("gen", "materialize a generator spec as an edge list");
    input(gen);
    auto* verify = app.add_subcommand("verify", "check path bounds and monotonicity invariants");
    input(verify);
    ell(verify, false);
    verify->add_option("--bit-reversal", o.bit_reversal, "check bit-reversal monotonicity for this k (0: every k)")
        ->check(CLI::Range(0, 31));
    auto* part = app.add_subcommand("partition", "partition into clique-colour classes");
    input(part);
    ell(part, true);
    auto* cover = app.add_subcommand("pathcover", "one monochromatic path per class");
    input(cover);
    ell(cover, true);
    auto* ghrv = app.add_subcommand("ghrv", "longest-path layering of a colour subgraph");
    input(ghrv);
    ghrv->add_option("--colours", o.colours, "colours to include, e.g. 1,2 (default: all)");
    auto* tour = app.add_subcommand("tournament", "spanning transitive tournament inside a colour subgraph");
    input(tour);
    tour->add_option("--colours", o.colours, "colours to include, e.g. 3 (default: all)");
    auto* stab = app.add_subcommand("stability", "reconstruct cube positions and check the slide digraph");
    input(stab);
    ell(stab, true);
    stab->add_option("--threshold", o.threshold, "largest clique-colour matching treated as absent");
    stab->add_flag("--csv", o.csv, "CSV output");
    auto* density = app.add_subcommand("density", "prefix density of each class");
    input(density);
    ell(density, true);
    density->add_flag("--csv", o.csv, "CSV output");
    auto* exp = app.add_subcommand("export", "Graphviz DOT output");
    input(exp);
    exp->add_option("--colour", o.colour, "only this colour");
    exp->add_option("--slide", o.slide, "only slide-digraph edges for this order vector");
    exp->add_option("--max-n", o.max_n, "raise the 200-vertex limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (verify->parsed() && o.bit_reversal < 0 && o.ell.empty()) {
            std::cerr << "error: verify needs --ell or --bit-reversal\n";
            return kInputError;
        }
        if (gen->parsed()) return run_gen(o);
        if (verify->parsed()) return run_verify(o);
        if (part->parsed()) return run_partition(o, false);
        if (cover->parsed()) return run_partition(o, true);
        if (ghrv->parsed()) return run_ghrv(o);
        if (tour->parsed()) return run_tournament(o);
        if (stab->parsed()) return run_stability(o);
        if (density->parsed()) return run_density(o);
        if (exp->parsed()) return run_export(o);
    } catch (const Failure& f) {
        return f.code;
    }
    return kInputError;
}
