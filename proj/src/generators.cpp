#include "ecdg/generators.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace ecdg {

ColouringRule::ColouringRule(Colour colour_count, Function rule, std::string description)
    : colour_count_(colour_count), rule_(std::move(rule)), description_(std::move(description)) {
    if (colour_count < 1 || colour_count > 255) {
        throw InputError("colour count must lie in 1..255");
    }
}

Colour ColouringRule::operator()(Vertex u, Vertex v) const {
    if (u == v) {
        throw InputError("colouring rules are undefined on loops");
    }
    if (u == 0 || v == 0) {
        throw InputError("vertices are positive integers");
    }
    return rule_(u, v);
}

std::size_t cube_size(std::span<const int> ell) {
    std::size_t size = 1;
    for (int l : ell) {
        if (l < 1) {
            throw InputError("every order entry must be at least 1");
        }
        if (size > std::numeric_limits<std::uint32_t>::max() / static_cast<std::size_t>(l)) {
            throw InputError("cube too large");
        }
        size *= static_cast<std::size_t>(l);
    }
    return size;
}

CubeSpec::CubeSpec(std::vector<int> ell, Assignment assign)
    : ell_(std::move(ell)), class_count_(cube_size(ell_)), assign_(std::move(assign)) {}

Coords CubeSpec::coords(Vertex v) const {
    Coords c = assign_(v);
    if (c.size() != ell_.size()) {
        throw InputError("assignment returned a position of the wrong dimension");
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < 0 || c[k] >= ell_[k]) {
            throw InputError("assignment returned a coordinate out of range");
        }
    }
    return c;
}

std::size_t CubeSpec::class_index(const Coords& c) const {
    if (c.size() != ell_.size()) {
        throw InputError("position has the wrong dimension");
    }
    std::size_t index = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < 0 || c[k] >= ell_[k]) {
            throw InputError("coordinate out of range");
        }
        index = index * static_cast<std::size_t>(ell_[k]) + static_cast<std::size_t>(c[k]);
    }
    return index;
}

Coords CubeSpec::coords_of_index(std::size_t index) const {
    if (index >= class_count_) {
        throw InputError("class index out of range");
    }
    Coords c(ell_.size(), 0);
    for (std::size_t k = ell_.size(); k-- > 0;) {
        c[k] = static_cast<int>(index % static_cast<std::size_t>(ell_[k]));
        index /= static_cast<std::size_t>(ell_[k]);
    }
    return c;
}

CubeSpec round_robin_cube_spec(std::vector<int> ell) {
    const std::size_t size = cube_size(ell);
    std::vector<int> radices = ell;
    return CubeSpec(std::move(ell), [radices = std::move(radices), size](Vertex v) {
        if (v == 0) {
            throw InputError("vertices are positive integers");
        }
        std::size_t rest = static_cast<std::size_t>(v - 1) % size;
        Coords c(radices.size(), 0);
        for (std::size_t k = radices.size(); k-- > 0;) {
            c[k] = static_cast<int>(rest % static_cast<std::size_t>(radices[k]));
            rest /= static_cast<std::size_t>(radices[k]);
        }
        return c;
    });
}

ColouringRule binary_halving_rule() {
    return ColouringRule(
        2,
        [](Vertex m, Vertex n) -> Colour {
            // The smallest t with m != n (mod 2^t) is one past the lowest differing bit.
            const int bit = std::countr_zero(m ^ n);
            return ((m >> bit) & 1u) == 0 ? 1 : 2;
        },
        "binary");
}

namespace {

std::string join_ell(const std::vector<int>& ell) {
    std::string text;
    for (std::size_t k = 0; k < ell.size(); ++k) {
        text += (k ? "," : "") + std::to_string(ell[k]);
    }
    return text;
}

Colour cube_colour(const Coords& from, const Coords& to, Colour clique) {
    for (std::size_t k = 0; k < from.size(); ++k) {
        if (from[k] != to[k]) {
            return from[k] < to[k] ? clique : static_cast<Colour>(k + 1);
        }
    }
    return clique;
}

}  // namespace

ColouringRule cube_colouring_rule(const CubeSpec& spec) {
    const Colour clique = static_cast<Colour>(spec.dimension() + 1);
    return ColouringRule(
        clique,
        [spec, clique](Vertex m, Vertex n) { return cube_colour(spec.coords(m), spec.coords(n), clique); },
        "cube " + join_ell(spec.ell()));
}

bool is_first_type_slide(const Coords& from, const Coords& to) {
    int drops = 0;
    for (std::size_t k = 0; k < from.size(); ++k) {
        if (from[k] > to[k]) {
            ++drops;
        } else if (from[k] < to[k]) {
            return false;
        }
    }
    return drops == 1;
}

bool is_second_type_slide(const Coords& from, const Coords& to) {
    for (std::size_t k = 0; k < from.size(); ++k) {
        if (from[k] > to[k]) {
            return false;
        }
    }
    return true;
}

bool slide_edge(const CubeSpec& spec, Vertex u, Vertex v) {
    if (u == v) {
        throw InputError("slide digraph has no loops");
    }
    const Coords from = spec.coords(u);
    const Coords to = spec.coords(v);
    return is_first_type_slide(from, to) || is_second_type_slide(from, to);
}

Chooser min_chooser() {
    return [](std::span<const Colour> admissible, Vertex, Vertex) { return admissible.front(); };
}

Chooser max_chooser() {
    return [](std::span<const Colour> admissible, Vertex, Vertex) { return admissible.back(); };
}

Chooser seeded_chooser(std::uint64_t seed) {
    return [seed](std::span<const Colour> admissible, Vertex u, Vertex v) {
        // splitmix64 finalizer
        std::uint64_t z = seed ^ ((static_cast<std::uint64_t>(u) << 32) | v);
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return admissible[z % admissible.size()];
    };
}

ColouringRule example4_rule(const CubeSpec& spec, Chooser chooser) {
    if (spec.dimension() < 2) {
        throw InputError("off-slide class pairs need r >= 2");
    }
    const Colour clique = static_cast<Colour>(spec.dimension() + 1);
    return ColouringRule(
        clique,
        [spec, clique, chooser = std::move(chooser)](Vertex m, Vertex n) -> Colour {
            const Coords from = spec.coords(m);
            const Coords to = spec.coords(n);
            if (is_first_type_slide(from, to) || is_second_type_slide(from, to)) {
                return cube_colour(from, to, clique);
            }
            std::vector<Colour> admissible;
            for (std::size_t k = 0; k < from.size(); ++k) {
                if (from[k] > to[k]) {
                    admissible.push_back(static_cast<Colour>(k + 1));
                }
            }
            const Colour picked = chooser(admissible, m, n);
            if (std::find(admissible.begin(), admissible.end(), picked) == admissible.end()) {
                throw InputError("chooser picked an inadmissible colour");
            }
            return picked;
        },
        "example4 " + join_ell(spec.ell()));
}

ColouredDigraph materialize(const ColouringRule& rule, Vertex n) {
    if (n < 1) {
        throw InputError("materialize needs n >= 1");
    }
    ColouredDigraph g(n, rule.colour_count(), 1);
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (u != v) {
                const Colour c = rule(u, v);
                if (c < 1 || c > rule.colour_count()) {
                    throw InputError("rule produced colour " + std::to_string(c) + " out of range");
                }
                g.set_colour(u, v, c);
            }
        }
    }
    return g;
}

std::uint64_t bit_reversal(Vertex v, int k) {
    std::uint64_t reversed = 0;
    for (int b = 0; b < k; ++b) {
        reversed = (reversed << 1) | ((v >> b) & 1u);
    }
    return reversed;
}

std::vector<Edge> verify_bit_reversal_monotone(const ColouredDigraph& g, int k) {
    if (g.colour_count() != 2) {
        throw InputError("bit-reversal check needs a 2-colouring");
    }
    if (k < 1 || k > 31) {
        throw InputError("k must lie in 1..31");
    }
    const std::uint32_t mask = (1u << k) - 1;
    std::vector<Edge> violations;
    const Vertex n = g.vertex_count();
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (u == v || ((u ^ v) & mask) == 0) {
                continue;
            }
            const bool climbs = bit_reversal(u, k) < bit_reversal(v, k);
            const bool red = g.at(u, v) == 1;
            if (red != climbs) {
                violations.push_back({u, v});
            }
        }
    }
    return violations;
}

std::vector<LexViolation> verify_lex_monotone(const ColouredDigraph& g, const CubeSpec& spec) {
    const Colour clique = static_cast<Colour>(spec.dimension() + 1);
    if (g.colour_count() != clique) {
        throw InputError("colouring has " + std::to_string(g.colour_count()) +
                         " colours but the cube needs " + std::to_string(clique));
    }
    const Vertex n = g.vertex_count();
    std::vector<Coords> position(n + 1);
    for (Vertex v = 1; v <= n; ++v) {
        position[v] = spec.coords(v);
    }
    std::vector<LexViolation> violations;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = 1; v <= n; ++v) {
            if (u == v) {
                continue;
            }
            const Colour c = g.at(u, v);
            const Coords& from = position[u];
            const Coords& to = position[v];
            if (c == clique) {
                if (from != to && !(from < to)) {
                    violations.push_back({{u, v}, c, 'a'});
                }
                continue;
            }
            const std::size_t i = c - 1;
            const bool earlier_equal = std::equal(from.begin(), from.begin() + static_cast<std::ptrdiff_t>(i), to.begin());
            if (!earlier_equal || from[i] <= to[i]) {
                violations.push_back({{u, v}, c, 'b'});
            }
        }
    }
    return violations;
}

std::vector<int> parse_ell(const std::string& text) {
    std::vector<int> ell;
    if (text.empty()) {
        return ell;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InputError("bad order entry '" + item + "'");
        }
        if (used != item.size()) {
            throw InputError("bad order entry '" + item + "'");
        }
        if (value < 1) {
            throw InputError("order entries must be at least 1");
        }
        ell.push_back(value);
    }
    if (!text.empty() && text.back() == ',') {
        throw InputError("trailing comma in order vector");
    }
    cube_size(ell);
    return ell;
}

ColouringRule parse_generator_spec(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string token; in >> token;) {
        tokens.push_back(token);
    }
    if (tokens.empty()) {
        throw InputError("empty generator spec");
    }
    const std::string& kind = tokens[0];
    if (kind == "binary") {
        if (tokens.size() != 1) {
            throw InputError("'binary' takes no arguments");
        }
        return binary_halving_rule();
    }
    if (kind == "cube") {
        if (tokens.size() > 2) {
            throw InputError("usage: cube l1,...,lr");
        }
        return cube_colouring_rule(round_robin_cube_spec(parse_ell(tokens.size() == 2 ? tokens[1] : "")));
    }
    if (kind == "example4") {
        if (tokens.size() < 2 || tokens.size() > 3) {
            throw InputError("usage: example4 l1,...,lr chooser=<min|max|seed:N>");
        }
        Chooser chooser = min_chooser();
        if (tokens.size() == 3) {
            const std::string& option = tokens[2];
            const std::string prefix = "chooser=";
            if (option.rfind(prefix, 0) != 0) {
                throw InputError("expected chooser=<min|max|seed:N>");
            }
            const std::string value = option.substr(prefix.size());
            if (value == "min") {
                chooser = min_chooser();
            } else if (value == "max") {
                chooser = max_chooser();
            } else if (value.rfind("seed:", 0) == 0) {
                try {
                    std::size_t used = 0;
                    const std::string digits = value.substr(5);
                    const auto seed = std::stoull(digits, &used);
                    if (used != digits.size()) {
                        throw InputError("bad seed");
                    }
                    chooser = seeded_chooser(seed);
                } catch (const std::logic_error&) {
                    throw InputError("bad chooser seed '" + value + "'");
                }
            } else {
                throw InputError("unknown chooser '" + value + "'");
            }
        }
        return example4_rule(round_robin_cube_spec(parse_ell(tokens[1])), std::move(chooser));
    }
    throw InputError("unknown generator '" + kind + "'");
}

}  // namespace ecdg
