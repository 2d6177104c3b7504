#include "ofsign/oracle.hpp"

#include <algorithm>
#include <string>

namespace ofsign::oracle {

namespace {

// Chords (a,b) and (c,d) with a<b, c<d and four distinct endpoints cross iff
// exactly one endpoint of the second lies strictly inside the first.
bool chords_cross(Edge e, Edge f) {
    const bool c_inside = e.u < f.u && f.u < e.v;
    const bool d_inside = e.u < f.v && f.v < e.v;
    return c_inside != d_inside;
}

bool disjoint(Edge e, Edge f) { return e.u != f.u && e.u != f.v && e.v != f.u && e.v != f.v; }

void require_desk_scale(const Graph& g, bool force) {
    if (!force && !within_desk_scale(g)) {
        throw ScaleError("graph with " + std::to_string(g.order()) +
                         " vertices exceeds the oracle's desk scale; pass force to override");
    }
}

/// Incidence lists and crossing table shared by the colouring checks.
class Checker {
public:
    explicit Checker(const Graph& g) : g_(g), incident_(g.order()) {
        const auto& edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            incident_[edges[i].u].push_back(static_cast<int>(i));
            incident_[edges[i].v].push_back(static_cast<int>(i));
        }
        crossing_.assign(edges.size() * edges.size(), 0);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = 0; j < edges.size(); ++j) {
                if (i != j && disjoint(edges[i], edges[j]) && chords_cross(edges[i], edges[j])) {
                    crossing_[i * edges.size() + j] = 1;
                }
            }
        }
    }

    void require_proper(const EdgeColoring& c) const {
        if (c.colors.size() != g_.size()) throw OracleError("colouring has the wrong number of edges");
        for (Vertex v = 0; v < g_.order(); ++v) {
            const int k = static_cast<int>(incident_[v].size());
            std::uint64_t seen = 0;
            for (int e : incident_[v]) {
                const int colour = c.colors[e];
                if (colour < 1 || colour > k || (seen >> colour & 1)) {
                    throw OracleError("improper colouring at vertex " + std::to_string(v));
                }
                seen |= std::uint64_t{1} << colour;
            }
        }
    }

    int relative_sign(const EdgeColoring& c, const EdgeColoring& c0) const {
        int sign = 1;
        std::vector<int> position_in_c0;
        std::vector<int> perm;
        for (Vertex v = 0; v < g_.order(); ++v) {
            const auto& star = incident_[v];
            const int k = static_cast<int>(star.size());
            position_in_c0.assign(k + 1, -1);
            for (int q = 0; q < k; ++q) position_in_c0[c0.colors[star[q]]] = q;
            perm.resize(k);
            for (int p = 0; p < k; ++p) perm[p] = position_in_c0[c.colors[star[p]]];
            sign *= permutation_sign(perm);
        }
        return sign;
    }

    int crossings(const EdgeColoring& c) const {
        const std::size_t m = g_.size();
        int max_colour = 0;
        for (int colour : c.colors) max_colour = std::max(max_colour, colour);
        buckets_.assign(max_colour + 1, {});
        for (std::size_t i = 0; i < m; ++i) buckets_[c.colors[i]].push_back(static_cast<int>(i));
        int total = 0;
        for (const auto& bucket : buckets_) {
            for (std::size_t a = 0; a < bucket.size(); ++a) {
                for (std::size_t b = a + 1; b < bucket.size(); ++b) total += crossing_[bucket[a] * m + bucket[b]];
            }
        }
        return total;
    }

private:
    const Graph& g_;
    std::vector<std::vector<int>> incident_;
    std::vector<char> crossing_;
    mutable std::vector<std::vector<int>> buckets_;
};

void colour_edges(const std::vector<Edge>& edges, int k, std::size_t index, std::vector<std::uint64_t>& used,
                  EdgeColoring& c, const ColoringVisitor& visit) {
    if (index == edges.size()) {
        visit(c);
        return;
    }
    const Edge e = edges[index];
    for (int colour = 1; colour <= k; ++colour) {
        const std::uint64_t b = std::uint64_t{1} << colour;
        if ((used[e.u] | used[e.v]) & b) continue;
        used[e.u] |= b;
        used[e.v] |= b;
        c.colors[index] = colour;
        colour_edges(edges, k, index + 1, used, c, visit);
        used[e.u] &= ~b;
        used[e.v] &= ~b;
    }
}

}  // namespace

bool within_desk_scale(const Graph& g) {
    if (g.order() <= 8) return true;
    if (g.order() > 10) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 3) return false;
    }
    return true;
}

void enumerate_colorings(const Graph& g, int k, const ColoringVisitor& visit, bool force) {
    if (!g.is_regular(k)) throw OracleError("graph is not " + std::to_string(k) + "-regular");
    if (k > 62) throw OracleError("too many colours");
    require_desk_scale(g, force);
    EdgeColoring c{std::vector<int>(g.size(), 0)};
    std::vector<std::uint64_t> used(g.order(), 0);
    colour_edges(g.edges(), k, 0, used, c, visit);
}

int permutation_sign(std::span<const int> perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    return inversions % 2 ? -1 : 1;
}

int complete_graph_polynomial_sign(std::span<const int> values) {
    int sign = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            const int diff = values[i] - values[j];
            if (diff == 0) return 0;
            if (diff < 0) sign = -sign;
        }
    }
    return sign;
}

int sign_vs_reference(const Graph& g, const EdgeColoring& c, const EdgeColoring& c0) {
    const Checker checker(g);
    checker.require_proper(c);
    checker.require_proper(c0);
    return checker.relative_sign(c, c0);
}

int monochromatic_crossings(const Graph& g, const EdgeColoring& c) {
    if (c.colors.size() != g.size()) throw OracleError("colouring has the wrong number of edges");
    return Checker(g).crossings(c);
}

int crossing_sign(const Graph& g, const EdgeColoring& c) {
    const Checker checker(g);
    checker.require_proper(c);
    return checker.crossings(c) % 2 ? -1 : 1;
}

std::vector<std::uint64_t> perfect_matchings(const Graph& g) {
    const auto& edges = g.edges();
    if (edges.size() > 64) throw ScaleError("perfect matching oracle supports at most 64 edges");
    if (g.order() % 2 != 0) return {};
    std::vector<std::uint64_t> out;
    std::vector<char> covered(g.order(), 0);
    std::function<void(std::uint64_t)> extend = [&](std::uint64_t chosen) {
        const auto free = std::find(covered.begin(), covered.end(), 0);
        if (free == covered.end()) {
            out.push_back(chosen);
            return;
        }
        const Vertex v = static_cast<Vertex>(free - covered.begin());
        covered[v] = 1;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Edge e = edges[i];
            if (e.u != v && e.v != v) continue;
            const Vertex w = e.u == v ? e.v : e.u;
            if (covered[w]) continue;
            covered[w] = 1;
            extend(chosen | std::uint64_t{1} << i);
            covered[w] = 0;
        }
        covered[v] = 0;
    };
    extend(0);
    return out;
}

SignSumResult brute_signsum(const Graph& g, bool force) {
    validate_regular_even(g);
    require_desk_scale(g, force);
    const auto& edges = g.edges();
    const std::vector<std::uint64_t> matchings = perfect_matchings(g);

    std::vector<int> matching_crossings;
    matching_crossings.reserve(matchings.size());
    for (std::uint64_t m : matchings) {
        std::vector<Edge> chosen;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (m >> i & 1) chosen.push_back(edges[i]);
        }
        int count = 0;
        for (std::size_t a = 0; a < chosen.size(); ++a) {
            for (std::size_t b = a + 1; b < chosen.size(); ++b) count += chords_cross(chosen[a], chosen[b]);
        }
        matching_crossings.push_back(count);
    }

    // An unordered set of disjoint matchings covering E is reached exactly once
    // by always choosing the matching that covers the lowest uncovered edge.
    SignSumResult result;
    std::function<void(std::uint64_t, int)> cover = [&](std::uint64_t uncovered, int crossings) {
        if (uncovered == 0) {
            result.factorization_count += 1;
            result.signed_sum += crossings % 2 ? -1 : 1;
            return;
        }
        const std::uint64_t lowest = uncovered & (~uncovered + 1);
        for (std::size_t i = 0; i < matchings.size(); ++i) {
            const std::uint64_t m = matchings[i];
            if ((m & lowest) && (m & ~uncovered) == 0) cover(uncovered & ~m, crossings + matching_crossings[i]);
        }
    };
    const std::uint64_t all = edges.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges.size()) - 1;
    cover(all, 0);
    return result;
}

ColoringSummary coloring_summary(const Graph& g, bool force) {
    const int k = validate_regular_even(g);
    const Checker checker(g);
    ColoringSummary summary;
    EdgeColoring reference;
    int reference_sign = 1;
    bool have_reference = false;
    enumerate_colorings(
        g, k,
        [&](const EdgeColoring& c) {
            if (!have_reference) {
                reference = c;
                reference_sign = checker.crossings(reference) % 2 ? -1 : 1;
                have_reference = true;
            }
            const int sign = checker.relative_sign(c, reference) * reference_sign;
            const int by_crossings = checker.crossings(c) % 2 ? -1 : 1;
            summary.colorings += 1;
            summary.signed_sum += sign;
            if (sign != by_crossings) ++summary.theorem_mismatches;
        },
        force);
    return summary;
}

}  // namespace ofsign::oracle
