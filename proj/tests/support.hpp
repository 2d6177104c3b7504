#pragma once

// Named graphs, corpus loading, seeded generators and a brute-force
// isomorphism test shared by the unit and acceptance suites.

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ofsign/graph.hpp"
#include "ofsign/nullstellensatz.hpp"

#ifndef OFSIGN_TEST_DATA_DIR
#error "OFSIGN_TEST_DATA_DIR must be defined"
#endif

namespace ofsign::testing {

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    return Graph(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < a; ++i) {
        for (Vertex j = a; j < a + b; ++j) edges.push_back({i, j});
    }
    return Graph(a + b, edges);
}

/// Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram on 5..9.
inline Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));
        edges.push_back({i, i + 5});
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
    }
    return Graph(10, edges);
}

inline Graph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs, int offset = 0) {
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.push_back(make_edge(a - offset, b - offset));
    return Graph(n, edges);
}

/// The 4-regular 10-vertex class-2 graph drawn with two 5-vertex blocks joined by 0-9 and 4-5.
inline Graph class2_quartic_10() {
    return from_pairs(10, {{0, 1}, {0, 2}, {0, 3}, {0, 9}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                           {4, 5}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}});
}

/// The cubic 10-vertex class-2 graph with a bridge, using the drawn vertex labels.
inline Graph class2_cubic_10() {
    // Node ids are mapped to their printed labels: 0->0 1->1 2->4 3->2 4->3 5->6 6->7 7->5 8->8 9->9.
    const int label[10] = {0, 1, 4, 2, 3, 6, 7, 5, 8, 9};
    const std::pair<int, int> drawn[] = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 7}, {3, 4},
                                         {5, 6}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}, {8, 9}};
    std::vector<Edge> edges;
    for (auto [a, b] : drawn) edges.push_back(make_edge(label[a], label[b]));
    return Graph(10, edges);
}

/// The drawn cubic zero-sum graph on 8 vertices, labels 1..8 shifted to 0..7.
inline Graph zero_sum_cubic_8() {
    return from_pairs(8, {{6, 7}, {2, 3}, {5, 8}, {4, 1}, {6, 8}, {7, 4}, {2, 5}, {1, 3}, {6, 3}, {7, 5}, {2, 1}, {4, 8}},
                      1);
}

/// Complement of the disjoint union of a 3-cycle and a 5-cycle.
inline Graph complement_c3_c5() {
    return from_pairs(8, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}}).complement();
}

inline std::vector<Graph> load_corpus(const std::string& name) {
    const std::string path = std::string(OFSIGN_TEST_DATA_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_graph_line(line));
    }
    return out;
}

/// All connected regular graphs of even order up to `max_order` from the corpus files.
inline std::vector<Graph> connected_regular_up_to(int max_order) {
    std::vector<Graph> out;
    for (int n = 2; n <= max_order; n += 2) {
        auto part = load_corpus("regular_connected_n" + std::to_string(n) + ".g6");
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Random simple k-regular graph by the pairing model with rejection; dense
/// degrees go through the complement.
inline Graph random_regular_graph(int n, int k, std::mt19937_64& rng) {
    if (2 * k > n - 1) return random_regular_graph(n, n - 1 - k, rng).complement();
    while (true) {
        std::vector<Vertex> points;
        for (Vertex v = 0; v < n; ++v) points.insert(points.end(), k, v);
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            if (points[i] == points[i + 1]) {
                simple = false;
                break;
            }
            const Edge e = make_edge(points[i], points[i + 1]);
            if (std::find(edges.begin(), edges.end(), e) != edges.end()) simple = false;
            edges.push_back(e);
        }
        if (simple) return Graph(n, edges);
    }
}

/// Brute-force isomorphism with degree-compatible backtracking; fine for n <= 10.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    auto da = a.degree_sequence();
    auto db = b.degree_sequence();
    auto sa = da;
    auto sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    const int n = a.order();
    std::vector<Vertex> map(n, -1);
    std::vector<char> used(n, 0);
    auto extend = [&](auto&& self, Vertex v) -> bool {
        if (v == n) return true;
        for (Vertex w = 0; w < n; ++w) {
            if (used[w] || da[v] != db[w]) continue;
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(map[u], w);
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            used[w] = 0;
        }
        return false;
    };
    return extend(extend, 0);
}

/// Small rational: an integer in [-5, 5], halved one time in four.
inline Rational random_rational(std::mt19937_64& rng) {
    Rational r(static_cast<long>(rng() % 11) - 5);
    if (rng() % 4 == 0) r /= 2;
    return r;
}

inline std::vector<Rational> random_distinct_list(std::size_t size, std::mt19937_64& rng) {
    std::vector<Rational> out;
    while (out.size() < size) {
        const Rational r = random_rational(rng);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
}

/// Random list system with 1..max_vars variables and list sizes 1..max_size.
inline ListSystem random_list_system(int max_vars, int max_size, std::mt19937_64& rng) {
    const int n = 1 + static_cast<int>(rng() % max_vars);
    std::vector<std::vector<Rational>> lists;
    for (int j = 0; j < n; ++j) lists.push_back(random_distinct_list(1 + rng() % max_size, rng));
    return ListSystem(std::move(lists));
}

/// Random product of `degree` affine forms in `n_vars` variables.
inline FactoredPolynomial random_factored(int n_vars, int degree, std::mt19937_64& rng) {
    FactoredPolynomial p(n_vars);
    while (p.degree() < degree) {
        AffineForm f;
        bool linear = false;
        for (int j = 0; j < n_vars; ++j) {
            f.coefficients.push_back(rng() % 3 == 0 ? Rational(0) : random_rational(rng));
            linear = linear || f.coefficients.back() != 0;
        }
        f.constant = random_rational(rng);
        if (linear) p.add_factor(std::move(f));
    }
    return p;
}

/// Same linear parts with fresh random constants, so the top-degree component is unchanged.
inline FactoredPolynomial reshuffle_constants(const FactoredPolynomial& p, std::mt19937_64& rng) {
    FactoredPolynomial out(p.n_vars());
    for (AffineForm f : p.factors()) {
        f.constant = random_rational(rng);
        out.add_factor(std::move(f));
    }
    return out;
}

}  // namespace ofsign::testing
