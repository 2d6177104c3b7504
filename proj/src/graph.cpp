#include "ofsign/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>

namespace ofsign {

namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6MaxOrder = 62;

[[noreturn]] void parse_error(const std::string& msg) {
    throw GraphError(GraphError::Kind::Parse, msg);
}

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph::Graph(int order) : order_(order), adjacency_(order < 0 ? 0 : order) {
    if (order < 0) throw GraphError(GraphError::Kind::InvalidEdge, "negative vertex count");
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u == e.v) {
            throw GraphError(GraphError::Kind::InvalidEdge, "loop at vertex " + std::to_string(e.u));
        }
        e = make_edge(e.u, e.v);
        if (e.u < 0 || e.v >= order_) {
            throw GraphError(GraphError::Kind::InvalidEdge,
                             "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
        }
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw GraphError(GraphError::Kind::InvalidEdge,
                         "duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    }
    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= order_ || b >= order_) return false;
    const auto& nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

bool Graph::is_regular(int k) const {
    return std::all_of(adjacency_.begin(), adjacency_.end(),
                       [k](const auto& nbrs) { return static_cast<int>(nbrs.size()) == k; });
}

bool Graph::is_connected() const {
    if (order_ == 0) return true;
    std::vector<char> seen(order_, 0);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        const Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : adjacency_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                frontier.push(w);
            }
        }
    }
    return reached == order_;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> degrees(order_);
    for (int v = 0; v < order_; ++v) degrees[v] = degree(v);
    return degrees;
}

Graph Graph::complement() const {
    std::vector<Edge> missing;
    for (Vertex a = 0; a < order_; ++a) {
        for (Vertex b = a + 1; b < order_; ++b) {
            if (!has_edge(a, b)) missing.push_back({a, b});
        }
    }
    return Graph(order_, missing);
}

SuccessorAdjacency to_successor(const Graph& g) {
    SuccessorAdjacency succ(g.order());
    for (const Edge& e : g.edges()) succ[e.u].push_back(e.v);
    return succ;
}

Graph from_successor(const SuccessorAdjacency& succ) {
    const int n = static_cast<int>(succ.size());
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        Vertex last = v;
        for (Vertex w : succ[v]) {
            if (w <= last) {
                parse_error("successor list of vertex " + std::to_string(v) +
                            " must be strictly increasing and greater than the vertex (saw " +
                            std::to_string(w) + ")");
            }
            if (w >= n) {
                parse_error("neighbor " + std::to_string(w) + " of vertex " + std::to_string(v) +
                            " out of range");
            }
            edges.push_back({v, w});
            last = w;
        }
    }
    return Graph(n, edges);
}

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) parse_error("empty graph6 string");
    for (char ch : text) {
        if (ch < kGraph6Offset || ch > kGraph6Offset + 63) {
            parse_error(std::string("invalid graph6 character '") + ch + "'");
        }
    }
    const int n = text.front() - kGraph6Offset;
    if (n > kGraph6MaxOrder) parse_error("graph6 long form (more than 62 vertices) is not supported");
    text.remove_prefix(1);

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected_chars = (bits + 5) / 6;
    if (text.size() != expected_chars) {
        parse_error("graph6 length mismatch: " + std::to_string(n) + " vertices need " +
                    std::to_string(expected_chars) + " data characters, got " + std::to_string(text.size()));
    }

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const int chunk = text[bit / 6] - kGraph6Offset;
            if (chunk & (0x20 >> (bit % 6))) edges.push_back({i, j});
        }
    }
    for (; bit < expected_chars * 6; ++bit) {
        const int chunk = text[bit / 6] - kGraph6Offset;
        if (chunk & (0x20 >> (bit % 6))) parse_error("graph6 padding bits must be zero");
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw GraphError(GraphError::Kind::TooLarge, "graph6 long form is not supported");
    std::string out(1, static_cast<char>(n + kGraph6Offset));
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<int> chunks((bits + 5) / 6, 0);
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) chunks[bit / 6] |= 0x20 >> (bit % 6);
        }
    }
    for (int c : chunks) out.push_back(static_cast<char>(c + kGraph6Offset));
    return out;
}

Graph parse_adjacency(std::string_view text) {
    text = trim(text);
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    const auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) {
            parse_error(std::string("expected '") + c + "' at offset " + std::to_string(pos));
        }
        ++pos;
    };
    const auto peek = [&]() -> char {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    };

    SuccessorAdjacency succ;
    expect('[');
    if (peek() != ']') {
        while (true) {
            expect('[');
            std::vector<Vertex>& row = succ.emplace_back();
            if (peek() != ']') {
                while (true) {
                    skip_ws();
                    Vertex value = 0;
                    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
                    if (ec != std::errc{}) parse_error("expected vertex index at offset " + std::to_string(pos));
                    pos = static_cast<std::size_t>(end - text.data());
                    row.push_back(value);
                    if (peek() == ',') {
                        ++pos;
                        continue;
                    }
                    break;
                }
            }
            expect(']');
            if (peek() == ',') {
                ++pos;
                continue;
            }
            break;
        }
    }
    expect(']');
    skip_ws();
    if (pos != text.size()) parse_error("trailing characters after adjacency list");
    return from_successor(succ);
}

std::string format_adjacency(const SuccessorAdjacency& succ) {
    std::string out = "[";
    for (std::size_t v = 0; v < succ.size(); ++v) {
        if (v) out += ',';
        out += '[';
        for (std::size_t i = 0; i < succ[v].size(); ++i) {
            if (i) out += ',';
            out += std::to_string(succ[v][i]);
        }
        out += ']';
    }
    out += ']';
    return out;
}

Graph parse_graph_line(std::string_view text) {
    text = trim(text);
    if (text.starts_with('[')) return parse_adjacency(text);
    return parse_graph6(text);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) {
        throw GraphError(GraphError::Kind::InvalidPermutation, "permutation has wrong length");
    }
    std::vector<char> hit(n, 0);
    for (Vertex p : perm) {
        if (p < 0 || p >= n || hit[p]) {
            throw GraphError(GraphError::Kind::InvalidPermutation, "permutation is not a bijection");
        }
        hit[p] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const Edge& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
    return Graph(n, edges);
}

int validate_regular_even(const Graph& g) {
    const int n = g.order();
    if (n % 2 != 0) {
        throw GraphError(GraphError::Kind::OddOrder, "graph has odd order " + std::to_string(n));
    }
    if (n == 0) return 0;
    const int k = g.degree(0);
    for (Vertex v = 1; v < n; ++v) {
        if (g.degree(v) != k) {
            throw GraphError(GraphError::Kind::NotRegular,
                             "graph is not regular: vertex 0 has degree " + std::to_string(k) + ", vertex " +
                                 std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
        }
    }
    return k;
}

}  // namespace ofsign
