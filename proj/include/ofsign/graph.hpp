#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ofsign {

using Vertex = int;

/// Undirected edge stored with `u < v`.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds an edge with its endpoints in ascending order.
constexpr Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class GraphError : public std::runtime_error {
public:
    enum class Kind { Parse, InvalidEdge, InvalidPermutation, NotRegular, OddOrder, TooLarge };

    GraphError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Simple undirected graph on vertices 0..order()-1.
///
/// The vertex numbering is part of the value: crossing signs of 1-factors are
/// defined relative to it, so nothing in this library renumbers silently.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    /// Throws GraphError(InvalidEdge) on loops, duplicates or out-of-range endpoints.
    Graph(int order, std::span<const Edge> edges);

    int order() const noexcept { return order_; }
    std::size_t size() const noexcept { return edges_.size(); }

    /// Edges in lexicographic order.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Neighbours of `v` in ascending order.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool has_edge(Vertex a, Vertex b) const;

    bool is_regular(int k) const;
    bool is_connected() const;
    std::vector<int> degree_sequence() const;

    Graph complement() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Per-vertex strictly increasing lists of the neighbours greater than the vertex.
using SuccessorAdjacency = std::vector<std::vector<Vertex>>;

SuccessorAdjacency to_successor(const Graph& g);
Graph from_successor(const SuccessorAdjacency& succ);

/// Decodes one graph6 line (up to 62 vertices). An optional `>>graph6<<` header is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Parses the bracketed successor form, e.g. `[[1,2,3],[2,3],[3],[]]` for K4.
Graph parse_adjacency(std::string_view text);
std::string format_adjacency(const SuccessorAdjacency& succ);

/// Accepts either format: lines starting with `[` are bracket lists, anything else graph6.
Graph parse_graph_line(std::string_view text);

/// Maps vertex `i` to `perm[i]`. Throws GraphError(InvalidPermutation) if perm is not a bijection.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Returns the common degree k. Throws OddOrder for an odd number of vertices,
/// NotRegular (naming two vertices of different degree) otherwise.
int validate_regular_even(const Graph& g);

}  // namespace ofsign
