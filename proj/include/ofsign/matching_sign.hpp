#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "ofsign/graph.hpp"

namespace ofsign {

class MatchingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// 1 if the chords `e` and `f` cross when the vertices sit in order on a
/// cycle, i.e. their endpoint intervals interleave. Throws on a shared endpoint.
int edge_crossing(Edge e, Edge f);

struct FactorSign {
    int crossings = 0;
    int sign = 1;
};

/// Crossing count over all pairs of a perfect matching on `n_vertices`, and (-1)^count.
FactorSign factor_sign(std::span<const Edge> factor, int n_vertices);

/// Counts crossings of each edge with the edges that follow it in the sequence.
/// Equal to factor_sign(...).crossings for any ordering of the same matching.
int parity_static_check(std::span<const Edge> ordered_factor);

/// A partial matching built edge by edge, carrying its crossing parity.
class OrderedFactor {
public:
    OrderedFactor() = default;

    /// Throws MatchingError if `e` shares a vertex with an edge already present.
    void append(Edge e);

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    int parity() const noexcept { return parity_; }
    int sign() const noexcept { return parity_ ? -1 : 1; }

private:
    std::vector<Edge> edges_;
    int parity_ = 0;
};

/// Doubly linked list of the unmatched vertices 0..n-1 in increasing order.
///
/// Index `n` is the sentinel; `next(sentinel())` is the least unmatched vertex and
/// equals `sentinel()` once every vertex is matched. Removal is a splice-out that
/// leaves the removed node's own links intact, so restoring in reverse (LIFO)
/// order splices it back.
class UnmatchedList {
public:
    explicit UnmatchedList(int n_vertices = 0);

    int sentinel() const noexcept { return n_; }
    int size() const noexcept { return n_; }
    bool empty() const noexcept { return next_[n_] == n_; }
    Vertex first() const noexcept { return next_[n_]; }
    Vertex next(Vertex v) const noexcept { return next_[v]; }
    Vertex prev(Vertex v) const noexcept { return prev_[v]; }
    bool contains(Vertex v) const noexcept { return v >= 0 && v < n_ && !matched_[v]; }

    /// (-1)^(number of unmatched vertices strictly between e.u and e.v). Read-only.
    int incremental_edge_sign(Edge e) const;

    /// Splices both endpoints out. Throws MatchingError if either is already matched.
    void remove_pair(Vertex i, Vertex j);
    /// Undoes the matching remove_pair(i, j); must be called in LIFO order.
    void restore_pair(Vertex i, Vertex j);

    /// Marks every vertex unmatched again.
    void reset();

    std::vector<Vertex> traversal() const;

    // Unchecked splice primitives for the enumeration hot path.
    void splice_out(Vertex v) noexcept {
        next_[prev_[v]] = next_[v];
        prev_[next_[v]] = prev_[v];
        matched_[v] = 1;
    }
    void splice_in(Vertex v) noexcept {
        next_[prev_[v]] = v;
        prev_[next_[v]] = v;
        matched_[v] = 0;
    }

private:
    int n_ = 0;
    std::vector<int> next_;
    std::vector<int> prev_;
    std::vector<char> matched_;
};

}  // namespace ofsign
