#include "ofsign/matching_sign.hpp"

#include <string>

namespace ofsign {

namespace {

std::string describe(Edge e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

void require_ordered(Edge e) {
    if (!(e.u < e.v)) throw MatchingError("edge " + describe(e) + " must satisfy u < v");
}

}  // namespace

int edge_crossing(Edge e, Edge f) {
    require_ordered(e);
    require_ordered(f);
    if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) {
        throw MatchingError("edges " + describe(e) + " and " + describe(f) + " share an endpoint");
    }
    const bool interleave = (e.u < f.u && f.u < e.v && e.v < f.v) || (f.u < e.u && e.u < f.v && f.v < e.v);
    return interleave ? 1 : 0;
}

FactorSign factor_sign(std::span<const Edge> factor, int n_vertices) {
    if (n_vertices < 0 || n_vertices % 2 != 0 || static_cast<int>(factor.size()) * 2 != n_vertices) {
        throw MatchingError("not a perfect matching on " + std::to_string(n_vertices) + " vertices");
    }
    std::vector<char> covered(n_vertices, 0);
    for (const Edge& e : factor) {
        require_ordered(e);
        if (e.u < 0 || e.v >= n_vertices) throw MatchingError("edge " + describe(e) + " out of range");
        if (covered[e.u] || covered[e.v]) {
            throw MatchingError("not a perfect matching: vertex covered twice by " + describe(e));
        }
        covered[e.u] = covered[e.v] = 1;
    }
    FactorSign out;
    for (std::size_t a = 0; a < factor.size(); ++a) {
        for (std::size_t b = a + 1; b < factor.size(); ++b) out.crossings += edge_crossing(factor[a], factor[b]);
    }
    out.sign = out.crossings % 2 ? -1 : 1;
    return out;
}

int parity_static_check(std::span<const Edge> ordered_factor) {
    int total = 0;
    for (std::size_t k = 0; k < ordered_factor.size(); ++k) {
        int with_subsequent = 0;
        for (std::size_t l = k + 1; l < ordered_factor.size(); ++l) {
            with_subsequent += edge_crossing(ordered_factor[k], ordered_factor[l]);
        }
        total += with_subsequent;
    }
    return total;
}

void OrderedFactor::append(Edge e) {
    require_ordered(e);
    int added = 0;
    for (const Edge& f : edges_) {
        if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) {
            throw MatchingError("edge " + describe(e) + " is not disjoint from " + describe(f));
        }
        added += edge_crossing(e, f);
    }
    edges_.push_back(e);
    parity_ = (parity_ + added) % 2;
}

UnmatchedList::UnmatchedList(int n_vertices)
    : n_(n_vertices), next_(n_vertices + 1), prev_(n_vertices + 1), matched_(n_vertices + 1, 0) {
    if (n_vertices < 0) throw MatchingError("negative vertex count");
    reset();
}

void UnmatchedList::reset() {
    // Circular: sentinel -> 0 -> 1 -> ... -> n-1 -> sentinel.
    for (int v = 0; v <= n_; ++v) {
        next_[v] = v == n_ ? (n_ == 0 ? n_ : 0) : v + 1;
        prev_[v] = v == 0 ? n_ : v - 1;
        matched_[v] = 0;
    }
    if (n_ > 0) prev_[n_] = n_ - 1;
}

int UnmatchedList::incremental_edge_sign(Edge e) const {
    require_ordered(e);
    if (!contains(e.u) || !contains(e.v)) {
        throw MatchingError("edge " + describe(e) + " has an endpoint that is already matched");
    }
    int sign = 1;
    for (Vertex b = next_[e.u]; b != e.v; b = next_[b]) sign = -sign;
    return sign;
}

void UnmatchedList::remove_pair(Vertex i, Vertex j) {
    if (i == j || !contains(i) || !contains(j)) {
        throw MatchingError("cannot match " + std::to_string(i) + " with " + std::to_string(j) +
                            ": vertex already matched or invalid");
    }
    splice_out(i);
    splice_out(j);
}

void UnmatchedList::restore_pair(Vertex i, Vertex j) {
    splice_in(j);
    splice_in(i);
}

std::vector<Vertex> UnmatchedList::traversal() const {
    std::vector<Vertex> out;
    for (Vertex v = next_[n_]; v != n_; v = next_[v]) out.push_back(v);
    return out;
}

}  // namespace ofsign
