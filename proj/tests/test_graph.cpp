#include <doctest.h>

#include <random>

#include "ofsign/graph.hpp"
#include "support.hpp"

using namespace ofsign;
using namespace ofsign::testing;

namespace {

GraphError::Kind error_kind(auto&& fn) {
    try {
        fn();
    } catch (const GraphError& e) {
        return e.kind();
    }
    FAIL("expected GraphError");
    return GraphError::Kind::Parse;
}

}  // namespace

TEST_CASE("graph6 decoding") {
    const Graph k4 = parse_graph6("C~");
    CHECK(k4 == complete_graph(4));
    CHECK(k4.size() == 6);

    // '_' = 63 + 32: the single upper-triangle bit is set.
    CHECK(parse_graph6("A_") == complete_graph(2));
    const Graph two = parse_graph6("A?");
    CHECK(two.order() == 2);
    CHECK(two.size() == 0);

    CHECK(parse_graph6(">>graph6<<C~\n") == complete_graph(4));
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 errors") {
    CHECK(error_kind([] { parse_graph6(""); }) == GraphError::Kind::Parse);
    CHECK(error_kind([] { parse_graph6("C"); }) == GraphError::Kind::Parse);     // missing data
    CHECK(error_kind([] { parse_graph6("C~~"); }) == GraphError::Kind::Parse);   // too long
    CHECK(error_kind([] { parse_graph6("B~"); }) == GraphError::Kind::Parse);    // nonzero padding
    CHECK(error_kind([] { parse_graph6("C~ x"); }) == GraphError::Kind::Parse);  // bad character
    CHECK(error_kind([] { parse_graph6("~?@A"); }) == GraphError::Kind::Parse);  // long form
}

TEST_CASE("graph6 round trip on the corpus") {
    for (const Graph& g : connected_regular_up_to(10)) CHECK(parse_graph6(to_graph6(g)) == g);
}

TEST_CASE("corpus degree sequences match independently known graphs") {
    CHECK(parse_graph6(to_graph6(complete_graph(6))).degree_sequence() == std::vector<int>(6, 5));
    const Graph petersen = parse_graph6(to_graph6(petersen_graph()));
    CHECK(petersen.degree_sequence() == std::vector<int>(10, 3));
    CHECK(petersen.size() == 15);
    // Exactly one cubic 10-vertex corpus graph is isomorphic to the Petersen graph.
    int matches = 0;
    for (const Graph& g : load_corpus("regular_connected_n10.g6")) matches += isomorphic(g, petersen_graph());
    CHECK(matches == 1);
}

TEST_CASE("bracket adjacency format") {
    CHECK(parse_adjacency("[[1,2,3,4,5],[2,3,4,5],[3,4,5],[4,5],[5],[]]") == complete_graph(6));
    CHECK(parse_adjacency("[[1],[]]") == complete_graph(2));
    CHECK(parse_adjacency(" [ [1, 2] , [2] , [] ] ") == complete_graph(3));
    CHECK(parse_adjacency("[]").order() == 0);

    CHECK(error_kind([] { parse_adjacency("[[0],[]]"); }) == GraphError::Kind::Parse);
    CHECK(error_kind([] { parse_adjacency("[[2,1],[],[]]"); }) == GraphError::Kind::Parse);
    CHECK(error_kind([] { parse_adjacency("[[1,1],[]]"); }) == GraphError::Kind::Parse);
    CHECK(error_kind([] { parse_adjacency("[[5],[]]"); }) == GraphError::Kind::Parse);
    CHECK(error_kind([] { parse_adjacency("[[1],[]"); }) == GraphError::Kind::Parse);
    CHECK(error_kind([] { parse_adjacency("[[1],[]]x"); }) == GraphError::Kind::Parse);
}

TEST_CASE("successor adjacency") {
    CHECK(to_successor(complete_graph(2)) == SuccessorAdjacency{{1}, {}});
    CHECK(to_successor(complete_graph(4)) == SuccessorAdjacency{{1, 2, 3}, {2, 3}, {3}, {}});
    CHECK(to_successor(Graph(4, std::vector<Edge>{{0, 1}, {1, 2}})) == SuccessorAdjacency{{1}, {2}, {}, {}});
    CHECK(format_adjacency(to_successor(complete_graph(6))) == "[[1,2,3,4,5],[2,3,4,5],[3,4,5],[4,5],[5],[]]");

    // Rendering then parsing is the identity.
    std::mt19937_64 rng(11);
    for (const Graph& g : connected_regular_up_to(10)) {
        CHECK(parse_adjacency(format_adjacency(to_successor(g))) == g);
        const Graph shuffled = relabel(g, random_permutation(g.order(), rng));
        CHECK(parse_adjacency(format_adjacency(to_successor(shuffled))) == shuffled);
    }
}

TEST_CASE("parse_graph_line dispatches on the first character") {
    CHECK(parse_graph_line("  [[1],[]]") == complete_graph(2));
    CHECK(parse_graph_line("C~\r") == complete_graph(4));
}

TEST_CASE("relabel") {
    const Graph k4 = complete_graph(4);
    CHECK(relabel(k4, std::vector<Vertex>{0, 1, 2, 3}) == k4);
    CHECK(relabel(k4, std::vector<Vertex>{2, 0, 3, 1}) == k4);
    CHECK(relabel(path_graph(4), std::vector<Vertex>{3, 2, 1, 0}) == path_graph(4));

    const Graph p = relabel(path_graph(3), std::vector<Vertex>{1, 0, 2});
    CHECK(p.edges() == std::vector<Edge>{{0, 1}, {0, 2}});

    CHECK(error_kind([&] { relabel(k4, std::vector<Vertex>{0, 0, 1, 2}); }) ==
          GraphError::Kind::InvalidPermutation);
    CHECK(error_kind([&] { relabel(k4, std::vector<Vertex>{0, 1, 2}); }) == GraphError::Kind::InvalidPermutation);
    CHECK(error_kind([&] { relabel(k4, std::vector<Vertex>{0, 1, 2, 4}); }) ==
          GraphError::Kind::InvalidPermutation);
}

TEST_CASE("relabel by p then p inverse is the identity") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 * (1 + static_cast<int>(rng() % 5));
        const int k = static_cast<int>(rng() % n);
        const Graph g = random_regular_graph(n, k, rng);
        const auto p = random_permutation(n, rng);
        std::vector<Vertex> inverse(n);
        for (int i = 0; i < n; ++i) inverse[p[i]] = i;
        CHECK(relabel(relabel(g, p), inverse) == g);
    }
}

TEST_CASE("validate_regular_even") {
    CHECK(validate_regular_even(complete_graph(6)) == 5);
    CHECK(validate_regular_even(petersen_graph()) == 3);
    CHECK(validate_regular_even(Graph(4)) == 0);
    CHECK(error_kind([] { validate_regular_even(complete_graph(3)); }) == GraphError::Kind::OddOrder);
    CHECK(error_kind([] { validate_regular_even(path_graph(4)); }) == GraphError::Kind::NotRegular);
    try {
        validate_regular_even(path_graph(4));
    } catch (const GraphError& e) {
        CHECK(std::string(e.what()).find("vertex 1") != std::string::npos);
    }
}

TEST_CASE("graph construction rejects loops and duplicates") {
    CHECK(error_kind([] { Graph(3, std::vector<Edge>{{1, 1}}); }) == GraphError::Kind::InvalidEdge);
    CHECK(error_kind([] { Graph(3, std::vector<Edge>{{0, 1}, {1, 0}}); }) == GraphError::Kind::InvalidEdge);
    CHECK(error_kind([] { Graph(3, std::vector<Edge>{{0, 3}}); }) == GraphError::Kind::InvalidEdge);
}

TEST_CASE("connectivity and complement") {
    CHECK(cycle_graph(6).is_connected());
    CHECK_FALSE(Graph(4, std::vector<Edge>{{0, 1}, {2, 3}}).is_connected());
    CHECK(complete_graph(5).complement().size() == 0);
    CHECK(complement_c3_c5().is_regular(5));
    CHECK(zero_sum_cubic_8().is_regular(3));
    CHECK(class2_cubic_10().is_regular(3));
    CHECK(class2_quartic_10().is_regular(4));
}
