#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ofsign/oracle.hpp"
#include "support.hpp"

using namespace ofsign;
using namespace ofsign::oracle;
using namespace ofsign::testing;

namespace {

std::vector<EdgeColoring> all_colorings(const Graph& g, int k, bool force = false) {
    std::vector<EdgeColoring> out;
    enumerate_colorings(g, k, [&](const EdgeColoring& c) { out.push_back(c); }, force);
    return out;
}

bool is_proper(const Graph& g, const EdgeColoring& c) {
    const auto& edges = g.edges();
    for (std::size_t a = 0; a < edges.size(); ++a) {
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            const bool share = edges[a].u == edges[b].u || edges[a].u == edges[b].v || edges[a].v == edges[b].u ||
                               edges[a].v == edges[b].v;
            if (share && c.colors[a] == c.colors[b]) return false;
        }
    }
    return true;
}

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// K4 edges in order 01 02 03 12 13 23.
const EdgeColoring k4_c0{{1, 2, 3, 3, 2, 1}};

}  // namespace

TEST_CASE("enumerate_colorings counts") {
    CHECK(all_colorings(complete_graph(2), 1).size() == 1);
    CHECK(all_colorings(complete_graph(4), 3).size() == 6);
    CHECK(all_colorings(petersen_graph(), 3).empty());
    CHECK(all_colorings(complete_bipartite(3, 3), 3).size() == 12);
    CHECK(all_colorings(Graph(4), 0).size() == 1);
}

TEST_CASE("enumerated colorings are proper and distinct") {
    for (const Graph& g : connected_regular_up_to(6)) {
        const int k = g.degree(0);
        auto cs = all_colorings(g, k);
        for (const auto& c : cs) {
            CHECK(c.colors.size() == g.size());
            CHECK(is_proper(g, c));
            CHECK(std::all_of(c.colors.begin(), c.colors.end(), [&](int x) { return x >= 1 && x <= k; }));
        }
        std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.colors < b.colors; });
        CHECK(std::adjacent_find(cs.begin(), cs.end()) == cs.end());
    }
}

TEST_CASE("scale guard") {
    CHECK(within_desk_scale(complete_graph(8)));
    CHECK(within_desk_scale(petersen_graph()));
    CHECK_FALSE(within_desk_scale(complete_graph(10)));
    CHECK_FALSE(within_desk_scale(cycle_graph(12)));
    CHECK_THROWS_AS(enumerate_colorings(complete_graph(10), 9, [](const EdgeColoring&) {}), ScaleError);
    CHECK_THROWS_AS(brute_signsum(cycle_graph(12)), ScaleError);
    CHECK(brute_signsum(cycle_graph(12), true) == SignSumResult{1, 1});
    CHECK_THROWS_AS(enumerate_colorings(path_graph(4), 1, [](const EdgeColoring&) {}), OracleError);
}

TEST_CASE("sign_vs_reference") {
    const Graph k4 = complete_graph(4);
    CHECK(sign_vs_reference(k4, k4_c0, k4_c0) == 1);
    // Every recolouring of K4 permutes its three factors as wholes.
    for (const auto& c : all_colorings(k4, 3)) {
        CHECK(sign_vs_reference(k4, c, k4_c0) == 1);
        CHECK(sign_vs_reference(k4, k4_c0, c) == 1);
    }
    const EdgeColoring improper{{1, 1, 3, 3, 2, 1}};
    CHECK_THROWS_AS(sign_vs_reference(k4, improper, k4_c0), OracleError);
    CHECK_THROWS_AS(sign_vs_reference(k4, k4_c0, improper), OracleError);
    CHECK_THROWS_AS(sign_vs_reference(k4, EdgeColoring{{1, 2, 3}}, k4_c0), OracleError);
}

TEST_CASE("sign_vs_reference is symmetric and stable under global colour swaps") {
    for (const Graph& g : connected_regular_up_to(6)) {
        const int k = g.degree(0);
        const auto cs = all_colorings(g, k);
        if (cs.empty()) continue;
        for (std::size_t a = 0; a < cs.size(); a += 3) {
            for (std::size_t b = 0; b < cs.size(); b += 5) {
                CHECK(sign_vs_reference(g, cs[a], cs[b]) == sign_vs_reference(g, cs[b], cs[a]));
            }
            if (k >= 2) {
                EdgeColoring swapped = cs[a];
                for (int& x : swapped.colors) x = x == 1 ? 2 : x == 2 ? 1 : x;
                CHECK(sign_vs_reference(g, swapped, cs[a]) == 1);
                CHECK(crossing_sign(g, swapped) == crossing_sign(g, cs[a]));
            }
        }
    }
}

TEST_CASE("crossing_sign") {
    CHECK(crossing_sign(complete_graph(2), EdgeColoring{{1}}) == 1);
    CHECK(monochromatic_crossings(complete_graph(4), k4_c0) == 1);
    CHECK(crossing_sign(complete_graph(4), k4_c0) == -1);
    CHECK_THROWS_AS(crossing_sign(complete_graph(4), EdgeColoring{{1, 1, 3, 3, 2, 1}}), OracleError);
}

TEST_CASE("permutation signs") {
    CHECK(permutation_sign(std::vector<int>{}) == 1);
    CHECK(permutation_sign(std::vector<int>{0, 1, 2}) == 1);
    CHECK(permutation_sign(std::vector<int>{1, 0, 2}) == -1);
    CHECK(permutation_sign(std::vector<int>{1, 2, 0}) == 1);
    CHECK(permutation_sign(std::vector<int>{3, 2, 1, 0}) == 1);
    CHECK(complete_graph_polynomial_sign(std::vector<int>{0, 1}) == -1);
    CHECK(complete_graph_polynomial_sign(std::vector<int>{1, 0}) == 1);
}

TEST_CASE("complete-graph polynomial sign tracks permutation parity up to a constant") {
    for (int k = 1; k <= 5; ++k) {
        std::vector<int> rho(k);
        std::iota(rho.begin(), rho.end(), 0);
        std::vector<std::vector<int>> perms;
        do perms.push_back(rho);
        while (std::next_permutation(rho.begin(), rho.end()));
        for (const auto& r : perms) {
            for (const auto& s : perms) {
                CHECK(complete_graph_polynomial_sign(r) * complete_graph_polynomial_sign(s) ==
                      permutation_sign(r) * permutation_sign(s));
            }
        }
    }
}

TEST_CASE("brute_signsum examples") {
    CHECK(brute_signsum(complete_graph(2)) == SignSumResult{1, 1});
    CHECK(brute_signsum(complete_graph(4)) == SignSumResult{1, -1});
    CHECK(brute_signsum(complete_bipartite(3, 3)) == SignSumResult{2, 0});
    CHECK(brute_signsum(complete_graph(6)) == SignSumResult{6, 6});
    CHECK(brute_signsum(petersen_graph()) == SignSumResult{0, 0});
    CHECK(perfect_matchings(complete_graph(6)).size() == 15);
    CHECK(perfect_matchings(petersen_graph()).size() == 6);
}

TEST_CASE("crossing-sign theorem and the k! relation on small graphs") {
    for (const Graph& g : connected_regular_up_to(6)) {
        CAPTURE(to_graph6(g));
        const int k = g.degree(0);
        const ColoringSummary s = coloring_summary(g);
        const SignSumResult brute = brute_signsum(g);
        CHECK(s.theorem_mismatches == 0);
        CHECK(s.colorings == factorial(k) * brute.factorization_count);
        CHECK(s.signed_sum == factorial(k) * brute.signed_sum);

        const auto cs = all_colorings(g, k);
        if (cs.empty()) continue;
        for (const auto& c : cs) {
            CHECK(sign_vs_reference(g, c, cs.front()) * crossing_sign(g, cs.front()) == crossing_sign(g, c));
        }
    }
}
