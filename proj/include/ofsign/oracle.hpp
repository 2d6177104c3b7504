#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ofsign/bigint.hpp"
#include "ofsign/factorization_sum.hpp"
#include "ofsign/graph.hpp"

// Deliberately naive reference implementations. Nothing here calls into
// matching_sign or factorization_sum; results are compared against them.
namespace ofsign::oracle {

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive run is requested beyond desk scale without `force`.
class ScaleError : public OracleError {
public:
    using OracleError::OracleError;
};

/// Colour in 1..k of each edge, indexed like `Graph::edges()`.
struct EdgeColoring {
    std::vector<int> colors;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Unguarded scale: up to 8 vertices, or up to 10 vertices with k <= 3.
bool within_desk_scale(const Graph& g);

using ColoringVisitor = std::function<void(const EdgeColoring&)>;

/// Every proper edge colouring E -> {1..k}, each exactly once, edges coloured in
/// lexicographic edge order with colours tried in increasing order.
void enumerate_colorings(const Graph& g, int k, const ColoringVisitor& visit, bool force = false);

/// Sign of a permutation of 0..n-1 via inversion counting.
int permutation_sign(std::span<const int> perm);

/// Sign of prod_{i<j} (x_i - x_j), i.e. of the edge distance polynomial of K_n.
int complete_graph_polynomial_sign(std::span<const int> values);

/// prod_v sgn((c0|E(v))^-1 o c|E(v)). Throws OracleError if either colouring is improper.
int sign_vs_reference(const Graph& g, const EdgeColoring& c, const EdgeColoring& c0);

/// Number of pairs of equally coloured edges whose chords cross.
int monochromatic_crossings(const Graph& g, const EdgeColoring& c);

/// (-1)^monochromatic_crossings. Throws OracleError if `c` is improper.
int crossing_sign(const Graph& g, const EdgeColoring& c);

/// Perfect matchings as bitmasks over edge indices.
std::vector<std::uint64_t> perfect_matchings(const Graph& g);

/// Sums (-1)^(sum_i intt(F_i)) over all unordered 1-factorizations, assembled
/// from the full list of perfect matchings without fixing any colours.
SignSumResult brute_signsum(const Graph& g, bool force = false);

struct ColoringSummary {
    BigInt colorings = 0;
    /// sum_c sgn(c, c0) * (-1)^intt(c0), with c0 the first colouring enumerated.
    BigInt signed_sum = 0;
    /// Colourings where sgn(c, c0) * (-1)^intt(c0) != (-1)^intt(c).
    std::uint64_t theorem_mismatches = 0;
};

/// One pass over all proper colourings with the permutation-product sign.
ColoringSummary coloring_summary(const Graph& g, bool force = false);

}  // namespace ofsign::oracle
