#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ofsign/bigint.hpp"
#include "ofsign/graph.hpp"

namespace ofsign {

/// Number of 1-factorizations and the sum of their crossing signs.
struct SignSumResult {
    BigInt factorization_count = 0;
    BigInt signed_sum = 0;

    friend bool operator==(const SignSumResult&, const SignSumResult&) = default;
};

struct SumOptions {
    /// Worker threads for the top-level split; 0 or 1 runs sequentially.
    unsigned jobs = 1;
    /// Skip sign bookkeeping; `signed_sum` is left at 0.
    bool count_only = false;
    /// Cache subtotals by remaining edge set at factor boundaries. Exact: the
    /// completions of a finished factor depend only on the edges left.
    bool memoize = true;
    /// Cache entries per worker; the cache stops growing once full.
    std::size_t memo_capacity = std::size_t{1} << 22;
    /// Accumulate in GMP integers from the start instead of checked int64
    /// with fallback on overflow.
    bool force_bigint = false;
};

/// Sums sgn(F) = prod_i sgn(F_i) over all 1-factorizations F of a k-regular
/// graph of even order, counting each unordered factorization once.
///
/// The i-th edge of vertex 0 (ascending neighbour order) is forced into the
/// i-th factor, the factor under construction is always extended at its least
/// unmatched vertex, and child subtotals are combined before being multiplied
/// by the sign of the edge that led to them. Throws GraphError (NotRegular,
/// OddOrder, TooLarge) for invalid input; supports up to 64 vertices.
SignSumResult weighted_sum(const Graph& g, const SumOptions& options = {});

/// True iff the graph has at least one 1-factorization. Stops at the first one found.
bool is_one_factorable(const Graph& g);

/// Called once per 1-factorization. `factors[i]` lists the edges of the i-th
/// factor in the order they were added; `sign` is the product of factor signs.
using FactorizationVisitor = std::function<void(std::span<const std::vector<Edge>> factors, int sign)>;

/// Visits every 1-factorization in the same order and with the same symmetry
/// reduction as weighted_sum.
void enumerate_factorizations(const Graph& g, const FactorizationVisitor& visit);

}  // namespace ofsign
