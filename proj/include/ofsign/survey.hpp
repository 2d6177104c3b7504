#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ofsign/bigint.hpp"
#include "ofsign/graph.hpp"

namespace ofsign {

/// Class2: no 1-factorization. ZeroSum: factorizations exist, signs cancel.
/// NonzeroCertified: nonzero sum, so the graph is k-list edge colourable and
/// edge k-paintable. Factorable: count-only mode, sign not computed.
enum class Verdict { Class2, ZeroSum, NonzeroCertified, Factorable };

std::string to_string(Verdict v);

struct Classification {
    std::string id;
    int n = 0;
    int k = 0;
    BigInt factorization_count = 0;
    /// Absent in count-only mode.
    std::optional<BigInt> signed_sum;
    Verdict verdict = Verdict::Class2;
};

Verdict verdict_for(const BigInt& count, const std::optional<BigInt>& sum);

struct ClassifyOptions {
    bool count_only = false;
    unsigned jobs = 1;
};

/// Throws GraphError when the graph is not regular of even order.
Classification classify(const Graph& g, std::string id = {}, const ClassifyOptions& options = {});

struct ScanOptions {
    bool count_only = false;
    /// Graphs classified concurrently; rows keep input order regardless.
    unsigned jobs = 1;
    bool require_connected = false;
};

struct ScanIssue {
    std::size_t line = 0;
    std::string message;
};

struct Report {
    std::vector<Classification> rows;
    std::vector<ScanIssue> errors;
    /// Line numbers skipped by `require_connected`.
    std::vector<std::size_t> skipped_disconnected;

    using Key = std::tuple<int, int, Verdict>;
    /// Row counts grouped by (n, k, verdict).
    std::map<Key, std::size_t> aggregates() const;
};

/// One graph per line, graph6 or bracket form; blank and `#` lines are
/// ignored. Row ids are 1-based line numbers. Bad lines are reported in
/// `errors` and the scan carries on.
Report scan(std::istream& in, const ScanOptions& options = {});

/// Header `id,n,k,count,sum,verdict`; the sum column is empty in count-only mode.
std::string to_csv(const Report& report);
/// Array of row objects with the CSV fields. Integers outside int64 are strings.
std::string to_json(const Report& report);
/// Human-readable rows followed by the aggregate table.
std::string to_text(const Report& report);

struct ExtensionResult {
    /// Perfect matchings of the complement that were tried.
    std::size_t tried = 0;
    /// First matching (in enumeration order) whose addition gives a NonzeroCertified graph.
    std::optional<std::vector<Edge>> matching;
    std::optional<Classification> extended;
};

/// Adds each perfect matching of the complement in turn and classifies the
/// (k+1)-regular result, stopping at the first NonzeroCertified one.
ExtensionResult extend_and_classify(const Graph& g);

/// Default worker count from OFSIGN_JOBS, or 1.
unsigned default_jobs();

}  // namespace ofsign
