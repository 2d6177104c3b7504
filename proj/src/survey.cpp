#include "ofsign/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "ofsign/factorization_sum.hpp"

namespace ofsign {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Class2: return "Class2";
        case Verdict::ZeroSum: return "ZeroSum";
        case Verdict::NonzeroCertified: return "NonzeroCertified";
        case Verdict::Factorable: return "Factorable";
    }
    return "?";
}

Verdict verdict_for(const BigInt& count, const std::optional<BigInt>& sum) {
    if (count == 0) return Verdict::Class2;
    if (!sum) return Verdict::Factorable;
    return *sum == 0 ? Verdict::ZeroSum : Verdict::NonzeroCertified;
}

Classification classify(const Graph& g, std::string id, const ClassifyOptions& options) {
    Classification c;
    c.id = std::move(id);
    c.n = g.order();
    c.k = validate_regular_even(g);
    const SignSumResult r = weighted_sum(g, {.jobs = options.jobs, .count_only = options.count_only});
    c.factorization_count = r.factorization_count;
    if (!options.count_only) c.signed_sum = r.signed_sum;
    c.verdict = verdict_for(c.factorization_count, c.signed_sum);
    return c;
}

std::map<Report::Key, std::size_t> Report::aggregates() const {
    std::map<Key, std::size_t> out;
    for (const Classification& row : rows) ++out[{row.n, row.k, row.verdict}];
    return out;
}

Report scan(std::istream& in, const ScanOptions& options) {
    struct Item {
        std::size_t line;
        Graph graph;
    };
    Report report;
    std::vector<Item> items;
    std::string text;
    for (std::size_t line = 1; std::getline(in, text); ++line) {
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#') continue;
        try {
            Graph g = parse_graph_line(text);
            if (options.require_connected && !g.is_connected()) {
                report.skipped_disconnected.push_back(line);
                continue;
            }
            items.push_back({line, std::move(g)});
        } catch (const GraphError& e) {
            report.errors.push_back({line, e.what()});
        }
    }

    std::vector<std::optional<Classification>> results(items.size());
    std::vector<std::optional<ScanIssue>> failures(items.size());
    std::atomic<std::size_t> cursor{0};
    const auto work = [&] {
        for (std::size_t i = cursor++; i < items.size(); i = cursor++) {
            try {
                results[i] = classify(items[i].graph, std::to_string(items[i].line), {.count_only = options.count_only});
            } catch (const GraphError& e) {
                failures[i] = ScanIssue{items[i].line, e.what()};
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(items.size())));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    for (std::size_t i = 0; i < items.size(); ++i) {
        if (results[i]) report.rows.push_back(std::move(*results[i]));
        if (failures[i]) report.errors.push_back(std::move(*failures[i]));
    }
    std::stable_sort(report.errors.begin(), report.errors.end(),
                     [](const ScanIssue& a, const ScanIssue& b) { return a.line < b.line; });
    return report;
}

std::string to_csv(const Report& report) {
    std::ostringstream out;
    out << "id,n,k,count,sum,verdict\n";
    for (const Classification& row : report.rows) {
        out << row.id << ',' << row.n << ',' << row.k << ',' << row.factorization_count << ','
            << (row.signed_sum ? row.signed_sum->get_str() : std::string()) << ',' << to_string(row.verdict) << '\n';
    }
    return out.str();
}

namespace {

nlohmann::json big_to_json(const BigInt& x) {
    if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
    return x.get_str();
}

}  // namespace

std::string to_json(const Report& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const Classification& row : report.rows) {
        rows.push_back({{"id", row.id},
                        {"n", row.n},
                        {"k", row.k},
                        {"count", big_to_json(row.factorization_count)},
                        {"sum", row.signed_sum ? big_to_json(*row.signed_sum) : nlohmann::json(nullptr)},
                        {"verdict", to_string(row.verdict)}});
    }
    return rows.dump(2) + "\n";
}

std::string to_text(const Report& report) {
    std::ostringstream out;
    for (const Classification& row : report.rows) {
        out << "line " << std::setw(4) << row.id << "  n=" << row.n << " k=" << row.k
            << "  count=" << row.factorization_count;
        if (row.signed_sum) out << " sum=" << *row.signed_sum;
        out << "  " << to_string(row.verdict) << '\n';
    }
    out << "\n  n   k  verdict            graphs\n";
    for (const auto& [key, count] : report.aggregates()) {
        const auto& [n, k, verdict] = key;
        out << std::setw(3) << n << ' ' << std::setw(3) << k << "  " << std::left << std::setw(18)
            << to_string(verdict) << std::right << ' ' << count << '\n';
    }
    out << "total " << report.rows.size() << " graphs";
    if (!report.errors.empty()) out << ", " << report.errors.size() << " errors";
    if (!report.skipped_disconnected.empty()) out << ", " << report.skipped_disconnected.size() << " disconnected skipped";
    out << '\n';
    return out.str();
}

ExtensionResult extend_and_classify(const Graph& g) {
    const int k = validate_regular_even(g);
    const Graph complement = g.complement();
    const int n = g.order();
    ExtensionResult result;

    std::vector<Edge> matching;
    std::vector<char> covered(n, 0);
    std::function<bool()> search = [&]() -> bool {
        const auto free = std::find(covered.begin(), covered.end(), 0);
        if (free == covered.end()) {
            ++result.tried;
            std::vector<Edge> edges = g.edges();
            edges.insert(edges.end(), matching.begin(), matching.end());
            const Graph extended(n, edges);
            Classification c = classify(extended, "extended");
            if (c.verdict == Verdict::NonzeroCertified) {
                result.matching = matching;
                result.extended = std::move(c);
                return true;
            }
            return false;
        }
        const Vertex v = static_cast<Vertex>(free - covered.begin());
        covered[v] = 1;
        for (Vertex w : complement.neighbors(v)) {
            if (covered[w]) continue;
            covered[w] = 1;
            matching.push_back(make_edge(v, w));
            const bool done = search();
            matching.pop_back();
            covered[w] = 0;
            if (done) return true;
        }
        covered[v] = 0;
        return false;
    };
    if (n > 0 && k + 1 < n) search();
    return result;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("OFSIGN_JOBS")) {
        char* end = nullptr;
        const unsigned long value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
    }
    return 1;
}

}  // namespace ofsign
