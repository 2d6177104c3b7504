// ofsign: signed 1-factorization sums, surveys, oracle cross-checks and
// Nullstellensatz grid coefficients from the command line.
//
// Exit status: 0 success, 1 any error, 2 oracle mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include "ofsign/cn_input.hpp"
#include "ofsign/factorization_sum.hpp"
#include "ofsign/oracle.hpp"
#include "ofsign/survey.hpp"

namespace {

using namespace ofsign;

constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

struct InputFile {
    std::unique_ptr<std::ifstream> file;
    std::istream* stream = nullptr;
};

InputFile open_input(const std::string& path) {
    InputFile in;
    if (path == "-") {
        in.stream = &std::cin;
        return in;
    }
    in.file = std::make_unique<std::ifstream>(path);
    if (!*in.file) throw std::runtime_error("cannot open " + path);
    in.stream = in.file.get();
    return in;
}

/// Calls `fn(line_number, graph)` for each graph line; parse errors go to stderr.
template <class Fn>
bool for_each_graph(std::istream& in, Fn&& fn) {
    bool ok = true;
    std::string text;
    for (std::size_t line = 1; std::getline(in, text); ++line) {
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos || text[first] == '#') continue;
        try {
            fn(line, parse_graph_line(text));
        } catch (const std::exception& e) {
            std::cerr << "line " << line << ": " << e.what() << '\n';
            ok = false;
        }
    }
    return ok;
}

BigInt factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

int run_signsum(const std::string& path, unsigned jobs, bool no_memo) {
    InputFile in = open_input(path);
    const bool ok = for_each_graph(*in.stream, [&](std::size_t, const Graph& g) {
        const SignSumResult r = weighted_sum(g, {.jobs = jobs, .memoize = !no_memo});
        std::cout << r.factorization_count << ' ' << r.signed_sum << '\n';
    });
    return ok ? 0 : kExitError;
}

int run_survey(const std::string& path, bool json, bool csv, bool count_only, unsigned jobs,
               bool require_connected) {
    InputFile in = open_input(path);
    const Report report =
        scan(*in.stream, {.count_only = count_only, .jobs = jobs, .require_connected = require_connected});
    for (const ScanIssue& issue : report.errors) std::cerr << "line " << issue.line << ": " << issue.message << '\n';
    if (json) {
        std::cout << to_json(report);
    } else if (csv) {
        std::cout << to_csv(report);
    } else {
        std::cout << to_text(report);
    }
    return report.errors.empty() ? 0 : kExitError;
}

int run_oracle(const std::string& path, bool force) {
    InputFile in = open_input(path);
    bool mismatch = false;
    const bool ok = for_each_graph(*in.stream, [&](std::size_t line, const Graph& g) {
        const int k = validate_regular_even(g);
        const SignSumResult brute = oracle::brute_signsum(g, force);
        const SignSumResult engine = weighted_sum(g);
        const oracle::ColoringSummary colorings = oracle::coloring_summary(g, force);
        const BigInt kf = factorial(k);

        std::vector<std::string> problems;
        if (engine != brute) problems.push_back("engine/oracle disagree");
        if (colorings.colorings != kf * brute.factorization_count) problems.push_back("k! count relation fails");
        if (colorings.signed_sum != kf * brute.signed_sum) problems.push_back("k! sign relation fails");
        if (colorings.theorem_mismatches != 0) {
            problems.push_back(std::to_string(colorings.theorem_mismatches) + " crossing-sign mismatches");
        }

        std::cout << "line " << line << ": " << colorings.colorings << " colorings, " << brute.factorization_count
                  << " factorizations, sum " << brute.signed_sum;
        if (problems.empty()) {
            std::cout << ", ok\n";
        } else {
            mismatch = true;
            std::cout << ", MISMATCH:";
            for (const auto& p : problems) std::cout << ' ' << p << ';';
            std::cout << '\n';
        }
    });
    if (!ok) return kExitError;
    return mismatch ? kExitMismatch : 0;
}

int run_cn_eval(const std::string& path, bool symbolic) {
    InputFile in = open_input(path);
    const std::string text((std::istreambuf_iterator<char>(*in.stream)), std::istreambuf_iterator<char>());
    const CnProblem problem = parse_cn_problem(text);
    std::cout << evaluate_grid(problem).get_str() << '\n';
    if (symbolic) std::cout << "symbolic " << evaluate_symbolic(problem).get_str() << '\n';
    return 0;
}

int run_extend(const std::string& path) {
    InputFile in = open_input(path);
    const bool ok = for_each_graph(*in.stream, [&](std::size_t line, const Graph& g) {
        const ExtensionResult r = extend_and_classify(g);
        std::cout << "line " << line << ": tried " << r.tried << " matchings";
        if (r.matching) {
            std::cout << ", added";
            for (const Edge& e : *r.matching) std::cout << ' ' << e.u << '-' << e.v;
            std::cout << " -> k=" << r.extended->k << " count=" << r.extended->factorization_count
                      << " sum=" << *r.extended->signed_sum << " NonzeroCertified\n";
        } else {
            std::cout << ", no certifying extension\n";
        }
    });
    return ok ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed sums over 1-factorizations of regular graphs"};
    app.require_subcommand(1);
    bool force = false;
    app.add_flag("--force", force, "Lift the oracle's scale guard");

    std::string path;
    unsigned jobs = ofsign::default_jobs();
    bool no_memo = false;

    auto* signsum = app.add_subcommand("signsum", "Print 'count sum' for each graph");
    signsum->add_option("file", path, "graph6 or bracket file, '-' for stdin")->required();
    signsum->add_option("--jobs", jobs, "Worker threads (default: OFSIGN_JOBS or 1)");
    signsum->add_flag("--no-memo", no_memo, "Disable the factor-boundary cache");

    bool json = false;
    bool csv = false;
    bool count_only = false;
    bool require_connected = false;
    auto* survey = app.add_subcommand("survey", "Classify every graph and aggregate by (n, k, verdict)");
    survey->add_option("file", path, "graph6 or bracket file, '-' for stdin")->required();
    auto* json_flag = survey->add_flag("--json", json, "JSON output");
    survey->add_flag("--csv", csv, "CSV output")->excludes(json_flag);
    survey->add_flag("--count-only", count_only, "Count factorizations, skip signs");
    survey->add_option("--jobs", jobs, "Graphs classified concurrently (default: OFSIGN_JOBS or 1)");
    survey->add_flag("--require-connected", require_connected, "Skip disconnected graphs");

    auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check engine, brute force and colouring signs");
    oracle_cmd->add_option("file", path, "graph6 or bracket file, '-' for stdin")->required();

    bool symbolic = false;
    auto* cn = app.add_subcommand("cn", "Combinatorial Nullstellensatz tools");
    cn->require_subcommand(1);
    auto* cn_eval = cn->add_subcommand("eval", "Print the grid coefficient of a JSON problem description");
    cn_eval->add_option("file", path, "JSON file, '-' for stdin")->required();
    cn_eval->add_flag("--symbolic", symbolic, "Also print the coefficient by expansion");

    auto* extend = app.add_subcommand("extend-and-classify", "Search for a 1-factor whose addition certifies");
    extend->add_option("file", path, "graph6 or bracket file, '-' for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitError;
    }

    try {
        if (*signsum) return run_signsum(path, jobs, no_memo);
        if (*survey) return run_survey(path, json, csv, count_only, jobs, require_connected);
        if (*oracle_cmd) return run_oracle(path, force);
        if (*cn_eval) return run_cn_eval(path, symbolic);
        if (*extend) return run_extend(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
