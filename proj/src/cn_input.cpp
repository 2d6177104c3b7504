#include "ofsign/cn_input.hpp"

#include <json.hpp>

namespace ofsign {

namespace {

using nlohmann::json;

Rational rational_from(const json& value) {
    try {
        if (value.is_number_integer()) return Rational(BigInt(value.dump(), 10));
        if (value.is_string()) return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw NullstellensatzError(e.what());
    }
    throw NullstellensatzError("expected an integer or a rational string, got " + value.dump());
}

std::vector<Rational> rationals_from(const json& array) {
    if (!array.is_array()) throw NullstellensatzError("expected an array, got " + array.dump());
    std::vector<Rational> out;
    for (const json& v : array) out.push_back(rational_from(v));
    return out;
}

const json& field(const json& object, const char* name) {
    if (!object.is_object() || !object.contains(name)) {
        throw NullstellensatzError(std::string("missing field \"") + name + "\"");
    }
    return object.at(name);
}

}  // namespace

CnProblem parse_cn_problem(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw NullstellensatzError(std::string("invalid JSON: ") + e.what());
    }

    std::vector<std::vector<Rational>> lists;
    const json& lists_json = field(doc, "lists");
    if (!lists_json.is_array()) throw NullstellensatzError("\"lists\" must be an array");
    for (const json& l : lists_json) lists.push_back(rationals_from(l));
    ListSystem ls(std::move(lists));
    const int n_vars = static_cast<int>(ls.n_vars());

    const int kinds = doc.contains("factors") + doc.contains("terms") + doc.contains("graph");
    if (kinds != 1) throw NullstellensatzError("give exactly one of \"factors\", \"terms\" or \"graph\"");

    if (doc.contains("factors")) {
        FactoredPolynomial p(n_vars);
        for (const json& f : doc.at("factors")) {
            AffineForm form{rationals_from(field(f, "coefficients")),
                            f.contains("constant") ? rational_from(f.at("constant")) : Rational(0)};
            p.add_factor(std::move(form));
        }
        return {std::move(p), std::move(ls)};
    }
    if (doc.contains("terms")) {
        SparsePolynomial p(n_vars);
        for (const json& t : doc.at("terms")) {
            const json& exps = field(t, "exponents");
            if (!exps.is_array()) throw NullstellensatzError("\"exponents\" must be an array");
            Exponents e;
            for (const json& x : exps) {
                if (!x.is_number_integer()) throw NullstellensatzError("exponents must be integers");
                e.push_back(x.get<int>());
            }
            p.add_term(e, rational_from(field(t, "coefficient")));
        }
        return {std::move(p), std::move(ls)};
    }
    const json& graph_json = doc.at("graph");
    if (!graph_json.is_string()) throw NullstellensatzError("\"graph\" must be a string");
    const Graph g = parse_graph_line(graph_json.get<std::string>());
    std::vector<Rational> labels;
    if (doc.contains("labels")) labels = rationals_from(doc.at("labels"));
    FactoredPolynomial p = edge_distance_polynomial(g, labels);
    if (p.n_vars() != n_vars) throw NullstellensatzError("graph order does not match the number of lists");
    return {std::move(p), std::move(ls)};
}

Rational evaluate_grid(const CnProblem& problem) {
    return std::visit([&](const auto& p) { return grid_coefficient(p, problem.lists); }, problem.polynomial);
}

Rational evaluate_symbolic(const CnProblem& problem) {
    const Exponents d = problem.lists.degrees();
    return std::visit(
        [&](const auto& p) -> Rational {
            if constexpr (std::is_same_v<std::decay_t<decltype(p)>, FactoredPolynomial>) {
                return symbolic_coefficient(p, d);
            } else {
                return p.coefficient(d);
            }
        },
        problem.polynomial);
}

}  // namespace ofsign
