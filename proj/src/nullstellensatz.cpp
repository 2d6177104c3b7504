#include "ofsign/nullstellensatz.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace ofsign {

namespace {

void require_point_size(std::span<const Rational> x, int n_vars) {
    if (static_cast<int>(x.size()) != n_vars) {
        throw NullstellensatzError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                                   std::to_string(n_vars));
    }
}

/// 1 / N_{L_j}(xi) for every value xi of every list.
std::vector<std::vector<Rational>> inverse_weights(const ListSystem& ls) {
    std::vector<std::vector<Rational>> out(ls.n_vars());
    for (std::size_t j = 0; j < ls.n_vars(); ++j) {
        const auto list = ls.list(j);
        for (const Rational& value : list) {
            Rational w = 1;
            for (const Rational& other : list) {
                if (other != value) w *= value - other;
            }
            out[j].push_back(1 / w);
        }
    }
    return out;
}

template <class Poly>
Rational grid_sum(const Poly& p, const ListSystem& ls) {
    if (static_cast<std::size_t>(p.n_vars()) != ls.n_vars()) {
        throw NullstellensatzError("polynomial has " + std::to_string(p.n_vars()) + " variables, list system has " +
                                   std::to_string(ls.n_vars()));
    }
    if (p.degree() > ls.degree_sum()) {
        throw NullstellensatzError("degree " + std::to_string(p.degree()) + " exceeds sum of list degrees " +
                                   std::to_string(ls.degree_sum()));
    }
    const auto weights = inverse_weights(ls);
    const std::size_t n = ls.n_vars();
    std::vector<std::size_t> index(n, 0);
    std::vector<Rational> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = ls.list(j)[0];

    Rational total = 0;
    while (true) {
        Rational term = p.evaluate(x);
        if (term != 0) {
            for (std::size_t j = 0; j < n; ++j) term *= weights[j][index[j]];
            total += term;
        }
        // Lexicographic odometer, last coordinate fastest.
        std::size_t j = n;
        while (j > 0) {
            --j;
            if (++index[j] < ls.list(j).size()) {
                x[j] = ls.list(j)[index[j]];
                break;
            }
            index[j] = 0;
            x[j] = ls.list(j)[0];
            if (j == 0) return total;
        }
        if (n == 0) return total;
    }
}

void require_matching_sizes(const ListSystem& ls, const ListSystem& ls_tilde) {
    if (ls.n_vars() != ls_tilde.n_vars()) throw NullstellensatzError("list systems have different dimension");
    for (std::size_t j = 0; j < ls.n_vars(); ++j) {
        if (ls.list(j).size() != ls_tilde.list(j).size()) {
            throw NullstellensatzError("list sizes differ at variable " + std::to_string(j));
        }
    }
}

}  // namespace

Rational AffineForm::evaluate(std::span<const Rational> x) const {
    Rational value = constant;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i] != 0) value += coefficients[i] * x[i];
    }
    return value;
}

void FactoredPolynomial::add_factor(AffineForm factor) {
    if (static_cast<int>(factor.coefficients.size()) != n_vars_) {
        throw NullstellensatzError("factor has " + std::to_string(factor.coefficients.size()) +
                                   " coefficients, expected " + std::to_string(n_vars_));
    }
    if (std::all_of(factor.coefficients.begin(), factor.coefficients.end(),
                    [](const Rational& c) { return c == 0; })) {
        throw NullstellensatzError("factor has no variable term");
    }
    factors_.push_back(std::move(factor));
}

Rational FactoredPolynomial::evaluate(std::span<const Rational> x) const {
    require_point_size(x, n_vars_);
    Rational value = 1;
    for (const AffineForm& f : factors_) {
        value *= f.evaluate(x);
        if (value == 0) break;
    }
    return value;
}

void SparsePolynomial::add_term(const Exponents& exponents, const Rational& coefficient) {
    if (static_cast<int>(exponents.size()) != n_vars_) throw NullstellensatzError("exponent vector has wrong size");
    if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; })) {
        throw NullstellensatzError("negative exponent");
    }
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

int SparsePolynomial::degree() const {
    int deg = -1;
    for (const auto& [exponents, coeff] : terms_) {
        deg = std::max(deg, std::accumulate(exponents.begin(), exponents.end(), 0));
    }
    return deg;
}

Rational SparsePolynomial::coefficient(const Exponents& exponents) const {
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePolynomial::evaluate(std::span<const Rational> x) const {
    require_point_size(x, n_vars_);
    Rational value = 0;
    for (const auto& [exponents, coeff] : terms_) {
        Rational term = coeff;
        for (int i = 0; i < n_vars_; ++i) {
            for (int e = 0; e < exponents[i]; ++e) term *= x[i];
        }
        value += term;
    }
    return value;
}

SparsePolynomial SparsePolynomial::homogeneous_component(int degree) const {
    SparsePolynomial out(n_vars_);
    for (const auto& [exponents, coeff] : terms_) {
        if (std::accumulate(exponents.begin(), exponents.end(), 0) == degree) out.add_term(exponents, coeff);
    }
    return out;
}

ListSystem::ListSystem(std::vector<std::vector<Rational>> lists) : lists_(std::move(lists)) {
    for (std::size_t j = 0; j < lists_.size(); ++j) {
        auto sorted = lists_[j];
        if (sorted.empty()) throw NullstellensatzError("list " + std::to_string(j) + " is empty");
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw NullstellensatzError("list " + std::to_string(j) + " repeats a value");
        }
    }
}

Exponents ListSystem::degrees() const {
    Exponents d;
    for (const auto& list : lists_) d.push_back(static_cast<int>(list.size()) - 1);
    return d;
}

int ListSystem::degree_sum() const {
    const Exponents d = degrees();
    return std::accumulate(d.begin(), d.end(), 0);
}

std::size_t ListSystem::grid_size() const {
    std::size_t size = 1;
    for (const auto& list : lists_) {
        if (size > std::numeric_limits<std::size_t>::max() / list.size()) return std::numeric_limits<std::size_t>::max();
        size *= list.size();
    }
    return size;
}

Rational n_weight(const ListSystem& ls, std::span<const Rational> x) {
    if (x.size() != ls.n_vars()) throw NullstellensatzError("point dimension does not match list system");
    Rational weight = 1;
    for (std::size_t j = 0; j < ls.n_vars(); ++j) {
        const auto list = ls.list(j);
        if (std::find(list.begin(), list.end(), x[j]) == list.end()) {
            throw NullstellensatzError("coordinate " + std::to_string(j) + " is not in its list");
        }
        for (const Rational& other : list) {
            if (other != x[j]) weight *= x[j] - other;
        }
    }
    return weight;
}

Rational grid_coefficient(const FactoredPolynomial& p, const ListSystem& ls) { return grid_sum(p, ls); }
Rational grid_coefficient(const SparsePolynomial& p, const ListSystem& ls) { return grid_sum(p, ls); }

SparsePolynomial expand(const FactoredPolynomial& p, std::size_t max_terms) {
    const int n = p.n_vars();
    SparsePolynomial acc(n);
    acc.add_term(Exponents(n, 0), 1);
    for (const AffineForm& f : p.factors()) {
        SparsePolynomial next(n);
        for (const auto& [exponents, coeff] : acc.terms()) {
            if (f.constant != 0) next.add_term(exponents, coeff * f.constant);
            for (int i = 0; i < n; ++i) {
                if (f.coefficients[i] == 0) continue;
                Exponents raised = exponents;
                ++raised[i];
                next.add_term(raised, coeff * f.coefficients[i]);
            }
            if (next.terms().size() > max_terms) {
                throw NullstellensatzError("expansion exceeds " + std::to_string(max_terms) + " terms");
            }
        }
        acc = std::move(next);
    }
    return acc;
}

Rational symbolic_coefficient(const FactoredPolynomial& p, const Exponents& d, std::size_t max_terms) {
    if (static_cast<int>(d.size()) != p.n_vars()) throw NullstellensatzError("degree vector has wrong size");
    return expand(p, max_terms).coefficient(d);
}

TransferResult equal_leading_transfer(const SparsePolynomial& p, const ListSystem& ls,
                                      const SparsePolynomial& p_tilde, const ListSystem& ls_tilde) {
    require_matching_sizes(ls, ls_tilde);
    TransferResult r{grid_coefficient(p, ls), grid_coefficient(p_tilde, ls_tilde)};
    r.equal = r.sum == r.transferred_sum;
    return r;
}

TransferResult equal_leading_transfer(const FactoredPolynomial& p, const ListSystem& ls,
                                      const FactoredPolynomial& p_tilde, const ListSystem& ls_tilde) {
    require_matching_sizes(ls, ls_tilde);
    TransferResult r{grid_coefficient(p, ls), grid_coefficient(p_tilde, ls_tilde)};
    r.equal = r.sum == r.transferred_sum;
    return r;
}

FactoredPolynomial edge_distance_polynomial(int n_vertices, std::span<const Edge> edges,
                                            std::span<const Rational> labels) {
    if (!labels.empty() && labels.size() != edges.size()) {
        throw NullstellensatzError("expected one label per edge");
    }
    FactoredPolynomial p(n_vertices);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge e = make_edge(edges[i].u, edges[i].v);
        if (e.u == e.v || e.u < 0 || e.v >= n_vertices) {
            throw NullstellensatzError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is invalid");
        }
        AffineForm f{std::vector<Rational>(n_vertices, 0), 0};
        f.coefficients[e.u] = 1;
        f.coefficients[e.v] = -1;
        if (!labels.empty()) f.constant = -labels[i];
        p.add_factor(std::move(f));
    }
    return p;
}

FactoredPolynomial edge_distance_polynomial(const Graph& g, std::span<const Rational> labels) {
    return edge_distance_polynomial(g.order(), g.edges(), labels);
}

FactoredPolynomial line_graph_distance_polynomial(const Graph& g) {
    const auto& edges = g.edges();
    std::vector<Edge> adjacent_pairs;
    for (std::size_t a = 0; a < edges.size(); ++a) {
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            const Edge e = edges[a];
            const Edge f = edges[b];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) {
                adjacent_pairs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
            }
        }
    }
    return edge_distance_polynomial(static_cast<int>(edges.size()), adjacent_pairs);
}

}  // namespace ofsign
