#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "ofsign/bigint.hpp"
#include "ofsign/graph.hpp"

namespace ofsign {

class NullstellensatzError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// c_0 x_0 + ... + c_{n-1} x_{n-1} + constant.
struct AffineForm {
    std::vector<Rational> coefficients;
    Rational constant = 0;

    Rational evaluate(std::span<const Rational> x) const;
};

/// Product of affine linear forms, each of degree exactly one.
class FactoredPolynomial {
public:
    explicit FactoredPolynomial(int n_vars = 0) : n_vars_(n_vars) {}

    /// Throws NullstellensatzError on a size mismatch or a constant factor.
    void add_factor(AffineForm factor);

    int n_vars() const noexcept { return n_vars_; }
    const std::vector<AffineForm>& factors() const noexcept { return factors_; }
    int degree() const noexcept { return static_cast<int>(factors_.size()); }
    Rational evaluate(std::span<const Rational> x) const;

private:
    int n_vars_;
    std::vector<AffineForm> factors_;
};

using Exponents = std::vector<int>;

/// Expanded polynomial with exact rational coefficients; zero terms are dropped.
class SparsePolynomial {
public:
    explicit SparsePolynomial(int n_vars = 0) : n_vars_(n_vars) {}

    void add_term(const Exponents& exponents, const Rational& coefficient);

    int n_vars() const noexcept { return n_vars_; }
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    Rational coefficient(const Exponents& exponents) const;
    Rational evaluate(std::span<const Rational> x) const;
    SparsePolynomial homogeneous_component(int degree) const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    int n_vars_;
    std::map<Exponents, Rational> terms_;
};

/// One finite list of distinct rationals per variable.
class ListSystem {
public:
    ListSystem() = default;
    /// Throws NullstellensatzError if a list is empty or repeats a value.
    explicit ListSystem(std::vector<std::vector<Rational>> lists);

    std::size_t n_vars() const noexcept { return lists_.size(); }
    std::span<const Rational> list(std::size_t j) const { return lists_.at(j); }
    /// d_j = |L_j| - 1.
    Exponents degrees() const;
    int degree_sum() const;
    /// Number of grid points, saturating at SIZE_MAX.
    std::size_t grid_size() const;

private:
    std::vector<std::vector<Rational>> lists_;
};

/// N_L(x) = prod_j prod_{xi in L_j, xi != x_j} (x_j - xi). Throws if x is off the grid.
Rational n_weight(const ListSystem& ls, std::span<const Rational> x);

/// sum_{x in L} N_L(x)^{-1} P(x): the coefficient of x^d, d_j = |L_j| - 1, for
/// deg P <= sum d_j. The polynomial is evaluated pointwise, never expanded;
/// the grid is traversed lexicographically.
Rational grid_coefficient(const FactoredPolynomial& p, const ListSystem& ls);
Rational grid_coefficient(const SparsePolynomial& p, const ListSystem& ls);

inline constexpr std::size_t kDefaultExpansionGuard = 1'000'000;

/// Distributive expansion with term merging. Throws NullstellensatzError if an
/// intermediate result exceeds `max_terms` monomials.
SparsePolynomial expand(const FactoredPolynomial& p, std::size_t max_terms = kDefaultExpansionGuard);
Rational symbolic_coefficient(const FactoredPolynomial& p, const Exponents& d,
                              std::size_t max_terms = kDefaultExpansionGuard);

struct TransferResult {
    Rational sum;
    Rational transferred_sum;
    bool equal = false;
};

/// Grid sums of (p, ls) and (p_tilde, ls_tilde). Equal whenever the two
/// polynomials agree in their component of degree sum_j (|L_j| - 1).
/// Throws when |L_j| != |L~_j| for some j.
TransferResult equal_leading_transfer(const SparsePolynomial& p, const ListSystem& ls,
                                      const SparsePolynomial& p_tilde, const ListSystem& ls_tilde);
TransferResult equal_leading_transfer(const FactoredPolynomial& p, const ListSystem& ls,
                                      const FactoredPolynomial& p_tilde, const ListSystem& ls_tilde);

/// One factor x_u - x_v - a_e (u < v) per listed edge; repeated edges give
/// repeated factors. `labels` is empty (all zero) or one label per edge.
FactoredPolynomial edge_distance_polynomial(int n_vertices, std::span<const Edge> edges,
                                            std::span<const Rational> labels = {});
FactoredPolynomial edge_distance_polynomial(const Graph& g, std::span<const Rational> labels = {});

/// Edge distance polynomial of the line graph: one variable per edge of `g`
/// (indexed like g.edges()), one factor x_e - x_f per pair e < f sharing a vertex.
FactoredPolynomial line_graph_distance_polynomial(const Graph& g);

}  // namespace ofsign
