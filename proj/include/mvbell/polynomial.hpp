#pragma once

#include "mvbell/multiindex.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace mvbell {

/// One indexed variable x_{j,comp}: component comp (1-based, in [1, d2]) of
/// the vector variable x_j. j is a nonzero multi-index of dimension d1.
struct VarId {
    MultiIndex j;
    int comp;

    bool operator==(const VarId&) const = default;
    /// "x[2,1]" when d2 = 1, "x[2,1;3]" otherwise.
    std::string to_string(int d2) const;
};

/// Storage order on variables: graded-lex on j, then component.
struct VarIdCanonicalLess {
    bool operator()(const VarId& a, const VarId& b) const;
};

/// Display order: higher |j| first, within a grade the graded-lex order,
/// then component. Matches the conventional way Bell polynomials are written,
/// e.g. "4*x[3]*x[1] + 3*x[2]^2".
struct VarIdDisplayLess {
    bool operator()(const VarId& a, const VarId& b) const;
};

/// A product of variable powers. The factor list is kept sorted in storage
/// order with strictly positive exponents; the empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<VarId, int>> factors);

    const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    /// Total degree (sum of exponents).
    long long degree() const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::pair<VarId, int>> factors_;
};

/// Term order: lower total degree first, then compare the display-ordered
/// variable sequences (a term led by a higher variable comes first). This is
/// the order in which polynomials print and serialize.
bool term_order_less(const Monomial& a, const Monomial& b);

struct TermOrderLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return term_order_less(a, b);
    }
};

using VarAssignment = std::map<VarId, Rational, VarIdCanonicalLess>;

/// Polynomial with exact rational coefficients in the indexed variables
/// x_{j,comp}. Zero coefficients are never stored, so equal polynomials have
/// identical representations; the empty polynomial is 0 (distinct from the
/// constant 1). Immutable once built.
class SparsePoly {
public:
    SparsePoly(int d1, int d2);
    static SparsePoly constant(int d1, int d2, Rational value);

    int d1() const { return d1_; }
    int d2() const { return d2_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational, TermOrderLess>& terms() const { return terms_; }

    /// Accumulates coeff * monomial; validates variable dimensions.
    void add_term(const Monomial& monomial, const Rational& coeff);

    SparsePoly plus(const SparsePoly& other) const;
    SparsePoly times(const Rational& scalar) const;

    /// Substitutes x_v -> factor(v) * x_v for every variable.
    SparsePoly scale_variables(const std::function<Rational(const VarId&)>& factor) const;

    /// Exact evaluation; every variable of the polynomial must be assigned.
    Rational eval(const VarAssignment& assignment) const;

    /// All distinct variables, in storage order.
    std::vector<VarId> variables() const;

    /// Pretty-printer, e.g. "4*x[3]*x[1] + 3*x[2]^2"; "0" for the zero poly.
    std::string to_text() const;

    bool operator==(const SparsePoly&) const = default;

private:
    int d1_;
    int d2_;
    std::map<Monomial, Rational, TermOrderLess> terms_;
};

/// Terms in print order; each monomial factor as [[j entries], comp, exp] in
/// the same variable order the pretty-printer uses.
nlohmann::ordered_json to_json(const SparsePoly& p);

}  // namespace mvbell
