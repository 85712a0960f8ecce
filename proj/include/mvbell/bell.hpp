#pragma once

#include "mvbell/partition.hpp"
#include "mvbell/polynomial.hpp"

#include <vector>

namespace mvbell {

/// Partial multivariate Bell polynomial B_{n,k} over the solution set K_{n,k}:
/// each assignment contributes the monomial prod x_{j,i}^{(k_j)_i} with
/// coefficient n! / prod_j (k_j! * (j!)^{|k_j|}). Coefficients are checked to
/// be integers; a non-integer coefficient throws IntegralityError naming the
/// offending assignment. Returns the zero polynomial when K_{n,k} is empty.
SparsePoly bell_partial_mv(const MultiIndex& n, const MultiIndex& k);

/// Complete multivariate Bell polynomial B_n over K_n.
SparsePoly bell_complete_mv(const MultiIndex& n, int d2);

/// Classical single-variable partial Bell polynomial, built independently of
/// the multivariate code path by direct tuple enumeration.
SparsePoly bell_partial_1d(int n, int k);

/// Classical single-variable complete Bell polynomial.
SparsePoly bell_complete_1d(int n);

/// Builds B_{n,k}(a^j * b * x_j ; j), i.e. B_{n,k} with every variable
/// x_{j,i} replaced by (a^j * b) x_{j,i}. Equal to a^n b^|k| B_{n,k}.
SparsePoly scale_vars(const MultiIndex& n, const MultiIndex& k,
                      const std::vector<Rational>& a, const Rational& b);

struct AxisReduction {
    SparsePoly multivariate;  // B_{n e_alpha, k e_beta} in dimensions (d1, d2)
    SparsePoly embedded_1d;   // B_{n,k} with x_j renamed to x_{j e_alpha, beta}
};

/// The single-axis reduction: with n, k concentrated on axes alpha and beta
/// (1-based), the multivariate polynomial coincides with the classical one
/// under the variable renaming x_j -> x_{j e_alpha, beta}. Both sides are
/// returned so callers can assert equality.
AxisReduction reduce_single_axis(int n, int k, int alpha, int beta, int d1, int d2);

/// Text table of the 1-D Bell polynomials up to max_n, complete rows split
/// into partial columns by part count k.
std::string render_bell_table(int max_n);

}  // namespace mvbell
