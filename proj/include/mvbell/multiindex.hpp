#pragma once

#include "mvbell/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mvbell {

/// A vector of nonnegative integers. Dimension is fixed at construction and
/// every binary operation requires matching dimensions; mismatches throw
/// DomainError rather than broadcasting.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> entries);

    static MultiIndex zero(int dim);
    static MultiIndex ones(int dim);
    /// Unit vector e_axis with 1-based axis in [1, dim].
    static MultiIndex unit(int dim, int axis);

    int dim() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    /// |n| = sum of entries.
    long long abs() const;
    /// n! = product of entry factorials.
    Int factorial() const;
    bool is_zero() const;

    /// Entrywise scaling by a nonnegative integer.
    MultiIndex scaled(long long s) const;

    bool operator==(const MultiIndex&) const = default;

    /// Renders "(a,b,c)".
    std::string to_string() const;

private:
    std::vector<int> entries_;
};

MultiIndex add(const MultiIndex& a, const MultiIndex& b);
/// Componentwise difference; throws DomainError if any entry would go negative.
MultiIndex sub_checked(const MultiIndex& a, const MultiIndex& b);
/// Componentwise a <= b.
bool leq(const MultiIndex& a, const MultiIndex& b);

/// x^n = prod_i x_i^{n_i}; the empty product is 1.
Rational pow(const std::vector<Rational>& x, const MultiIndex& n);

/// prod_i C(n_i, m_i), the Leibniz factor for derivative-convention products.
Int binomial(const MultiIndex& n, const MultiIndex& m);

/// Total order used everywhere for iteration and canonical forms: smaller
/// modulus first; within a modulus, larger leading entries first, so for
/// dimension 2 the order runs (1,0),(0,1),(2,0),(1,1),(0,2),...
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return graded_lex_less(a, b);
    }
};

/// All m with |m| = abs_value, in graded-lex order. abs_value 0 gives {0}.
std::vector<MultiIndex> enumerate_grade(int dim, int abs_value);

/// All m with 1 <= |m| <= max_abs, in graded-lex order. Requires dim >= 1.
std::vector<MultiIndex> enumerate_graded(int dim, int max_abs);

/// Parses "2,1,0" (a single integer means dimension 1).
MultiIndex parse_multiindex_csv(std::string_view text);

}  // namespace mvbell
