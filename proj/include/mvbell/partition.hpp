#pragma once

#include "mvbell/multiindex.hpp"

#include <utility>
#include <vector>

namespace mvbell {

/// A finite-support map from multi-indices j (dimension d1, j != 0) to
/// multi-indices k_j (dimension d2, k_j != 0). Zero values are implicit and
/// never stored. Pairs are kept sorted by graded-lex order on j.
class SolutionAssignment {
public:
    SolutionAssignment(int d1, int d2);
    SolutionAssignment(int d1, int d2, std::vector<std::pair<MultiIndex, MultiIndex>> support);

    int d1() const { return d1_; }
    int d2() const { return d2_; }
    const std::vector<std::pair<MultiIndex, MultiIndex>>& support() const { return support_; }
    bool empty() const { return support_.empty(); }

    /// sum_j j * |k_j|, a multi-index of dimension d1.
    MultiIndex weight() const;
    /// sum_j k_j, a multi-index of dimension d2.
    MultiIndex part_count() const;

    bool operator==(const SolutionAssignment&) const = default;

    /// Renders "{(1,0)->(2), (0,1)->(1)}".
    std::string to_string() const;

private:
    int d1_;
    int d2_;
    std::vector<std::pair<MultiIndex, MultiIndex>> support_;
};

/// Canonical order on assignments: fewer support keys first, then the support
/// lists compared pairwise (graded-lex on j, then on k_j).
bool assignment_less(const SolutionAssignment& a, const SolutionAssignment& b);

/// Enumerates K_{n,k}: all assignments with weight n and part count k, in
/// canonical order. Empty when |k| > |n|. d1 = dim(n), d2 = dim(k).
std::vector<SolutionAssignment> solve_partial(const MultiIndex& n, const MultiIndex& k);

/// Enumerates K_n: all assignments with weight n, in canonical order.
std::vector<SolutionAssignment> solve_complete(const MultiIndex& n, int d2);

}  // namespace mvbell
