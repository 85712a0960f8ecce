#include "mvbell/bell.hpp"

#include "mvbell/errors.hpp"

#include <algorithm>
#include <functional>

namespace mvbell {

namespace {

// n! / prod_j (k_j! * (j!)^{|k_j|}), asserted integral.
Rational assignment_coefficient(const MultiIndex& n, const SolutionAssignment& a) {
    Int denom = 1;
    for (const auto& [j, kj] : a.support()) {
        Int jfact = j.factorial();
        Int jfact_pow = 1;
        for (long long e = 0; e < kj.abs(); ++e) jfact_pow *= jfact;
        denom *= kj.factorial() * jfact_pow;
    }
    Rational coeff(n.factorial(), denom);
    if (denominator(coeff) != 1) {
        throw IntegralityError("non-integer Bell coefficient " + to_string(coeff) +
                               " for n=" + n.to_string() + ", assignment " + a.to_string());
    }
    return coeff;
}

Monomial assignment_monomial(const SolutionAssignment& a) {
    std::vector<std::pair<VarId, int>> factors;
    for (const auto& [j, kj] : a.support()) {
        for (int i = 0; i < kj.dim(); ++i) {
            if (kj[i] > 0) factors.push_back({VarId{j, i + 1}, kj[i]});
        }
    }
    return Monomial(std::move(factors));
}

SparsePoly from_assignments(const MultiIndex& n, int d2,
                            const std::vector<SolutionAssignment>& assignments) {
    SparsePoly poly(n.dim(), d2);
    for (const SolutionAssignment& a : assignments) {
        poly.add_term(assignment_monomial(a), assignment_coefficient(n, a));
    }
    return poly;
}

}  // namespace

SparsePoly bell_partial_mv(const MultiIndex& n, const MultiIndex& k) {
    return from_assignments(n, k.dim(), solve_partial(n, k));
}

SparsePoly bell_complete_mv(const MultiIndex& n, int d2) {
    return from_assignments(n, d2, solve_complete(n, d2));
}

namespace {

VarId var_1d(int j) { return VarId{MultiIndex({j}), 1}; }

// Direct tuple enumeration of (k_1, ..., k_limit) with sum j*k_j = n and,
// when part_budget >= 0, sum k_j = part_budget. Independent of the
// multivariate solver so the two can check each other.
void tuples_1d(int j, int limit, int rem_n, int rem_k,
               std::vector<std::pair<int, int>>& chosen,
               const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    if (rem_n == 0 && rem_k <= 0) {
        if (rem_k == 0 || rem_k == -1) emit(chosen);  // -1 flags "no part budget"
        return;
    }
    if (j > limit) return;
    const int budget = rem_k >= 0 ? std::min(rem_k, rem_n / j) : rem_n / j;
    for (int c = 0; c <= budget; ++c) {
        if (c > 0) chosen.push_back({j, c});
        tuples_1d(j + 1, limit, rem_n - j * c, rem_k >= 0 ? rem_k - c : rem_k, chosen, emit);
        if (c > 0) chosen.pop_back();
    }
}

SparsePoly bell_1d_impl(int n, int k_or_minus1) {
    if (n < 0 || k_or_minus1 < -1) throw DomainError("Bell polynomial orders must be >= 0");
    SparsePoly poly(1, 1);
    const int limit = k_or_minus1 >= 0 ? n - k_or_minus1 + 1 : n;
    const Int n_fact = int_factorial(n);
    std::vector<std::pair<int, int>> chosen;
    auto emit = [&](const std::vector<std::pair<int, int>>& tuple) {
        Int denom = 1;
        std::vector<std::pair<VarId, int>> factors;
        for (const auto& [j, kj] : tuple) {
            Int jfact_pow = 1;
            const Int jfact = int_factorial(j);
            for (int e = 0; e < kj; ++e) jfact_pow *= jfact;
            denom *= int_factorial(kj) * jfact_pow;
            factors.push_back({var_1d(j), kj});
        }
        Rational coeff(n_fact, denom);
        if (denominator(coeff) != 1) {
            throw IntegralityError("non-integer 1-D Bell coefficient for n=" +
                                   std::to_string(n));
        }
        poly.add_term(Monomial(std::move(factors)), coeff);
    };
    tuples_1d(1, std::max(limit, 0), n, k_or_minus1 >= 0 ? k_or_minus1 : -1, chosen, emit);
    return poly;
}

}  // namespace

SparsePoly bell_partial_1d(int n, int k) {
    if (k < 0) throw DomainError("Bell polynomial orders must be >= 0");
    return bell_1d_impl(n, k);
}

SparsePoly bell_complete_1d(int n) { return bell_1d_impl(n, -1); }

SparsePoly scale_vars(const MultiIndex& n, const MultiIndex& k,
                      const std::vector<Rational>& a, const Rational& b) {
    if (static_cast<int>(a.size()) != n.dim()) {
        throw DomainError("scale_vars: a must have the dimension of n");
    }
    return bell_partial_mv(n, k).scale_variables(
        [&](const VarId& v) { return pow(a, v.j) * b; });
}

AxisReduction reduce_single_axis(int n, int k, int alpha, int beta, int d1, int d2) {
    if (n < 0 || k < 0) throw DomainError("Bell polynomial orders must be >= 0");
    if (alpha < 1 || alpha > d1 || beta < 1 || beta > d2) {
        throw DomainError("reduce_single_axis: axis out of range");
    }
    const MultiIndex n_mv = MultiIndex::unit(d1, alpha).scaled(n);
    const MultiIndex k_mv = MultiIndex::unit(d2, beta).scaled(k);
    AxisReduction out{bell_partial_mv(n_mv, k_mv), SparsePoly(d1, d2)};

    const SparsePoly classical = bell_partial_1d(n, k);
    for (const auto& [m, c] : classical.terms()) {
        std::vector<std::pair<VarId, int>> factors;
        for (const auto& [var, exp] : m.factors()) {
            const int j_scalar = var.j[0];
            factors.push_back({VarId{MultiIndex::unit(d1, alpha).scaled(j_scalar), beta}, exp});
        }
        out.embedded_1d.add_term(Monomial(std::move(factors)), c);
    }
    return out;
}

std::string render_bell_table(int max_n) {
    if (max_n < 1) throw DomainError("table needs max_n >= 1");
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            SparsePoly p = bell_partial_1d(n, k);
            cells[static_cast<std::size_t>(n - 1)].push_back(p.is_zero() ? "" : p.to_text());
        }
    }
    std::vector<std::size_t> widths(static_cast<std::size_t>(max_n));
    for (int k = 1; k <= max_n; ++k) {
        std::size_t w = std::string("k=").size() + std::to_string(k).size();
        for (int n = k; n <= max_n; ++n) {
            w = std::max(w, cells[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)].size());
        }
        widths[static_cast<std::size_t>(k - 1)] = w;
    }
    const std::string label_pad(std::to_string(max_n).size(), ' ');
    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(s.size(), w), ' ');
        return s;
    };
    std::string out = "B_n" + label_pad;
    for (int k = 1; k <= max_n; ++k) {
        out += "  " + pad("k=" + std::to_string(k), widths[static_cast<std::size_t>(k - 1)]);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
    for (int n = 1; n <= max_n; ++n) {
        std::string row = pad("B_" + std::to_string(n), 3 + label_pad.size());
        for (int k = 1; k <= n; ++k) {
            row += "  " + pad(cells[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)],
                              widths[static_cast<std::size_t>(k - 1)]);
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row + '\n';
    }
    return out;
}

}  // namespace mvbell
