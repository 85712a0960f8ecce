#include "mvbell/fdb.hpp"

#include "mvbell/errors.hpp"

#include <algorithm>

namespace mvbell {

nlohmann::ordered_json to_json(const DerivTensor& t) {
    nlohmann::ordered_json j;
    j["d_in"] = t.d_in;
    j["d_out"] = t.d_out;
    j["order"] = t.order;
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const auto& [n, v] : t.values) {
        nlohmann::ordered_json vals = nlohmann::ordered_json::array();
        for (const Rational& r : v) vals.push_back(to_string(r));
        values.push_back({{"n", n.entries()}, {"v", std::move(vals)}});
    }
    j["values"] = std::move(values);
    return j;
}

std::shared_ptr<const SparsePoly> BellCache::get(const MultiIndex& n, const MultiIndex& k) {
    if (!enabled_) {
        return std::make_shared<const SparsePoly>(bell_partial_mv(n, k));
    }
    const Key key{n.entries(), k.entries()};
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = entries_.find(key);
        if (it != entries_.end()) return it->second;
    }
    auto computed = std::make_shared<const SparsePoly>(bell_partial_mv(n, k));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, std::move(computed));
    return it->second;  // first writer wins; identical value either way
}

std::size_t BellCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

BellCache& BellCache::global() {
    static BellCache cache;
    return cache;
}

namespace {

void require_composable(const TaylorSeries& f, const TaylorSeries& g) {
    if (f.d_in() != g.d_out()) {
        throw ContractError("composition derivative: f input dimension must equal "
                            "g output dimension");
    }
    if (f.center() != g.coeff(MultiIndex::zero(g.d_in()))) {
        throw ContractError("composition derivative: f must be expanded at g's value "
                            "at its center");
    }
}

// B_{n,k} evaluated at x_{j,i} = i-th component of g^(j)(center).
Rational eval_bell_at_g(const SparsePoly& bell, const TaylorSeries& g) {
    VarAssignment assign;
    for (const VarId& v : bell.variables()) {
        assign[v] = g.coeff(v.j)[static_cast<std::size_t>(v.comp - 1)];
    }
    return bell.eval(assign);
}

}  // namespace

std::vector<Rational> fdb_derivative(const TaylorSeries& f, const TaylorSeries& g,
                                     const MultiIndex& n, BellCache& cache) {
    require_composable(f, g);
    if (n.dim() != g.d_in()) {
        throw ContractError("composition derivative: index dimension must match "
                            "g input dimension");
    }
    if (n.abs() > f.order() || n.abs() > g.order()) {
        throw TruncationError("derivative order " + n.to_string() +
                              " exceeds series truncation order");
    }
    const int d2 = g.d_out();
    std::vector<Rational> result(static_cast<std::size_t>(f.d_out()), 0);
    std::vector<MultiIndex> ks{MultiIndex::zero(d2)};
    for (const MultiIndex& k : enumerate_graded(d2, static_cast<int>(n.abs()))) {
        ks.push_back(k);
    }
    for (const MultiIndex& k : ks) {
        const std::shared_ptr<const SparsePoly> bell = cache.get(n, k);
        if (bell->is_zero()) continue;
        const Rational bell_value = eval_bell_at_g(*bell, g);
        if (bell_value == 0) continue;
        const std::vector<Rational> fk = f.coeff(k);
        for (std::size_t c = 0; c < result.size(); ++c) {
            result[c] += fk[c] * bell_value;
        }
    }
    return result;
}

DerivTensor fdb_all(const TaylorSeries& f, const TaylorSeries& g, int order,
                    BellCache& cache) {
    require_composable(f, g);
    if (order < 0) throw DomainError("derivative order must be >= 0");
    if (order > f.order() || order > g.order()) {
        throw TruncationError("batch order exceeds series truncation order");
    }
    DerivTensor out{g.d_in(), f.d_out(), order, {}};
    std::vector<MultiIndex> ns{MultiIndex::zero(g.d_in())};
    for (const MultiIndex& n : enumerate_graded(g.d_in(), order)) ns.push_back(n);
    for (const MultiIndex& n : ns) {
        out.values.emplace(n, fdb_derivative(f, g, n, cache));
    }
    return out;
}

Rational fdb_1d(const TaylorSeries& f, const TaylorSeries& g, int n) {
    if (f.d_in() != 1 || f.d_out() != 1 || g.d_in() != 1 || g.d_out() != 1) {
        throw ContractError("1-D composition derivative needs scalar series");
    }
    require_composable(f, g);
    if (n < 0) throw DomainError("derivative order must be >= 0");
    if (n > f.order() || n > g.order()) {
        throw TruncationError("derivative order exceeds series truncation order");
    }
    Rational result = 0;
    for (int k = 0; k <= n; ++k) {
        const SparsePoly bell = bell_partial_1d(n, k);
        if (bell.is_zero()) continue;
        const Rational bell_value = eval_bell_at_g(bell, g);
        result += f.coeff(MultiIndex({k}))[0] * bell_value;
    }
    return result;
}

nlohmann::ordered_json to_json(const GenFunReport& r) {
    nlohmann::ordered_json j;
    j["max_abs_n"] = r.max_abs_n;
    nlohmann::ordered_json mismatches = nlohmann::ordered_json::array();
    for (const auto& m : r.mismatches) {
        mismatches.push_back({{"n", m.n.entries()},
                              {"lhs", to_string(m.lhs)},
                              {"rhs", to_string(m.rhs)}});
    }
    j["mismatches"] = std::move(mismatches);
    return j;
}

GenFunReport check_generating_identity(const TaylorSeries& g,
                                       const std::vector<Rational>& u, int max_abs_n) {
    if (static_cast<int>(u.size()) != g.d_out()) {
        throw DomainError("weight vector must have dimension d_out of g");
    }
    if (max_abs_n < 0) throw DomainError("max_abs_n must be >= 0");
    if (max_abs_n > g.order()) {
        throw TruncationError("max_abs_n exceeds series truncation order");
    }
    const int d1 = g.d_in();
    const int d2 = g.d_out();

    // Right side: exp(u . (g - g0)), by series arithmetic only.
    TaylorSeries contracted(d1, 1, max_abs_n, g.center());
    for (const auto& [n, v] : g.coeffs()) {
        if (n.is_zero() || n.abs() > max_abs_n) continue;
        Rational acc = 0;
        for (std::size_t i = 0; i < v.size(); ++i) acc += u[i] * v[i];
        contracted.set_coeff(n, {acc});
    }
    const TaylorSeries rhs = exp_series(contracted);

    // Left side: coefficient at n is sum_{|k|<=|n|} B_{n,k}(g_j; j) u^k, by
    // Bell-polynomial construction only.
    GenFunReport report{max_abs_n, {}};
    std::vector<MultiIndex> ns{MultiIndex::zero(d1)};
    for (const MultiIndex& n : enumerate_graded(d1, max_abs_n)) ns.push_back(n);
    for (const MultiIndex& n : ns) {
        Rational lhs = 0;
        std::vector<MultiIndex> ks{MultiIndex::zero(d2)};
        for (const MultiIndex& k : enumerate_graded(d2, static_cast<int>(n.abs()))) {
            ks.push_back(k);
        }
        for (const MultiIndex& k : ks) {
            const SparsePoly bell = bell_partial_mv(n, k);
            if (bell.is_zero()) continue;
            lhs += eval_bell_at_g(bell, g) * pow(u, k);
        }
        const Rational rhs_n = rhs.coeff(n)[0];
        if (lhs != rhs_n) {
            report.mismatches.push_back({n, lhs, rhs_n});
        }
    }
    return report;
}

}  // namespace mvbell
