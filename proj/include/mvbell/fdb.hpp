#pragma once

#include "mvbell/bell.hpp"
#include "mvbell/series.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include <json.hpp>

namespace mvbell {

// Derivatives of a composition at a point: values[n] = d^n (f o g), |n| <= order.
struct DerivTensor {
    int d_in;
    int d_out;
    int order;
    std::map<MultiIndex, std::vector<Rational>, GradedLexLess> values;

    bool operator==(const DerivTensor&) const = default;
};

nlohmann::ordered_json to_json(const DerivTensor& t);

// Memo for partial Bell polynomials keyed by (n, k). Safe for concurrent use;
// results are identical with caching disabled since values depend only on the
// key.
class BellCache {
public:
    explicit BellCache(bool enabled = true) : enabled_(enabled) {}

    std::shared_ptr<const SparsePoly> get(const MultiIndex& n, const MultiIndex& k);
    std::size_t size() const;

    static BellCache& global();

private:
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    bool enabled_;
    mutable std::mutex mutex_;
    std::map<Key, std::shared_ptr<const SparsePoly>> entries_;
};

// d^n (f o g) evaluated at g's center:
//   sum over k in N^{d2}, |k| <= |n|, of f^(k)(g0) * B_{n,k}(g^(j)(center); j).
// f must be expanded at g0 = g(center). Exact rational arithmetic.
std::vector<Rational> fdb_derivative(const TaylorSeries& f, const TaylorSeries& g,
                                     const MultiIndex& n,
                                     BellCache& cache = BellCache::global());

DerivTensor fdb_all(const TaylorSeries& f, const TaylorSeries& g, int order,
                    BellCache& cache = BellCache::global());

// 1-D path through the classical partial Bell polynomials; must agree with
// fdb_derivative on the same inputs.
Rational fdb_1d(const TaylorSeries& f, const TaylorSeries& g, int n);

struct GenFunReport {
    struct Mismatch {
        MultiIndex n;
        Rational lhs;
        Rational rhs;
    };
    int max_abs_n;
    std::vector<Mismatch> mismatches;

    bool pass() const { return mismatches.empty(); }
};

nlohmann::ordered_json to_json(const GenFunReport& r);

// Order-by-order check of the Bell-polynomial generating identity
//   sum_n sum_{|k|<=|n|} B_{n,k}(g_j; j) u^k x^n / n!  ==  exp(u . (g - g0)),
// with the left side built from Bell polynomials and the right side by series
// exponentiation. Returns the per-coefficient differences found.
GenFunReport check_generating_identity(const TaylorSeries& g,
                                       const std::vector<Rational>& u, int max_abs_n);

}  // namespace mvbell
