#pragma once

#include "mvbell/multiindex.hpp"
#include "mvbell/rational.hpp"

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace mvbell {

// Truncated Taylor expansion of a map R^{d_in} -> R^{d_out} about `center`,
// stored in derivative convention: f(x) = sum_n coeff(n) * (x-center)^n / n!,
// so coeff(n) is exactly the derivative vector f^(n)(center). Keys with an
// all-zero coefficient vector are not stored.
class TaylorSeries {
public:
    using CoeffMap = std::map<MultiIndex, std::vector<Rational>, GradedLexLess>;

    TaylorSeries(int d_in, int d_out, int order, std::vector<Rational> center);

    int d_in() const { return d_in_; }
    int d_out() const { return d_out_; }
    int order() const { return order_; }
    const std::vector<Rational>& center() const { return center_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    // Derivative vector at `n`; zero vector when absent, TruncationError when
    // |n| exceeds the stored order.
    std::vector<Rational> coeff(const MultiIndex& n) const;

    void set_coeff(const MultiIndex& n, std::vector<Rational> value);

    // The scalar series tracking one output component (i is 1-based).
    TaylorSeries component(int i) const;

    bool operator==(const TaylorSeries&) const = default;

private:
    int d_in_;
    int d_out_;
    int order_;
    std::vector<Rational> center_;
    CoeffMap coeffs_;
};

TaylorSeries add(const TaylorSeries& s, const TaylorSeries& t);
TaylorSeries scale(const TaylorSeries& s, const Rational& c);

// Truncated product via the Leibniz convolution sum_{m} C(n,m) s_m t_{n-m}.
// Both factors scalar, or exactly one scalar factor applied componentwise.
TaylorSeries mul(const TaylorSeries& s, const TaylorSeries& t);

TaylorSeries cw_mul(const std::vector<Rational>& u, const TaylorSeries& s);
TaylorSeries dot(const std::vector<Rational>& u, const TaylorSeries& s);

// exp of a scalar series with zero constant term: sum_{m<=order} s^m/m!.
TaylorSeries exp_series(const TaylorSeries& s);

// Direct truncated substitution of g into f; f must be expanded at
// g0 = g(center). Result order = min(f.order, g.order). Deliberately avoids
// Bell polynomials so it can serve as an independent oracle for the
// Faa di Bruno path.
TaylorSeries compose_oracle(const TaylorSeries& f, const TaylorSeries& g);

std::vector<Rational> derivative_at(const TaylorSeries& s, const MultiIndex& n);

nlohmann::ordered_json to_json(const TaylorSeries& s);
TaylorSeries taylor_from_json(const nlohmann::json& j);
TaylorSeries taylor_from_file(const std::string& path);

}  // namespace mvbell
