#pragma once

#include "mvbell/series.hpp"

#include <cstdint>
#include <random>
#include <string>

#include <json.hpp>

namespace mvbell {

struct SuiteReport {
    std::string suite;
    std::uint64_t seed;
    int trials;
    int checks;
    int failures;
    nlohmann::ordered_json details;

    bool pass() const { return failures == 0; }
};

nlohmann::ordered_json to_json(const SuiteReport& r);

// Small rationals (numerator in [-4,4], denominator in {1,2,3}) drawn with
// raw engine words so results don't depend on the standard library's
// distribution implementations.
Rational random_rational(std::mt19937_64& rng);
Rational random_nonzero_rational(std::mt19937_64& rng);
std::vector<Rational> random_vector(std::mt19937_64& rng, int dim);
TaylorSeries random_series(std::mt19937_64& rng, int d_in, int d_out, int order,
                           std::vector<Rational> center);

// Composition-derivative engine vs. the substitution oracle: trial t uses
// d1 = t%3+1, d2 = (t/3)%3+1, d3 = (t/9)%2+1, order 5, and compares every
// derivative with |n| <= 5 exactly.
SuiteReport run_oracle_suite(std::uint64_t seed, int trials);

// Generating identity: trial t uses d1 = t%2+1, d2 = (t/2)%2+1, order 4,
// random weight vector.
SuiteReport run_genfun_suite(std::uint64_t seed, int trials);

// Structural properties of the solution sets and Bell polynomials:
// empty/zero beyond |k| > |n|, support bounds, base case, the
// complete-equals-sum-of-partials identity, variable scaling (randomized,
// `trials` draws), and the single-axis reduction to the classical
// polynomials.
SuiteReport run_props_suite(std::uint64_t seed, int trials);

struct PropResult {
    int checks;
    int failures;

    bool pass() const { return failures == 0; }
};

// |k| > |n| gives an empty solution set and the zero polynomial (sampled for
// |k| up to |n| + 2).
PropResult check_vanishing_beyond_part_bound(int d1, int d2, int max_abs_n);
// Keys of assignments in K_{n,k} satisfy |j| <= |n| - |k| + 1; in K_n,
// |j| <= |n|.
PropResult check_support_bound(int d1, int d2, int max_abs_n);
// K_0 = {empty assignment}; B_0 = B_{0,0} = 1.
PropResult check_base_case(int max_d1, int max_d2);
// Complete polynomial = sum of partials over all |k| <= |n|.
PropResult check_complete_decomposition(int d1, int d2, int max_abs_n);
// scale_vars(n,k,a,b) = a^n b^|k| B_{n,k}, randomized.
PropResult check_scaling(std::mt19937_64& rng, int trials);
// B_{n e_alpha, k e_beta} equals the classical B_{n,k} on the chosen axes.
PropResult check_axis_reduction(int max_n, int max_d);

}  // namespace mvbell
