#include "mvbell/verify.hpp"

#include "mvbell/bell.hpp"
#include "mvbell/errors.hpp"
#include "mvbell/fdb.hpp"
#include "mvbell/partition.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace mvbell {

nlohmann::ordered_json to_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["checks"] = r.checks;
    j["failures"] = r.failures;
    j["details"] = r.details;
    return j;
}

Rational random_rational(std::mt19937_64& rng) {
    const long long num = static_cast<long long>(rng() % 9) - 4;
    const long long den = static_cast<long long>(rng() % 3) + 1;
    return Rational(num, den);
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
    Rational r = random_rational(rng);
    while (r == 0) r = random_rational(rng);
    return r;
}

std::vector<Rational> random_vector(std::mt19937_64& rng, int dim) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) out.push_back(random_rational(rng));
    return out;
}

TaylorSeries random_series(std::mt19937_64& rng, int d_in, int d_out, int order,
                           std::vector<Rational> center) {
    TaylorSeries out(d_in, d_out, order, std::move(center));
    out.set_coeff(MultiIndex::zero(d_in), random_vector(rng, d_out));
    for (const MultiIndex& n : enumerate_graded(d_in, order)) {
        if (rng() % 4 == 0) continue;  // keep the series sparse
        out.set_coeff(n, random_vector(rng, d_out));
    }
    return out;
}

SuiteReport run_oracle_suite(std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    SuiteReport report{"oracle", seed, trials, 0, 0, nlohmann::ordered_json::object()};
    nlohmann::ordered_json mismatches = nlohmann::ordered_json::array();
    constexpr int kOrder = 5;
    for (int t = 0; t < trials; ++t) {
        const int d1 = t % 3 + 1;
        const int d2 = (t / 3) % 3 + 1;
        const int d3 = (t / 9) % 2 + 1;
        const TaylorSeries g = random_series(rng, d1, d2, kOrder, random_vector(rng, d1));
        const TaylorSeries f =
            random_series(rng, d2, d3, kOrder, g.coeff(MultiIndex::zero(d1)));
        const TaylorSeries composed = compose_oracle(f, g);
        std::vector<MultiIndex> ns{MultiIndex::zero(d1)};
        for (const MultiIndex& n : enumerate_graded(d1, kOrder)) ns.push_back(n);
        for (const MultiIndex& n : ns) {
            ++report.checks;
            if (fdb_derivative(f, g, n) != derivative_at(composed, n)) {
                ++report.failures;
                mismatches.push_back({{"trial", t}, {"n", n.entries()}});
            }
        }
    }
    report.details["order"] = kOrder;
    report.details["mismatches"] = std::move(mismatches);
    return report;
}

SuiteReport run_genfun_suite(std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    SuiteReport report{"genfun", seed, trials, 0, 0, nlohmann::ordered_json::object()};
    nlohmann::ordered_json mismatches = nlohmann::ordered_json::array();
    constexpr int kOrder = 4;
    for (int t = 0; t < trials; ++t) {
        const int d1 = t % 2 + 1;
        const int d2 = (t / 2) % 2 + 1;
        const TaylorSeries g = random_series(rng, d1, d2, kOrder, random_vector(rng, d1));
        const std::vector<Rational> u = random_vector(rng, d2);
        const GenFunReport r = check_generating_identity(g, u, kOrder);
        ++report.checks;
        if (!r.pass()) {
            ++report.failures;
            mismatches.push_back({{"trial", t}, {"report", to_json(r)}});
        }
    }
    report.details["order"] = kOrder;
    report.details["mismatches"] = std::move(mismatches);
    return report;
}

namespace {

void tally(SuiteReport& report, nlohmann::ordered_json& counts, const char* name,
           const PropResult& r) {
    report.checks += r.checks;
    report.failures += r.failures;
    counts[name] = {{"checks", r.checks}, {"failures", r.failures}};
}

// Accumulates a dimension-parameterized check over d1, d2 in {1, 2}.
template <typename Check>
PropResult sweep_dims(Check&& check) {
    PropResult total{0, 0};
    for (int d1 = 1; d1 <= 2; ++d1) {
        for (int d2 = 1; d2 <= 2; ++d2) {
            const PropResult r = check(d1, d2);
            total.checks += r.checks;
            total.failures += r.failures;
        }
    }
    return total;
}

}  // namespace

PropResult check_vanishing_beyond_part_bound(int d1, int d2, int max_abs_n) {
    int checks = 0, failures = 0;
    std::vector<MultiIndex> ns{MultiIndex::zero(d1)};
    for (const MultiIndex& n : enumerate_graded(d1, max_abs_n)) ns.push_back(n);
    for (const MultiIndex& n : ns) {
        for (long long abs_k = n.abs() + 1; abs_k <= n.abs() + 2; ++abs_k) {
            for (const MultiIndex& k : enumerate_grade(d2, static_cast<int>(abs_k))) {
                ++checks;
                if (!solve_partial(n, k).empty() || !bell_partial_mv(n, k).is_zero()) {
                    ++failures;
                }
            }
        }
    }
    return {checks, failures};
}

PropResult check_support_bound(int d1, int d2, int max_abs_n) {
    int checks = 0, failures = 0;
    std::vector<MultiIndex> ns{MultiIndex::zero(d1)};
    for (const MultiIndex& n : enumerate_graded(d1, max_abs_n)) ns.push_back(n);
    for (const MultiIndex& n : ns) {
        std::vector<MultiIndex> ks{MultiIndex::zero(d2)};
        for (const MultiIndex& k : enumerate_graded(d2, static_cast<int>(n.abs()))) {
            ks.push_back(k);
        }
        for (const MultiIndex& k : ks) {
            const long long bound = n.abs() - k.abs() + 1;
            for (const SolutionAssignment& a : solve_partial(n, k)) {
                for (const auto& [j, kj] : a.support()) {
                    ++checks;
                    if (j.abs() > bound) ++failures;
                }
            }
        }
        for (const SolutionAssignment& a : solve_complete(n, d2)) {
            for (const auto& [j, kj] : a.support()) {
                ++checks;
                if (j.abs() > n.abs()) ++failures;
            }
        }
    }
    return {checks, failures};
}

PropResult check_base_case(int max_d1, int max_d2) {
    int checks = 0, failures = 0;
    for (int d1 = 1; d1 <= max_d1; ++d1) {
        for (int d2 = 1; d2 <= max_d2; ++d2) {
            const MultiIndex n0 = MultiIndex::zero(d1);
            const MultiIndex k0 = MultiIndex::zero(d2);
            const SparsePoly one = SparsePoly::constant(d1, d2, 1);
            ++checks;
            const auto complete = solve_complete(n0, d2);
            if (complete.size() != 1 || !complete[0].empty()) ++failures;
            ++checks;
            if (bell_complete_mv(n0, d2) != one) ++failures;
            ++checks;
            if (bell_partial_mv(n0, k0) != one) ++failures;
        }
    }
    return {checks, failures};
}

PropResult check_complete_decomposition(int d1, int d2, int max_abs_n) {
    int checks = 0, failures = 0;
    std::vector<MultiIndex> ns{MultiIndex::zero(d1)};
    for (const MultiIndex& n : enumerate_graded(d1, max_abs_n)) ns.push_back(n);
    for (const MultiIndex& n : ns) {
        SparsePoly sum = bell_partial_mv(n, MultiIndex::zero(d2));
        for (const MultiIndex& k : enumerate_graded(d2, static_cast<int>(n.abs()))) {
            sum = sum.plus(bell_partial_mv(n, k));
        }
        ++checks;
        if (sum != bell_complete_mv(n, d2)) ++failures;
    }
    return {checks, failures};
}

PropResult check_scaling(std::mt19937_64& rng, int trials) {
    int checks = 0, failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int d1 = static_cast<int>(rng() % 2) + 1;
        const int d2 = static_cast<int>(rng() % 2) + 1;
        std::vector<int> n_entries, k_entries;
        long long abs_n = 0;
        for (int i = 0; i < d1; ++i) {
            n_entries.push_back(static_cast<int>(rng() % 3));
            abs_n += n_entries.back();
        }
        unsigned long long remaining =
            static_cast<unsigned long long>(std::min<long long>(abs_n, 4));
        for (int i = 0; i < d2; ++i) {
            const int e = static_cast<int>(rng() % (remaining + 1));
            k_entries.push_back(e);
            remaining -= static_cast<unsigned long long>(e);
        }
        const MultiIndex n(n_entries), k(k_entries);
        std::vector<Rational> a;
        for (int i = 0; i < d1; ++i) a.push_back(random_nonzero_rational(rng));
        const Rational b = random_nonzero_rational(rng);
        const Rational factor = pow(a, n) * rational_pow(b, k.abs());
        ++checks;
        if (scale_vars(n, k, a, b) != bell_partial_mv(n, k).times(factor)) ++failures;
    }
    return {checks, failures};
}

PropResult check_axis_reduction(int max_n, int max_d) {
    int checks = 0, failures = 0;
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int d1 = 1; d1 <= max_d; ++d1) {
                for (int d2 = 1; d2 <= max_d; ++d2) {
                    for (int alpha = 1; alpha <= d1; ++alpha) {
                        for (int beta = 1; beta <= d2; ++beta) {
                            ++checks;
                            const AxisReduction r =
                                reduce_single_axis(n, k, alpha, beta, d1, d2);
                            if (r.multivariate != r.embedded_1d) ++failures;
                        }
                    }
                }
            }
        }
    }
    return {checks, failures};
}

SuiteReport run_props_suite(std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    SuiteReport report{"props", seed, trials, 0, 0, nlohmann::ordered_json::object()};
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();

    tally(report, counts, "vanishing_beyond_part_bound", sweep_dims([](int d1, int d2) {
              return check_vanishing_beyond_part_bound(d1, d2, 5);
          }));
    tally(report, counts, "support_bound",
          sweep_dims([](int d1, int d2) { return check_support_bound(d1, d2, 5); }));
    tally(report, counts, "base_case", check_base_case(2, 2));
    tally(report, counts, "complete_decomposition", sweep_dims([](int d1, int d2) {
              return check_complete_decomposition(d1, d2, 4);
          }));
    tally(report, counts, "variable_scaling", check_scaling(rng, trials));
    tally(report, counts, "single_axis_reduction", check_axis_reduction(5, 3));

    report.details = std::move(counts);
    return report;
}

}  // namespace mvbell
