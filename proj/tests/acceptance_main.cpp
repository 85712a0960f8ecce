// Acceptance gate: ten criteria, each compared exactly (tolerance 0) and
// held to a wall-clock budget. Prints one line per criterion.

#include "mvbell/bell.hpp"
#include "mvbell/fdb.hpp"
#include "mvbell/series.hpp"
#include "mvbell/verify.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace mvbell;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& label, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += detail.empty() ? "" : "; ";
        detail += "over time budget";
    }
    if (!ok) ++g_failures;
    std::printf("%s  criterion %2d: %s [%.2fs / budget %.0fs]%s%s\n",
                ok ? "PASS" : "FAIL", number, label.c_str(), elapsed, budget_seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

Rational eval_at_ones(const SparsePoly& p) {
    VarAssignment assign;
    for (const VarId& v : p.variables()) assign[v] = 1;
    return p.eval(assign);
}

TaylorSeries series_1d(int order, const std::vector<Rational>& derivs,
                       Rational center = 0) {
    TaylorSeries s(1, 1, order, {center});
    for (std::size_t i = 0; i < derivs.size(); ++i) {
        s.set_coeff(MultiIndex({static_cast<int>(i)}), {derivs[i]});
    }
    return s;
}

bool criterion_table(std::string& detail) {
    const char* expected_partial[4][4] = {
        {"x[1]", "", "", ""},
        {"x[2]", "x[1]^2", "", ""},
        {"x[3]", "3*x[2]*x[1]", "x[1]^3", ""},
        {"x[4]", "4*x[3]*x[1] + 3*x[2]^2", "6*x[2]*x[1]^2", "x[1]^4"},
    };
    const char* expected_complete[4] = {
        "x[1]",
        "x[2] + x[1]^2",
        "x[3] + 3*x[2]*x[1] + x[1]^3",
        "x[4] + 4*x[3]*x[1] + 3*x[2]^2 + 6*x[2]*x[1]^2 + x[1]^4",
    };
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            if (bell_partial_1d(n, k).to_text() != expected_partial[n - 1][k - 1]) {
                detail = "partial mismatch at n=" + std::to_string(n) +
                         ", k=" + std::to_string(k);
                return false;
            }
        }
        if (bell_complete_1d(n).to_text() != expected_complete[n - 1]) {
            detail = "complete mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    std::ifstream golden(std::string(MVBELL_SOURCE_DIR) +
                         "/tests/golden/bell_table_n4.txt");
    if (!golden) {
        detail = "golden file missing";
        return false;
    }
    std::ostringstream buf;
    buf << golden.rdbuf();
    if (render_bell_table(4) != buf.str()) {
        detail = "rendered table differs from golden file";
        return false;
    }
    return true;
}

bool criterion_chain_rule_lines(std::string& detail) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational g0 = random_rational(rng);
        const Rational g1 = random_rational(rng), g2 = random_rational(rng),
                       g3 = random_rational(rng);
        const Rational f1 = random_rational(rng), f2 = random_rational(rng),
                       f3 = random_rational(rng);
        const TaylorSeries g = series_1d(3, {g0, g1, g2, g3});
        const TaylorSeries f = series_1d(3, {random_rational(rng), f1, f2, f3}, g0);
        const bool ok = fdb_1d(f, g, 1) == f1 * g1 &&
                        fdb_1d(f, g, 2) == f1 * g2 + f2 * g1 * g1 &&
                        fdb_1d(f, g, 3) == f1 * g3 + Rational(3) * f2 * g1 * g2 +
                                               f3 * g1 * g1 * g1;
        if (!ok) {
            detail = "mismatch in trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool criterion_oracle(std::string& detail) {
    const SuiteReport r = run_oracle_suite(20260825, 50);
    detail = std::to_string(r.checks) + " exact comparisons";
    if (!r.pass()) {
        detail = std::to_string(r.failures) + " of " + std::to_string(r.checks) +
                 " comparisons differ";
        return false;
    }
    return true;
}

bool criterion_tuple_form(std::string& detail) {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> gd, fd;
        for (int i = 0; i <= 6; ++i) {
            gd.push_back(random_rational(rng));
            fd.push_back(random_rational(rng));
        }
        const TaylorSeries g = series_1d(6, gd);
        const TaylorSeries f = series_1d(6, fd, gd[0]);
        for (int n = 0; n <= 6; ++n) {
            if (fdb_1d(f, g, n) != oracles::chain_rule_tuple_form(fd, gd, n)) {
                detail = "mismatch at n=" + std::to_string(n) + " in trial " +
                         std::to_string(trial);
                return false;
            }
        }
    }
    return true;
}

bool criterion_genfun(std::string& detail) {
    const SuiteReport r = run_genfun_suite(20260825, 10);
    if (!r.pass()) {
        detail = std::to_string(r.failures) + " reports with mismatches";
        return false;
    }
    return true;
}

bool criterion_solution_set_props(std::string& detail) {
    PropResult vanishing{0, 0}, support{0, 0};
    for (int d1 = 1; d1 <= 2; ++d1) {
        for (int d2 = 1; d2 <= 2; ++d2) {
            const PropResult v = check_vanishing_beyond_part_bound(d1, d2, 5);
            const PropResult s = check_support_bound(d1, d2, 5);
            vanishing.checks += v.checks;
            vanishing.failures += v.failures;
            support.checks += s.checks;
            support.failures += s.failures;
        }
    }
    const PropResult base = check_base_case(2, 2);
    detail = std::to_string(vanishing.checks + support.checks + base.checks) +
             " checks";
    if (!vanishing.pass()) detail = "nonempty set beyond the part bound";
    if (!support.pass()) detail = "support bound violated";
    if (!base.pass()) detail = "base case violated";
    return vanishing.pass() && support.pass() && base.pass();
}

bool criterion_complete_decomposition(std::string& detail) {
    PropResult total{0, 0};
    for (int d1 = 1; d1 <= 2; ++d1) {
        for (int d2 = 1; d2 <= 2; ++d2) {
            const PropResult r = check_complete_decomposition(d1, d2, 4);
            total.checks += r.checks;
            total.failures += r.failures;
        }
    }
    detail = std::to_string(total.checks) + " polynomial identities";
    if (!total.pass()) detail = std::to_string(total.failures) + " identities differ";
    return total.pass();
}

bool criterion_scaling(std::string& detail) {
    std::mt19937_64 rng(505);
    const PropResult r = check_scaling(rng, 20);
    detail = std::to_string(r.checks) + " random draws";
    if (!r.pass()) detail = std::to_string(r.failures) + " scalings differ";
    return r.pass();
}

bool criterion_axis_reduction(std::string& detail) {
    const PropResult r = check_axis_reduction(5, 3);
    detail = std::to_string(r.checks) + " axis embeddings";
    if (!r.pass()) detail = std::to_string(r.failures) + " embeddings differ";
    return r.pass();
}

bool criterion_partition_counts(std::string& detail) {
    const long long table[] = {1, 2, 5, 15};
    for (int n = 1; n <= 4; ++n) {
        if (eval_at_ones(bell_complete_1d(n)) != table[n - 1]) {
            detail = "published count mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    for (int n = 1; n <= 8; ++n) {
        if (eval_at_ones(bell_complete_1d(n)) != oracles::set_partition_count(n)) {
            detail = "brute-force count mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance: exact rational comparisons, tolerance 0\n");
    run_criterion(1, "classical Bell table n<=4 matches the published rows", 1,
                  criterion_table);
    run_criterion(2, "first three composition-derivative lines, 20 random runs", 1,
                  criterion_chain_rule_lines);
    run_criterion(3, "derivative engine equals substitution oracle, 50 pairs, |n|<=5",
                  60, criterion_oracle);
    run_criterion(4, "1-D engine equals factorial tuple form, n<=6, 20 runs", 5,
                  criterion_tuple_form);
    run_criterion(5, "generating identity, 10 random inner maps, order 4", 30,
                  criterion_genfun);
    run_criterion(6, "solution sets: vanishing, support bound, base case, |n|<=5", 30,
                  criterion_solution_set_props);
    run_criterion(7, "complete polynomial equals sum of partials, |n|<=4", 30,
                  criterion_complete_decomposition);
    run_criterion(8, "variable scaling matches closed form, 20 random draws", 10,
                  criterion_scaling);
    run_criterion(9, "single-axis reduction to classical polynomials, n<=5, dims<=3",
                  10, criterion_axis_reduction);
    run_criterion(10, "set-partition counts vs published table and brute force, n<=8",
                  10, criterion_partition_counts);
    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
