#include "mvbell/bell.hpp"
#include "mvbell/errors.hpp"
#include "mvbell/fdb.hpp"
#include "mvbell/series.hpp"
#include "mvbell/verify.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

namespace {

using namespace mvbell;

// Flag-level parse problems are usage errors (exit 2), unlike domain errors
// from the computation itself (exit 1).
struct UsageError {
    std::string message;
};

MultiIndex parse_flag_index(const std::string& text, const std::string& flag) {
    try {
        return parse_multiindex_csv(text);
    } catch (const Error& e) {
        throw UsageError{flag + ": " + e.what()};
    }
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump() << "\n"; }

std::string join_values(const std::vector<Rational>& v) {
    std::string out;
    for (const Rational& r : v) {
        if (!out.empty()) out += ' ';
        out += to_string(r);
    }
    return out;
}

int cmd_bell(const std::string& n_text, const std::optional<std::string>& k_text,
             std::optional<int> d2, const std::string& format) {
    const MultiIndex n = parse_flag_index(n_text, "--n");
    SparsePoly poly(1, 1);
    if (k_text) {
        const MultiIndex k = parse_flag_index(*k_text, "--k");
        if (d2 && *d2 != k.dim()) {
            throw DomainError("--d2 disagrees with the dimension of --k");
        }
        poly = bell_partial_mv(n, k);
    } else {
        poly = bell_complete_mv(n, d2.value_or(1));
    }
    if (format == "json") {
        print_json(to_json(poly));
    } else {
        std::cout << poly.to_text() << "\n";
    }
    return 0;
}

int cmd_compose(const std::string& f_file, const std::string& g_file,
                const std::optional<std::string>& n_text, std::optional<int> all_order,
                const std::string& format) {
    std::optional<MultiIndex> n;
    if (n_text) n = parse_flag_index(*n_text, "--n");
    const TaylorSeries f = taylor_from_file(f_file);
    const TaylorSeries g = taylor_from_file(g_file);
    if (n) {
        const std::vector<Rational> v = fdb_derivative(f, g, *n);
        if (format == "json") {
            nlohmann::ordered_json out;
            out["n"] = n->entries();
            nlohmann::ordered_json vals = nlohmann::ordered_json::array();
            for (const Rational& r : v) vals.push_back(to_string(r));
            out["v"] = std::move(vals);
            print_json(out);
        } else {
            std::cout << join_values(v) << "\n";
        }
        return 0;
    }
    const DerivTensor tensor = fdb_all(f, g, *all_order);
    if (format == "json") {
        print_json(to_json(tensor));
    } else {
        for (const auto& [idx, v] : tensor.values) {
            std::cout << idx.to_string() << ": " << join_values(v) << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials) {
    SuiteReport report;
    if (suite == "oracle") {
        report = run_oracle_suite(seed, trials);
    } else if (suite == "genfun") {
        report = run_genfun_suite(seed, trials);
    } else {
        report = run_props_suite(seed, trials);
    }
    print_json(to_json(report));
    return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multivariate Bell polynomials and the higher-order chain rule, "
                 "in exact rational arithmetic"};
    app.require_subcommand(1);

    std::string bell_n, bell_format = "text";
    std::optional<std::string> bell_k;
    std::optional<int> bell_d2;
    CLI::App* bell = app.add_subcommand("bell", "Print a Bell polynomial");
    bell->add_option("--n", bell_n, "Multi-index n, e.g. 2,1")->required();
    bell->add_option("--k", bell_k, "Part-count multi-index k (omit for the complete polynomial)");
    bell->add_option("--d2", bell_d2, "Inner dimension for the complete polynomial")
        ->check(CLI::PositiveNumber);
    bell->add_option("--format", bell_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string compose_f, compose_g, compose_format = "text";
    std::optional<std::string> compose_n;
    std::optional<int> compose_all;
    CLI::App* compose =
        app.add_subcommand("compose", "Derivatives of f(g(x)) from series files");
    compose->add_option("--f", compose_f, "Outer series JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    compose->add_option("--g", compose_g, "Inner series JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    compose->add_option("--n", compose_n, "Derivative multi-index");
    compose->add_option("--all", compose_all, "All derivatives with |n| <= this order")
        ->check(CLI::NonNegativeNumber);
    compose->add_option("--format", compose_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string verify_suite;
    std::uint64_t verify_seed = 0;
    int verify_trials = 20;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", verify_suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"oracle", "genfun", "props"}));
    verify->add_option("--seed", verify_seed, "Random seed");
    verify->add_option("--trials", verify_trials, "Trial count")
        ->check(CLI::PositiveNumber);

    int table_max_n = 0;
    CLI::App* table = app.add_subcommand("table", "Classical Bell polynomial table");
    table->add_option("--max-n", table_max_n, "Largest total order")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bell->parsed()) return cmd_bell(bell_n, bell_k, bell_d2, bell_format);
        if (compose->parsed()) {
            if (compose_n.has_value() == compose_all.has_value()) {
                throw UsageError{"compose needs exactly one of --n and --all"};
            }
            return cmd_compose(compose_f, compose_g, compose_n, compose_all,
                               compose_format);
        }
        if (verify->parsed()) return cmd_verify(verify_suite, verify_seed, verify_trials);
        if (table->parsed()) {
            std::cout << render_bell_table(table_max_n);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.message << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
