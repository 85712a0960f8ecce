// Python bindings. Everything structured crosses the boundary as JSON text;
// the pure-python layer in mvbell/__init__.py turns it into dicts and
// fractions.Fraction so this file stays free of custom type casters.

#include "mvbell/bell.hpp"
#include "mvbell/errors.hpp"
#include "mvbell/fdb.hpp"
#include "mvbell/series.hpp"
#include "mvbell/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace mvbell;

namespace {

MultiIndex make_index(const std::vector<int>& entries) { return MultiIndex(entries); }

TaylorSeries series_from_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid series JSON: ") + e.what());
    }
    return taylor_from_json(doc);
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) out.push_back(parse_rational(t));
    return out;
}

std::vector<std::string> render_rationals(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const Rational& v : values) out.push_back(to_string(v));
    return out;
}

nlohmann::ordered_json assignments_json(const std::vector<SolutionAssignment>& sols) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SolutionAssignment& s : sols) {
        nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
        for (const auto& [j, kj] : s.support()) {
            pairs.push_back({j.entries(), kj.entries()});
        }
        arr.push_back(std::move(pairs));
    }
    return arr;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact multivariate Bell polynomials and composition derivatives";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<TruncationError>(m, "TruncationError", PyExc_ValueError);
    py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
    py::register_exception<MissingVariableError>(m, "MissingVariableError",
                                                 PyExc_KeyError);
    py::register_exception<IntegralityError>(m, "IntegralityError",
                                             PyExc_ArithmeticError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def(
        "bell_partial_text",
        [](const std::vector<int>& n, const std::vector<int>& k) {
            return bell_partial_mv(make_index(n), make_index(k)).to_text();
        },
        py::arg("n"), py::arg("k"));
    m.def(
        "bell_partial_json",
        [](const std::vector<int>& n, const std::vector<int>& k) {
            return to_json(bell_partial_mv(make_index(n), make_index(k))).dump();
        },
        py::arg("n"), py::arg("k"));
    m.def(
        "bell_complete_text",
        [](const std::vector<int>& n, int d2) {
            return bell_complete_mv(make_index(n), d2).to_text();
        },
        py::arg("n"), py::arg("d2"));
    m.def(
        "bell_complete_json",
        [](const std::vector<int>& n, int d2) {
            return to_json(bell_complete_mv(make_index(n), d2)).dump();
        },
        py::arg("n"), py::arg("d2"));
    m.def("bell_table", &render_bell_table, py::arg("max_n"));

    m.def(
        "solutions_partial_json",
        [](const std::vector<int>& n, const std::vector<int>& k) {
            return assignments_json(solve_partial(make_index(n), make_index(k)))
                .dump();
        },
        py::arg("n"), py::arg("k"));
    m.def(
        "solutions_complete_json",
        [](const std::vector<int>& n, int d2) {
            return assignments_json(solve_complete(make_index(n), d2)).dump();
        },
        py::arg("n"), py::arg("d2"));

    m.def(
        "compose_derivative",
        [](const std::string& f_json, const std::string& g_json,
           const std::vector<int>& n) {
            const TaylorSeries f = series_from_text(f_json);
            const TaylorSeries g = series_from_text(g_json);
            return render_rationals(fdb_derivative(f, g, make_index(n)));
        },
        py::arg("f_json"), py::arg("g_json"), py::arg("n"));
    m.def(
        "compose_all_json",
        [](const std::string& f_json, const std::string& g_json, int order) {
            const TaylorSeries f = series_from_text(f_json);
            const TaylorSeries g = series_from_text(g_json);
            return to_json(fdb_all(f, g, order)).dump();
        },
        py::arg("f_json"), py::arg("g_json"), py::arg("order"));
    m.def(
        "compose_series_json",
        [](const std::string& f_json, const std::string& g_json) {
            const TaylorSeries f = series_from_text(f_json);
            const TaylorSeries g = series_from_text(g_json);
            return to_json(compose_oracle(f, g)).dump();
        },
        py::arg("f_json"), py::arg("g_json"));

    m.def(
        "generating_identity_json",
        [](const std::string& g_json, const std::vector<std::string>& weights,
           int max_abs_n) {
            const TaylorSeries g = series_from_text(g_json);
            return to_json(check_generating_identity(g, parse_rationals(weights),
                                                     max_abs_n))
                .dump();
        },
        py::arg("g_json"), py::arg("weights"), py::arg("max_abs_n"));

    m.def(
        "verify_suite_json",
        [](const std::string& suite, std::uint64_t seed, int trials) {
            SuiteReport report;
            if (suite == "oracle") {
                report = run_oracle_suite(seed, trials);
            } else if (suite == "genfun") {
                report = run_genfun_suite(seed, trials);
            } else if (suite == "props") {
                report = run_props_suite(seed, trials);
            } else {
                throw DomainError("unknown suite '" + suite + "'");
            }
            return to_json(report).dump();
        },
        py::arg("suite"), py::arg("seed") = 0, py::arg("trials") = 20);
}
