#include "mvbell/series.hpp"

#include "mvbell/errors.hpp"

#include <algorithm>
#include <fstream>
#include <utility>

namespace mvbell {

namespace {

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

void require_same_frame(const TaylorSeries& s, const TaylorSeries& t) {
    if (s.d_in() != t.d_in()) throw ContractError("series input dimensions differ");
    if (s.order() != t.order()) throw ContractError("series orders differ");
    if (s.center() != t.center()) throw ContractError("series centers differ");
}

}  // namespace

TaylorSeries::TaylorSeries(int d_in, int d_out, int order, std::vector<Rational> center)
    : d_in_(d_in), d_out_(d_out), order_(order), center_(std::move(center)) {
    if (d_in_ < 1 || d_out_ < 1) throw DomainError("series dimensions must be >= 1");
    if (order_ < 0) throw DomainError("series order must be >= 0");
    if (static_cast<int>(center_.size()) != d_in_) {
        throw DomainError("series center must have dimension d_in");
    }
}

std::vector<Rational> TaylorSeries::coeff(const MultiIndex& n) const {
    if (n.dim() != d_in_) throw DomainError("coefficient index has wrong dimension");
    if (n.abs() > order_) {
        throw TruncationError("derivative order " + n.to_string() +
                              " exceeds series truncation order " + std::to_string(order_));
    }
    auto it = coeffs_.find(n);
    if (it == coeffs_.end()) return std::vector<Rational>(static_cast<std::size_t>(d_out_), 0);
    return it->second;
}

void TaylorSeries::set_coeff(const MultiIndex& n, std::vector<Rational> value) {
    if (n.dim() != d_in_) throw DomainError("coefficient index has wrong dimension");
    if (n.abs() > order_) {
        throw TruncationError("coefficient at " + n.to_string() +
                              " exceeds series truncation order " + std::to_string(order_));
    }
    if (static_cast<int>(value.size()) != d_out_) {
        throw DomainError("coefficient vector must have dimension d_out");
    }
    if (all_zero(value)) {
        coeffs_.erase(n);
    } else {
        coeffs_[n] = std::move(value);
    }
}

TaylorSeries TaylorSeries::component(int i) const {
    if (i < 1 || i > d_out_) throw DomainError("component index out of range");
    TaylorSeries out(d_in_, 1, order_, center_);
    for (const auto& [n, v] : coeffs_) {
        out.set_coeff(n, {v[static_cast<std::size_t>(i - 1)]});
    }
    return out;
}

TaylorSeries add(const TaylorSeries& s, const TaylorSeries& t) {
    require_same_frame(s, t);
    if (s.d_out() != t.d_out()) throw ContractError("series output dimensions differ");
    TaylorSeries out = s;
    for (const auto& [n, v] : t.coeffs()) {
        std::vector<Rational> sum = out.coeff(n);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
        out.set_coeff(n, std::move(sum));
    }
    return out;
}

TaylorSeries scale(const TaylorSeries& s, const Rational& c) {
    TaylorSeries out(s.d_in(), s.d_out(), s.order(), s.center());
    if (c == 0) return out;
    for (const auto& [n, v] : s.coeffs()) {
        std::vector<Rational> scaled = v;
        for (Rational& r : scaled) r *= c;
        out.set_coeff(n, std::move(scaled));
    }
    return out;
}

TaylorSeries mul(const TaylorSeries& s, const TaylorSeries& t) {
    require_same_frame(s, t);
    if (s.d_out() != 1 && t.d_out() != 1) {
        throw ContractError("mul needs at least one scalar factor");
    }
    const TaylorSeries& scalar = s.d_out() == 1 ? s : t;
    const TaylorSeries& other = s.d_out() == 1 ? t : s;
    TaylorSeries out(s.d_in(), other.d_out(), s.order(), s.center());
    for (const auto& [m, a] : scalar.coeffs()) {
        for (const auto& [p, b] : other.coeffs()) {
            const MultiIndex n = mvbell::add(m, p);
            if (n.abs() > out.order()) continue;
            const Rational factor = Rational(binomial(n, m)) * a[0];
            std::vector<Rational> acc = out.coeff(n);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += factor * b[i];
            out.set_coeff(n, std::move(acc));
        }
    }
    return out;
}

TaylorSeries cw_mul(const std::vector<Rational>& u, const TaylorSeries& s) {
    if (static_cast<int>(u.size()) != s.d_out()) {
        throw DomainError("cw_mul vector must have dimension d_out");
    }
    TaylorSeries out(s.d_in(), s.d_out(), s.order(), s.center());
    for (const auto& [n, v] : s.coeffs()) {
        std::vector<Rational> prod = v;
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= u[i];
        out.set_coeff(n, std::move(prod));
    }
    return out;
}

TaylorSeries dot(const std::vector<Rational>& u, const TaylorSeries& s) {
    if (static_cast<int>(u.size()) != s.d_out()) {
        throw DomainError("dot vector must have dimension d_out");
    }
    TaylorSeries out(s.d_in(), 1, s.order(), s.center());
    for (const auto& [n, v] : s.coeffs()) {
        Rational acc = 0;
        for (std::size_t i = 0; i < v.size(); ++i) acc += u[i] * v[i];
        out.set_coeff(n, {acc});
    }
    return out;
}

TaylorSeries exp_series(const TaylorSeries& s) {
    if (s.d_out() != 1) throw DomainError("exp_series needs a scalar series");
    const MultiIndex origin = MultiIndex::zero(s.d_in());
    if (s.coeff(origin) != std::vector<Rational>{0}) {
        throw DomainError("exp_series needs a zero constant term");
    }
    TaylorSeries out(s.d_in(), 1, s.order(), s.center());
    out.set_coeff(origin, {1});
    TaylorSeries power = out;  // s^0 = 1
    Rational inv_fact = 1;
    for (int m = 1; m <= s.order(); ++m) {
        power = mul(power, s);
        inv_fact /= m;
        out = add(out, scale(power, inv_fact));
    }
    return out;
}

TaylorSeries compose_oracle(const TaylorSeries& f, const TaylorSeries& g) {
    if (f.d_in() != g.d_out()) {
        throw ContractError("compose: f input dimension must equal g output dimension");
    }
    const MultiIndex g_origin = MultiIndex::zero(g.d_in());
    if (f.center() != g.coeff(g_origin)) {
        throw ContractError("compose: f must be expanded at g's value at its center");
    }
    const int order = std::min(f.order(), g.order());
    TaylorSeries out(g.d_in(), f.d_out(), order, g.center());

    // delta_i = (g_i - g0_i) truncated; zero constant term by construction.
    std::vector<std::vector<TaylorSeries>> powers;  // powers[i][e] = delta_i^e
    TaylorSeries one(g.d_in(), 1, order, g.center());
    one.set_coeff(g_origin, {1});
    for (int i = 1; i <= g.d_out(); ++i) {
        TaylorSeries delta(g.d_in(), 1, order, g.center());
        for (const auto& [n, v] : g.coeffs()) {
            if (n.is_zero() || n.abs() > order) continue;
            delta.set_coeff(n, {v[static_cast<std::size_t>(i - 1)]});
        }
        std::vector<TaylorSeries> pow_list{one};
        for (int e = 1; e <= order; ++e) pow_list.push_back(mul(pow_list.back(), delta));
        powers.push_back(std::move(pow_list));
    }

    std::vector<MultiIndex> ms{MultiIndex::zero(f.d_in())};
    for (const MultiIndex& m : enumerate_graded(f.d_in(), order)) ms.push_back(m);
    for (const MultiIndex& m : ms) {
        const std::vector<Rational> fm = f.coeff(m);
        if (all_zero(fm)) continue;
        TaylorSeries delta_pow = powers[0][static_cast<std::size_t>(m[0])];
        for (int i = 1; i < f.d_in(); ++i) {
            delta_pow = mul(delta_pow, powers[static_cast<std::size_t>(i)]
                                              [static_cast<std::size_t>(m[i])]);
        }
        const Rational inv_mfact = Rational(1) / Rational(m.factorial());
        for (const auto& [n, v] : delta_pow.coeffs()) {
            std::vector<Rational> acc = out.coeff(n);
            for (std::size_t c = 0; c < acc.size(); ++c) {
                acc[c] += fm[c] * inv_mfact * v[0];
            }
            out.set_coeff(n, std::move(acc));
        }
    }
    return out;
}

std::vector<Rational> derivative_at(const TaylorSeries& s, const MultiIndex& n) {
    return s.coeff(n);
}

nlohmann::ordered_json to_json(const TaylorSeries& s) {
    nlohmann::ordered_json j;
    j["d_in"] = s.d_in();
    j["d_out"] = s.d_out();
    j["order"] = s.order();
    nlohmann::ordered_json center = nlohmann::ordered_json::array();
    for (const Rational& c : s.center()) center.push_back(to_string(c));
    j["center"] = std::move(center);
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& [n, v] : s.coeffs()) {
        nlohmann::ordered_json entry;
        entry["n"] = n.entries();
        nlohmann::ordered_json vals = nlohmann::ordered_json::array();
        for (const Rational& r : v) vals.push_back(to_string(r));
        entry["v"] = std::move(vals);
        coeffs.push_back(std::move(entry));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

namespace {

std::vector<Rational> parse_rational_array(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<Rational> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError(std::string(what) + " entries must be strings");
        out.push_back(parse_rational(e.get<std::string>()));
    }
    return out;
}

int parse_nonneg_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ParseError(std::string(what) + " must be a nonnegative integer");
    }
    return static_cast<int>(j.get<long long>());
}

}  // namespace

TaylorSeries taylor_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("series must be a JSON object");
    for (const char* key : {"d_in", "d_out", "order", "center", "coeffs"}) {
        if (!j.contains(key)) throw ParseError(std::string("series is missing \"") + key + "\"");
    }
    const int d_in = parse_nonneg_int(j["d_in"], "d_in");
    const int d_out = parse_nonneg_int(j["d_out"], "d_out");
    const int order = parse_nonneg_int(j["order"], "order");
    TaylorSeries out(d_in, d_out, order, parse_rational_array(j["center"], "center"));
    if (!j["coeffs"].is_array()) throw ParseError("coeffs must be an array");
    for (const auto& entry : j["coeffs"]) {
        if (!entry.is_object() || !entry.contains("n") || !entry.contains("v")) {
            throw ParseError("each coefficient needs \"n\" and \"v\"");
        }
        if (!entry["n"].is_array()) throw ParseError("coefficient index must be an array");
        std::vector<int> n_entries;
        for (const auto& e : entry["n"]) n_entries.push_back(parse_nonneg_int(e, "index entry"));
        out.set_coeff(MultiIndex(std::move(n_entries)),
                      parse_rational_array(entry["v"], "coefficient vector"));
    }
    return out;
}

TaylorSeries taylor_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open series file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return taylor_from_json(j);
}

}  // namespace mvbell
