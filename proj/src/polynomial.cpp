#include "mvbell/polynomial.hpp"

#include "mvbell/errors.hpp"

#include <algorithm>

namespace mvbell {

std::string VarId::to_string(int d2) const {
    std::string out = "x[";
    for (int i = 0; i < j.dim(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(j[i]);
    }
    if (d2 > 1) {
        out += ';';
        out += std::to_string(comp);
    }
    out += ']';
    return out;
}

bool VarIdCanonicalLess::operator()(const VarId& a, const VarId& b) const {
    if (a.j != b.j) return graded_lex_less(a.j, b.j);
    return a.comp < b.comp;
}

bool VarIdDisplayLess::operator()(const VarId& a, const VarId& b) const {
    const long long ga = a.j.abs(), gb = b.j.abs();
    if (ga != gb) return ga > gb;
    if (a.j != b.j) return graded_lex_less(a.j, b.j);
    return a.comp < b.comp;
}

Monomial::Monomial(std::vector<std::pair<VarId, int>> factors) : factors_(std::move(factors)) {
    for (const auto& [var, exp] : factors_) {
        if (exp <= 0) throw DomainError("monomial exponents must be positive");
    }
    std::sort(factors_.begin(), factors_.end(), [](const auto& a, const auto& b) {
        return VarIdCanonicalLess{}(a.first, b.first);
    });
    for (std::size_t i = 1; i < factors_.size(); ++i) {
        if (factors_[i - 1].first == factors_[i].first) {
            throw DomainError("duplicate variable in monomial");
        }
    }
}

long long Monomial::degree() const {
    long long d = 0;
    for (const auto& [var, exp] : factors_) d += exp;
    return d;
}

namespace {

std::vector<std::pair<VarId, int>> display_sorted(const Monomial& m) {
    auto fs = m.factors();
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
        return VarIdDisplayLess{}(a.first, b.first);
    });
    return fs;
}

}  // namespace

bool term_order_less(const Monomial& a, const Monomial& b) {
    const long long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const auto fa = display_sorted(a);
    const auto fb = display_sorted(b);
    // Equal total degree: compare the expanded variable sequences. A larger
    // exponent on a shared leading variable sorts earlier.
    for (std::size_t i = 0; i < std::min(fa.size(), fb.size()); ++i) {
        if (!(fa[i].first == fb[i].first)) {
            return VarIdDisplayLess{}(fa[i].first, fb[i].first);
        }
        if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    }
    return false;
}

SparsePoly::SparsePoly(int d1, int d2) : d1_(d1), d2_(d2) {
    if (d1 < 1 || d2 < 1) throw DomainError("polynomial dimensions must be >= 1");
}

SparsePoly SparsePoly::constant(int d1, int d2, Rational value) {
    SparsePoly p(d1, d2);
    p.add_term(Monomial{}, value);
    return p;
}

void SparsePoly::add_term(const Monomial& monomial, const Rational& coeff) {
    if (coeff == 0) return;
    for (const auto& [var, exp] : monomial.factors()) {
        if (var.j.dim() != d1_) {
            throw DomainError("variable index dimension does not match polynomial");
        }
        if (var.j.is_zero()) throw DomainError("variable index must be nonzero");
        if (var.comp < 1 || var.comp > d2_) {
            throw DomainError("variable component out of range");
        }
    }
    auto it = terms_.find(monomial);
    if (it == terms_.end()) {
        terms_.emplace(monomial, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::plus(const SparsePoly& other) const {
    if (d1_ != other.d1_ || d2_ != other.d2_) {
        throw DomainError("polynomial dimension mismatch in addition");
    }
    SparsePoly out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

SparsePoly SparsePoly::times(const Rational& scalar) const {
    SparsePoly out(d1_, d2_);
    if (scalar == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
    return out;
}

SparsePoly SparsePoly::scale_variables(const std::function<Rational(const VarId&)>& factor) const {
    SparsePoly out(d1_, d2_);
    for (const auto& [m, c] : terms_) {
        Rational scaled = c;
        for (const auto& [var, exp] : m.factors()) {
            scaled *= rational_pow(factor(var), exp);
        }
        out.add_term(m, scaled);
    }
    return out;
}

Rational SparsePoly::eval(const VarAssignment& assignment) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [var, exp] : m.factors()) {
            auto it = assignment.find(var);
            if (it == assignment.end()) {
                throw MissingVariableError("no value assigned to " + var.to_string(d2_));
            }
            term *= rational_pow(it->second, exp);
        }
        total += term;
    }
    return total;
}

std::vector<VarId> SparsePoly::variables() const {
    std::map<VarId, bool, VarIdCanonicalLess> seen;
    for (const auto& [m, c] : terms_) {
        for (const auto& [var, exp] : m.factors()) seen.emplace(var, true);
    }
    std::vector<VarId> out;
    out.reserve(seen.size());
    for (const auto& [var, unused] : seen) out.push_back(var);
    return out;
}

std::string SparsePoly::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string vars;
        for (const auto& [var, exp] : display_sorted(m)) {
            if (!vars.empty()) vars += '*';
            vars += var.to_string(d2_);
            if (exp > 1) {
                vars += '^';
                vars += std::to_string(exp);
            }
        }
        if (vars.empty()) {
            out += to_string(c);
        } else if (c == 1) {
            out += vars;
        } else {
            out += to_string(c) + "*" + vars;
        }
    }
    return out;
}

nlohmann::ordered_json to_json(const SparsePoly& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json monomial = nlohmann::ordered_json::array();
        for (const auto& [var, exp] : display_sorted(m)) {
            monomial.push_back(nlohmann::ordered_json::array({var.j.entries(), var.comp, exp}));
        }
        terms.push_back({{"coeff", to_string(c)}, {"monomial", std::move(monomial)}});
    }
    return terms;
}

}  // namespace mvbell
