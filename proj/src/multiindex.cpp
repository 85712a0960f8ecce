#include "mvbell/multiindex.hpp"

#include "mvbell/errors.hpp"

#include <algorithm>
#include <charconv>

namespace mvbell {

namespace {

void require_same_dim(const MultiIndex& a, const MultiIndex& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DomainError(std::string(op) + ": dimension mismatch " + a.to_string() +
                          " vs " + b.to_string());
    }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("multi-index must have dimension >= 1");
    for (int e : entries_) {
        if (e < 0) throw DomainError("multi-index entry must be nonnegative");
    }
}

MultiIndex MultiIndex::zero(int dim) {
    if (dim < 1) throw DomainError("multi-index must have dimension >= 1");
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), 0));
}

MultiIndex MultiIndex::ones(int dim) {
    if (dim < 1) throw DomainError("multi-index must have dimension >= 1");
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), 1));
}

MultiIndex MultiIndex::unit(int dim, int axis) {
    if (axis < 1 || axis > dim) throw DomainError("unit axis out of range");
    std::vector<int> e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(axis - 1)] = 1;
    return MultiIndex(std::move(e));
}

long long MultiIndex::abs() const {
    long long s = 0;
    for (int e : entries_) s += e;
    return s;
}

Int MultiIndex::factorial() const {
    Int out = 1;
    for (int e : entries_) out *= int_factorial(e);
    return out;
}

bool MultiIndex::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

MultiIndex MultiIndex::scaled(long long s) const {
    if (s < 0) throw DomainError("scaled: negative factor");
    std::vector<int> e(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        e[i] = static_cast<int>(entries_[i] * s);
    }
    return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(entries_[i]);
    }
    out += ')';
    return out;
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
    require_same_dim(a, b, "add");
    std::vector<int> e(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) e[static_cast<std::size_t>(i)] = a[i] + b[i];
    return MultiIndex(std::move(e));
}

MultiIndex sub_checked(const MultiIndex& a, const MultiIndex& b) {
    require_same_dim(a, b, "sub_checked");
    std::vector<int> e(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i]) {
            throw DomainError("sub_checked: negative component in " + a.to_string() +
                              " - " + b.to_string());
        }
        e[static_cast<std::size_t>(i)] = a[i] - b[i];
    }
    return MultiIndex(std::move(e));
}

bool leq(const MultiIndex& a, const MultiIndex& b) {
    require_same_dim(a, b, "leq");
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Rational pow(const std::vector<Rational>& x, const MultiIndex& n) {
    if (static_cast<int>(x.size()) != n.dim()) {
        throw DomainError("pow: vector dimension " + std::to_string(x.size()) +
                          " does not match exponent " + n.to_string());
    }
    Rational out = 1;
    for (int i = 0; i < n.dim(); ++i) {
        out *= rational_pow(x[static_cast<std::size_t>(i)], n[i]);
    }
    return out;
}

Int binomial(const MultiIndex& n, const MultiIndex& m) {
    require_same_dim(n, m, "binomial");
    Int out = 1;
    for (int i = 0; i < n.dim(); ++i) {
        if (m[i] > n[i]) return 0;
        out *= binomial(static_cast<long long>(n[i]), static_cast<long long>(m[i]));
    }
    return out;
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim()) {
        throw DomainError("graded_lex_less: dimension mismatch");
    }
    const long long aa = a.abs(), bb = b.abs();
    if (aa != bb) return aa < bb;
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

namespace {

void compositions_of(int remaining, int slots, std::vector<int>& prefix,
                     std::vector<MultiIndex>& out) {
    if (slots == 1) {
        prefix.push_back(remaining);
        out.push_back(MultiIndex(prefix));
        prefix.pop_back();
        return;
    }
    for (int head = remaining; head >= 0; --head) {
        prefix.push_back(head);
        compositions_of(remaining - head, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_grade(int dim, int abs_value) {
    if (dim < 1) throw DomainError("enumerate_grade: dimension must be >= 1");
    if (abs_value < 0) return {};
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    compositions_of(abs_value, dim, prefix, out);
    return out;
}

std::vector<MultiIndex> enumerate_graded(int dim, int max_abs) {
    if (dim < 1) throw DomainError("enumerate_graded: dimension must be >= 1");
    std::vector<MultiIndex> out;
    for (int s = 1; s <= max_abs; ++s) {
        auto grade = enumerate_grade(dim, s);
        out.insert(out.end(), grade.begin(), grade.end());
    }
    return out;
}

MultiIndex parse_multiindex_csv(std::string_view text) {
    std::vector<int> entries;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int value = 0;
        const char* first = tok.data();
        const char* last = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || tok.empty()) {
            throw ParseError("invalid multi-index component '" + std::string(tok) + "'");
        }
        if (value < 0) throw ParseError("multi-index entries must be nonnegative");
        entries.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return MultiIndex(std::move(entries));
}

}  // namespace mvbell
