#include "mvbell/partition.hpp"

#include "mvbell/errors.hpp"

#include <algorithm>

namespace mvbell {

SolutionAssignment::SolutionAssignment(int d1, int d2) : d1_(d1), d2_(d2) {
    if (d1 < 1 || d2 < 1) throw DomainError("assignment dimensions must be >= 1");
}

SolutionAssignment::SolutionAssignment(int d1, int d2,
                                       std::vector<std::pair<MultiIndex, MultiIndex>> support)
    : d1_(d1), d2_(d2), support_(std::move(support)) {
    if (d1 < 1 || d2 < 1) throw DomainError("assignment dimensions must be >= 1");
    for (const auto& [j, kj] : support_) {
        if (j.dim() != d1_ || kj.dim() != d2_) {
            throw DomainError("assignment entry dimension mismatch");
        }
        if (j.is_zero()) throw DomainError("assignment key must be nonzero");
        if (kj.is_zero()) throw DomainError("assignment value must be nonzero");
    }
    std::sort(support_.begin(), support_.end(),
              [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
    for (std::size_t i = 1; i < support_.size(); ++i) {
        if (support_[i - 1].first == support_[i].first) {
            throw DomainError("duplicate assignment key " + support_[i].first.to_string());
        }
    }
}

MultiIndex SolutionAssignment::weight() const {
    MultiIndex w = MultiIndex::zero(d1_);
    for (const auto& [j, kj] : support_) {
        w = add(w, j.scaled(kj.abs()));
    }
    return w;
}

MultiIndex SolutionAssignment::part_count() const {
    MultiIndex k = MultiIndex::zero(d2_);
    for (const auto& [j, kj] : support_) {
        k = add(k, kj);
    }
    return k;
}

std::string SolutionAssignment::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (i > 0) out += ", ";
        out += support_[i].first.to_string() + "->" + support_[i].second.to_string();
    }
    out += '}';
    return out;
}

bool assignment_less(const SolutionAssignment& a, const SolutionAssignment& b) {
    if (a.support().size() != b.support().size()) {
        return a.support().size() < b.support().size();
    }
    for (std::size_t i = 0; i < a.support().size(); ++i) {
        const auto& pa = a.support()[i];
        const auto& pb = b.support()[i];
        if (pa.first != pb.first) return graded_lex_less(pa.first, pb.first);
        if (pa.second != pb.second) return graded_lex_less(pa.second, pb.second);
    }
    return false;
}

namespace {

// Depth-first search over the graded-lex-ordered candidate keys. At each key
// we pick a value k_j (possibly zero, meaning the key is skipped) subject to
// the remaining weight n and, in the partial case, the remaining part budget k.
struct PartialSearch {
    const std::vector<MultiIndex>& keys;
    std::vector<std::pair<MultiIndex, MultiIndex>> chosen;
    std::vector<SolutionAssignment> out;
    int d1, d2;

    void run(std::size_t i, const MultiIndex& rem_n, const MultiIndex& rem_k) {
        if (rem_n.is_zero() && rem_k.is_zero()) {
            out.emplace_back(d1, d2, chosen);
            return;
        }
        if (i == keys.size()) return;
        if (rem_k.abs() > rem_n.abs()) return;  // no solution can close the gap
        const MultiIndex& j = keys[i];
        run(i + 1, rem_n, rem_k);  // k_j = 0
        // nonzero k_j: bounded componentwise by rem_k and through j|k_j| <= rem_n
        for (const MultiIndex& v : enumerate_graded(d2, static_cast<int>(rem_k.abs()))) {
            if (!leq(v, rem_k)) continue;
            const MultiIndex jv = j.scaled(v.abs());
            if (!leq(jv, rem_n)) continue;
            chosen.emplace_back(j, v);
            run(i + 1, sub_checked(rem_n, jv), sub_checked(rem_k, v));
            chosen.pop_back();
        }
    }
};

struct CompleteSearch {
    const std::vector<MultiIndex>& keys;
    std::vector<std::pair<MultiIndex, MultiIndex>> chosen;
    std::vector<SolutionAssignment> out;
    int d1, d2;

    void run(std::size_t i, const MultiIndex& rem_n) {
        if (rem_n.is_zero()) {
            out.emplace_back(d1, d2, chosen);
            return;
        }
        if (i == keys.size()) return;
        const MultiIndex& j = keys[i];
        run(i + 1, rem_n);
        for (const MultiIndex& v : enumerate_graded(d2, static_cast<int>(rem_n.abs()))) {
            const MultiIndex jv = j.scaled(v.abs());
            if (!leq(jv, rem_n)) continue;
            chosen.emplace_back(j, v);
            run(i + 1, sub_checked(rem_n, jv));
            chosen.pop_back();
        }
    }
};

std::vector<MultiIndex> candidate_keys(const MultiIndex& n, long long max_abs) {
    std::vector<MultiIndex> keys;
    for (const MultiIndex& j : enumerate_graded(n.dim(), static_cast<int>(std::max<long long>(max_abs, 0)))) {
        if (leq(j, n)) keys.push_back(j);
    }
    return keys;
}

}  // namespace

std::vector<SolutionAssignment> solve_partial(const MultiIndex& n, const MultiIndex& k) {
    // Keys above |n| - |k| + 1 carry zero values in every solution, and the
    // weight condition forces j <= n componentwise.
    const auto keys = candidate_keys(n, n.abs() - k.abs() + 1);
    PartialSearch search{keys, {}, {}, n.dim(), k.dim()};
    search.run(0, n, k);
    std::sort(search.out.begin(), search.out.end(), assignment_less);
    return std::move(search.out);
}

std::vector<SolutionAssignment> solve_complete(const MultiIndex& n, int d2) {
    if (d2 < 1) throw DomainError("solve_complete: d2 must be >= 1");
    const auto keys = candidate_keys(n, n.abs());
    CompleteSearch search{keys, {}, {}, n.dim(), d2};
    search.run(0, n);
    std::sort(search.out.begin(), search.out.end(), assignment_less);
    return std::move(search.out);
}

}  // namespace mvbell
