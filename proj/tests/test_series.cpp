#include "mvbell/errors.hpp"
#include "mvbell/series.hpp"
#include "mvbell/verify.hpp"

#include <doctest.h>

#include <random>

using namespace mvbell;

namespace {

TaylorSeries scalar_series(int order, std::vector<std::pair<int, Rational>> coeffs,
                           Rational center = 0) {
    TaylorSeries s(1, 1, order, {center});
    for (auto& [n, v] : coeffs) s.set_coeff(MultiIndex({n}), {v});
    return s;
}

}  // namespace

TEST_CASE("storage and lookup") {
    CHECK_THROWS_AS(TaylorSeries(0, 1, 2, {}), DomainError);
    CHECK_THROWS_AS(TaylorSeries(1, 1, 2, {Rational(0), Rational(0)}), DomainError);

    TaylorSeries s(2, 2, 3, {Rational(0), Rational(1)});
    const MultiIndex n({1, 0});
    s.set_coeff(n, {Rational(1, 2), Rational(0)});
    CHECK(s.coeff(n) == std::vector<Rational>{Rational(1, 2), Rational(0)});
    CHECK(s.coeff(MultiIndex({0, 1})) == std::vector<Rational>{0, 0});
    CHECK_THROWS_AS(s.coeff(MultiIndex({2, 2})), TruncationError);
    CHECK_THROWS_AS(s.set_coeff(MultiIndex({2, 2}), {Rational(1), Rational(1)}),
                    TruncationError);
    CHECK_THROWS_AS(s.set_coeff(n, {Rational(1)}), DomainError);
    CHECK_THROWS_AS(s.coeff(MultiIndex({1})), DomainError);

    // writing zeros erases the key, so equality is representational
    TaylorSeries t(2, 2, 3, {Rational(0), Rational(1)});
    t.set_coeff(n, {Rational(1, 2), Rational(0)});
    t.set_coeff(MultiIndex({0, 1}), {Rational(0), Rational(0)});
    CHECK(s == t);
    CHECK(s.coeffs().size() == 1);

    CHECK(derivative_at(s, n) == std::vector<Rational>{Rational(1, 2), Rational(0)});
    CHECK(s.component(1).coeff(n) == std::vector<Rational>{Rational(1, 2)});
    CHECK_THROWS_AS(s.component(3), DomainError);
}

TEST_CASE("ring operations") {
    const TaylorSeries x = scalar_series(4, {{1, 1}});
    const TaylorSeries zero(1, 1, 4, {Rational(0)});
    CHECK(add(x, zero) == x);

    // d^2/dx^2 (x * x) = 2
    CHECK(mul(x, x).coeff(MultiIndex({2})) == std::vector<Rational>{2});

    // Leibniz at (1,1)
    TaylorSeries s(2, 1, 2, {Rational(0), Rational(0)});
    TaylorSeries t(2, 1, 2, {Rational(0), Rational(0)});
    s.set_coeff(MultiIndex({0, 0}), {2});
    s.set_coeff(MultiIndex({1, 0}), {3});
    s.set_coeff(MultiIndex({0, 1}), {5});
    s.set_coeff(MultiIndex({1, 1}), {7});
    t.set_coeff(MultiIndex({0, 0}), {11});
    t.set_coeff(MultiIndex({1, 0}), {13});
    t.set_coeff(MultiIndex({0, 1}), {17});
    t.set_coeff(MultiIndex({1, 1}), {19});
    const Rational expected = Rational(3) * 17 + Rational(5) * 13 + Rational(2) * 19 +
                              Rational(7) * 11;
    CHECK(mul(s, t).coeff(MultiIndex({1, 1})) == std::vector<Rational>{expected});

    CHECK(scale(s, Rational(-1, 2)).coeff(MultiIndex({1, 0})) ==
          std::vector<Rational>{Rational(-3, 2)});

    CHECK_THROWS_AS(add(x, TaylorSeries(1, 1, 3, {Rational(0)})), ContractError);
    CHECK_THROWS_AS(add(x, TaylorSeries(1, 1, 4, {Rational(1)})), ContractError);
    CHECK_THROWS_AS(mul(TaylorSeries(1, 2, 4, {Rational(0)}),
                        TaylorSeries(1, 2, 4, {Rational(0)})),
                    ContractError);
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 8; ++trial) {
        const int d = trial % 3 + 1;
        const int order = 3 + trial % 3;
        const auto center = random_vector(rng, d);
        const TaylorSeries a = random_series(rng, d, 1, order, center);
        const TaylorSeries b = random_series(rng, d, 1, order, center);
        const TaylorSeries c = random_series(rng, d, 1, order, center);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(add(a, b) == add(b, a));
    }
}

TEST_CASE("componentwise product against a scalar series") {
    TaylorSeries v(1, 2, 2, {Rational(0)});
    v.set_coeff(MultiIndex({1}), {Rational(1), Rational(2)});
    const TaylorSeries s = scalar_series(2, {{0, 3}});
    const TaylorSeries sv = mul(s, v);
    CHECK(sv.d_out() == 2);
    CHECK(sv.coeff(MultiIndex({1})) == std::vector<Rational>{3, 6});
    CHECK(mul(v, s) == sv);
}

TEST_CASE("vector contraction") {
    TaylorSeries s(1, 2, 2, {Rational(0)});
    s.set_coeff(MultiIndex({1}), {Rational(1), Rational(2)});
    s.set_coeff(MultiIndex({2}), {Rational(3), Rational(4)});

    CHECK(cw_mul({Rational(1), Rational(1)}, s) == s);
    CHECK(cw_mul({Rational(2), Rational(0)}, s).coeff(MultiIndex({1})) ==
          std::vector<Rational>{2, 0});
    CHECK(dot({Rational(1), Rational(0)}, s) == s.component(1));
    CHECK(dot({Rational(0), Rational(1)}, s) == s.component(2));
    CHECK(dot({Rational(2), Rational(3)}, s).coeff(MultiIndex({1})) ==
          std::vector<Rational>{8});
    CHECK_THROWS_AS(dot({Rational(1)}, s), DomainError);
    CHECK_THROWS_AS(cw_mul({Rational(1)}, s), DomainError);
}

TEST_CASE("series exponential") {
    const TaylorSeries zero(1, 1, 3, {Rational(0)});
    CHECK(exp_series(zero).coeff(MultiIndex({0})) == std::vector<Rational>{1});
    CHECK(exp_series(zero).coeffs().size() == 1);

    // exp(x): every derivative is 1
    const TaylorSeries x = scalar_series(5, {{1, 1}});
    const TaylorSeries ex = exp_series(x);
    for (int m = 0; m <= 5; ++m) {
        CHECK(ex.coeff(MultiIndex({m})) == std::vector<Rational>{1});
    }

    CHECK_THROWS_AS(exp_series(scalar_series(3, {{0, 1}})), DomainError);
    TaylorSeries vec(1, 2, 3, {Rational(0)});
    CHECK_THROWS_AS(exp_series(vec), DomainError);

    // homomorphism: exp(s+t) = exp(s) exp(t)
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 6; ++trial) {
        const int d = trial % 2 + 1;
        const auto center = random_vector(rng, d);
        TaylorSeries s = random_series(rng, d, 1, 4, center);
        TaylorSeries t = random_series(rng, d, 1, 4, center);
        s.set_coeff(MultiIndex::zero(d), {0});
        t.set_coeff(MultiIndex::zero(d), {0});
        CHECK(exp_series(add(s, t)) == mul(exp_series(s), exp_series(t)));
    }
}

TEST_CASE("composition oracle basics") {
    // identity outer function returns g itself
    TaylorSeries g(1, 2, 3, {Rational(0)});
    g.set_coeff(MultiIndex({0}), {Rational(1), Rational(-2)});
    g.set_coeff(MultiIndex({1}), {Rational(3), Rational(5)});
    g.set_coeff(MultiIndex({2}), {Rational(-1, 2), Rational(7)});
    TaylorSeries identity(2, 2, 3, {Rational(1), Rational(-2)});
    identity.set_coeff(MultiIndex::zero(2), {Rational(1), Rational(-2)});
    identity.set_coeff(MultiIndex({1, 0}), {Rational(1), Rational(0)});
    identity.set_coeff(MultiIndex({0, 1}), {Rational(0), Rational(1)});
    CHECK(compose_oracle(identity, g) == g);

    // first-order chain rule: all outer derivatives 1, inner slope a
    const Rational a(7, 3);
    const TaylorSeries f = scalar_series(3, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}, Rational(4));
    const TaylorSeries inner = scalar_series(3, {{0, 4}, {1, a}});
    CHECK(compose_oracle(f, inner).coeff(MultiIndex({1})) == std::vector<Rational>{a});

    // truncation order is the minimum of the operands'
    const TaylorSeries f2 = scalar_series(2, {{0, 1}, {1, 1}}, Rational(4));
    CHECK(compose_oracle(f2, inner).order() == 2);

    // center mismatch and dimension mismatch are contract errors
    const TaylorSeries f_wrong = scalar_series(3, {{0, 1}}, Rational(5));
    CHECK_THROWS_AS(compose_oracle(f_wrong, inner), ContractError);
    CHECK_THROWS_AS(compose_oracle(identity, inner), ContractError);
}

TEST_CASE("composition oracle reproduces the classical third-derivative expansion") {
    std::mt19937_64 rng(56);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational g0 = random_rational(rng);
        std::vector<Rational> gd{g0, random_rational(rng), random_rational(rng),
                                 random_rational(rng)};
        std::vector<Rational> fd{random_rational(rng), random_rational(rng),
                                 random_rational(rng), random_rational(rng)};
        const TaylorSeries g = scalar_series(3, {{0, gd[0]}, {1, gd[1]}, {2, gd[2]}, {3, gd[3]}});
        const TaylorSeries f = scalar_series(3, {{0, fd[0]}, {1, fd[1]}, {2, fd[2]}, {3, fd[3]}}, g0);
        const TaylorSeries h = compose_oracle(f, g);
        CHECK(h.coeff(MultiIndex({1}))[0] == fd[1] * gd[1]);
        CHECK(h.coeff(MultiIndex({2}))[0] == fd[1] * gd[2] + fd[2] * gd[1] * gd[1]);
        CHECK(h.coeff(MultiIndex({3}))[0] ==
              fd[1] * gd[3] + Rational(3) * fd[2] * gd[1] * gd[2] +
                  fd[3] * gd[1] * gd[1] * gd[1]);
    }
}

TEST_CASE("composition oracle is associative") {
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 6; ++trial) {
        const TaylorSeries h = random_series(rng, 1, 1, 4, {random_rational(rng)});
        const TaylorSeries g = random_series(rng, 1, 1, 4, h.coeff(MultiIndex({0})));
        const TaylorSeries f = random_series(rng, 1, 1, 4, g.coeff(MultiIndex({0})));
        CHECK(compose_oracle(f, compose_oracle(g, h)) ==
              compose_oracle(compose_oracle(f, g), h));
    }
}

TEST_CASE("JSON round trip") {
    std::mt19937_64 rng(90);
    const TaylorSeries s = random_series(rng, 2, 2, 3, random_vector(rng, 2));
    CHECK(taylor_from_json(nlohmann::json::parse(to_json(s).dump())) == s);

    const nlohmann::json good = {
        {"d_in", 2}, {"d_out", 1}, {"order", 4},
        {"center", {"0", "0"}},
        {"coeffs", {{{"n", {1, 0}}, {"v", {"1/2"}}}}}};
    const TaylorSeries parsed = taylor_from_json(good);
    CHECK(parsed.coeff(MultiIndex({1, 0})) == std::vector<Rational>{Rational(1, 2)});
    CHECK(parsed.coeffs().size() == 1);

    auto broken = good;
    broken.erase("order");
    CHECK_THROWS_AS(taylor_from_json(broken), ParseError);

    broken = good;
    broken["coeffs"][0]["v"] = {"1/0"};
    CHECK_THROWS_AS(taylor_from_json(broken), ParseError);

    broken = good;
    broken["coeffs"][0]["n"] = {5, 5};
    CHECK_THROWS_AS(taylor_from_json(broken), TruncationError);

    broken = good;
    broken["coeffs"][0]["v"] = {"1", "2"};
    CHECK_THROWS_AS(taylor_from_json(broken), DomainError);

    broken = good;
    broken["center"] = {"0"};
    CHECK_THROWS_AS(taylor_from_json(broken), DomainError);

    CHECK_THROWS_AS(taylor_from_file("/nonexistent/series.json"), ParseError);
}
