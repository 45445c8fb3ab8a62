#include <hilb/character.hpp>
#include <hilb/symfunc.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace hilb;

namespace {

SymFunc p1_power(int n) {
    return SymFunc::p_monomial(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

// Deterministic generator for property tests (raw mt19937_64 draws only).
SymFunc random_symfunc(std::mt19937_64& rng, int max_weight, bool allow_constant) {
    SymFunc f;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        int w = static_cast<int>(rng() % static_cast<std::uint64_t>(max_weight + 1));
        if (!allow_constant && w == 0) w = 1;
        auto parts = partitions_of(w);
        const Partition& mu = parts[rng() % parts.size()];
        long long num = static_cast<long long>(rng() % 11) - 5;
        long long den = 1 + static_cast<long long>(rng() % 4);
        f.add_term(mu, Rational(num, den));
    }
    return f;
}

}  // namespace

TEST_CASE("add and scale") {
    CHECK((SymFunc::p(1) + SymFunc::p(1) * Rational(-1)).is_zero());
    CHECK(scale(Rational(1, 2), SymFunc::p(2)) == SymFunc::p(2) * Rational(1, 2));
    CHECK(add(p1_power(2) * Rational(1, 2), SymFunc::p(2) * Rational(1, 2)) ==
          schur_in_p(Partition{2}));
    CHECK(SymFunc().is_zero());
    CHECK(SymFunc::one().coeff(Partition{}) == 1);
}

TEST_CASE("products merge partitions") {
    CHECK(SymFunc::p(1) * SymFunc::p(1) == SymFunc::p_monomial(Partition{1, 1}));
    CHECK(SymFunc::p(2) * SymFunc::p(3) == SymFunc::p_monomial(Partition{3, 2}));

    SymFunc lhs = (SymFunc::p(1) + SymFunc::p(2)) * (SymFunc::p(1) - SymFunc::p(2));
    SymFunc expected;
    expected.add_term(Partition{1, 1}, 1);
    expected.add_term(Partition{2, 2}, -1);
    CHECK(lhs == expected);
}

TEST_CASE("truncated product drops heavy terms") {
    SymFunc f = SymFunc::p(3) + SymFunc::p(1);
    SymFunc g = mul(f, f, Truncation{4});
    SymFunc expected;
    expected.add_term(Partition{1, 1}, 1);
    expected.add_term(Partition{3, 1}, 2);
    CHECK(g == expected);
}

TEST_CASE("graded components") {
    SymFunc f = SymFunc::one() + SymFunc::p(1) + SymFunc::p(3);
    CHECK(weight_component(f, 3) == SymFunc::p(3));
    CHECK(weight_component(f, 2).is_zero());

    SymFunc g = p1_power(3) * Rational(1, 6) - SymFunc::p(3) * Rational(1, 3);
    CHECK(degree_component(g, 2) == SymFunc::p(3) * Rational(-1, 3));
    CHECK(degree_component(g, 0) == p1_power(3) * Rational(1, 6));
    CHECK(degree_component(p1_power(5), 0) == p1_power(5));
}

TEST_CASE("exponential") {
    CHECK(exp_series(SymFunc(), Truncation{5}) == SymFunc::one());
    SymFunc e = exp_series(SymFunc::p(1), Truncation{8});
    for (int n = 0; n <= 8; ++n)
        CHECK(weight_component(e, n) == p1_power(n) * Rational(1, factorial(n)));

    SymFunc f = SymFunc::p(1) - SymFunc::p(3) * Rational(1, 3);
    CHECK(weight_component(exp_series(f, Truncation{3}), 3) ==
          p1_power(3) * Rational(1, 6) - SymFunc::p(3) * Rational(1, 3));

    CHECK_THROWS_AS(exp_series(SymFunc::one(), Truncation{3}), std::invalid_argument);
}

TEST_CASE("logarithm") {
    CHECK(log_series(SymFunc::one(), Truncation{5}).is_zero());
    CHECK(log_series(exp_series(SymFunc::p(1), Truncation{6}), Truncation{6}) == SymFunc::p(1));

    SymFunc f = SymFunc::p(1) - SymFunc::p(3) * Rational(1, 3) + SymFunc::p(5) * Rational(2, 5);
    CHECK(log_series(exp_series(f, Truncation{7}), Truncation{7}) == f);

    CHECK_THROWS_AS(log_series(SymFunc::p(1), Truncation{3}), std::invalid_argument);
    CHECK_THROWS_AS(log_series(SymFunc::one() * Rational(2), Truncation{3}),
                    std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    CHECK(partial_derivative(p1_power(2), 1) == SymFunc::p(1) * Rational(2));
    CHECK(partial_derivative(SymFunc::p(3), 1).is_zero());
    CHECK(partial_derivative(SymFunc::p_monomial(Partition{2, 2, 1}), 2) ==
          SymFunc::p_monomial(Partition{2, 1}) * Rational(2));
    CHECK(partial_derivative(SymFunc::one(), 4).is_zero());
}

TEST_CASE("derivative operator on small monomials") {
    CHECK(d_operator(SymFunc::p(1)) == SymFunc::p(1));

    SymFunc expected = p1_power(2) * Rational(2) - SymFunc::p(2);
    CHECK(d_operator(p1_power(2)) == expected);

    // D(p_1^n) = sum_k (-1)^{k-1} C(n,k) p_1^{n-k} p_k
    for (int n = 1; n <= 8; ++n) {
        SymFunc closed;
        for (int k = 1; k <= n; ++k) {
            SymFunc term = p1_power(n - k) * SymFunc::p(k);
            closed += term * Rational(Int(k % 2 == 1 ? 1 : -1) * binomial(n, k));
        }
        CHECK(d_operator(p1_power(n)) == closed);
    }

    CHECK(d_operator(SymFunc::one()).is_zero());
    CHECK(d_operator(SymFunc()).is_zero());
}

TEST_CASE("ring axioms on pseudorandom inputs") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        SymFunc f = random_symfunc(rng, 6, true);
        SymFunc g = random_symfunc(rng, 6, true);
        SymFunc h = random_symfunc(rng, 6, true);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        // truncation is a graded quotient: truncating late agrees
        Truncation t{8};
        CHECK(mul(mul(f, g, t), h, t) == mul(f, mul(g, h, t), t));
    }
}

TEST_CASE("multiplication respects the weight grading") {
    std::mt19937_64 rng(987654321);
    for (int trial = 0; trial < 20; ++trial) {
        SymFunc f = random_symfunc(rng, 5, true);
        SymFunc g = random_symfunc(rng, 5, true);
        SymFunc prod = f * g;
        for (int n = 0; n <= 10; ++n) {
            SymFunc direct;
            for (int a = 0; a <= n; ++a)
                direct += weight_component(f, a) * weight_component(g, n - a);
            CHECK(weight_component(prod, n) == direct);
        }
    }
}

TEST_CASE("exp/log round trip on pseudorandom inputs") {
    std::mt19937_64 rng(555);
    Truncation t{8};
    for (int trial = 0; trial < 20; ++trial) {
        SymFunc f = random_symfunc(rng, 8, false);
        CHECK(log_series(exp_series(f, t), t) == f);
        CHECK(exp_series(log_series(SymFunc::one() + f, t), t) ==
              SymFunc::one() + f);
    }
}

TEST_CASE("text rendering") {
    CHECK(render_text(SymFunc()) == "0");
    CHECK(render_text(SymFunc::one()) == "1");
    CHECK(render_text(SymFunc::one() * Rational(-2, 3)) == "-2/3");

    SymFunc f = p1_power(3) * Rational(1, 6) - SymFunc::p(3) * Rational(1, 3);
    CHECK(render_text(f) == "1/6*p[1,1,1] - 1/3*p[3]");

    SymFunc g = SymFunc::p(3) * Rational(-1, 3);
    CHECK(render_text(g) == "-1/3*p[3]");

    // term order: weight first, then part-sequence lexicographically
    SymFunc h = SymFunc::p(3) + SymFunc::p(1) + SymFunc::one() +
                SymFunc::p_monomial(Partition{2, 1}) + p1_power(3);
    CHECK(render_text(h) == "1 + 1*p[1] + 1*p[1,1,1] + 1*p[2,1] + 1*p[3]");

    SymFunc taut = p1_power(2) - SymFunc::p(2) * Rational(1, 2);
    CHECK(render_text(taut) == "1*p[1,1] - 1/2*p[2]");
}
