#pragma once

#include <hilb/character.hpp>
#include <hilb/hilbert.hpp>
#include <hilb/identities.hpp>
#include <hilb/partition.hpp>
#include <hilb/symfunc.hpp>

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hilb {

/// One verification item: a named family of exact checks.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

namespace detail {

inline std::string range_detail(const std::string& var, int lo, int hi) {
    return var + " = " + std::to_string(lo) + ".." + std::to_string(hi);
}

template <typename Fn>
CheckResult check_range(const std::string& name, const std::string& var, int lo, int hi,
                        Fn&& holds_at) {
    for (int v = lo; v <= hi; ++v) {
        if (!holds_at(v))
            return {name, false, "failed at " + var + " = " + std::to_string(v)};
    }
    return {name, true, range_detail(var, lo, hi)};
}

// Deterministic symmetric function with zero constant term: partitions and
// coefficients are drawn from the raw mt19937_64 stream, which is fully
// specified, so the same seed gives the same value on every platform.
inline SymFunc pseudorandom_symfunc(std::uint64_t seed, int max_weight) {
    std::mt19937_64 rng(seed);
    SymFunc f;
    int terms = 2 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        int w = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_weight));
        auto parts = partitions_of(w);
        const Partition& mu = parts[rng() % parts.size()];
        long long num = static_cast<long long>(rng() % 9) - 4;
        long long den = 1 + static_cast<long long>(rng() % 4);
        if (num == 0) num = 1;
        f.add_term(mu, Rational(num, den));
    }
    if (f.is_zero()) f.add_term(Partition{1}, 1);
    return f;
}

}  // namespace detail

/// Criterion-6 identity families (the combinatorial lemmas).
inline std::vector<CheckResult> suite_identities(std::optional<int> max_k = {},
                                                 std::optional<int> max_n = {}) {
    std::vector<CheckResult> out;
    out.push_back(detail::check_range("pk-factorization", "k", 0, max_k.value_or(6),
                                      [](int k) { return verify_pk_identity(k); }));
    out.push_back(detail::check_range("hypergeometric-lemma", "k", 0, max_k.value_or(5),
                                      [](int k) { return verify_hypergeometric_lemma(k); }));
    out.push_back(detail::check_range("partial-sums", "k", 1, std::max(1, max_k.value_or(7)),
                                      [](int k) { return verify_partial_sums(k); }));
    out.push_back(detail::check_range("stirling-lemma", "n", 0, max_n.value_or(15),
                                      [](int n) { return verify_stirling_lemma(n); }));
    out.push_back(detail::check_range("stirling-triangular", "n", 0, max_n.value_or(12), [](int n) {
        return stirling2(n + 1, n) == binomial(n + 1, 2);
    }));
    return out;
}

/// Criteria 1-3: equivariant fixed-point sums against the generating series,
/// and the closed-form top classes.
inline std::vector<CheckResult> suite_crosscheck(std::optional<int> max_n = {}, int threads = 0) {
    std::vector<CheckResult> out;
    int bound = max_n.value_or(8);

    out.push_back(detail::check_range("crosscheck-chern", "n", 1, bound, [&](int n) {
        WeightAssignment w = WeightAssignment::tangent(n);
        SymFunc total = weight_component(series_c_tangent(Truncation{n}), n);
        for (int k = 0; k <= n; ++k) {
            if (equivariant_chern_class(n, k, w, threads) != degree_component(total, k))
                return false;
        }
        return true;
    }));
    out.push_back(detail::check_range("crosscheck-ch", "n", 1, bound, [&](int n) {
        WeightAssignment w = WeightAssignment::tangent(n);
        SymFunc total = weight_component(series_ch_tangent(Truncation{n}), n);
        for (int k = 0; k <= n; ++k) {
            if (equivariant_chern_char(n, k, w, threads) != degree_component(total, k))
                return false;
        }
        return true;
    }));

    int top_bound = max_n ? *max_n : 9;
    out.push_back(detail::check_range("top-classes-chern", "n", 1, top_bound, [&](int n) {
        SymFunc top = equivariant_chern_class(n, n - 1, WeightAssignment::tangent(n), threads);
        return n % 2 == 0 ? top.is_zero() : top == top_chern_tangent(n);
    }));
    out.push_back(detail::check_range("top-classes-ch", "n", 1, top_bound, [&](int n) {
        SymFunc top = equivariant_chern_char(n, n - 1, WeightAssignment::tangent(n), threads);
        return n % 2 == 0 ? top.is_zero() : top == top_chern_char_tangent(n);
    }));
    return out;
}

/// Criteria 4-5: the tautological triple agreement and T = B + B^*.
inline std::vector<CheckResult> suite_decomposition(std::optional<int> max_n = {}) {
    std::vector<CheckResult> out;
    out.push_back(detail::check_range("taut-triple-agreement", "n", 0, max_n.value_or(10), [](int n) {
        SymFunc via_d = d_operator(SymFunc::p_monomial(Partition(std::vector<int>(
                            static_cast<std::size_t>(n), 1))) *
                                   Rational(1, factorial(n)));
        SymFunc direct = ch_taut_direct(n);
        SymFunc via_series = weight_component(series_ch_taut(Truncation{n}), n);
        return via_d == direct && direct == via_series;
    }));
    out.push_back(detail::check_range("tangent-decomposition", "n", 0, max_n.value_or(8),
                                      [](int n) { return verify_T_equals_B_plus_Bdual(n); }));
    return out;
}

/// Criterion-7 property families.
inline std::vector<CheckResult> suite_properties(std::optional<int> max_n = {}, int threads = 0) {
    std::vector<CheckResult> out;

    out.push_back(detail::check_range("character-orthonormality", "n", 1, max_n.value_or(8),
                                      [](int n) {
        auto parts = partitions_of(n);
        for (std::size_t a = 0; a < parts.size(); ++a) {
            for (std::size_t b = a; b < parts.size(); ++b) {
                Rational sum = 0;
                for (const auto& mu : parts)
                    sum += Rational(mn_character(parts[a], mu) * mn_character(parts[b], mu),
                                    z_factor(mu));
                if (sum != Rational(a == b ? 1 : 0)) return false;
            }
        }
        return true;
    }));

    out.push_back(detail::check_range("character-dimension", "n", 1, max_n.value_or(8), [](int n) {
        Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& lambda : partitions_of(n)) {
            if (Rational(mn_character(lambda, ones)) != Rational(factorial(n), hook_product(lambda)))
                return false;
        }
        return true;
    }));

    out.push_back(detail::check_range("hook-square-sum", "n", 0, max_n.value_or(10), [](int n) {
        Rational sum = 0;
        for (const auto& lambda : partitions_of(n)) {
            Int h = hook_product(lambda);
            sum += Rational(1, h * h);
        }
        return sum == Rational(1, factorial(n));
    }));

    {
        int weight = max_n.value_or(8);
        bool ok = true;
        std::string fail;
        for (std::uint64_t seed = 1; seed <= 20 && ok; ++seed) {
            SymFunc f = detail::pseudorandom_symfunc(seed, weight);
            Truncation t{weight};
            SymFunc g = f;
            // compare against f truncated, since exp/log drop high weights
            SymFunc truncated;
            for (const auto& [mu, c] : g.terms())
                if (mu.weight() <= weight) truncated.add_term(mu, c);
            if (log_series(exp_series(f, t), t) != truncated) {
                ok = false;
                fail = "failed at seed = " + std::to_string(seed);
            }
        }
        out.push_back({"exp-log-roundtrip", ok,
                       ok ? "20 inputs, weight <= " + std::to_string(weight) : fail});
    }

    out.push_back(detail::check_range("odd-chern-vanishing", "n", 1, max_n.value_or(8),
                                      [&](int n) {
        WeightAssignment w = WeightAssignment::tangent(n);
        for (int k = 1; k < n; k += 2)
            if (!equivariant_chern_class(n, k, w, threads).is_zero()) return false;
        return true;
    }));

    {
        int weight = max_n ? *max_n : 9;
        auto single_odd_support = [](const SymFunc& f) {
            for (const auto& [mu, c] : f.terms())
                if (mu.length() != 1 || mu.parts()[0] % 2 == 0) return false;
            return true;
        };
        Truncation t{weight};
        bool c_ok = single_odd_support(log_series(series_c_tangent(t), t));
        SymFunc ch_flat = mul(series_ch_tangent(t), exp_series(SymFunc::p(1) * Rational(-1), t), t);
        bool ch_ok = single_odd_support(ch_flat);
        out.push_back({"series-structure", c_ok && ch_ok,
                       c_ok && ch_ok ? "weight <= " + std::to_string(weight)
                                     : std::string(c_ok ? "ch" : "c") + " series support check failed"});
    }

    return out;
}

/// Every suite in order; the CLI's `verify all`.
inline std::vector<CheckResult> suite_all(std::optional<int> max_n = {},
                                          std::optional<int> max_k = {}, int threads = 0) {
    std::vector<CheckResult> out = suite_identities(max_k, max_n);
    for (auto& r : suite_crosscheck(max_n, threads)) out.push_back(std::move(r));
    for (auto& r : suite_decomposition(max_n)) out.push_back(std::move(r));
    for (auto& r : suite_properties(max_n, threads)) out.push_back(std::move(r));
    return out;
}

}  // namespace hilb
