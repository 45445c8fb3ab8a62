#pragma once

#include <hilb/character.hpp>
#include <hilb/identities.hpp>
#include <hilb/parallel.hpp>
#include <hilb/partition.hpp>
#include <hilb/rational.hpp>
#include <hilb/symfunc.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace hilb {

/// Torus weights of a rank-r linearized bundle at the fixed points of
/// Hilb^n(C^2): one integer multiset of size r per partition of n.
class WeightAssignment {
public:
    WeightAssignment(int n, std::map<Partition, std::vector<std::int64_t>> table)
        : n_(n), table_(std::move(table)) {
        auto all = partitions_of(n_);
        if (table_.size() != all.size())
            throw std::invalid_argument("WeightAssignment: table must cover every partition of n");
        rank_ = -1;
        for (const auto& lambda : all) {
            auto it = table_.find(lambda);
            if (it == table_.end())
                throw std::invalid_argument("WeightAssignment: missing partition " +
                                            to_string(lambda));
            int r = static_cast<int>(it->second.size());
            if (rank_ == -1) rank_ = r;
            if (r != rank_)
                throw std::invalid_argument("WeightAssignment: rank mismatch at partition " +
                                            to_string(lambda));
        }
        if (rank_ < 1) throw std::invalid_argument("WeightAssignment: rank must be positive");
    }

    /// Tangent bundle weights: the hook lengths of lambda and their
    /// opposites, rank 2n.
    static WeightAssignment tangent(int n) {
        std::map<Partition, std::vector<std::int64_t>> table;
        for (const auto& lambda : partitions_of(n)) {
            std::vector<std::int64_t> w;
            w.reserve(static_cast<std::size_t>(2 * n));
            for (Cell x : cells(lambda)) {
                int h = hook_length(lambda, x);
                w.push_back(h);
                w.push_back(-h);
            }
            table.emplace(lambda, std::move(w));
        }
        if (n == 0) return WeightAssignment(0, 0, std::move(table));
        return WeightAssignment(n, std::move(table));
    }

    int n() const { return n_; }
    int rank() const { return rank_; }
    const std::vector<std::int64_t>& at(const Partition& lambda) const {
        return table_.at(lambda);
    }

private:
    // Unchecked constructor for the rank-0 edge case n = 0 (Hilb^0 is a
    // point; the only fibre is zero-dimensional).
    WeightAssignment(int n, int rank, std::map<Partition, std::vector<std::int64_t>> table)
        : n_(n), rank_(rank), table_(std::move(table)) {}

    int n_ = 0;
    int rank_ = 0;
    std::map<Partition, std::vector<std::int64_t>> table_;
};

namespace detail {

// Coefficients of prod_i (1 + f_i t), so e[k] = k-th elementary symmetric
// polynomial of the weights.
inline std::vector<Int> elementary_coeffs(const std::vector<std::int64_t>& weights) {
    std::vector<Int> e(weights.size() + 1);
    e[0] = 1;
    std::size_t used = 0;
    for (std::int64_t f : weights) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] += Int(f) * e[k - 1];
    }
    return e;
}

// sum_i f_i^k, with the k = 0 convention that every weight contributes 1.
inline Int weight_power_sum(const std::vector<std::int64_t>& weights, int k) {
    if (k == 0) return Int(weights.size());
    Int sum = 0;
    for (std::int64_t f : weights) sum += int_pow(Int(f), k);
    return sum;
}

// sum over mu |- n with l(mu) = n - k of z_mu^{-1} chi^lambda_mu p_mu,
// scaled by the given factor.
inline SymFunc scaled_character_sum(const Partition& lambda,
                                    const std::vector<Partition>& mus_of_length,
                                    const Rational& factor) {
    SymFunc out;
    for (const auto& mu : mus_of_length)
        out.add_term(mu, factor * Rational(mn_character(lambda, mu), z_factor(mu)));
    return out;
}

inline std::vector<Partition> partitions_of_length(int n, int length) {
    std::vector<Partition> out;
    for (auto& mu : partitions_of(n))
        if (mu.length() == length) out.push_back(std::move(mu));
    return out;
}

}  // namespace detail

/// k-th equivariant Chern class in Lambda^n:
///   c_k = sum_{lambda |- n} h(lambda)^{-1} e_k(weights(lambda))
///         sum_{mu |- n, l(mu) = n-k} z_mu^{-1} chi^lambda_mu p_mu.
/// Zero whenever no mu of length n-k exists (in particular for k >= n >= 1).
inline SymFunc equivariant_chern_class(int n, int k, const WeightAssignment& weights,
                                       int threads = 0) {
    if (n < 0 || k < 0) throw std::invalid_argument("equivariant_chern_class: n, k must be >= 0");
    if (weights.n() != n) throw std::invalid_argument("equivariant_chern_class: weight table is for a different n");
    if (n == 0) return k == 0 ? SymFunc::one() : SymFunc();
    if (k >= n) return SymFunc();
    auto lambdas = partitions_of(n);
    auto mus = detail::partitions_of_length(n, n - k);
    return parallel_sum<SymFunc>(
        lambdas.size(),
        [&](std::size_t i) {
            const Partition& lambda = lambdas[i];
            const auto& w = weights.at(lambda);
            if (k > weights.rank()) return SymFunc();
            Int ek = detail::elementary_coeffs(w)[static_cast<std::size_t>(k)];
            if (ek == 0) return SymFunc();
            return detail::scaled_character_sum(lambda, mus, Rational(ek, hook_product(lambda)));
        },
        threads);
}

/// k-th equivariant Chern character in Lambda^n:
///   ch_k = 1/k! sum_{lambda |- n} h(lambda)^{-1} sum_i (f_i^lambda)^k
///          sum_{mu |- n, l(mu) = n-k} z_mu^{-1} chi^lambda_mu p_mu.
inline SymFunc equivariant_chern_char(int n, int k, const WeightAssignment& weights,
                                      int threads = 0) {
    if (n < 0 || k < 0) throw std::invalid_argument("equivariant_chern_char: n, k must be >= 0");
    if (weights.n() != n) throw std::invalid_argument("equivariant_chern_char: weight table is for a different n");
    if (n == 0) return SymFunc();  // rank 0: all characters vanish
    if (k >= n) return SymFunc();
    auto lambdas = partitions_of(n);
    auto mus = detail::partitions_of_length(n, n - k);
    Rational prefactor(1, factorial(k));
    return parallel_sum<SymFunc>(
        lambdas.size(),
        [&](std::size_t i) {
            const Partition& lambda = lambdas[i];
            Int pk = detail::weight_power_sum(weights.at(lambda), k);
            if (pk == 0) return SymFunc();
            return detail::scaled_character_sum(
                lambda, mus, prefactor * Rational(pk, hook_product(lambda)));
        },
        threads);
}

/// Total equivariant Chern class: sum over k = 0 .. n-1 (all of H^*).
inline SymFunc equivariant_total_chern(int n, const WeightAssignment& weights, int threads = 0) {
    SymFunc total;
    for (int k = 0; k <= std::max(n - 1, 0); ++k)
        total += equivariant_chern_class(n, k, weights, threads);
    return total;
}

/// Total equivariant Chern character: sum over k = 0 .. n-1.
inline SymFunc equivariant_total_ch(int n, const WeightAssignment& weights, int threads = 0) {
    SymFunc total;
    for (int k = 0; k <= std::max(n - 1, 0); ++k)
        total += equivariant_chern_char(n, k, weights, threads);
    return total;
}

/// Generating series of total Chern classes of tangent bundles:
///   sum_n c(T Hilb^n) = exp( sum_{k>=0} (-1)^k C_k p_{2k+1} / (2k+1) ).
inline SymFunc series_c_tangent(Truncation t) {
    SymFunc exponent;
    for (int k = 0; 2 * k + 1 <= t.max_weight; ++k)
        exponent.add_term(Partition{2 * k + 1},
                          Rational(Int(k % 2 == 0 ? 1 : -1) * catalan(k), 2 * k + 1));
    return exp_series(exponent, t);
}

/// Generating series of total Chern characters of tangent bundles:
///   sum_n ch(T Hilb^n) = 2 e^{p_1} sum_{k>=0} p_{2k+1} / (2k+1)!.
inline SymFunc series_ch_tangent(Truncation t) {
    SymFunc odd;
    for (int k = 0; 2 * k + 1 <= t.max_weight; ++k)
        odd.add_term(Partition{2 * k + 1}, Rational(2, factorial(2 * k + 1)));
    return mul(exp_series(SymFunc::p(1), t), odd, t);
}

/// Total Chern class series for the tautological bundle:
///   sum_n c(B_n) = exp( sum_{m>=1} (-1)^{m-1} p_m / m ).
inline SymFunc series_c_taut(Truncation t) {
    SymFunc exponent;
    for (int m = 1; m <= t.max_weight; ++m)
        exponent.add_term(Partition{m}, Rational(m % 2 == 1 ? 1 : -1, m));
    return exp_series(exponent, t);
}

/// sum_n ch(B_n) = e^{p_1} sum_{k>=1} (-1)^{k-1} p_k / k!.
inline SymFunc series_ch_taut(Truncation t) {
    SymFunc alternating;
    for (int m = 1; m <= t.max_weight; ++m)
        alternating.add_term(Partition{m}, Rational(Int(m % 2 == 1 ? 1 : -1), factorial(m)));
    return mul(exp_series(SymFunc::p(1), t), alternating, t);
}

/// Closed form ch(B_n) = sum_{k=1}^{n} (-1)^{k-1} / (k!(n-k)!) p_1^{n-k} p_k;
/// zero for n = 0.
inline SymFunc ch_taut_direct(int n) {
    if (n < 0) throw std::invalid_argument("ch_taut_direct: n must be >= 0");
    SymFunc out;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> parts;
        parts.push_back(k);
        for (int i = 0; i < n - k; ++i) parts.push_back(1);
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        out.add_term(Partition(std::move(parts)),
                     Rational(Int(k % 2 == 1 ? 1 : -1), factorial(k) * factorial(n - k)));
    }
    return out;
}

/// Top Chern class c_{n-1}(T Hilb^n): zero for even n,
/// (-1)^k C_k p_{2k+1} / (2k+1) for n = 2k+1.
inline SymFunc top_chern_tangent(int n) {
    if (n < 1) throw std::invalid_argument("top_chern_tangent: n must be >= 1");
    if (n % 2 == 0) return SymFunc();
    int k = (n - 1) / 2;
    SymFunc out;
    out.add_term(Partition{n}, Rational(Int(k % 2 == 0 ? 1 : -1) * catalan(k), n));
    return out;
}

/// Top Chern character ch_{n-1}(T Hilb^n): zero for even n,
/// 2 p_{2k+1} / (2k+1)! for n = 2k+1.
inline SymFunc top_chern_char_tangent(int n) {
    if (n < 1) throw std::invalid_argument("top_chern_char_tangent: n must be >= 1");
    if (n % 2 == 0) return SymFunc();
    SymFunc out;
    out.add_term(Partition{n}, Rational(2, factorial(n)));
    return out;
}

/// Dual bundle on the character level: ch_k(F^*) = (-1)^k ch_k(F). Each
/// p_mu term of a weight-n class flips by the parity of its degree n - l(mu).
/// Input must be homogeneous in conformal weight.
inline SymFunc dualize(const SymFunc& f) {
    if (f.is_zero()) return f;
    int n = f.terms().begin()->first.weight();
    SymFunc out;
    for (const auto& [mu, c] : f.terms()) {
        if (mu.weight() != n)
            throw std::invalid_argument("dualize: input is not homogeneous");
        out.add_term(mu, (n - mu.length()) % 2 == 0 ? c : -c);
    }
    return out;
}

/// ch-level check of T Hilb^n = B_n + B_n^*.
inline bool verify_T_equals_B_plus_Bdual(int n) {
    if (n < 0) throw std::invalid_argument("verify_T_equals_B_plus_Bdual: n must be >= 0");
    SymFunc lhs = weight_component(series_ch_tangent(Truncation{n}), n);
    SymFunc b = ch_taut_direct(n);
    return lhs == b + dualize(b);
}

}  // namespace hilb
