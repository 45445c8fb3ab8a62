#pragma once

#include <hilb/partition.hpp>
#include <hilb/rational.hpp>
#include <hilb/symfunc.hpp>

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hilb {

namespace detail {

// Shared append-only memo for character values, safe under concurrent
// read/insert. Values are deterministic, so a racing double-insert is benign.
struct CharCache {
    std::shared_mutex mutex;
    std::map<std::pair<Partition, Partition>, Int> values;

    static CharCache& instance() {
        static CharCache cache;
        return cache;
    }
};

}  // namespace detail

/// Irreducible character chi^lambda evaluated on the conjugacy class mu,
/// via the Murnaghan-Nakayama border-strip recursion on beta-sets.
/// Both partitions must have the same weight.
inline Int mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("mn_character: |lambda| != |mu|");
    if (lambda.empty()) return 1;

    auto& cache = detail::CharCache::instance();
    const auto key = std::make_pair(lambda, mu);
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }

    // Strip a border strip of length mu_1. In beta-set coordinates
    // beta_i = lambda_i + (L-1-i), removing a strip of length r moves one
    // beta to beta - r; the sign is (-1)^{number of betas jumped over}.
    const int strip = mu.parts()[0];
    const Partition mu_rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    const int L = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) beta[static_cast<std::size_t>(i)] = lambda.parts()[i] + (L - 1 - i);

    Int result = 0;
    for (int i = 0; i < L; ++i) {
        int target = beta[static_cast<std::size_t>(i)] - strip;
        if (target < 0) continue;
        int height = 0;
        bool occupied = false;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            int b = beta[static_cast<std::size_t>(j)];
            if (b == target) {
                occupied = true;
                break;
            }
            if (b > target && b < beta[static_cast<std::size_t>(i)]) ++height;
        }
        if (occupied) continue;

        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts;
        for (int j = 0; j < L; ++j) {
            int part = nb[static_cast<std::size_t>(j)] - (L - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        Int sub = mn_character(Partition(std::move(parts)), mu_rest);
        result += (height % 2 == 0) ? sub : -sub;
    }

    {
        std::unique_lock lock(cache.mutex);
        cache.values.emplace(key, result);
    }
    return result;
}

/// chi^lambda on the full cycle (n): (-1)^s if lambda is the hook
/// (n-s, 1^s), 0 otherwise.
inline Int char_on_full_cycle(const Partition& lambda) {
    if (lambda.empty()) return 1;
    if (lambda.length() > 1 && lambda.parts()[1] > 1) return 0;
    int s = lambda.length() - 1;
    return s % 2 == 0 ? 1 : -1;
}

/// Class function on S_n: finitely supported map from partitions of n to
/// rationals; missing keys read as 0.
struct ClassFunction {
    int n = 0;
    std::map<Partition, Rational> values;

    ClassFunction() = default;
    explicit ClassFunction(int n_) : n(n_) {}

    Rational at(const Partition& mu) const {
        auto it = values.find(mu);
        return it == values.end() ? Rational(0) : it->second;
    }

    void set(const Partition& mu, Rational value) {
        if (mu.weight() != n)
            throw std::invalid_argument("ClassFunction: key is not a partition of n");
        if (value == 0)
            values.erase(mu);
        else
            values[mu] = std::move(value);
    }

    /// Indicator of the conjugacy class mu.
    static ClassFunction indicator(const Partition& mu) {
        ClassFunction f(mu.weight());
        f.set(mu, 1);
        return f;
    }

    /// The irreducible character chi^lambda as a class function.
    static ClassFunction irreducible(const Partition& lambda) {
        ClassFunction f(lambda.weight());
        for (const auto& mu : partitions_of(lambda.weight()))
            f.set(mu, Rational(mn_character(lambda, mu)));
        return f;
    }
};

/// Frobenius characteristic: f  |->  sum_mu f(mu) z_mu^{-1} p_mu.
inline SymFunc frobenius_image(const ClassFunction& f) {
    SymFunc out;
    for (const auto& [mu, value] : f.values)
        out.add_term(mu, value / Rational(z_factor(mu)));
    return out;
}

/// Schur function s_lambda in the power-sum basis:
/// s_lambda = sum_mu z_mu^{-1} chi^lambda_mu p_mu.
inline SymFunc schur_in_p(const Partition& lambda) {
    return frobenius_image(ClassFunction::irreducible(lambda));
}

}  // namespace hilb
