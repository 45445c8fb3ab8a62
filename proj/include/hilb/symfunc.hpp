#pragma once

#include <hilb/partition.hpp>
#include <hilb/rational.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilb {

/// Cohomological degree of a p-monomial: |lambda| - l(lambda).
inline int cohomological_degree(const Partition& lambda) {
    return lambda.weight() - lambda.length();
}

/// Truncation bound for series arithmetic: terms of conformal weight
/// greater than max_weight are dropped.
struct Truncation {
    int max_weight = 0;
};

/// Term order for rendering and storage: conformal weight first, then the
/// part sequence lexicographically, so p[1,1,1] < p[2,1] < p[3].
struct TermOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.parts() < b.parts();
    }
};

/// Element of Q[p_1, p_2, ...] in the power-sum basis: a finitely supported
/// map from partitions to exact rationals. The empty partition keys the
/// constant term. Zero coefficients are never stored.
class SymFunc {
public:
    using TermMap = std::map<Partition, Rational, TermOrder>;

    SymFunc() = default;

    static SymFunc constant(Rational c) {
        SymFunc f;
        f.add_term(Partition{}, std::move(c));
        return f;
    }

    static SymFunc one() { return constant(1); }

    /// The power sum p_r.
    static SymFunc p(int r) { return p_monomial(Partition{r}); }

    /// The monomial p_lambda with coefficient 1.
    static SymFunc p_monomial(const Partition& lambda) {
        SymFunc f;
        f.terms_.emplace(lambda, 1);
        return f;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Partition& lambda, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SymFunc& operator+=(const SymFunc& g) {
        for (const auto& [mu, c] : g.terms_) add_term(mu, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& g) {
        for (const auto& [mu, c] : g.terms_) add_term(mu, -c);
        return *this;
    }
    SymFunc& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [mu, v] : terms_) v *= c;
        }
        return *this;
    }

    friend SymFunc operator+(SymFunc f, const SymFunc& g) { return f += g; }
    friend SymFunc operator-(SymFunc f, const SymFunc& g) { return f -= g; }
    friend SymFunc operator-(SymFunc f) {
        for (auto& [mu, v] : f.terms_) v = -v;
        return f;
    }
    friend SymFunc operator*(SymFunc f, const Rational& c) { return f *= c; }
    friend SymFunc operator*(const Rational& c, SymFunc f) { return f *= c; }

    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    TermMap terms_;
};

inline SymFunc add(const SymFunc& f, const SymFunc& g) { return f + g; }
inline SymFunc scale(const Rational& c, const SymFunc& f) { return f * c; }

/// p_lambda * p_mu = p_{lambda union mu}: merge the part multisets.
inline Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(a.length() + b.length()));
    parts.insert(parts.end(), a.parts().begin(), a.parts().end());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

/// Product truncated at max_weight.
inline SymFunc mul(const SymFunc& f, const SymFunc& g, Truncation t) {
    SymFunc out;
    for (const auto& [la, ca] : f.terms()) {
        int wa = la.weight();
        if (wa > t.max_weight) break;  // terms are weight-sorted
        for (const auto& [mu, cb] : g.terms()) {
            if (wa + mu.weight() > t.max_weight) break;
            out.add_term(merge_parts(la, mu), ca * cb);
        }
    }
    return out;
}

/// Exact polynomial product.
inline SymFunc mul(const SymFunc& f, const SymFunc& g) {
    SymFunc out;
    for (const auto& [la, ca] : f.terms())
        for (const auto& [mu, cb] : g.terms()) out.add_term(merge_parts(la, mu), ca * cb);
    return out;
}

inline SymFunc operator*(const SymFunc& f, const SymFunc& g) { return mul(f, g); }

/// Homogeneous part of conformal weight n.
inline SymFunc weight_component(const SymFunc& f, int n) {
    SymFunc out;
    for (const auto& [mu, c] : f.terms())
        if (mu.weight() == n) out.add_term(mu, c);
    return out;
}

/// Homogeneous part of cohomological degree d.
inline SymFunc degree_component(const SymFunc& f, int d) {
    SymFunc out;
    for (const auto& [mu, c] : f.terms())
        if (cohomological_degree(mu) == d) out.add_term(mu, c);
    return out;
}

/// exp(f) truncated at t.max_weight; f must have zero constant term.
inline SymFunc exp_series(const SymFunc& f, Truncation t) {
    if (f.coeff(Partition{}) != 0)
        throw std::invalid_argument("exp_series: nonzero constant term");
    SymFunc result = SymFunc::one();
    SymFunc power = SymFunc::one();
    for (int k = 1; k <= t.max_weight; ++k) {
        power = mul(power, f, t);
        if (power.is_zero()) break;
        power *= Rational(1, k);
        result += power;
    }
    return result;
}

/// log(f) truncated at t.max_weight; f must have constant term 1.
inline SymFunc log_series(const SymFunc& f, Truncation t) {
    if (f.coeff(Partition{}) != 1)
        throw std::invalid_argument("log_series: constant term must be 1");
    SymFunc g = f - SymFunc::one();
    SymFunc result;
    SymFunc power = SymFunc::one();
    for (int k = 1; k <= t.max_weight; ++k) {
        power = mul(power, g, t);
        if (power.is_zero()) break;
        result += power * Rational(k % 2 == 1 ? 1 : -1, k);
    }
    return result;
}

/// d/dp_r in the polynomial ring Q[p_1, p_2, ...].
inline SymFunc partial_derivative(const SymFunc& f, int r) {
    if (r < 1) throw std::invalid_argument("partial_derivative: index must be >= 1");
    SymFunc out;
    for (const auto& [mu, c] : f.terms()) {
        int mult = static_cast<int>(std::count(mu.parts().begin(), mu.parts().end(), r));
        if (mult == 0) continue;
        std::vector<int> parts = mu.parts();
        parts.erase(std::find(parts.begin(), parts.end(), r));
        out.add_term(Partition(std::move(parts)), c * mult);
    }
    return out;
}

namespace detail {

// Distinct parts of lambda with multiplicities, descending.
inline std::vector<std::pair<int, int>> part_multiplicities(const Partition& lambda) {
    std::vector<std::pair<int, int>> out;
    for (int p : lambda.parts()) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

}  // namespace detail

/// The differential operator
///   D = sum_{k>=1} (-1)^{k-1}/k! sum_{n_1..n_k>=1}
///       n_1...n_k p_{n_1+...+n_k} d/dp_{n_1} ... d/dp_{n_k}
/// applied to a polynomial. Acting on p_lambda, the ordered k-tuples collapse
/// to sub-multisets sigma of lambda's parts:
///   D(p_lambda) = sum_{sigma != 0} (-1)^{|sigma|-1}
///                 prod_r C(m_r, s_r) r^{s_r} * p_{(lambda minus sigma) + (sum sigma)}.
inline SymFunc d_operator(const SymFunc& f) {
    SymFunc out;
    for (const auto& [lambda, c] : f.terms()) {
        if (lambda.empty()) continue;  // constants are annihilated
        auto groups = detail::part_multiplicities(lambda);
        std::vector<int> chosen(groups.size(), 0);
        auto rec = [&](auto&& self, std::size_t idx) -> void {
            if (idx == groups.size()) {
                int size = 0, total = 0;
                Int weight_factor = 1;
                std::vector<int> rest;
                for (std::size_t g = 0; g < groups.size(); ++g) {
                    auto [r, m] = groups[g];
                    int s = chosen[g];
                    size += s;
                    total += r * s;
                    weight_factor *= binomial(m, s) * int_pow(r, s);
                    for (int i = 0; i < m - s; ++i) rest.push_back(r);
                }
                if (size == 0) return;
                rest.push_back(total);
                std::sort(rest.begin(), rest.end(), std::greater<int>());
                Rational term = c * Rational(weight_factor);
                if (size % 2 == 0) term = -term;
                out.add_term(Partition(std::move(rest)), term);
                return;
            }
            for (int s = 0; s <= groups[idx].second; ++s) {
                chosen[idx] = s;
                self(self, idx + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

/// Deterministic text form, e.g. "1/6*p[1,1,1] - 1/3*p[3]".
inline std::string render_text(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mu, c] : f.terms()) {
        bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        out += to_string(negative ? Rational(-c) : c);
        if (!mu.empty()) {
            out += "*p[";
            out += to_string(mu);
            out += ']';
        }
        first = false;
    }
    return out;
}

}  // namespace hilb
