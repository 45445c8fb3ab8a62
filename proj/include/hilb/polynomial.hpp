#pragma once

#include <hilb/rational.hpp>

#include <array>
#include <map>
#include <stdexcept>

namespace hilb {

/// Sparse polynomial over Q in N formal variables, keyed on exponent
/// vectors. No zero coefficients are stored.
template <int N>
class Polynomial {
public:
    using Exponents = std::array<int, N>;
    using TermMap = std::map<Exponents, Rational>;

    Polynomial() = default;

    static Polynomial constant(Rational c) {
        Polynomial p;
        p.add_term(Exponents{}, std::move(c));
        return p;
    }

    /// x_index^power.
    static Polynomial variable(int index, int power = 1) {
        if (index < 0 || index >= N) throw std::out_of_range("Polynomial: bad variable index");
        Exponents e{};
        e[static_cast<std::size_t>(index)] = power;
        Polynomial p;
        p.add_term(e, 1);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int total = 0;
            for (int x : e) total += x;
            d = std::max(d, total);
        }
        return d;
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [e, v] : terms_) v *= c;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& [e, v] : a.terms_) v = -v;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (int i = 0; i < N; ++i)
                    e[static_cast<std::size_t>(i)] =
                        ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

using Poly1 = Polynomial<1>;
using Poly2 = Polynomial<2>;

/// Rising factorial (a)_r = a (a+1) ... (a+r-1); (a)_0 = 1.
template <int N>
Polynomial<N> pochhammer(const Polynomial<N>& a, int r) {
    if (r < 0) throw std::invalid_argument("pochhammer: r must be >= 0");
    Polynomial<N> out = Polynomial<N>::constant(1);
    for (int i = 0; i < r; ++i) out = out * (a + Polynomial<N>::constant(i));
    return out;
}

}  // namespace hilb
