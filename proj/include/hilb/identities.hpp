#pragma once

#include <hilb/polynomial.hpp>
#include <hilb/rational.hpp>

#include <stdexcept>
#include <vector>

namespace hilb {

/// Catalan number C_k = binom(2k, k) / (k+1).
inline Int catalan(int k) {
    if (k < 0) throw std::invalid_argument("catalan: k must be >= 0");
    Int b = binomial(2 * k, k);
    return b / (k + 1);  // exact
}

/// P_k(t) = sum_{s=0}^{2k} (-1)^s/(s!(2k-s)!)
///          prod_{i=1}^{s}(1 - i^2 t^2) prod_{j=1}^{2k-s}(1 - j^2 t^2).
inline Poly1 p_polynomial(int k) {
    if (k < 0) throw std::invalid_argument("p_polynomial: k must be >= 0");
    const Poly1 one = Poly1::constant(1);
    // quad[m] = prod_{i=1}^{m} (1 - i^2 t^2), shared between both products.
    std::vector<Poly1> quad(static_cast<std::size_t>(2 * k + 1));
    quad[0] = one;
    for (int m = 1; m <= 2 * k; ++m)
        quad[static_cast<std::size_t>(m)] =
            quad[static_cast<std::size_t>(m - 1)] *
            (one - Poly1::variable(0, 2) * Rational(Int(m) * m));
    Poly1 sum;
    for (int s = 0; s <= 2 * k; ++s) {
        Rational c(Int(s % 2 == 0 ? 1 : -1), factorial(s) * factorial(2 * k - s));
        sum += quad[static_cast<std::size_t>(s)] * quad[static_cast<std::size_t>(2 * k - s)] * c;
    }
    return sum;
}

/// Closed form (-1)^k (2k+1) C_k t^{2k} prod_{i=1}^{k} (1 - i^2 t^2).
inline Poly1 p_polynomial_closed_form(int k) {
    const Poly1 one = Poly1::constant(1);
    Poly1 out = Poly1::variable(0, 2 * k) *
                Rational(Int(k % 2 == 0 ? 1 : -1) * (2 * k + 1) * catalan(k));
    for (int i = 1; i <= k; ++i)
        out = out * (one - Poly1::variable(0, 2) * Rational(Int(i) * i));
    return out;
}

inline bool verify_pk_identity(int k) {
    return p_polynomial(k) == p_polynomial_closed_form(k);
}

/// Coefficient of p_{2k+1} in the top Chern class of weight 2k+1, extracted
/// through P_k: Coeff(t^{2k}, (1 - (2k+1)^2 t^2) P_k) / (2k+1)^2.
/// The two (2k+1) divisors are the hook product's full-cycle hook and
/// z_{(2k+1)}. Equals (-1)^k C_k / (2k+1).
inline Rational top_chern_coeff_via_pk(int k) {
    const Poly1 one = Poly1::constant(1);
    Poly1 full = (one - Poly1::variable(0, 2) * Rational(Int(2 * k + 1) * (2 * k + 1))) *
                 p_polynomial(k);
    Rational c = full.coeff({2 * k});
    return c / Rational(Int(2 * k + 1) * (2 * k + 1));
}

/// The hypergeometric product lemma, cleared of its denominator: as
/// polynomials in (a, b),
///   k! (a+b)_k sum_{s=0}^{2k} (-1)^s (a)_s (b)_s / s! * (a)_{2k-s} (b)_{2k-s} / (2k-s)!
///   == (a+b)_{2k} (a)_k (b)_k.
inline bool verify_hypergeometric_lemma(int k) {
    if (k < 0) throw std::invalid_argument("verify_hypergeometric_lemma: k must be >= 0");
    const Poly2 a = Poly2::variable(0);
    const Poly2 b = Poly2::variable(1);
    std::vector<Poly2> pa(static_cast<std::size_t>(2 * k + 1));
    std::vector<Poly2> pb(static_cast<std::size_t>(2 * k + 1));
    pa[0] = pb[0] = Poly2::constant(1);
    for (int r = 1; r <= 2 * k; ++r) {
        Poly2 shift_a = a + Poly2::constant(r - 1);
        Poly2 shift_b = b + Poly2::constant(r - 1);
        pa[static_cast<std::size_t>(r)] = pa[static_cast<std::size_t>(r - 1)] * shift_a;
        pb[static_cast<std::size_t>(r)] = pb[static_cast<std::size_t>(r - 1)] * shift_b;
    }
    Poly2 lhs;
    for (int s = 0; s <= 2 * k; ++s) {
        Rational c(Int(s % 2 == 0 ? 1 : -1), factorial(s) * factorial(2 * k - s));
        lhs += pa[static_cast<std::size_t>(s)] * pb[static_cast<std::size_t>(s)] *
               pa[static_cast<std::size_t>(2 * k - s)] * pb[static_cast<std::size_t>(2 * k - s)] * c;
    }
    Poly2 lhs_cleared = lhs * pochhammer(a + b, k) * Rational(factorial(k));
    Poly2 rhs = pochhammer(a + b, 2 * k) * pa[static_cast<std::size_t>(k)] *
                pb[static_cast<std::size_t>(k)];
    return lhs_cleared == rhs;
}

/// Stirling number of the second kind via the alternating sum
/// S(n,k) = 1/k! sum_{j=0}^{k} (-1)^j binom(k,j) (k-j)^n.
inline Int stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("stirling2: need 0 <= k <= n");
    Int sum = 0;
    for (int j = 0; j <= k; ++j) {
        Int term = binomial(k, j) * int_pow(k - j, n);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum / factorial(k);  // exact
}

/// sum_{j=0}^{n} (-1)^{n-j} binom(n,j) j^{n+1} == binom(n+1, 2) n!.
inline bool verify_stirling_lemma(int n) {
    if (n < 0) throw std::invalid_argument("verify_stirling_lemma: n must be >= 0");
    Int lhs = 0;
    for (int j = 0; j <= n; ++j) {
        Int term = binomial(n, j) * int_pow(j, n + 1);
        lhs += ((n - j) % 2 == 0) ? term : -term;
    }
    return lhs == binomial(n + 1, 2) * factorial(n);
}

/// The three partial-sum identities:
///   sum_s (-1)^s / (s!(2k-s)!)                      == 0
///   sum_s (-1)^s / (s!(2k-s)!) sum_{i=1}^{s} i^{2k} == (2k+1)/2
///   sum_s (-1)^s / (s!(2k-s)!) sum_{j=1}^{2k-s} j^{2k} == (2k+1)/2
inline bool verify_partial_sums(int k) {
    if (k < 1) throw std::invalid_argument("verify_partial_sums: k must be >= 1");
    Rational vanish = 0, left = 0, right = 0;
    for (int s = 0; s <= 2 * k; ++s) {
        Rational c(Int(s % 2 == 0 ? 1 : -1), factorial(s) * factorial(2 * k - s));
        vanish += c;
        Int isum = 0, jsum = 0;
        for (int i = 1; i <= s; ++i) isum += int_pow(i, 2 * k);
        for (int j = 1; j <= 2 * k - s; ++j) jsum += int_pow(j, 2 * k);
        left += c * Rational(isum);
        right += c * Rational(jsum);
    }
    Rational expected(Int(2 * k + 1), 2);
    return vanish == 0 && left == expected && right == expected;
}

}  // namespace hilb
