#pragma once

// The polynomial ring F_2[w_1, ..., w_d] = H^*(BO(d); Z/2) with the action
// of Steenrod squares (Wu formulas, Cartan formula) and Milnor primitives.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace grqn {

/// w_1^{r_1} ... w_d^{r_d}; degree sum_i i * r_i.
class Monomial {
public:
    using Exponent = std::uint16_t;

    explicit Monomial(int d = 0) : exps_(static_cast<std::size_t>(d), 0) {}
    explicit Monomial(std::vector<Exponent> exps);

    /// w_j in ambient d; 1 <= j <= d.
    static Monomial generator(int d, int j);

    int ambient() const { return static_cast<int>(exps_.size()); }
    int degree() const;
    /// Sum of exponents.
    int length() const;
    bool is_unit() const;

    /// Exponent of w_j, 1-based.
    int exponent(int j) const { return exps_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& other) const;
    /// Every exponent multiplied by 2^k.
    Monomial frobenius(int k) const;

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Finite sum of distinct monomials over F_2.
class Polynomial {
public:
    explicit Polynomial(int d = 0) : d_(d) {}
    Polynomial(int d, std::vector<Monomial> terms);

    static Polynomial zero(int d) { return Polynomial(d); }
    static Polynomial one(int d);
    static Polynomial generator(int d, int j);
    static Polynomial from_monomial(const Monomial& m);
    /// Parses sums like "w1^3*w2 + w1*w2^2 + 1"; "0" is zero.
    static Polynomial parse(int d, std::string_view text);

    int ambient() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Sorted, duplicate-free.
    const std::vector<Monomial>& terms() const { return terms_; }
    bool contains(const Monomial& m) const;

    Polynomial homogeneous_part(int degree) const;
    bool is_homogeneous() const;

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial pow(int e) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    int d_ = 0;
    std::vector<Monomial> terms_;
};

/// Product over F_2. Throws AmbientMismatch.
Polynomial multiply(const Polynomial& p, const Polynomial& q);

/// Sq^i(w_j) by the Wu formula, with w_0 = 1 and w_k = 0 for k > d.
Polynomial sq_generator(int i, int j, int d);

/// Sq^i(p), extended from generators by the Cartan formula.
Polynomial sq(int i, const Polynomial& p);

/// Total square Sq = sum_i Sq^i, truncated to terms of degree <= max_degree.
Polynomial sq_total(const Polynomial& p, int max_degree);

/// Q_n(w_j) in ambient d (memoized, thread-safe).
const Polynomial& milnor_q_generator(int n, int j, int d);

/// Q_n(p); raises degree by 2^{n+1} - 1. Q_n acts as a derivation.
Polynomial milnor_q(int n, const Polynomial& p);

/// The dual class bar-w_k: (1 + w_1 + ... + w_d)(1 + bar-w_1 + ...) = 1.
Polynomial dual_class(int k, int d);

/// Power-sum s-class p_k mod 2 via Newton's identity.
Polynomial s_class(int k, int d);

}  // namespace grqn
