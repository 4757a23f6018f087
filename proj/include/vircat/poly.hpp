#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vircat/rational.hpp"

namespace vircat {

/// Dense univariate polynomial over Rat.  Coefficients are indexed by
/// degree and the representation is canonical: no trailing zeros, the
/// zero polynomial is the empty vector.
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly1 constant(const Rat& a);
    static Poly1 monomial(int degree, const Rat& a = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const { return k >= 0 && k < (int)c_.size() ? c_[k] : Rat(0); }
    const Rat& leading() const;

    Rat eval(const Rat& x) const;

    Poly1 operator-() const;
    friend Poly1 operator+(const Poly1& a, const Poly1& b);
    friend Poly1 operator-(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Rat& a, const Poly1& b);
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws on division by zero.
    static std::pair<Poly1, Poly1> divmod(const Poly1& num, const Poly1& den);
    /// Division known to be exact; throws if a remainder appears.
    static Poly1 exact_div(const Poly1& num, const Poly1& den);

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// The n-th cyclotomic polynomial, by iterated exact division of x^n - 1
/// by the lower Phi_d.
Poly1 cyclotomic_poly(int n);

/// Largest m with (x-root)^m dividing f, together with the exact quotient.
std::pair<int, Poly1> exact_divide_check(const Poly1& f, const Rat& root);

/// Sparse bivariate polynomial over Rat; monomials (i,j) -> coefficient
/// of x^i y^j, zero coefficients never stored.  Printing uses graded lex
/// order with x > y.
class Poly2 {
public:
    Poly2() = default;
    static Poly2 constant(const Rat& a);
    static Poly2 x();
    static Poly2 y();
    /// a*x + b*y + c
    static Poly2 linear(const Rat& a, const Rat& b, const Rat& c);

    bool is_zero() const { return m_.empty(); }
    int deg_x() const;
    Rat coeff(int i, int j) const;
    const std::map<std::pair<int, int>, Rat>& monomials() const { return m_; }
    void set_coeff(int i, int j, const Rat& a);

    Poly2 operator-() const;
    friend Poly2 operator+(const Poly2& a, const Poly2& b);
    friend Poly2 operator-(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Rat& a, const Poly2& b);
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.m_ == b.m_; }

    /// Exact substitution y = h.
    Poly1 eval_y(const Rat& h) const;

    std::string str() const;

private:
    std::map<std::pair<int, int>, Rat> m_;
};

}  // namespace vircat
