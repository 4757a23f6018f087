#pragma once

#include <complex>
#include <string>

#include "vircat/poly.hpp"

namespace vircat {

/// Element of Z[zeta_{2p}] (rational coefficients allowed), represented
/// by its residue modulo the 2p-th cyclotomic polynomial.  Two elements
/// are equal iff their reduced forms coincide, so equality tests are
/// exact.  q denotes the class of x, a primitive 2p-th root of unity.
class CycScalar {
public:
    explicit CycScalar(int p) : p_(check_p(p)) {}
    CycScalar(int p, const Poly1& raw) : p_(check_p(p)), c_(reduce(p, raw)) {}

    static CycScalar zero(int p) { return CycScalar(p); }
    static CycScalar one(int p) { return CycScalar(p, Poly1::constant(Rat(1))); }
    /// q^e for any integer e (negative exponents via q^{2p} = 1).
    static CycScalar qpow(int p, long e);

    int p() const { return p_; }
    const Poly1& coeffs() const { return c_; }
    bool is_zero() const { return c_.is_zero(); }

    CycScalar operator-() const { return CycScalar(p_, -c_); }
    friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const Rat& a, const CycScalar& b);
    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

    CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
    CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
    CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

    /// Numerical embedding sending q to exp(i*pi/p).
    std::complex<double> embed() const;

    std::string str() const { return c_.str("q"); }

private:
    static int check_p(int p);
    static Poly1 reduce(int p, const Poly1& raw);
    int p_;
    Poly1 c_;
};

/// Quantum integer [s]_q = q^{s-1} + q^{s-3} + ... + q^{1-s} in Z[zeta_{2p}].
/// [0] = 0 and [-s] = -[s].
CycScalar qint(int s, int p);

}  // namespace vircat
