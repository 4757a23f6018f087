#include "vircat/cyclotomic.hpp"

#include <cmath>

namespace vircat {

int CycScalar::check_p(int p) {
    if (p < 2) throw std::invalid_argument("CycScalar: p must be >= 2");
    return p;
}

Poly1 CycScalar::reduce(int p, const Poly1& raw) {
    return Poly1::divmod(raw, cyclotomic_poly(2 * p)).second;
}

CycScalar CycScalar::qpow(int p, long e) {
    long m = 2 * p;
    long r = ((e % m) + m) % m;
    return CycScalar(p, Poly1::monomial(static_cast<int>(r)));
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("CycScalar: mixed p");
    return CycScalar(a.p_, a.c_ + b.c_);
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("CycScalar: mixed p");
    return CycScalar(a.p_, a.c_ - b.c_);
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("CycScalar: mixed p");
    return CycScalar(a.p_, a.c_ * b.c_);
}

CycScalar operator*(const Rat& a, const CycScalar& b) { return CycScalar(b.p_, a * b.c_); }

std::complex<double> CycScalar::embed() const {
    const double pi = std::acos(-1.0);
    std::complex<double> zeta = std::polar(1.0, pi / p_);
    std::complex<double> acc(0.0, 0.0);
    const auto& cs = c_.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * zeta + it->to_double();
    return acc;
}

CycScalar qint(int s, int p) {
    if (s < 0) return -qint(-s, p);
    Poly1 sum;
    for (int i = 0; i < s; ++i) {
        long e = s - 1 - 2 * i;
        long m = 2 * p;
        long r = ((e % m) + m) % m;
        sum = sum + Poly1::monomial(static_cast<int>(r));
    }
    return CycScalar(p, sum);
}

}  // namespace vircat
