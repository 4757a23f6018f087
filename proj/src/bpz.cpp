#include "vircat/bpz.hpp"

#include <cmath>
#include <stdexcept>

#include "vircat/error.hpp"
#include "vircat/fusion.hpp"

namespace vircat {

namespace {
const double PI = std::acos(-1.0);

bool near_nonpositive_integer(double c) {
    return c < 0.5 && std::abs(c - std::round(c)) < 1e-12;
}
}  // namespace

double hyp2f1(double a, double b, double c, double x, int nterms) {
    if (near_nonpositive_integer(c))
        throw std::invalid_argument("hyp2f1: c at a pole of the Gauss series");
    if (std::abs(x) >= 1.0) throw std::invalid_argument("hyp2f1: need |x| < 1");
    double term = 1.0, sum = 1.0;
    int kmax = nterms >= 0 ? nterms : 100000;
    for (int k = 0; k < kmax; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        sum += term;
        if (nterms < 0 && std::abs(term) < 1e-15 * (std::abs(sum) + 1.0) && k > 4) break;
    }
    return sum;
}

Jet hyp2f1_jet(double a, double b, double c, double x) {
    Jet j;
    j.f = hyp2f1(a, b, c, x);
    j.df = a * b / c * hyp2f1(a + 1, b + 1, c + 1, x);
    j.d2f = a * (a + 1) * b * (b + 1) / (c * (c + 1)) * hyp2f1(a + 2, b + 2, c + 2, x);
    return j;
}

double ode_residual(int p, const std::function<Jet(double)>& phi, double x) {
    if (x <= 0.0 || x >= 1.0) throw std::invalid_argument("ode_residual: need 0 < x < 1");
    double h12 = 3.0 / (4.0 * p) - 0.5;
    Jet j = phi(x);
    return x * (1.0 - x) * j.d2f + (1.0 - 2.0 * x) / p * j.df -
           h12 / p * j.f / (x * (1.0 - x));
}

Jet psi_jet(int p, double x) {
    if (x <= 0.5 || x >= 1.0) throw std::invalid_argument("psi_jet: need 1/2 < x < 1");
    if (p == 2) {
        // psi = x^{1/4} (1-x)^{1/4} 2F1(1/2, 1/2; 1; 1-x)
        double al = 0.25, be = 0.25;
        Jet F = hyp2f1_jet(0.5, 0.5, 1.0, 1.0 - x);
        double g = std::pow(x, al) * std::pow(1.0 - x, be);
        double lg = al / x - be / (1.0 - x);
        double lg2 = -al / (x * x) - be / ((1.0 - x) * (1.0 - x));
        Jet j;
        j.f = g * F.f;
        j.df = g * (lg * F.f - F.df);  // inner derivative of 1-x is -1
        j.d2f = g * ((lg * lg + lg2) * F.f - 2.0 * lg * F.df + F.d2f);
        return j;
    }
    // psi = x^{-1/2p} (1-x)^{1 + 1/2p - 2/p} 2F1(1/p, 1-1/p; 2-2/p; w), w = 1 - 1/x
    double al = -0.5 / p, be = 1.0 + 0.5 / p - 2.0 / p;
    double w = 1.0 - 1.0 / x, w1 = 1.0 / (x * x), w2 = -2.0 / (x * x * x);
    Jet F = hyp2f1_jet(1.0 / p, 1.0 - 1.0 / p, 2.0 - 2.0 / p, w);
    double g = std::pow(x, al) * std::pow(1.0 - x, be);
    double lg = al / x - be / (1.0 - x);
    double lg2 = -al / (x * x) - be / ((1.0 - x) * (1.0 - x));
    Jet j;
    j.f = g * F.f;
    j.df = g * (lg * F.f + F.df * w1);
    j.d2f = g * ((lg * lg + lg2) * F.f + 2.0 * lg * F.df * w1 + F.d2f * w1 * w1 + F.df * w2);
    return j;
}

namespace {

// Coefficients of (1-x)^beta.
std::vector<double> binom_series(double beta, int order) {
    std::vector<double> b(order + 1);
    b[0] = 1.0;
    for (int k = 1; k <= order; ++k) b[k] = b[k - 1] * (-(beta - k + 1.0)) / k;
    return b;
}

std::vector<double> gauss_series(double a, double b, double c, int order) {
    std::vector<double> g(order + 1);
    g[0] = 1.0;
    for (int k = 0; k < order; ++k)
        g[k + 1] = g[k] * (a + k) * (b + k) / ((c + k) * (k + 1.0));
    return g;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(std::min(a.size(), b.size()), 0.0);
    for (size_t k = 0; k < c.size(); ++k)
        for (size_t i = 0; i <= k; ++i) c[k] += a[i] * b[k - i];
    return c;
}

}  // namespace

FSeries rigidity_series(int p, int order) {
    FSeries out;
    double h12 = 3.0 / (4.0 * p) - 0.5;
    out.leading_exponent = -2.0 * h12;

    if (p >= 3) {
        // (2p x d/dx - 1) applied to x^{-2h12} (1-x)^{1/2p} F(1/p,1-1/p;2-2/p;x),
        // connection constant not included
        auto g = convolve(binom_series(0.5 / p, order),
                          gauss_series(1.0 / p, 1.0 - 1.0 / p, 2.0 - 2.0 / p, order));
        out.coeffs.resize(order + 1);
        for (int k = 0; k <= order; ++k)
            out.coeffs[k] = (2.0 * p * (k - 2.0 * h12) - 1.0) * g[k];
        return out;
    }

    // p = 2: logarithmic connection around x = 0,
    //   2F1(1/2,1/2;1;1-x) = -(1/pi) sum_s a_s x^s (log x + C_s)
    // with a_s = ((1/2)_s / s!)^2 and C_s = 2 psi(s+1/2) - 2 psi(s+1).
    double conn = -1.0 / (std::tgamma(0.5) * std::tgamma(0.5));
    std::vector<double> a(order + 1), cst(order + 1);
    a[0] = 1.0;
    cst[0] = -4.0 * std::log(2.0);
    for (int s = 1; s <= order; ++s) {
        double half = s - 0.5;
        a[s] = a[s - 1] * (half / s) * (half / s);
        cst[s] = cst[s - 1] + 2.0 / half - 2.0 / s;
    }
    std::vector<double> B(order + 1);
    for (int s = 0; s <= order; ++s) B[s] = a[s] * cst[s];
    auto quarter = binom_series(0.25, order);
    auto P = convolve(quarter, a);
    auto Q = convolve(quarter, B);
    // (4x d/dx - 1) psi = conn * x^{1/4} [ 4x P' log x + 4P + 4x Q' ]
    out.coeffs.resize(order + 1);
    out.log_coeffs.resize(order + 1);
    for (int k = 0; k <= order; ++k) {
        out.coeffs[k] = conn * (4.0 * P[k] + 4.0 * k * Q[k]);
        out.log_coeffs[k] = conn * 4.0 * k * P[k];
    }
    return out;
}

double rigidity_invariant_closed_form(int p) {
    if (p < 2) throw std::invalid_argument("rigidity_invariant: p must be >= 2");
    if (p == 2) return -4.0 / PI;
    return -(p - 2.0) / std::cos(PI / p);
}

double rigidity_invariant(int p) {
    double closed = rigidity_invariant_closed_form(p);
    FSeries ser = rigidity_series(p, 8);
    double series_value;
    if (p >= 3) {
        // connection coefficient Gamma(2/p-1) Gamma(2-2/p) / (Gamma(1/p) Gamma(1-1/p))
        double conn = std::tgamma(2.0 / p - 1.0) * std::tgamma(2.0 - 2.0 / p) /
                      (std::tgamma(1.0 / p) * std::tgamma(1.0 - 1.0 / p));
        series_value = conn * ser.coeffs[0];
    } else {
        series_value = ser.coeffs[0];
    }
    if (std::abs(series_value - closed) > 1e-8)
        throw verification_error("rigidity invariant route mismatch at p=" + std::to_string(p) +
                                 ": closed form " + std::to_string(closed) + " vs series " +
                                 std::to_string(series_value));
    return series_value;
}

double left_trace_check(int p) {
    double inv = rigidity_invariant(p);
    // e o i = (1 + 4p h_{1,2}) / (-<v, R(v)>) = 2(p-2) / <v, R(v)>
    double lt = 2.0 * (p - 2.0) / inv;
    double expect = -2.0 * std::cos(PI / p);
    if (std::abs(lt - expect) > 1e-10)
        throw verification_error("left trace " + std::to_string(lt) + " does not match -2cos(pi/p)");
    double dim = cat_dim(ModuleLabel::simple(1, 2, p)).embed().real();
    if (std::abs(lt - dim) > 1e-10)
        throw verification_error("left trace disagrees with the categorical dimension of L:1,2");
    return lt == 0.0 ? 0.0 : lt;  // clear the sign of -0 at p = 2
}

}  // namespace vircat
