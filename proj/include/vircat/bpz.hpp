#pragma once

#include <functional>
#include <vector>

#include "vircat/cyclotomic.hpp"

namespace vircat {

/// Truncated power-series solution data around x = 0: the function is
/// x^leading_exponent * (sum coeffs[k] x^k + log(x) * sum log_coeffs[k] x^k).
struct FSeries {
    double leading_exponent = 0.0;
    std::vector<double> coeffs;
    std::vector<double> log_coeffs;
};

/// Gauss series for 2F1(a,b;c;x), |x| < 1; nterms < 0 means adaptive
/// truncation (stop when two successive partial sums differ by < 1e-15
/// relative).
double hyp2f1(double a, double b, double c, double x, int nterms = -1);

/// Value and first two derivatives, for exact ODE residuals.
struct Jet {
    double f = 0.0;
    double df = 0.0;
    double d2f = 0.0;
};
Jet hyp2f1_jet(double a, double b, double c, double x);

/// Left side of the degenerate-field ODE
///   x(1-x) phi'' + (1/p)(1-2x) phi' - (h_{1,2}/p) x^{-1}(1-x)^{-1} phi
/// evaluated on a candidate solution given by its 2-jet.
double ode_residual(int p, const std::function<Jet(double)>& phi, double x);

/// The normalized sphere-function psi on (1/2, 1), built from the
/// hypergeometric solution that is analytic at x = 1.
Jet psi_jet(int p, double x);

/// Series expansion of (2p x d/dx - 1) psi around x = 0: the
/// x^{-2 h_{1,2}} branch as an FSeries (log-free part only used for
/// p >= 3; for p = 2 the log companion is populated).
FSeries rigidity_series(int p, int order);

double rigidity_invariant_closed_form(int p);

/// Computes <v, R(v)> two ways - closed form and the series/connection
/// route - and returns the series value.  Throws a verification_error
/// when the routes disagree beyond 1e-8.
double rigidity_invariant(int p);

/// The invariant e o i = -2 cos(pi/p), recovered from the rigidity
/// normalization; asserts agreement with -2cos(pi/p) and with the
/// numerical embedding of the categorical dimension of L_{1,2}, both
/// to 1e-10.
double left_trace_check(int p);

}  // namespace vircat
