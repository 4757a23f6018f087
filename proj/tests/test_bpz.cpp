#include "doctest.h"

#include <cmath>

#include "vircat/bpz.hpp"
#include "vircat/error.hpp"

using namespace vircat;

namespace {
const double PI = std::acos(-1.0);
}

TEST_CASE("Gauss series basics") {
    CHECK(hyp2f1(0.3, 1.7, 0.9, 0.0) == 1.0);
    // binomial identity 2F1(a,b;b;x) = (1-x)^{-a}
    CHECK(std::abs(hyp2f1(0.4, 1.3, 1.3, 0.3) - std::pow(0.7, -0.4)) < 1e-13);
    CHECK(std::abs(hyp2f1(0.4, 1.3, 1.3, 0.3, 200) - std::pow(0.7, -0.4)) < 1e-12);
    CHECK_THROWS_AS(hyp2f1(0.5, 0.5, -1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(hyp2f1(0.5, 0.5, 1.0, 1.5), std::invalid_argument);
}

TEST_CASE("Gauss summation at x = 1") {
    auto gauss_limit = [](double a, double b, double c) {
        return std::exp(std::lgamma(c) + std::lgamma(c - a - b) - std::lgamma(c - a) -
                        std::lgamma(c - b));
    };
    // Partial sums of the series at x = 1 behave like
    // S_N = L - C N^{-d} (1 + c1/N + ...) with d = c - a - b > 0, so two
    // Richardson steps with the known exponent isolate the limit L.
    auto series_at_one = [](double a, double b, double c) {
        const long N = 400000;
        double term = 1.0, sum = 1.0, comp = 0.0;
        double s1 = 0, s2 = 0, s4 = 0;
        for (long k = 0; k < 4 * N; ++k) {
            term *= (a + k) * (b + k) / ((c + k) * (k + 1.0));
            double y = term - comp, t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            if (k + 1 == N) s1 = sum;
            if (k + 1 == 2 * N) s2 = sum;
            if (k + 1 == 4 * N) s4 = sum;
        }
        double d = c - a - b;
        double f = std::pow(2.0, d);
        double r12 = s2 + (s2 - s1) / (f - 1.0);
        double r24 = s4 + (s4 - s2) / (f - 1.0);
        return r24 + (r24 - r12) / (2.0 * f - 1.0);
    };
    CHECK(std::abs(series_at_one(0.2, 0.3, 1.7) - gauss_limit(0.2, 0.3, 1.7)) < 1e-10);
    unsigned long seed = 12345;
    auto next = [&seed] {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        return 0.1 + 0.8 * ((seed >> 33) % 1000) / 1000.0;
    };
    for (int i = 0; i < 10; ++i) {
        double a = next(), b = next(), c = 1.0 + next();
        if (c - a - b < 0.3) {
            --i;
            continue;
        }
        CHECK(std::abs(series_at_one(a, b, c) - gauss_limit(a, b, c)) < 1e-10);
    }
}

TEST_CASE("jets differentiate the series") {
    Jet j = hyp2f1_jet(0.25, 0.75, 1.25, 0.2);
    double eps = 1e-6;
    double fp = hyp2f1(0.25, 0.75, 1.25, 0.2 + eps), fm = hyp2f1(0.25, 0.75, 1.25, 0.2 - eps);
    CHECK(std::abs((fp - fm) / (2 * eps) - j.df) < 1e-7);
    double eps2 = 1e-4;  // second difference: balance truncation against roundoff
    double fp2 = hyp2f1(0.25, 0.75, 1.25, 0.2 + eps2), fm2 = hyp2f1(0.25, 0.75, 1.25, 0.2 - eps2);
    CHECK(std::abs((fp2 - 2 * j.f + fm2) / (eps2 * eps2) - j.d2f) < 1e-5);
}

TEST_CASE("zero function has zero residual") {
    auto zero = [](double) { return Jet{0.0, 0.0, 0.0}; };
    CHECK(ode_residual(3, zero, 0.6) == 0.0);
    CHECK_THROWS_AS(ode_residual(3, zero, 1.5), std::invalid_argument);
}

TEST_CASE("constructed solution satisfies the degenerate-field ODE") {
    for (int p = 2; p <= 6; ++p) {
        auto phi = [p](double x) { return psi_jet(p, x); };
        CHECK(std::abs(ode_residual(p, phi, 0.6)) < 1e-8);
        for (int i = 0; i < 20; ++i) {
            double x = 0.55 + 0.02 * i;
            CHECK(std::abs(ode_residual(p, phi, x)) < 1e-8);
        }
    }
}

TEST_CASE("hypergeometric substitution maps into the ODE") {
    // if f solves x(1-x) f'' + (2/p)(1-2x) f' + (1/p)(1-3/p) f = 0 then
    // psi = x^{1/2p} (1-x)^{1/2p} f solves the degenerate-field ODE
    for (int p : {3, 4, 5}) {
        auto f_jet = [p](double x) {
            // f_2 built from the solution analytic in 1/x
            double al = -1.0 / p, be = 1.0 - 2.0 / p;
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
        };
        // check the hypergeometric equation itself
        for (double x : {0.55, 0.65, 0.75, 0.85, 0.92}) {
            Jet f = f_jet(x);
            double hyp_res = x * (1 - x) * f.d2f + 2.0 / p * (1 - 2 * x) * f.df +
                             (1.0 / p) * (1.0 - 3.0 / p) * f.f;
            CHECK(std::abs(hyp_res) < 1e-8);
        }
        // and the substituted form
        auto phi = [&](double x) {
            double a = 0.5 / p;
            Jet f = f_jet(x);
            double g = std::pow(x, a) * std::pow(1.0 - x, a);
            double lg = a / x - a / (1.0 - x);
            double lg2 = -a / (x * x) - a / ((1.0 - x) * (1.0 - x));
            Jet j;
            j.f = g * f.f;
            j.df = g * (lg * f.f + f.df);
            j.d2f = g * ((lg * lg + lg2) * f.f + 2.0 * lg * f.df + f.d2f);
            return j;
        };
        for (double x : {0.55, 0.65, 0.75, 0.85, 0.92})
            CHECK(std::abs(ode_residual(p, phi, x)) < 1e-8);
    }
}

TEST_CASE("rigidity invariant: two routes agree") {
    CHECK(std::abs(rigidity_invariant(3) - (-2.0)) < 1e-10);
    CHECK(std::abs(rigidity_invariant(2) - (-4.0 / PI)) < 1e-10);
    CHECK(std::abs(rigidity_invariant(4) - (-2.0 * std::sqrt(2.0))) < 1e-8);
    for (int p = 2; p <= 8; ++p) {
        double inv = rigidity_invariant(p);  // throws if the routes disagree
        CHECK(std::abs(inv - rigidity_invariant_closed_form(p)) < 1e-8);
    }
}

TEST_CASE("logarithmic series data at p = 2") {
    FSeries s = rigidity_series(2, 6);
    CHECK(s.leading_exponent == doctest::Approx(0.25));
    REQUIRE(s.log_coeffs.size() >= 3);
    CHECK(s.log_coeffs[0] == 0.0);            // no log term multiplies x^{1/4}
    CHECK(std::abs(s.coeffs[0] + 4.0 / PI) < 1e-12);
    // order-1 log coefficient cancels exactly (-1/4 + 1/4); the first
    // surviving one is 8 * (-1/64) * (-1/pi) = 1/(8 pi)
    CHECK(std::abs(s.log_coeffs[1]) < 1e-15);
    CHECK(std::abs(s.log_coeffs[2] - 1.0 / (8.0 * PI)) < 1e-12);
}

TEST_CASE("left trace matches -2cos(pi/p) and the quantum dimension") {
    CHECK(std::abs(left_trace_check(2) - 0.0) < 1e-10);
    CHECK(std::abs(left_trace_check(3) - (-1.0)) < 1e-10);
    CHECK(std::abs(left_trace_check(6) - (-std::sqrt(3.0))) < 1e-10);
    for (int p = 2; p <= 8; ++p)
        CHECK(std::abs(left_trace_check(p) - (-2.0 * std::cos(PI / p))) < 1e-10);
}
