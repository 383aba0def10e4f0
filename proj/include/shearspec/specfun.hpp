#pragma once

// Special-function kernels for the closed-form bound states: gamma, Airy
// Ai/Bi with derivatives, Kummer's 1F1, and the parabolic cylinder functions
// U(a,z) / D_sigma(z) with derivatives.  Everything is evaluated from
// scratch: power series, Taylor recentering along the defining ODE in the
// stable direction, or asymptotic expansions.
//
// All kernels are pure: deterministic, no caching, safe to call from any
// number of threads.

#include "shearspec/error.hpp"

namespace shearspec {

// A value plus a crude but honest absolute-error bound.
struct FunctionValue {
  double value;
  double abs_error_estimate;
};

// Gamma(x) via a 15-term Lanczos approximation, reflection for x < 1/2.
// Relative error < 1e-12 for |x| <= 50.  Throws DomainError at the poles
// x = 0, -1, -2, ... and OverflowError when the result leaves double range.
double gamma(double x);

// 1/Gamma(x).  Entire: returns exactly 0 at non-positive integers.  Throws
// OverflowError for very negative non-integer x where 1/Gamma overflows.
double rgamma(double x);

// Airy functions.  Declared range |x| <= 40 (RangeError beyond); relative
// error < 1e-10 there, absolute error < 1e-14 where the value underflows.
FunctionValue airy_ai(double x);
FunctionValue airy_ai_prime(double x);
FunctionValue airy_bi(double x);
FunctionValue airy_bi_prime(double x);

// Kummer's confluent hypergeometric 1F1(a; b; z).  Declared range
// |z| <= 60; z < 0 goes through the Kummer transform
// 1F1(a;b;z) = e^z 1F1(b-a;b;-z) to avoid cancellation.  Throws DomainError
// when b is a non-positive integer, ConvergenceError outside the declared
// range or if 500 terms do not converge.
FunctionValue kummer_1f1(double a, double b, double z);

// Parabolic cylinder U(a,z): the solution of y'' = (z^2/4 + a) y that is
// recessive as z -> +infinity.  Declared range |a| <= 32, |z| <= 42
// (RangeError beyond).  For a = -sigma - 1/2 with sigma a non-negative
// integer the function is recessive in both directions and accuracy
// degrades beyond the left turning point z < -2 sqrt(|a|); no caller here
// needs that corner.
FunctionValue pcf_u(double a, double z);
FunctionValue pcf_u_prime(double a, double z);

// Closed forms at the origin:
//   U(a,0)  =  sqrt(pi) 2^(-a/2-1/4) / Gamma(a/2 + 3/4)
//   U'(a,0) = -sqrt(pi) 2^(-a/2+1/4) / Gamma(a/2 + 1/4)
// evaluated through rgamma so Gamma poles give exact zeros.
double pcf_u_at0(double a);
double pcf_u_prime_at0(double a);

// Whittaker's D_sigma(z) = U(-sigma - 1/2, z) and its z-derivative.
FunctionValue pcf_d(double sigma, double z);
FunctionValue pcf_d_prime(double sigma, double z);
double pcf_d_at0(double sigma);
double pcf_d_prime_at0(double sigma);

namespace detail {

// The three Airy representations, exposed so tests can assert they agree in
// the seam regions where the dispatcher switches between them.
struct AiryQuad {
  double ai, aip, bi, bip;
};

// Maclaurin series.  Accurate on [-5.5, 4] for Ai (cancellation grows like
// exp((4/3)x^(3/2)) beyond) and on [-5.5, 11.5] for Bi (no cancellation on
// the positive axis).
AiryQuad airy_maclaurin(double x);

// Asymptotic expansions, exponential for x > 0 and oscillatory for x < 0.
// Accurate for |x| >= ~11 (positive side) and x <= ~-11 (negative side).
AiryQuad airy_asymptotic(double x);

// Taylor recentering along f'' = x f from an anchor on the accurate side:
// from the asymptotic anchor at x = 12 marching down (positive x; the
// contaminating Bi-direction decays downward so only Ai/Ai' are meaningful
// there), from the series anchor at x = -5.5 marching down (negative x,
// all four components).  Bridges (4, 11.5] and [-12, -5.5).
AiryQuad airy_marched(double x);

}  // namespace detail

}  // namespace shearspec
