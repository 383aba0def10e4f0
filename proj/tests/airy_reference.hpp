#pragma once

// Test-side Airy reference, deliberately independent from the library:
// long double Maclaurin sums and bisected zeros.  Usable for |x| <= 8,
// which covers every zero the tests touch.

#include <cmath>
#include <stdexcept>

namespace airyref {

struct Pair {
  long double value, derivative;
};

inline Pair maclaurin(long double x, bool want_bi) {
  if (std::fabs((double)x) > 8.0)
    throw std::domain_error("airyref: |x| > 8");
  // Ai = alpha f - beta g, Bi = sqrt(3) (alpha f + beta g) with
  // f, g the standard 3-term-recurrence series.
  const long double alpha = 0.355028053887817239260063186004183177L;
  const long double beta = 0.258819403792806798405183560189203963L;
  long double f = 1.0L, fp = 0.0L, g = x, gp = 1.0L;
  long double cf = 1.0L, cg = x;
  const long double x3 = x * x * x;
  for (int k = 0; k < 120; ++k) {
    cf *= x3 / ((3.0L * k + 2.0L) * (3.0L * k + 3.0L));
    f += cf;
    fp += cf * (3.0L * k + 3.0L) / x;  // d/dx of x^{3k+3} term
    cg *= x3 / ((3.0L * k + 3.0L) * (3.0L * k + 4.0L));
    g += cg;
    gp += cg * (3.0L * k + 4.0L) / x;
    if (std::fabs((double)cf) < 1e-24L && std::fabs((double)cg) < 1e-24L)
      break;
  }
  if (x == 0.0L) {
    f = 1.0L;
    fp = 0.0L;
    g = 0.0L;
    gp = 1.0L;
  }
  if (want_bi) {
    const long double s3 = 1.73205080756887729352744634150587237L;
    return {s3 * (alpha * f + beta * g), s3 * (alpha * fp + beta * gp)};
  }
  return {alpha * f - beta * g, alpha * fp - beta * gp};
}

inline double ai(double x) { return (double)maclaurin(x, false).value; }
inline double ai_prime(double x) { return (double)maclaurin(x, false).derivative; }
inline double bi(double x) { return (double)maclaurin(x, true).value; }
inline double bi_prime(double x) { return (double)maclaurin(x, true).derivative; }

// j-th negative zero (1-based) of Ai or of Ai', found by scan + bisection.
inline double zero(bool of_prime, int j) {
  int found = 0;
  long double prev_x = 0.0L;
  long double prev_v = of_prime ? maclaurin(0.0L, false).derivative
                                : maclaurin(0.0L, false).value;
  for (long double x = -0.02L; x >= -8.0L; x -= 0.02L) {
    const Pair p = maclaurin(x, false);
    const long double v = of_prime ? p.derivative : p.value;
    if (prev_v == 0.0L) return (double)prev_x;
    if (v * prev_v < 0.0L) {
      long double lo = x, hi = prev_x;
      long double flo = v;
      for (int it = 0; it < 200; ++it) {
        const long double mid = 0.5L * (lo + hi);
        const Pair q = maclaurin(mid, false);
        const long double fm = of_prime ? q.derivative : q.value;
        if (fm == 0.0L) {
          lo = hi = mid;
          break;
        }
        if (fm * flo > 0.0L) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
        if (hi - lo < 1e-19L) break;
      }
      if (++found == j) return (double)(0.5L * (lo + hi));
    }
    prev_x = x;
    prev_v = v;
  }
  throw std::domain_error("airyref: zero index out of the |x| <= 8 window");
}

}  // namespace airyref
