#ifndef SLICINGS_NUMERIC_HPP
#define SLICINGS_NUMERIC_HPP

#include <gmpxx.h>

#include <vector>

namespace slicings {

// Exact arithmetic everywhere: counts are arbitrary-precision integers,
// series coefficients are rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Catalan numbers 1, 1, 2, 5, 14, ... indexed from 0.
inline std::vector<Int> catalan_numbers(int count) {
  std::vector<Int> c(count);
  if (count > 0) c[0] = 1;
  for (int n = 1; n < count; ++n) {
    Int s = 0;
    for (int i = 0; i < n; ++i) s += c[i] * c[n - 1 - i];
    c[n] = s;
  }
  return c;
}

// Large Schroeder numbers 1, 2, 6, 22, 90, ... indexed from 0.
// From x*S^2 + (x-1)*S + 1 = 0, i.e. S = 1 + x*S + x*S^2.
inline std::vector<Int> schroeder_numbers(int count) {
  std::vector<Int> s(count);
  if (count > 0) s[0] = 1;
  for (int n = 1; n < count; ++n) {
    Int t = s[n - 1];
    for (int i = 0; i < n; ++i) t += s[i] * s[n - 1 - i];
    s[n] = t;
  }
  return s;
}

// Baxter numbers 1, 1, 2, 6, 22, 92, ... indexed from 0, from the binomial
// sum b_n = sum_r C(n+1,r) C(n+1,r+1) C(n+1,r+2) / (C(n+1,1) C(n+1,2)).
inline std::vector<Int> baxter_numbers(int count) {
  std::vector<Int> b(count);
  if (count > 0) b[0] = 1;
  for (int n = 1; n < count; ++n) {
    Int s = 0;
    for (int r = 0; r < n; ++r)
      s += binomial(n + 1, r) * binomial(n + 1, r + 1) *
           binomial(n + 1, r + 2);
    b[n] = s / (binomial(n + 1, 1) * binomial(n + 1, 2));
  }
  return b;
}

}  // namespace slicings

#endif
