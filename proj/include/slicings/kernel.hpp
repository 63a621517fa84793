#ifndef SLICINGS_KERNEL_HPP
#define SLICINGS_KERNEL_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slicings/errors.hpp"
#include "slicings/numeric.hpp"
#include "slicings/series.hpp"

namespace slicings {

// Polynomial in x with exact rational coefficients; index is the power of x.
using PolyX = std::vector<Rat>;

namespace px {

inline void trim(PolyX& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline bool is_zero(const PolyX& f) { return f.empty(); }

inline PolyX add(PolyX a, const PolyX& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline PolyX sub(PolyX a, const PolyX& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline PolyX neg(PolyX a) {
  for (Rat& c : a) c = -c;
  return a;
}

inline PolyX mul(const PolyX& a, const PolyX& b) {
  if (a.empty() || b.empty()) return {};
  PolyX c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

// Exact division in the polynomial ring; throws NonDivisible on a remainder.
inline PolyX div_exact(PolyX f, const PolyX& g) {
  if (g.empty()) throw std::invalid_argument("division by zero polynomial");
  trim(f);
  if (f.empty()) return {};
  if (f.size() < g.size()) throw NonDivisible("x-degree too small");
  PolyX q(f.size() - g.size() + 1, Rat(0));
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    Rat c = f[k + g.size() - 1] / g.back();
    q[k] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < g.size(); ++j) f[k + j] -= c * g[j];
  }
  trim(f);
  if (!f.empty()) throw NonDivisible("remainder in x division");
  trim(q);
  return q;
}

}  // namespace px

// Polynomial in v whose coefficients are polynomials in x; index is the
// power of v.
using BiPoly = std::vector<PolyX>;

namespace bp {

inline void trim(BiPoly& f) {
  while (!f.empty() && f.back().empty()) f.pop_back();
}

inline bool is_zero(const BiPoly& f) { return f.empty(); }

inline BiPoly add(BiPoly a, const BiPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] = px::add(a[i], b[i]);
  trim(a);
  return a;
}

inline BiPoly sub(BiPoly a, const BiPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] = px::sub(a[i], b[i]);
  trim(a);
  return a;
}

inline BiPoly neg(BiPoly a) {
  for (PolyX& c : a) c = px::neg(c);
  return a;
}

inline BiPoly mul(const BiPoly& a, const BiPoly& b) {
  if (a.empty() || b.empty()) return {};
  BiPoly c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = px::add(c[i + j], px::mul(a[i], b[j]));
  trim(c);
  return c;
}

// A single term c_x(x) * v^vpow.
inline BiPoly term(PolyX cx, int vpow) {
  px::trim(cx);
  if (cx.empty()) return {};
  BiPoly f(vpow + 1);
  f[vpow] = std::move(cx);
  return f;
}

inline BiPoly one() { return term(PolyX{Rat(1)}, 0); }
inline BiPoly xv() { return term(PolyX{Rat(0), Rat(1)}, 1); }
inline BiPoly one_minus_v() {
  return add(one(), term(PolyX{Rat(-1)}, 1));
}
inline BiPoly one_minus_xv() { return sub(one(), xv()); }

inline BiPoly pow(const BiPoly& f, int e) {
  BiPoly r = one();
  for (int i = 0; i < e; ++i) r = mul(r, f);
  return r;
}

inline PolyX eval_v1(const BiPoly& f) {
  PolyX s;
  for (const PolyX& c : f) s = px::add(s, c);
  return s;
}

// Coefficient of x^0, as a polynomial in v.
inline BiPoly at_x0(const BiPoly& f) {
  BiPoly g(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    if (!f[i].empty() && f[i][0] != 0) g[i] = PolyX{f[i][0]};
  trim(g);
  return g;
}

// Exact division in v; each quotient coefficient requires exact division in
// x, so NonDivisible signals a non-exact quotient at either level.
inline BiPoly div_exact(BiPoly f, const BiPoly& g) {
  if (g.empty()) throw std::invalid_argument("division by zero polynomial");
  trim(f);
  if (f.empty()) return {};
  if (f.size() < g.size()) throw NonDivisible("v-degree too small");
  BiPoly q(f.size() - g.size() + 1);
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    PolyX c = px::div_exact(f[k + g.size() - 1], g.back());
    q[k] = c;
    if (c.empty()) continue;
    for (size_t j = 0; j < g.size(); ++j)
      f[k + j] = px::sub(f[k + j], px::mul(c, g[j]));
  }
  trim(f);
  if (!f.empty()) throw NonDivisible("remainder in v division");
  trim(q);
  return q;
}

// Derivative with respect to v.
inline BiPoly d_dv(const BiPoly& f) {
  if (f.size() <= 1) return {};
  BiPoly g(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) {
    g[i - 1] = f[i];
    for (Rat& c : g[i - 1]) c *= Rat(static_cast<long>(i));
  }
  trim(g);
  return g;
}

// Substitutes a truncated series for v; result is truncated at the order of
// the series.
inline TruncatedSeries subst_v(const BiPoly& f, const TruncatedSeries& lam) {
  const int order = static_cast<int>(lam.size()) - 1;
  TruncatedSeries acc(order + 1, Rat(0));
  TruncatedSeries vp(order + 1, Rat(0));
  vp[0] = 1;
  for (size_t k = 0; k < f.size(); ++k) {
    for (size_t i = 0; i < f[k].size() && i <= static_cast<size_t>(order);
         ++i)
      for (int j = 0; static_cast<int>(i) + j <= order; ++j)
        acc[i + j] += f[k][i] * vp[j];
    vp = mul_truncated(vp, lam, order);
  }
  return acc;
}

}  // namespace bp

// A rational function num / (1 - v)^p, kept reduced: (1 - v) never divides
// the numerator unless the whole function is zero.
struct RationalFnV {
  BiPoly num;
  int p = 0;

  void normalize() {
    bp::trim(num);
    if (num.empty()) {
      p = 0;
      return;
    }
    while (p > 0 && px::is_zero(bp::eval_v1(num))) {
      num = bp::div_exact(num, bp::one_minus_v());
      --p;
    }
  }

  static RationalFnV from(BiPoly n, int denom_pow = 0) {
    RationalFnV r{std::move(n), denom_pow};
    r.normalize();
    return r;
  }

  friend bool operator==(const RationalFnV& a, const RationalFnV& b) {
    return a.p == b.p && a.num == b.num;
  }
};

inline RationalFnV rf_add(const RationalFnV& a, const RationalFnV& b) {
  const int p = std::max(a.p, b.p);
  BiPoly na = bp::mul(a.num, bp::pow(bp::one_minus_v(), p - a.p));
  BiPoly nb = bp::mul(b.num, bp::pow(bp::one_minus_v(), p - b.p));
  return RationalFnV::from(bp::add(na, nb), p);
}

inline RationalFnV rf_sub(const RationalFnV& a, const RationalFnV& b) {
  const int p = std::max(a.p, b.p);
  BiPoly na = bp::mul(a.num, bp::pow(bp::one_minus_v(), p - a.p));
  BiPoly nb = bp::mul(b.num, bp::pow(bp::one_minus_v(), p - b.p));
  return RationalFnV::from(bp::sub(na, nb), p);
}

inline RationalFnV rf_mul(const RationalFnV& a, const RationalFnV& b) {
  return RationalFnV::from(bp::mul(a.num, b.num), a.p + b.p);
}

inline RationalFnV rf_neg(const RationalFnV& a) {
  return RationalFnV{bp::neg(a.num), a.p};
}

inline bool rf_is_zero(const RationalFnV& a) { return a.num.empty(); }

using RMatrix = std::vector<std::vector<RationalFnV>>;

// The m x m matrix of the row-restricted linear system: diagonal 1 - xv with
// an extra xv/(1-v) in the last entry, subdiagonal xv/(1-v), everything
// above the diagonal -xv.
inline RMatrix kernel_matrix(int m) {
  if (m < 1) throw std::invalid_argument("kernel matrix needs m >= 1");
  const RationalFnV diag = RationalFnV::from(bp::one_minus_xv());
  const RationalFnV sub = RationalFnV::from(bp::xv(), 1);
  const RationalFnV above = RationalFnV::from(bp::neg(bp::xv()));
  RMatrix k(m, std::vector<RationalFnV>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (j == i) k[i][j] = diag;
      else if (j == i - 1) k[i][j] = sub;
      else if (j > i) k[i][j] = above;
    }
  k[m - 1][m - 1] = rf_add(diag, sub);
  return k;
}

// The leading principal submatrix variant with a plain last diagonal entry,
// obtained by deleting the last row and column of the (j+1) x (j+1) kernel
// matrix.
inline RMatrix kernel_matrix_truncated(int j) {
  RMatrix k = kernel_matrix(j + 1);
  k.pop_back();
  for (auto& row : k) row.pop_back();
  return k;
}

// Exact determinant of a matrix of rational functions: denominators are
// cleared row by row, then fraction-free (Bareiss) elimination runs over
// bivariate polynomials, where every division is exact.
inline RationalFnV det_rational(const RMatrix& mat) {
  const int n = static_cast<int>(mat.size());
  if (n == 0) return RationalFnV::from(bp::one());
  int cleared = 0;
  std::vector<std::vector<BiPoly>> a(n, std::vector<BiPoly>(n));
  for (int i = 0; i < n; ++i) {
    int pmax = 0;
    for (int j = 0; j < n; ++j) pmax = std::max(pmax, mat[i][j].p);
    cleared += pmax;
    for (int j = 0; j < n; ++j)
      a[i][j] = bp::mul(mat[i][j].num,
                        bp::pow(bp::one_minus_v(), pmax - mat[i][j].p));
  }
  int sign = 1;
  BiPoly prev = bp::one();
  for (int k = 0; k + 1 < n; ++k) {
    if (bp::is_zero(a[k][k])) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (!bp::is_zero(a[i][k])) {
          swap = i;
          break;
        }
      if (swap < 0) return RationalFnV{};
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = bp::div_exact(
            bp::sub(bp::mul(a[k][k], a[i][j]), bp::mul(a[i][k], a[k][j])),
            prev);
    prev = a[k][k];
  }
  BiPoly det = a[n - 1][n - 1];
  if (sign < 0) det = bp::neg(det);
  return RationalFnV::from(std::move(det), cleared);
}

inline RationalFnV kernel_det(int m) { return det_rational(kernel_matrix(m)); }

// Cofactor of the entry in row i (1-based) of the last column; these form
// the last row of the adjugate.
inline RationalFnV kernel_cofactor(int i, int m) {
  RMatrix minor = kernel_matrix(m);
  minor.erase(minor.begin() + (i - 1));
  for (auto& row : minor) row.pop_back();
  RationalFnV c = det_rational(minor);
  if ((i + m) % 2 != 0) c = rf_neg(c);
  return c;
}

namespace detail {

inline RationalFnV rf_pow(const RationalFnV& f, int e) {
  RationalFnV r = RationalFnV::from(bp::one());
  for (int i = 0; i < e; ++i) r = rf_mul(r, f);
  return r;
}

inline bool det_recurrences_hold(const std::vector<RationalFnV>& dets,
                                 int m_max) {
  const RationalFnV xv = RationalFnV::from(bp::xv());
  const RationalFnV one_minus_xv = RationalFnV::from(bp::one_minus_xv());
  const RationalFnV ratio = RationalFnV::from(bp::xv(), 1);  // xv/(1-v)
  for (int m = 3; m <= m_max; ++m) {
    // First-row expansion recurrence.
    RationalFnV rhs = rf_mul(one_minus_xv, dets[m - 1]);
    for (int j = 2; j <= m - 2; ++j) {
      RationalFnV t = rf_mul(xv, rf_mul(rf_pow(ratio, j - 1), dets[m - j]));
      rhs = (j % 2 == 0) ? rf_add(rhs, t) : rf_sub(rhs, t);
    }
    RationalFnV last =
        rf_mul(xv, rf_mul(one_minus_xv, rf_pow(ratio, m - 2)));
    rhs = (m % 2 == 1) ? rf_add(rhs, last) : rf_sub(rhs, last);
    if (!(dets[m] == rhs)) return false;
    // Three-term recurrence (1-v)|K_m| = (1-v-2xv+xv^2)|K_{m-1}| +
    // xv|K_{m-2}|.
    RationalFnV lhs3 =
        rf_mul(RationalFnV::from(bp::one_minus_v()), dets[m]);
    BiPoly mid = bp::add(bp::one_minus_v(),
                         bp::add(bp::term(PolyX{Rat(0), Rat(-2)}, 1),
                                 bp::term(PolyX{Rat(0), Rat(1)}, 2)));
    RationalFnV rhs3 = rf_add(rf_mul(RationalFnV::from(mid), dets[m - 1]),
                              rf_mul(xv, dets[m - 2]));
    if (!(lhs3 == rhs3)) return false;
    // Shape of the reduced determinant: denominator (1-v)^{m-2} and
    // numerator (1-v)^{m-2} + P with P(0,v) = 0 and (1-v) not dividing P.
    if (dets[m].p != m - 2) return false;
    BiPoly pm = bp::sub(dets[m].num, bp::pow(bp::one_minus_v(), m - 2));
    if (bp::is_zero(pm)) return false;
    if (!bp::is_zero(bp::at_x0(pm))) return false;
    if (px::is_zero(bp::eval_v1(pm))) return false;
  }
  return true;
}

}  // namespace detail

inline bool check_det_recurrences(int m_max) {
  if (m_max < 3 || m_max > 8)
    throw std::invalid_argument("m_max must be in 3..8");
  std::vector<RationalFnV> dets(m_max + 1);
  for (int m = 1; m <= m_max; ++m) dets[m] = kernel_det(m);
  return detail::det_recurrences_hold(dets, m_max);
}

// Cofactor closed forms: C_{1,m} and C_{2,m} are signed powers of
// xv/(1-v), and C_{i,m} for i >= 3 carries the truncated determinant.
inline bool check_cofactor_forms(int m_max) {
  const RationalFnV ratio = RationalFnV::from(bp::xv(), 1);
  const RationalFnV one_minus_xv = RationalFnV::from(bp::one_minus_xv());
  for (int m = 2; m <= m_max; ++m)
    for (int i = 1; i <= m; ++i) {
      RationalFnV expect;
      if (i == 1) expect = detail::rf_pow(ratio, m - 1);
      else if (i == 2)
        expect = rf_mul(one_minus_xv, detail::rf_pow(ratio, m - 2));
      else
        expect = rf_mul(detail::rf_pow(ratio, m - i),
                        det_rational(kernel_matrix_truncated(i - 1)));
      if ((m + i) % 2 != 0) expect = rf_neg(expect);
      RationalFnV got = kernel_cofactor(i, m);
      if (rf_is_zero(got) || !(got == expect)) return false;
    }
  return true;
}

// Printed regular-root expansions through x^5, indexed by (m, root number).
inline std::vector<Rat> printed_kernel_root(int m, int root_id) {
  const auto make = [](std::initializer_list<long> cs) {
    std::vector<Rat> out;
    for (long c : cs) out.push_back(Rat(c));
    return out;
  };
  if (m == 3 && root_id == 1) return make({1, 1, 4, 15, 64, 290});
  if (m == 4 && root_id == 1) return make({1, 0, 0, 1, 0, 4});
  if (m == 4 && root_id == 2) return make({1, 1, 5, 19, 91, 440});
  if (m == 5 && root_id == 1) return make({1, 1, 6, 21, 122, 538});
  if (m == 5 && root_id == 2) return make({1, 0, 1, 2, 5, 14});
  if (m == 5 && root_id == 3) return make({1, 0, -1, 2, -9, 46});
  throw std::invalid_argument("unknown kernel root");
}

// Substitutes a truncated root candidate into the reduced determinant
// numerator; true iff the residual vanishes through the given precision.
inline bool verify_kernel_root(int m, int root_id,
                               const std::vector<Rat>& coeffs) {
  if (m < 3 || m > 5) throw std::invalid_argument("m must be 3, 4 or 5");
  if (root_id < 1 || root_id > m - 2)
    throw std::invalid_argument("root_id out of range");
  const BiPoly num = kernel_det(m).num;
  const TruncatedSeries resid = bp::subst_v(num, coeffs);
  return std::all_of(resid.begin(), resid.end(),
                     [](const Rat& c) { return c == 0; });
}

// Extends the m = 3 regular root to the given order by undetermined
// coefficients in N_3(x, v) = 0, seeded with the printed expansion.
inline TruncatedSeries extend_root_m3(int order) {
  const BiPoly num = kernel_det(3).num;
  const BiPoly dnum = bp::d_dv(num);
  const std::vector<Rat> seed = printed_kernel_root(3, 1);
  TruncatedSeries lam(order + 1, Rat(0));
  for (int i = 0; i <= order && i < static_cast<int>(seed.size()); ++i)
    lam[i] = seed[i];
  for (int k = static_cast<int>(seed.size()); k <= order; ++k) {
    const TruncatedSeries resid = bp::subst_v(num, lam);
    const TruncatedSeries deriv = bp::subst_v(dnum, lam);
    if (deriv.empty() || deriv[0] == 0)
      throw RootRefinementFailed("root derivative vanishes at order 0");
    lam[k] = -resid[k] / deriv[0];
  }
  return lam;
}

namespace detail {

// Residuals of the worked m = 3 equations: the last row of the adjugate
// system evaluated at the regular root, and the v = 1 specialization of the
// first system equation.
inline bool m3_equations_hold(const TruncatedSeries& lam,
                              const TruncatedSeries& h1,
                              const TruncatedSeries& h23, int order,
                              int check_order) {
  const auto mul = [&](const TruncatedSeries& a, const TruncatedSeries& b) {
    return mul_truncated(a, b, order);
  };
  const auto shift = [&](const TruncatedSeries& a, int k) {
    TruncatedSeries s(order + 1, Rat(0));
    for (int i = 0; i + k <= order && i < static_cast<int>(a.size()); ++i)
      s[i + k] = a[i];
    return s;
  };
  const auto vanishes = [&](const TruncatedSeries& r) {
    for (int i = 0; i < check_order && i <= order; ++i)
      if (r[i] != 0) return false;
    return true;
  };
  const TruncatedSeries xl = shift(lam, 1);
  const TruncatedSeries lam2 = mul(lam, lam);
  const TruncatedSeries lam3 = mul(lam2, lam);
  // x^2 l^2 - xl(1 - xl) H1 + (1 - l - 2xl + 2xl^2 + 2x^2 l^2 - x^2 l^3) H23
  TruncatedSeries coef_h1(order + 1, Rat(0));
  coef_h1[0] = 1;
  for (int i = 0; i <= order; ++i) coef_h1[i] -= xl[i];
  coef_h1 = mul(xl, coef_h1);
  TruncatedSeries coef_h23(order + 1, Rat(0));
  coef_h23[0] = 1;
  {
    const TruncatedSeries xl2 = shift(lam2, 1);
    const TruncatedSeries x2l2 = shift(lam2, 2);
    const TruncatedSeries x2l3 = shift(lam3, 2);
    for (int i = 0; i <= order; ++i)
      coef_h23[i] += -lam[i] - 2 * xl[i] + 2 * xl2[i] + 2 * x2l2[i] -
                     x2l3[i];
  }
  TruncatedSeries a = shift(lam2, 2);
  const TruncatedSeries t1 = mul(coef_h1, h1);
  const TruncatedSeries t2 = mul(coef_h23, h23);
  for (int i = 0; i <= order; ++i) a[i] += -t1[i] + t2[i];
  if (!vanishes(a)) return false;
  // x - (1 - x) H1 + x H23 = 0
  TruncatedSeries b(order + 1, Rat(0));
  if (order >= 1) b[1] = 1;
  const TruncatedSeries xh23 = shift(h23, 1);
  for (int i = 0; i <= order; ++i) {
    b[i] -= h1[i];
    if (i >= 1) b[i] += h1[i - 1];
    b[i] += xh23[i];
  }
  return vanishes(b);
}

}  // namespace detail

// Consistency of the worked m = 3 kernel system with the series solver: the
// regular root is extended to order N, substituted into the last system
// equation, and the resulting linear relation between H_1(1) and
// H_{2+3}(1) is checked mod x^{N-4} together with the v = 1 relation.
inline bool verify_kernel_solution_consistency(int m, int n_order) {
  if (m != 3) throw std::invalid_argument("only the m = 3 system is worked");
  if (n_order < 5 || n_order > 12)
    throw std::invalid_argument("order must be in 5..12");
  const TruncatedSeries lam = extend_root_m3(n_order);
  const SystemSolution sol =
      solve_system_full(SystemId::row_restricted(3), n_order);
  TruncatedSeries h23(n_order + 1, Rat(0));
  for (int i = 0; i <= n_order; ++i)
    h23[i] = sol.components[1][i] + sol.components[2][i];
  return detail::m3_equations_hold(lam, sol.components[0], h23, n_order,
                                   n_order - 4);
}

// Restatement of the regular-root count: at x = 0 the reduced determinant
// numerator is exactly (1-v)^{m-2}, so exactly m - 2 roots sit at v = 1.
inline bool check_regular_root_count(int m) {
  if (m < 3) throw std::invalid_argument("m must be >= 3");
  const RationalFnV det = kernel_det(m);
  const BiPoly lead = bp::at_x0(det.num);
  BiPoly quot;
  try {
    quot = bp::div_exact(lead, bp::pow(bp::one_minus_v(), m - 2));
  } catch (const NonDivisible&) {
    return false;
  }
  return !px::is_zero(bp::eval_v1(quot));
}

}  // namespace slicings

#endif
