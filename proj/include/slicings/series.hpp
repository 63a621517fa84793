#ifndef SLICINGS_SERIES_HPP
#define SLICINGS_SERIES_HPP

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "slicings/errors.hpp"
#include "slicings/numeric.hpp"

namespace slicings {

// Truncated power series in x with exact rational coefficients; index is the
// power of x.
using TruncatedSeries = std::vector<Rat>;

inline TruncatedSeries mul_truncated(const TruncatedSeries& a,
                                     const TruncatedSeries& b, int order) {
  TruncatedSeries c(order + 1, Rat(0));
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      c[i + j] += a[i] * b[j];
  return c;
}

// Polynomial in v; index is the power of v.
using VPoly = std::vector<Rat>;

namespace vp {

inline void trim(VPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline VPoly add(VPoly a, const VPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline VPoly sub(VPoly a, const VPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline VPoly scale(VPoly a, const Rat& c) {
  for (Rat& x : a) x *= c;
  trim(a);
  return a;
}

// Multiplication by v^k.
inline VPoly shift(const VPoly& a, int k) {
  if (a.empty()) return a;
  VPoly b(a.size() + k, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) b[i + k] = a[i];
  return b;
}

inline Rat eval1(const VPoly& f) {
  Rat s = 0;
  for (const Rat& c : f) s += c;
  return s;
}

// Exact division by (1 - v); throws NonDivisible when f(1) != 0.
inline VPoly div_one_minus_v(const VPoly& f) {
  if (f.empty()) return {};
  // (1 - v) q = f gives q_i = f_i + q_{i-1}; the last carry is f(1).
  VPoly q(f.size(), Rat(0));
  Rat carry = 0;
  for (size_t i = 0; i < f.size(); ++i) {
    carry += f[i];
    q[i] = carry;
  }
  if (q.back() != 0) throw NonDivisible("(1 - v) does not divide");
  q.pop_back();
  trim(q);
  return q;
}

}  // namespace vp

// The divided difference (f(1) - f(v)) / (1 - v), always an exact quotient.
inline VPoly delta_v(const VPoly& f) {
  VPoly num = vp::sub(VPoly{vp::eval1(f)}, f);
  return vp::div_one_minus_v(num);
}

// Polynomial in u whose coefficients are polynomials in v.
using UVPoly = std::vector<VPoly>;

namespace uv {

inline void trim(UVPoly& f) {
  while (!f.empty() && f.back().empty()) f.pop_back();
}

inline UVPoly add(UVPoly a, const UVPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] = vp::add(a[i], b[i]);
  trim(a);
  return a;
}

inline UVPoly shift_u(const UVPoly& a, int k) {
  if (a.empty()) return a;
  UVPoly b(a.size() + k);
  for (size_t i = 0; i < a.size(); ++i) b[i + k] = a[i];
  return b;
}

inline UVPoly shift_v(UVPoly a, int k) {
  for (VPoly& f : a) f = vp::shift(f, k);
  return a;
}

inline VPoly eval_u1(const UVPoly& f) {
  VPoly s;
  for (const VPoly& c : f) s = vp::add(s, c);
  return s;
}

inline UVPoly from_v(const VPoly& f, int udeg) {
  UVPoly g(udeg + 1);
  g[udeg] = f;
  uv::trim(g);
  return g;
}

// Exact division by (1 - u); throws NonDivisible when f(1, v) != 0.
inline UVPoly div_one_minus_u(const UVPoly& f) {
  if (f.empty()) return {};
  UVPoly q(f.size());
  VPoly carry;
  for (size_t i = 0; i < f.size(); ++i) {
    carry = vp::add(carry, f[i]);
    q[i] = carry;
  }
  if (!q.back().empty()) throw NonDivisible("(1 - u) does not divide");
  q.pop_back();
  trim(q);
  return q;
}

inline UVPoly neg(UVPoly a) {
  for (VPoly& f : a) f = vp::scale(f, Rat(-1));
  return a;
}

}  // namespace uv

enum class SystemFamily { ZeroSkinny, Skinny, RowRestricted };

// One of the functional-equation systems: the 0-skinny equation, the skinny
// system for m >= 2, or the row-restricted system for m >= 2 (smaller m are
// covered by classical closed forms).
struct SystemId {
  SystemFamily family = SystemFamily::ZeroSkinny;
  int m = 0;

  static SystemId zero_skinny() { return {SystemFamily::ZeroSkinny, 0}; }
  static SystemId skinny(int m) {
    if (m < 2) throw std::invalid_argument("skinny system needs m >= 2");
    return {SystemFamily::Skinny, m};
  }
  static SystemId row_restricted(int m) {
    if (m < 2)
      throw std::invalid_argument("row-restricted system needs m >= 2");
    return {SystemFamily::RowRestricted, m};
  }
};

// Per-order solution data: the total generating function and the component
// series (H_i(1) or F_i(1,1)); index 0 of `components` is H_1 or F_1.
struct SystemSolution {
  TruncatedSeries total;
  std::vector<TruncatedSeries> components;
};

namespace detail {

inline SystemSolution solve_row_restricted(int m, int order) {
  SystemSolution sol;
  sol.total.assign(order + 1, Rat(0));
  sol.components.assign(m, TruncatedSeries(order + 1, Rat(0)));
  std::vector<VPoly> prev(m), cur(m);
  for (int n = 1; n <= order; ++n) {
    for (int i = 0; i < m; ++i) {
      VPoly rhs;
      if (i == 0) {
        if (n == 1) rhs = VPoly{Rat(1)};
        for (int j = 0; j < m; ++j) rhs = vp::add(rhs, prev[j]);
      } else if (i < m - 1) {
        rhs = delta_v(prev[i - 1]);
        for (int j = i; j < m; ++j) rhs = vp::add(rhs, prev[j]);
      } else {
        rhs = delta_v(vp::add(prev[m - 1], prev[m - 2]));
        rhs = vp::add(rhs, prev[m - 1]);
      }
      cur[i] = vp::shift(rhs, 1);  // the common factor xv
    }
    for (int i = 0; i < m; ++i) {
      sol.components[i][n] = vp::eval1(cur[i]);
      sol.total[n] += sol.components[i][n];
    }
    prev = cur;
  }
  return sol;
}

inline SystemSolution solve_zero_skinny(int order) {
  SystemSolution sol;
  sol.total.assign(order + 1, Rat(0));
  sol.components.assign(1, TruncatedSeries(order + 1, Rat(0)));
  UVPoly prev;
  for (int n = 1; n <= order; ++n) {
    UVPoly rhs;
    if (n == 1) rhs = uv::from_v(VPoly{Rat(0), Rat(1)}, 1);  // uv
    // xuv/(1-u) [F(1,v) - F(u,v)]
    UVPoly diff = uv::add(uv::from_v(uv::eval_u1(prev), 0), uv::neg(prev));
    rhs = uv::add(rhs, uv::shift_v(uv::shift_u(uv::div_one_minus_u(diff), 1), 1));
    // xu/(1-v) [v F(1,1) - F(1,v)]
    VPoly f1v = uv::eval_u1(prev);
    VPoly num = vp::sub(vp::shift(VPoly{vp::eval1(f1v)}, 1), f1v);
    rhs = uv::add(rhs, uv::from_v(vp::div_one_minus_v(num), 1));
    // xu F(u,v)
    rhs = uv::add(rhs, uv::shift_u(prev, 1));
    prev = rhs;
    sol.components[0][n] = vp::eval1(uv::eval_u1(prev));
    sol.total[n] = sol.components[0][n];
  }
  return sol;
}

inline SystemSolution solve_skinny(int m, int order) {
  SystemSolution sol;
  sol.total.assign(order + 1, Rat(0));
  sol.components.assign(m, TruncatedSeries(order + 1, Rat(0)));
  std::vector<UVPoly> prev(m), cur(m);
  for (int n = 1; n <= order; ++n) {
    std::vector<VPoly> at_u1(m);
    for (int i = 0; i < m; ++i) at_u1[i] = uv::eval_u1(prev[i]);
    // F_1 = xuv + xuv [F_1(1,v) + ... + F_m(1,v)]
    {
      VPoly rhs;
      if (n == 1) rhs = VPoly{Rat(1)};
      for (int j = 0; j < m; ++j) rhs = vp::add(rhs, at_u1[j]);
      cur[0] = uv::from_v(vp::shift(rhs, 1), 1);
    }
    // F_i = xu^i v / (1-v) [F_{i-1}(1,1) - F_{i-1}(1,v)]
    //       + xu^i v [F_i(1,v) + ... + F_m(1,v)],   1 < i < m
    for (int i = 1; i < m - 1; ++i) {
      VPoly rhs = delta_v(at_u1[i - 1]);
      for (int j = i; j < m; ++j) rhs = vp::add(rhs, at_u1[j]);
      cur[i] = uv::from_v(vp::shift(rhs, 1), i + 1);
    }
    // F_m, with all four terms of (Sk_m).
    {
      UVPoly rhs = uv::from_v(vp::shift(delta_v(at_u1[m - 2]), 1), m);
      VPoly num = vp::sub(vp::shift(VPoly{vp::eval1(at_u1[m - 1])}, 1),
                          at_u1[m - 1]);
      rhs = uv::add(rhs, uv::from_v(vp::div_one_minus_v(num), m + 1));
      rhs = uv::add(rhs, uv::shift_u(prev[m - 1], 1));
      UVPoly diff = uv::add(uv::from_v(at_u1[m - 1], m - 1),
                            uv::neg(prev[m - 1]));
      rhs = uv::add(rhs,
                    uv::shift_v(uv::shift_u(uv::div_one_minus_u(diff), 1), 1));
      cur[m - 1] = rhs;
    }
    for (int i = 0; i < m; ++i) {
      sol.components[i][n] = vp::eval1(uv::eval_u1(cur[i]));
      sol.total[n] += sol.components[i][n];
    }
    prev = cur;
  }
  return sol;
}

}  // namespace detail

// Solves the system order by order; every right-hand side carries a factor
// x, so coefficient n only needs coefficients below n.
inline SystemSolution solve_system_full(const SystemId& sys, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  switch (sys.family) {
    case SystemFamily::ZeroSkinny: return detail::solve_zero_skinny(order);
    case SystemFamily::Skinny: return detail::solve_skinny(sys.m, order);
    case SystemFamily::RowRestricted:
      return detail::solve_row_restricted(sys.m, order);
  }
  throw std::invalid_argument("unknown system");
}

inline TruncatedSeries solve_system(const SystemId& sys, int order) {
  return solve_system_full(sys, order).total;
}

// A term c * x^i * y^j of a bivariate integer polynomial.
struct PolyTerm {
  Int c;
  int i = 0;
  int j = 0;
};

// Parses the tiny polynomial grammar: terms `c*x^i*y^j` joined by `+` or
// `-`, where each factor is optional (`x` means `x^1`, a bare integer is a
// constant term).  Whitespace is ignored.
inline std::vector<PolyTerm> parse_poly(const std::string& text) {
  std::vector<PolyTerm> out;
  size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    long sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!out.empty()) {
      throw std::invalid_argument("expected + or - between terms");
    }
    PolyTerm term{Int(1), 0, 0};
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        size_t end = pos;
        while (end < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[end])))
          ++end;
        term.c *= Int(text.substr(pos, end - pos));
        pos = end;
        have_factor = true;
      } else if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'y')) {
        const char var = text[pos];
        ++pos;
        int exp = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          size_t end = pos;
          while (end < text.size() &&
                 std::isdigit(static_cast<unsigned char>(text[end])))
            ++end;
          if (end == pos) throw std::invalid_argument("missing exponent");
          exp = std::stoi(text.substr(pos, end - pos));
          pos = end;
        }
        (var == 'x' ? term.i : term.j) += exp;
        have_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) throw std::invalid_argument("empty term");
    term.c *= sign;
    out.push_back(std::move(term));
    skip_ws();
  }
  if (out.empty()) throw std::invalid_argument("empty polynomial");
  return out;
}

// True iff P(x, F(x)) vanishes through the truncation order of F.
inline bool check_algebraic(const std::vector<PolyTerm>& poly,
                            const TruncatedSeries& f) {
  const int order = static_cast<int>(f.size()) - 1;
  int maxj = 0;
  for (const PolyTerm& t : poly) maxj = std::max(maxj, t.j);
  std::vector<TruncatedSeries> pw(maxj + 1,
                                  TruncatedSeries(order + 1, Rat(0)));
  pw[0][0] = 1;
  for (int j = 1; j <= maxj; ++j) pw[j] = mul_truncated(pw[j - 1], f, order);
  TruncatedSeries acc(order + 1, Rat(0));
  for (const PolyTerm& t : poly)
    for (int n = t.i; n <= order; ++n) acc[n] += Rat(t.c) * pw[t.j][n - t.i];
  return std::all_of(acc.begin(), acc.end(),
                     [](const Rat& c) { return c == 0; });
}

}  // namespace slicings

#endif
