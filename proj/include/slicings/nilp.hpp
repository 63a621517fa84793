#ifndef SLICINGS_NILP_HPP
#define SLICINGS_NILP_HPP

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slicings/errors.hpp"
#include "slicings/polyomino.hpp"

namespace slicings {

// A triple of non-intersecting lattice paths over steps N and E, each of
// n - 1 steps, starting at (0,2), (1,1) and (2,0) respectively.
struct NilpTriple {
  std::string u;
  std::string m;
  std::string d;
  int n = 1;

  friend auto operator<=>(const NilpTriple&, const NilpTriple&) = default;
};

namespace detail {

inline bool is_path_word(const std::string& w) {
  return std::all_of(w.begin(), w.end(),
                     [](char c) { return c == 'N' || c == 'E'; });
}

inline std::vector<std::pair<int, int>> path_points(const std::string& w,
                                                    int x0, int y0) {
  std::vector<std::pair<int, int>> pts{{x0, y0}};
  for (char c : w) {
    auto [x, y] = pts.back();
    pts.push_back(c == 'N' ? std::make_pair(x, y + 1)
                           : std::make_pair(x + 1, y));
  }
  return pts;
}

}  // namespace detail

inline bool is_valid_triple(const NilpTriple& t) {
  const int steps = t.n - 1;
  if (t.n < 1) return false;
  if (static_cast<int>(t.u.size()) != steps ||
      static_cast<int>(t.m.size()) != steps ||
      static_cast<int>(t.d.size()) != steps)
    return false;
  if (!detail::is_path_word(t.u) || !detail::is_path_word(t.m) ||
      !detail::is_path_word(t.d))
    return false;
  const auto east = [](const std::string& w) {
    return std::count(w.begin(), w.end(), 'E');
  };
  if (east(t.u) != east(t.m) || east(t.m) != east(t.d)) return false;
  auto pu = detail::path_points(t.u, 0, 2);
  auto pm = detail::path_points(t.m, 1, 1);
  auto pd = detail::path_points(t.d, 2, 0);
  std::set<std::pair<int, int>> seen;
  for (const auto& pts : {pu, pm, pd})
    for (const auto& p : pts)
      if (!seen.insert(p).second) return false;
  return true;
}

inline void require_valid(const NilpTriple& t) {
  if (!is_valid_triple(t)) throw InvalidTriple("validation failed");
}

// Border words of the shape of a slicing.  The upper border runs from the
// lower-left to the upper-right corner above the shape, the lower border
// below it.
namespace detail {

inline std::string upper_border(const std::vector<ColumnSpan>& cols) {
  std::string w;
  int y = 0;
  for (const ColumnSpan& c : cols) {
    w.append(c.top - y, 'N');
    y = c.top;
    w.push_back('E');
  }
  return w;
}

inline std::string lower_border(const std::vector<ColumnSpan>& cols) {
  std::string w;
  int y = 0;
  for (const ColumnSpan& c : cols) {
    w.append(c.bottom - y, 'N');
    y = c.bottom;
    w.push_back('E');
  }
  w.append(cols.back().top - y, 'N');
  return w;
}

}  // namespace detail

// Image of a slicing under the bijection with path triples: u and d are the
// border words without their forced first and last steps, and m traces the
// corners of the blocks.
inline NilpTriple slicing_to_nilp(const BaxterSlicing& s) {
  const auto cols = s.shape().columns();
  NilpTriple t;
  t.n = s.size();
  std::string up = detail::upper_border(cols);
  std::string lo = detail::lower_border(cols);
  t.u = up.substr(1, up.size() - 2);
  t.d = lo.substr(1, lo.size() - 2);
  // Middle path: from (1,1), step N when a horizontal block starts at the
  // current point's column and sits just below the current height, step E
  // when a vertical block ends at the current point's row.
  const auto& blocks = s.blocks_build_order();
  int x = 1, y = 1;
  for (int i = 0; i < t.n - 1; ++i) {
    bool stepped = false;
    for (const Block& b : blocks) {
      if (b.o == Block::H && b.x2 == x && b.y1 == y) {
        t.m.push_back('N');
        ++y;
        stepped = true;
        break;
      }
      if (b.o == Block::V && b.y2 == y && b.x1 == x) {
        t.m.push_back('E');
        ++x;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw MalformedSlicing("middle path walk stuck");
  }
  return t;
}

// Inverse bijection.  Throws InvalidTriple when the triple is not valid or
// does not describe a slicing.
inline BaxterSlicing nilp_to_slicing(const NilpTriple& t) {
  require_valid(t);
  const std::string up = "N" + t.u + "E";
  const std::string lo = "E" + t.d;
  // Recover the columns from the two borders.
  std::vector<int> tops, bottoms;
  {
    int y = 0;
    for (char c : up) {
      if (c == 'N') ++y;
      else tops.push_back(y);
    }
  }
  {
    int y = 0;
    for (char c : lo) {
      if (c == 'N') ++y;
      else bottoms.push_back(y);
    }
  }
  if (tops.size() != bottoms.size())
    throw InvalidTriple("border widths disagree");
  std::vector<ColumnSpan> cols;
  for (size_t i = 0; i < tops.size(); ++i)
    cols.push_back(ColumnSpan{bottoms[i], tops[i]});
  std::vector<Block> blocks{Block{Block::H, 0, 0, 1, 1}};
  try {
    ParallelogramPolyomino shape(cols);
    // Each step of the middle path spawns one block reaching the border.
    int x = 1, y = 1;
    for (char c : t.m) {
      if (c == 'E') {
        blocks.push_back(Block{Block::V, x, cols[x].bottom, x + 1, y});
        ++x;
      } else {
        int lo_x = 0;
        while (lo_x < x && cols[lo_x].top <= y) ++lo_x;
        blocks.push_back(Block{Block::H, lo_x, y, x, y + 1});
        ++y;
      }
    }
    return BaxterSlicing::from_blocks(blocks);
  } catch (const MalformedSlicing& e) {
    throw InvalidTriple(e.what());
  }
}

// Step statistics of a triple used by the Schroeder condition: h maps the
// index of an N step (within the N steps of u or m) to the number of E steps
// before it, k_d maps the index of an E step of d to the maximal E run
// ending there.
struct StepStats {
  std::vector<int> h_u;
  std::vector<int> h_m;
  std::vector<int> k_d;
};

inline StepStats step_stats(const NilpTriple& t) {
  require_valid(t);
  StepStats st;
  int eu = 0, em = 0, run = 0;
  for (char c : t.u) {
    if (c == 'N') st.h_u.push_back(eu);
    else ++eu;
  }
  for (char c : t.m) {
    if (c == 'N') st.h_m.push_back(em);
    else ++em;
  }
  for (char c : t.d) {
    if (c == 'E') st.k_d.push_back(++run);
    else run = 0;
  }
  return st;
}

// Schroeder condition on a triple.  For the i-th N step N_u of u, let N_m be
// the i-th N step of m, E_m the last E step of m before N_m (the condition
// is void when there is none) and E_d the E step of d matched with E_m, i.e.
// with the same E index.  Writing h for the number of E steps before a step
// and k_d(E_d) for the maximal E run of d ending at E_d, the triple is
// Schroeder when h_m(N_m) - h_u(N_u) <= k_d(E_d) for every N_u.
inline bool is_schroeder_triple(const NilpTriple& t) {
  const StepStats st = step_stats(t);
  for (size_t i = 0; i < st.h_u.size(); ++i) {
    const int h_m = st.h_m[i];
    if (h_m == 0) continue;  // no E step of m before N_m
    // E_m is the h_m-th E step of m, so E_d is the h_m-th E step of d.
    if (h_m - st.h_u[i] > st.k_d[h_m - 1]) return false;
  }
  return true;
}

// All valid triples with paths of n - 1 steps, in lexicographic order of
// (u, m, d).
inline std::vector<NilpTriple> enumerate_triples(int n) {
  const int steps = n - 1;
  std::vector<std::string> words{""};
  for (int i = 0; i < steps; ++i) {
    std::vector<std::string> next;
    for (const std::string& w : words) {
      next.push_back(w + "E");
      next.push_back(w + "N");
    }
    words = std::move(next);
  }
  std::sort(words.begin(), words.end());
  std::vector<NilpTriple> out;
  for (const std::string& u : words)
    for (const std::string& m : words)
      for (const std::string& d : words) {
        NilpTriple t{u, m, d, n};
        if (is_valid_triple(t)) out.push_back(std::move(t));
      }
  return out;
}

}  // namespace slicings

#endif
