#ifndef SLICINGS_FLOORPLAN_HPP
#define SLICINGS_FLOORPLAN_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "slicings/errors.hpp"
#include "slicings/rules.hpp"

namespace slicings {

struct Rect {
  int x1 = 0, y1 = 0, x2 = 1, y2 = 1;
  friend auto operator<=>(const Rect&, const Rect&) = default;
};

// A packed floorplan: a rectangle of height d and width l partitioned into
// d + l - 1 blocks avoiding the corner pattern (a bottom-right corner weakly
// below and left of a top-left corner).  Blocks are kept sorted by (y1, x1).
struct PackedFloorplan {
  int d = 1;
  int l = 1;
  std::vector<Rect> blocks{Rect{}};

  static PackedFloorplan unit() { return PackedFloorplan{}; }

  int size() const { return d + l - 1; }

  void canonicalize() {
    std::sort(blocks.begin(), blocks.end(), [](const Rect& a, const Rect& b) {
      return std::pair(a.y1, a.x1) < std::pair(b.y1, b.x1);
    });
  }

  friend auto operator<=>(const PackedFloorplan&,
                          const PackedFloorplan&) = default;
};

// Checks that the blocks tile the d x l rectangle; throws NotAPartition.
inline void validate_partition(const PackedFloorplan& f) {
  if (f.d < 1 || f.l < 1) throw NotAPartition("empty rectangle");
  std::vector<int> owner(f.d * f.l, -1);
  for (size_t i = 0; i < f.blocks.size(); ++i) {
    const Rect& b = f.blocks[i];
    if (b.x1 < 0 || b.y1 < 0 || b.x2 > f.l || b.y2 > f.d || b.x1 >= b.x2 ||
        b.y1 >= b.y2)
      throw NotAPartition("block outside the rectangle or degenerate");
    for (int x = b.x1; x < b.x2; ++x)
      for (int y = b.y1; y < b.y2; ++y) {
        int& o = owner[y * f.l + x];
        if (o != -1) throw NotAPartition("overlapping blocks");
        o = static_cast<int>(i);
      }
  }
  for (int c : owner)
    if (c == -1) throw NotAPartition("uncovered cell");
}

// Packedness: no pair of blocks whose bottom-right corner is weakly left of
// and weakly above another block's top-left corner.  Throws NotAPartition
// when the blocks do not partition the rectangle at all.
inline bool is_packed(const PackedFloorplan& f) {
  validate_partition(f);
  if (static_cast<int>(f.blocks.size()) != f.size()) return false;
  for (const Rect& b1 : f.blocks)
    for (const Rect& b2 : f.blocks) {
      if (&b1 == &b2) continue;
      if (b1.x2 <= b2.x1 && b1.y1 >= b2.y2) return false;
    }
  return true;
}

// A maximal straight run of block boundary edges: vertical segments live on
// the line x = fixed and span y in [lo, hi], horizontal ones on y = fixed
// spanning x in [lo, hi].
struct Segment {
  bool vertical = false;
  int fixed = 0;
  int lo = 0;
  int hi = 0;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

inline bool is_internal(const Segment& s, const PackedFloorplan& f) {
  return s.fixed > 0 && s.fixed < (s.vertical ? f.l : f.d);
}

// All maximal segments of the floorplan, including the four border sides.
inline std::vector<Segment> segments(const PackedFloorplan& f) {
  validate_partition(f);
  std::vector<int> owner(f.d * f.l, -1);
  for (size_t i = 0; i < f.blocks.size(); ++i)
    for (int x = f.blocks[i].x1; x < f.blocks[i].x2; ++x)
      for (int y = f.blocks[i].y1; y < f.blocks[i].y2; ++y)
        owner[y * f.l + x] = static_cast<int>(i);
  const auto cell = [&](int x, int y) { return owner[y * f.l + x]; };
  std::vector<Segment> out;
  for (int x = 0; x <= f.l; ++x) {
    int run = -1;
    for (int y = 0; y <= f.d; ++y) {
      const bool edge =
          y < f.d &&
          (x == 0 || x == f.l || cell(x - 1, y) != cell(x, y));
      if (edge && run < 0) run = y;
      if (!edge && run >= 0) {
        out.push_back(Segment{true, x, run, y});
        run = -1;
      }
    }
  }
  for (int y = 0; y <= f.d; ++y) {
    int run = -1;
    for (int x = 0; x <= f.l; ++x) {
      const bool edge =
          x < f.l &&
          (y == 0 || y == f.d || cell(x, y - 1) != cell(x, y));
      if (edge && run < 0) run = x;
      if (!edge && run >= 0) {
        out.push_back(Segment{false, y, run, x});
        run = -1;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Heights of the internal horizontal segments that meet the right border,
// ascending.
inline std::vector<int> right_meeting(const PackedFloorplan& f) {
  std::vector<int> ys;
  for (const Segment& s : segments(f))
    if (!s.vertical && is_internal(s, f) && s.hi == f.l)
      ys.push_back(s.fixed);
  std::sort(ys.begin(), ys.end());
  return ys;
}

// Abscissas of the internal vertical segments that meet the top border,
// ascending.
inline std::vector<int> top_meeting(const PackedFloorplan& f) {
  std::vector<int> xs;
  for (const Segment& s : segments(f))
    if (s.vertical && is_internal(s, f) && s.hi == f.d)
      xs.push_back(s.fixed);
  std::sort(xs.begin(), xs.end());
  return xs;
}

inline PackedFloorplan insert_right(const PackedFloorplan& f, int y_s) {
  PackedFloorplan g = f;
  g.l = f.l + 1;
  for (Rect& b : g.blocks)
    if (b.x2 == f.l && b.y2 <= y_s) b.x2 = f.l + 1;
  g.blocks.push_back(Rect{f.l, y_s, f.l + 1, f.d});
  g.canonicalize();
  return g;
}

inline PackedFloorplan insert_top(const PackedFloorplan& f, int x_s) {
  PackedFloorplan g = f;
  g.d = f.d + 1;
  for (Rect& b : g.blocks)
    if (b.y2 == f.d && b.x2 <= x_s) b.y2 = f.d + 1;
  g.blocks.push_back(Rect{x_s, f.d, f.l, f.d + 1});
  g.canonicalize();
  return g;
}

}  // namespace detail

// Generating-tree label of a packed floorplan: one more than the number of
// internal segments meeting the right (resp. top) border.
inline Label label_pfp(const PackedFloorplan& f) {
  return Label::binary(1 + static_cast<int>(detail::right_meeting(f).size()),
                       1 + static_cast<int>(detail::top_meeting(f).size()));
}

// Children in production order: blocks added right of the north-east corner
// with bottom side at the border or at each right-meeting segment, bottom
// first, then blocks added on top with left side at the border or at each
// top-meeting segment, leftmost first.
inline std::vector<PackedFloorplan> children_pfp(const PackedFloorplan& f) {
  std::vector<PackedFloorplan> out;
  out.push_back(detail::insert_right(f, 0));
  for (int y : detail::right_meeting(f))
    out.push_back(detail::insert_right(f, y));
  out.push_back(detail::insert_top(f, 0));
  for (int x : detail::top_meeting(f))
    out.push_back(detail::insert_top(f, x));
  return out;
}

// Packed floorplans of size n in production order.
inline std::vector<PackedFloorplan> pfp_level(int n) {
  std::vector<PackedFloorplan> cur{PackedFloorplan::unit()};
  for (int sz = 1; sz < n; ++sz) {
    std::vector<PackedFloorplan> next;
    for (const PackedFloorplan& f : cur)
      for (PackedFloorplan& c : children_pfp(f)) next.push_back(std::move(c));
    cur = std::move(next);
  }
  return cur;
}

// Forbidden chain of four internal segments for Schroeder floorplans: a
// vertical ending upward into a horizontal, whose right end lies on a
// vertical, whose bottom end lies on another horizontal.
inline bool has_schroeder_forbidden_config(const PackedFloorplan& f) {
  std::vector<Segment> vs, hs;
  for (const Segment& s : segments(f)) {
    if (!is_internal(s, f)) continue;
    (s.vertical ? vs : hs).push_back(s);
  }
  for (const Segment& h1 : hs)
    for (const Segment& v1 : vs) {
      if (v1.hi != h1.fixed || v1.fixed <= h1.lo || v1.fixed >= h1.hi)
        continue;
      for (const Segment& v2 : vs) {
        if (v2.fixed != h1.hi || v2.lo >= h1.fixed || v2.hi <= h1.fixed)
          continue;
        for (const Segment& h2 : hs)
          if (h2.fixed == v2.lo && h2.lo < v2.fixed && h2.hi > v2.fixed)
            return true;
      }
    }
  return false;
}

inline bool is_schroeder_pfp(const PackedFloorplan& f) {
  return !has_schroeder_forbidden_config(f);
}

// Catalan floorplans forbid any internal vertical segment ending upward into
// the interior of an internal horizontal segment.
inline bool is_catalan_pfp(const PackedFloorplan& f) {
  std::vector<Segment> vs, hs;
  for (const Segment& s : segments(f)) {
    if (!is_internal(s, f)) continue;
    (s.vertical ? vs : hs).push_back(s);
  }
  for (const Segment& h : hs)
    for (const Segment& v : vs)
      if (v.hi == h.fixed && v.fixed > h.lo && v.fixed < h.hi) return false;
  return true;
}

// Height of p_F: the topmost internal segment meeting the right border with
// a vertical internal segment hanging below an interior point of it.
inline std::optional<int> p_f_height(const PackedFloorplan& f) {
  std::vector<Segment> vs;
  for (const Segment& s : segments(f))
    if (s.vertical && is_internal(s, f)) vs.push_back(s);
  std::optional<int> best;
  for (const Segment& s : segments(f)) {
    if (s.vertical || !is_internal(s, f) || s.hi != f.l) continue;
    for (const Segment& v : vs)
      if (v.hi == s.fixed && v.fixed > s.lo && v.fixed < s.hi) {
        if (!best || s.fixed > *best) best = s.fixed;
        break;
      }
  }
  return best;
}

// Label of a Schroeder floorplan: only right-meeting segments at or above
// p_F count towards h.
inline Label label_schroeder_pfp(const PackedFloorplan& f) {
  if (!is_schroeder_pfp(f)) throw NotSchroeder();
  const auto ys = detail::right_meeting(f);
  const auto pf = p_f_height(f);
  int h = 1;
  for (int y : ys)
    if (!pf || y >= *pf) ++h;
  return Label::binary(h, 1 + static_cast<int>(detail::top_meeting(f).size()));
}

// Children of a Schroeder floorplan in production order: right insertions
// with bottom side at the border or at a right-meeting segment at or above
// p_F, bottom first, then all top insertions, leftmost first.
inline std::vector<PackedFloorplan> children_schroeder_pfp(
    const PackedFloorplan& f) {
  if (!is_schroeder_pfp(f)) throw NotSchroeder();
  const auto pf = p_f_height(f);
  std::vector<PackedFloorplan> out;
  out.push_back(detail::insert_right(f, 0));
  for (int y : detail::right_meeting(f))
    if (!pf || y >= *pf) out.push_back(detail::insert_right(f, y));
  out.push_back(detail::insert_top(f, 0));
  for (int x : detail::top_meeting(f))
    out.push_back(detail::insert_top(f, x));
  return out;
}

// Schroeder floorplans of size n, generated by their own growth.
inline std::vector<PackedFloorplan> schroeder_pfp_level(int n) {
  std::vector<PackedFloorplan> cur{PackedFloorplan::unit()};
  for (int sz = 1; sz < n; ++sz) {
    std::vector<PackedFloorplan> next;
    for (const PackedFloorplan& f : cur)
      for (PackedFloorplan& c : children_schroeder_pfp(f))
        next.push_back(std::move(c));
    cur = std::move(next);
  }
  return cur;
}

}  // namespace slicings

#endif
