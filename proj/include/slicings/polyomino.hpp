#ifndef SLICINGS_POLYOMINO_HPP
#define SLICINGS_POLYOMINO_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slicings/errors.hpp"
#include "slicings/numeric.hpp"
#include "slicings/rules.hpp"

namespace slicings {

// Column of a parallelogram polyomino: cells with y in [bottom, top).
struct ColumnSpan {
  int bottom = 0;
  int top = 1;
  friend auto operator<=>(const ColumnSpan&, const ColumnSpan&) = default;
};

// A parallelogram polyomino stored column by column, left to right, with the
// bottom-left corner of the first column at the origin.
class ParallelogramPolyomino {
 public:
  explicit ParallelogramPolyomino(std::vector<ColumnSpan> columns)
      : cols_(std::move(columns)) {
    validate();
  }

  static ParallelogramPolyomino unit() {
    return ParallelogramPolyomino({ColumnSpan{0, 1}});
  }

  const std::vector<ColumnSpan>& columns() const { return cols_; }
  int width() const { return static_cast<int>(cols_.size()); }
  int height() const { return cols_.back().top; }
  // Size parameter of the enumeration: width + height - 1.
  int size() const { return width() + height() - 1; }

  int top_row_width() const {
    const int t = height();
    int w = 0;
    for (int i = width() - 1; i >= 0 && cols_[i].top == t; --i) ++w;
    return w;
  }
  int right_col_height() const {
    return cols_.back().top - cols_.back().bottom;
  }

  friend auto operator<=>(const ParallelogramPolyomino&,
                          const ParallelogramPolyomino&) = default;

 private:
  void validate() const {
    if (cols_.empty()) throw MalformedSlicing("shape has no columns");
    if (cols_.front().bottom != 0)
      throw MalformedSlicing("first column must start at the origin");
    for (size_t i = 0; i < cols_.size(); ++i) {
      if (cols_[i].bottom >= cols_[i].top)
        throw MalformedSlicing("empty column");
      if (i + 1 < cols_.size()) {
        if (cols_[i].bottom > cols_[i + 1].bottom ||
            cols_[i].top > cols_[i + 1].top)
          throw MalformedSlicing("column borders must be weakly increasing");
        if (cols_[i + 1].bottom >= cols_[i].top)
          throw MalformedSlicing("adjacent columns must share an edge");
      }
    }
  }

  std::vector<ColumnSpan> cols_;
};

// Growth move: extend the topmost row by a new row of width `len` (Row) or
// the rightmost column by a new column of height `len` (Col).
struct Move {
  enum Kind { Row, Col };
  Kind kind = Row;
  int len = 1;
  friend auto operator<=>(const Move&, const Move&) = default;
};

// Axis-aligned block of a slicing.  Horizontal blocks have unit height,
// vertical ones unit width; the initial cell is stored as horizontal.
struct Block {
  enum Orient { H, V };
  Orient o = H;
  int x1 = 0, y1 = 0, x2 = 1, y2 = 1;
  friend auto operator<=>(const Block&, const Block&) = default;
};

// A Baxter slicing: a parallelogram polyomino partitioned into blocks that
// can be peeled off one by one from the top row / right column.
class BaxterSlicing {
 public:
  // Replays a move sequence starting from the unit cell.
  static BaxterSlicing from_moves(const std::vector<Move>& moves) {
    BaxterSlicing s;
    s.cols_ = {ColumnSpan{0, 1}};
    s.blocks_ = {Block{Block::H, 0, 0, 1, 1}};
    int step = 0;
    for (const Move& mv : moves) {
      s.apply(mv, step);
      ++step;
    }
    s.moves_ = moves;
    return s;
  }

  // Rebuilds a slicing from an unordered block list by peeling; validates
  // that the blocks tile a parallelogram polyomino in a peelable way.
  static BaxterSlicing from_blocks(std::vector<Block> blocks);

  const std::vector<Move>& moves() const { return moves_; }
  // Blocks in the order they were added, the initial cell first.
  const std::vector<Block>& blocks_build_order() const { return blocks_; }
  // Blocks in peel order: last added first.
  std::vector<Block> blocks_peel_order() const {
    return {blocks_.rbegin(), blocks_.rend()};
  }
  ParallelogramPolyomino shape() const {
    return ParallelogramPolyomino(cols_);
  }
  int size() const {
    return static_cast<int>(cols_.size()) + cols_.back().top - 1;
  }

  friend auto operator<=>(const BaxterSlicing&, const BaxterSlicing&) = default;

 private:
  BaxterSlicing() = default;

  void apply(const Move& mv, int step) {
    const int w = static_cast<int>(cols_.size());
    const int t = cols_.back().top;
    if (mv.kind == Move::Row) {
      int top_width = 0;
      for (int i = w - 1; i >= 0 && cols_[i].top == t; --i) ++top_width;
      if (mv.len < 1 || mv.len > top_width)
        throw IllegalMove(step, "row wider than the topmost row");
      for (int i = w - mv.len; i < w; ++i) cols_[i].top = t + 1;
      blocks_.push_back(Block{Block::H, w - mv.len, t, w, t + 1});
    } else {
      const int k = t - cols_.back().bottom;
      if (mv.len < 1 || mv.len > k)
        throw IllegalMove(step, "column taller than the rightmost column");
      cols_.push_back(ColumnSpan{t - mv.len, t});
      blocks_.push_back(Block{Block::V, w, t - mv.len, w + 1, t});
    }
  }

  std::vector<ColumnSpan> cols_;
  std::vector<Block> blocks_;
  std::vector<Move> moves_;
};

inline std::vector<Move> to_moves(const BaxterSlicing& s) { return s.moves(); }

inline BaxterSlicing BaxterSlicing::from_blocks(std::vector<Block> blocks) {
  if (blocks.empty()) throw MalformedSlicing("no blocks");
  // Validate the blocks themselves and collect the covered cells.
  std::set<std::pair<int, int>> cells;
  for (const Block& b : blocks) {
    if (b.x1 < 0 || b.y1 < 0 || b.x1 >= b.x2 || b.y1 >= b.y2)
      throw MalformedSlicing("degenerate block");
    if (b.o == Block::H && b.y2 - b.y1 != 1)
      throw MalformedSlicing("horizontal block of height > 1");
    if (b.o == Block::V && b.x2 - b.x1 != 1)
      throw MalformedSlicing("vertical block of width > 1");
    for (int x = b.x1; x < b.x2; ++x)
      for (int y = b.y1; y < b.y2; ++y)
        if (!cells.insert({x, y}).second)
          throw MalformedSlicing("overlapping blocks");
  }
  // Columns of the covered region; each must be a contiguous span.
  std::map<int, std::pair<int, int>> span;  // x -> [min y, max y]
  for (auto [x, y] : cells) {
    auto it = span.find(x);
    if (it == span.end())
      span[x] = {y, y};
    else {
      it->second.first = std::min(it->second.first, y);
      it->second.second = std::max(it->second.second, y);
    }
  }
  std::vector<ColumnSpan> cols;
  int expect_x = 0;
  for (auto& [x, mm] : span) {
    if (x != expect_x++) throw MalformedSlicing("columns are not contiguous");
    cols.push_back(ColumnSpan{mm.first, mm.second + 1});
    if (Int(mm.second - mm.first + 1) !=
        Int(std::count_if(cells.begin(), cells.end(),
                          [&](auto c) { return c.first == x; })))
      throw MalformedSlicing("column has holes");
  }
  ParallelogramPolyomino shape(cols);  // throws MalformedSlicing if invalid

  // Peel: at every stage exactly one of (topmost row, rightmost column) can
  // be a block of the slicing, which makes the move sequence unique.
  std::set<Block> pool(blocks.begin(), blocks.end());
  std::vector<Move> rev;
  std::vector<ColumnSpan> cur = cols;
  while (!(cur.size() == 1 && cur[0].top - cur[0].bottom == 1)) {
    const int w = static_cast<int>(cur.size());
    const int t = cur.back().top;
    int top_width = 0;
    for (int i = w - 1; i >= 0 && cur[i].top == t; --i) ++top_width;
    Block top_row{Block::H, w - top_width, t - 1, w, t};
    Block right_col{Block::V, w - 1, cur.back().bottom, w, cur.back().top};
    if (pool.count(top_row)) {
      pool.erase(top_row);
      for (int i = w - top_width; i < w; ++i) --cur[i].top;
      while (cur.size() > 1 && cur.back().top == cur.back().bottom)
        cur.pop_back();
      for (const ColumnSpan& c : cur)
        if (c.top == c.bottom)
          throw MalformedSlicing("peeling disconnects the shape");
      rev.push_back(Move{Move::Row, top_width});
    } else if (pool.count(right_col)) {
      pool.erase(right_col);
      cur.pop_back();
      rev.push_back(Move{Move::Col, right_col.y2 - right_col.y1});
    } else {
      throw MalformedSlicing("neither border piece is a block");
    }
  }
  if (pool.size() != 1 || pool.begin()->x1 != 0 || pool.begin()->y1 != 0 ||
      pool.begin()->x2 != 1 || pool.begin()->y2 != 1)
    throw MalformedSlicing("leftover blocks after peeling");
  std::reverse(rev.begin(), rev.end());
  return from_moves(rev);
}

// Width of a horizontal block together with the length r of the row of
// bottom cells read leftwards from just below the block's right edge.
inline std::pair<int, int> ell_r(const BaxterSlicing& s, const Block& u) {
  if (u.o != Block::H || u.y2 - u.y1 != 1) throw NotHorizontal();
  const auto cols = s.shape().columns();
  const int ell = u.x2 - u.x1;
  const int a = u.x2;
  if (a - 1 < 0 || a - 1 >= static_cast<int>(cols.size()))
    throw MalformedSlicing("block outside the shape");
  const int yb = cols[a - 1].bottom;
  int r = 0;
  for (int j = a - 1; j >= 0 && cols[j].bottom == yb; --j) ++r;
  return {ell, r};
}

namespace detail {

// Value of r for the horizontal block a Row move would add on top, i.e. with
// right edge at the current right end of the shape.
inline int r_of_next_row(const std::vector<ColumnSpan>& cols) {
  const int yb = cols.back().bottom;
  int r = 0;
  for (int j = static_cast<int>(cols.size()) - 1;
       j >= 0 && cols[j].bottom == yb; --j)
    ++r;
  return r;
}

}  // namespace detail

// Membership test for the slicing family attached to a rule.  Every Baxter
// slicing belongs to Bax; the parameterised families bound the width of each
// horizontal block in terms of r and m.
inline bool is_member(const BaxterSlicing& s, const RuleId& rule) {
  switch (rule.family) {
    case RuleFamily::Bax:
      return true;
    case RuleFamily::NewSch:
      return is_member(s, RuleId::skinny(1));
    case RuleFamily::SchWest:
      return is_member(s, RuleId::skinny(1));
    case RuleFamily::Cat:
      return is_member(s, RuleId::row_restricted(1));
    case RuleFamily::Skinny: {
      for (const Block& b : s.blocks_build_order()) {
        if (b.o != Block::H || (b.x1 == 0 && b.y1 == 0)) continue;
        auto [ell, r] = ell_r(s, b);
        if (ell > r + rule.m) return false;
      }
      return true;
    }
    case RuleFamily::RowRestricted: {
      for (const Block& b : s.blocks_build_order()) {
        if (b.o != Block::H || (b.x1 == 0 && b.y1 == 0)) continue;
        if (b.x2 - b.x1 > rule.m) return false;
      }
      return true;
    }
  }
  return false;
}

// Label of a slicing seen as a node of the generating tree of `rule`.
inline Label family_label(const BaxterSlicing& s, const RuleId& rule) {
  if (!is_member(s, rule))
    throw NotInFamily(to_string(rule));
  const auto shape = s.shape();
  const int h_geo = shape.top_row_width();
  const int k = shape.right_col_height();
  switch (rule.family) {
    case RuleFamily::Bax:
      return Label::binary(h_geo, k);
    case RuleFamily::Cat:
      return Label::unary(k);
    case RuleFamily::SchWest:
      return Label::unary(
          family_label(s, RuleId::skinny(1)).a + k);
    case RuleFamily::NewSch:
      return family_label(s, RuleId::skinny(1));
    case RuleFamily::Skinny: {
      const int r = detail::r_of_next_row(shape.columns());
      return Label::binary(std::min(h_geo, r + rule.m), k);
    }
    case RuleFamily::RowRestricted:
      return Label::binary(std::min(h_geo, rule.m), k);
  }
  throw std::invalid_argument("unknown rule");
}

// Children of a slicing inside its family, listed in production order: rows
// of widths 1..h, then columns of heights 1..k.
inline std::vector<BaxterSlicing> children(const BaxterSlicing& s,
                                           const RuleId& rule) {
  const Label lab = family_label(s, rule);  // throws NotInFamily
  int h, k;
  if (rule.binary_labels()) {
    h = lab.a;
    k = lab.b;
  } else {
    // Unary rules still grow slicings; recover the geometric bounds from the
    // corresponding parameterised family.
    const RuleId proxy = rule.family == RuleFamily::Cat
                             ? RuleId::row_restricted(1)
                             : RuleId::skinny(1);
    const Label plab = family_label(s, proxy);
    h = plab.a;
    k = plab.b;
  }
  // Production order differs between the rule families: the binary rules
  // list rows before columns, (Cat) sorts its labels ascending so the row
  // child comes last, and (SchWest) puts the tallest column child last.
  std::vector<Move> order;
  if (rule.family == RuleFamily::Cat) {
    for (int j = 1; j <= k; ++j) order.push_back(Move{Move::Col, j});
    for (int w = 1; w <= h; ++w) order.push_back(Move{Move::Row, w});
  } else if (rule.family == RuleFamily::SchWest) {
    for (int j = 1; j < k; ++j) order.push_back(Move{Move::Col, j});
    for (int w = 1; w <= h; ++w) order.push_back(Move{Move::Row, w});
    order.push_back(Move{Move::Col, k});
  } else {
    for (int w = 1; w <= h; ++w) order.push_back(Move{Move::Row, w});
    for (int j = 1; j <= k; ++j) order.push_back(Move{Move::Col, j});
  }
  std::vector<Move> moves = s.moves();
  std::vector<BaxterSlicing> out;
  moves.emplace_back();
  for (const Move& mv : order) {
    moves.back() = mv;
    out.push_back(BaxterSlicing::from_moves(moves));
  }
  return out;
}

// All members of the family of size n, generated level by level in
// production order.
inline std::vector<BaxterSlicing> family_level(const RuleId& rule, int n) {
  std::vector<BaxterSlicing> cur{BaxterSlicing::from_moves({})};
  for (int sz = 1; sz < n; ++sz) {
    std::vector<BaxterSlicing> next;
    for (const BaxterSlicing& s : cur)
      for (BaxterSlicing& c : children(s, rule)) next.push_back(std::move(c));
    cur = std::move(next);
  }
  return cur;
}

// The unique slicing of a shape in which every horizontal block is a single
// cell: peel a one-cell top row when possible, otherwise the right column.
inline BaxterSlicing catalan_slicing(const ParallelogramPolyomino& shape) {
  std::vector<ColumnSpan> cur = shape.columns();
  std::vector<Move> rev;
  while (!(cur.size() == 1 && cur[0].top - cur[0].bottom == 1)) {
    const int w = static_cast<int>(cur.size());
    const int t = cur.back().top;
    int top_width = 0;
    for (int i = w - 1; i >= 0 && cur[i].top == t; --i) ++top_width;
    if (top_width == 1) {
      --cur.back().top;
      rev.push_back(Move{Move::Row, 1});
    } else {
      rev.push_back(Move{Move::Col, cur.back().top - cur.back().bottom});
      cur.pop_back();
    }
  }
  std::reverse(rev.begin(), rev.end());
  return BaxterSlicing::from_moves(rev);
}

// True when the shape contains no 2x2 square of cells.
inline bool is_snake(const ParallelogramPolyomino& shape) {
  const auto& cols = shape.columns();
  for (size_t i = 0; i + 1 < cols.size(); ++i) {
    const int overlap = std::min(cols[i].top, cols[i + 1].top) -
                        std::max(cols[i].bottom, cols[i + 1].bottom);
    if (overlap >= 2) return false;
  }
  return true;
}

namespace detail {

inline std::vector<ColumnSpan> remove_top_row(
    const std::vector<ColumnSpan>& cols) {
  std::vector<ColumnSpan> out;
  const int t = cols.back().top;
  for (const ColumnSpan& c : cols) {
    ColumnSpan d = c;
    if (d.top == t) --d.top;
    if (d.top > d.bottom) out.push_back(d);
  }
  return out;
}

}  // namespace detail

// Number of Baxter slicings whose underlying shape is `shape`, by memoised
// peeling of the top row / right column.
inline Int count_slicings_of_shape(const ParallelogramPolyomino& shape) {
  std::map<std::vector<ColumnSpan>, Int> memo;
  std::function<Int(const std::vector<ColumnSpan>&)> go =
      [&](const std::vector<ColumnSpan>& cols) -> Int {
    if (cols.size() == 1 && cols[0].top - cols[0].bottom == 1) return 1;
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Int total = 0;
    // A row move never widens the shape, so the top row is peelable only
    // when no column vanishes with it.
    auto rest = detail::remove_top_row(cols);
    if (!rest.empty() && rest.size() == cols.size()) total += go(rest);
    // A column move glues a top-aligned column no taller than its left
    // neighbour.
    if (cols.size() >= 2) {
      const ColumnSpan& last = cols.back();
      const ColumnSpan& prev = cols[cols.size() - 2];
      if (last.top == prev.top &&
          last.top - last.bottom <= prev.top - prev.bottom)
        total += go(std::vector<ColumnSpan>(cols.begin(), cols.end() - 1));
    }
    memo[cols] = total;
    return total;
  };
  return go(shape.columns());
}

// All shapes of the given size, obtained as the underlying shapes of the
// Catalan family level (each shape carries exactly one Catalan slicing).
inline std::vector<ParallelogramPolyomino> shapes_of_size(int n) {
  std::vector<ParallelogramPolyomino> out;
  for (const BaxterSlicing& s : family_level(RuleId::cat(), n))
    out.push_back(s.shape());
  return out;
}

}  // namespace slicings

#endif
