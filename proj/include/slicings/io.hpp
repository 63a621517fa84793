#ifndef SLICINGS_IO_HPP
#define SLICINGS_IO_HPP

#include <json.hpp>

#include "slicings/floorplan.hpp"
#include "slicings/nilp.hpp"
#include "slicings/perm.hpp"
#include "slicings/polyomino.hpp"

namespace slicings {

using Json = nlohmann::ordered_json;

inline Json to_json(const ParallelogramPolyomino& shape) {
  Json cols = Json::array();
  for (const ColumnSpan& c : shape.columns())
    cols.push_back(Json::array({c.bottom, c.top}));
  return Json{{"columns", cols}};
}

inline Json to_json(const BaxterSlicing& s) {
  Json moves = Json::array();
  for (const Move& m : s.moves()) {
    if (m.kind == Move::Row) moves.push_back(Json{{"row", m.len}});
    else moves.push_back(Json{{"col", m.len}});
  }
  Json blocks = Json::array();
  for (const Block& b : s.blocks_peel_order())
    blocks.push_back(Json{{"o", b.o == Block::H ? "H" : "V"},
                          {"rect", Json::array({b.x1, b.y1, b.x2, b.y2})}});
  return Json{{"moves", moves}, {"blocks", blocks}};
}

inline BaxterSlicing slicing_from_json(const Json& j) {
  std::vector<Move> moves;
  for (const Json& m : j.at("moves")) {
    if (m.contains("row")) moves.push_back(Move{Move::Row, m.at("row")});
    else moves.push_back(Move{Move::Col, m.at("col")});
  }
  return BaxterSlicing::from_moves(moves);
}

inline Json to_json(const NilpTriple& t) {
  return Json{{"u", t.u}, {"m", t.m}, {"d", t.d}, {"n", t.n}};
}

inline NilpTriple nilp_from_json(const Json& j) {
  NilpTriple t{j.at("u"), j.at("m"), j.at("d"), j.at("n")};
  require_valid(t);
  return t;
}

inline Json to_json(const PackedFloorplan& f) {
  Json blocks = Json::array();
  for (const Rect& b : f.blocks)
    blocks.push_back(Json::array({b.x1, b.y1, b.x2, b.y2}));
  return Json{{"dim", Json::array({f.d, f.l})}, {"blocks", blocks}};
}

inline PackedFloorplan pfp_from_json(const Json& j) {
  PackedFloorplan f;
  f.d = j.at("dim").at(0);
  f.l = j.at("dim").at(1);
  f.blocks.clear();
  for (const Json& b : j.at("blocks"))
    f.blocks.push_back(Rect{b.at(0), b.at(1), b.at(2), b.at(3)});
  f.canonicalize();
  validate_partition(f);
  return f;
}

inline Json to_json(const Permutation& p) { return Json(p); }

}  // namespace slicings

#endif
