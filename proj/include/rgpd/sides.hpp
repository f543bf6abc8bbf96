#pragma once

// Gluing rules between dart-sides. Every boundary walk in the library (faces
// of a graph, boundary of a spanning subgraph) is traced with these three
// rules and nothing else.
//
//   corner   (x, ccw) -- (next(x), cw)      vertex boundary between consecutive darts
//   ribbon   (d, cw)  -- (partner(d), ccw)  long side of an untwisted edge-ribbon
//   segment  (x, cw)  -- (x, ccw)           the dart itself, when no ribbon covers it
//
// Walks are directed: a walk reaches a cw side through a corner and leaves it
// through a ribbon or a segment; it reaches a ccw side through a ribbon or a
// segment and leaves it through a corner. This keeps the surface on the left.

#include "rgpd/ribbon_graph.hpp"

namespace rgpd::sides {

inline DartSide across_corner(const RibbonGraph& g, DartSide s) {
    return s.side == Side::ccw ? DartSide{g.next(s.dart), Side::cw} : DartSide{g.prev(s.dart), Side::ccw};
}

inline DartSide along_ribbon(const RibbonGraph& g, DartSide s) {
    return s.side == Side::cw ? DartSide{g.partner(s.dart), Side::ccw} : DartSide{g.partner(s.dart), Side::cw};
}

inline DartSide along_segment(DartSide s) {
    return {s.dart, s.side == Side::cw ? Side::ccw : Side::cw};
}

}  // namespace rgpd::sides
