#pragma once

// Cup and cap diagrams: planar matchings of the vertices 0..V-1 by arcs,
// with rays to infinity on the unmatched vertices.  Together with a weight
// they form the oriented halves of the distinguished basis diagrams.

#include <string>
#include <utility>
#include <vector>

#include "arcext/weights.hpp"

namespace arcext {

enum class ArcKind : uint8_t { Cup, Cap };

struct ArcDiagram {
  ArcKind kind = ArcKind::Cup;
  int size = 0;                            // number of vertices
  std::vector<std::pair<int, int>> arcs;   // (i,j) with i<j, sorted by i
  std::vector<int> rays;                   // sorted

  bool operator==(const ArcDiagram& o) const {
    return kind == o.kind && size == o.size && arcs == o.arcs && rays == o.rays;
  }

  // Planarity plus the partition property (every vertex in exactly one arc
  // or ray, no ray inside an arc, no crossing arcs).
  bool valid() const;

  std::string str() const;  // e.g. "(0,3)(1,2)|rays:4"
};

ArcDiagram mirror(const ArcDiagram& c);  // swaps Cup <-> Cap

// The unique cup diagram making (cup, la) oriented of degree 0: repeatedly
// join neighbouring down-up pairs, then attach rays.
ArcDiagram cup_diagram_of(const Weight& la);
ArcDiagram cap_diagram_of(const Weight& la);  // mirror of the above

// Whether gluing the half to the weight gives an oriented diagram: every
// arc carries one up and one down, and no two rays are labelled down,up in
// that left-to-right order.  The condition is the same for cups and caps.
bool oriented_half(const ArcDiagram& c, const Weight& la);

// Number of clockwise arcs (left endpoint up); requires oriented_half.
int half_degree(const ArcDiagram& c, const Weight& la);

// nes(i): number of arcs nested in the i-th arc, arcs numbered by their
// right endpoint from left to right.
std::vector<int> nesting_numbers(const ArcDiagram& c);

}  // namespace arcext
