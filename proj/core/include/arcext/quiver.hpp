#pragma once

// Quiver presentations of the Ext algebra: vertices are the weights, arrows
// a deterministic basis of rad/rad^2, colours encode the cohomological
// degree.  For n = 1 the path algebra relations are verified exactly; for
// n = 2 the eight grid relation patterns are checked up to recorded scalars
// together with a gauge-consistency certificate (a rescaling of the arrows
// realizing commuting squares with sign +1 and anticommuting ones with -1
// exists iff every multiplicative dependency among the squares balances).

#include <string>
#include <vector>

#include "arcext/extdg.hpp"

namespace arcext {

struct QuiverArrow {
  int src, dst;  // weight indices
  int r, k;      // Ext class within block (src,dst)
  std::string color;
};

struct Quiver {
  std::vector<int> vertices;
  std::vector<QuiverArrow> arrows;
  bool arrows_generate = false;
  long long span_dim_with_idempotents = 0;
};

struct SquareCheck {
  int pattern = 0;  // 1..8
  std::string at;
  bool applicable = false;
  bool ok = false;
  std::string scalar;  // side1 = scalar * side2 (square patterns)
};

struct QuiverReport {
  std::vector<SquareCheck> squares;
  bool gauge_consistent = false;
  bool relations_ok = false;
  std::vector<std::string> derived_notes;
  long long path_span_dim = -1;
};

Quiver quiver_presentation(DgExt& E, QuiverReport* report);

// n=1 only: verify Id.Id = Id, Id.F = F.Id = F, F.F = 0 over all triples.
bool verify_n1_relations(DgExt& E, std::string* detail);

std::string emit_dot(const ArcAlgebra& A, const Quiver& q);

}  // namespace arcext
