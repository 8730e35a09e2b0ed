#include "arcext/diagrams.hpp"

#include <algorithm>

#include "arcext/check.hpp"

namespace arcext {

bool ArcDiagram::valid() const {
  std::vector<int> cover(static_cast<size_t>(size), 0);
  for (auto [i, j] : arcs) {
    if (i < 0 || j >= size || i >= j) return false;
    ++cover[static_cast<size_t>(i)];
    ++cover[static_cast<size_t>(j)];
  }
  for (int r : rays) {
    if (r < 0 || r >= size) return false;
    ++cover[static_cast<size_t>(r)];
  }
  for (int c : cover)
    if (c != 1) return false;
  // no crossings
  for (size_t a = 0; a < arcs.size(); ++a)
    for (size_t b = a + 1; b < arcs.size(); ++b) {
      auto [i, j] = arcs[a];
      auto [k, l] = arcs[b];
      bool k_in = i < k && k < j, l_in = i < l && l < j;
      if (k_in != l_in) return false;
    }
  // no ray inside an arc
  for (int r : rays)
    for (auto [i, j] : arcs)
      if (i < r && r < j) return false;
  return true;
}

std::string ArcDiagram::str() const {
  std::string s;
  for (auto [i, j] : arcs)
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  s += "|rays:";
  for (size_t k = 0; k < rays.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(rays[k]);
  }
  return s;
}

ArcDiagram mirror(const ArcDiagram& c) {
  ArcDiagram d = c;
  d.kind = (c.kind == ArcKind::Cup) ? ArcKind::Cap : ArcKind::Cup;
  return d;
}

ArcDiagram cup_diagram_of(const Weight& la) {
  ArcDiagram c;
  c.kind = ArcKind::Cup;
  c.size = la.size();
  std::vector<int> stack;
  for (int v = 0; v < la.size(); ++v) {
    if (la.down(v)) {
      stack.push_back(v);
    } else if (!stack.empty()) {
      c.arcs.emplace_back(stack.back(), v);
      stack.pop_back();
    } else {
      c.rays.push_back(v);  // unmatched up
    }
  }
  for (int v : stack) c.rays.push_back(v);  // unmatched downs
  std::sort(c.arcs.begin(), c.arcs.end());
  std::sort(c.rays.begin(), c.rays.end());
  return c;
}

ArcDiagram cap_diagram_of(const Weight& la) { return mirror(cup_diagram_of(la)); }

bool oriented_half(const ArcDiagram& c, const Weight& la) {
  ARCEXT_CHECK(c.size == la.size(), "oriented_half: size mismatch");
  for (auto [i, j] : c.arcs)
    if (la.at(i) == la.at(j)) return false;
  // rays are sorted; forbid a down strictly left of an up
  bool seen_down = false;
  for (int r : c.rays) {
    if (la.down(r))
      seen_down = true;
    else if (seen_down)
      return false;
  }
  return true;
}

int half_degree(const ArcDiagram& c, const Weight& la) {
  int d = 0;
  for (auto [i, j] : c.arcs) {
    (void)j;
    if (la.up(i)) ++d;  // clockwise iff left endpoint is up
  }
  return d;
}

std::vector<int> nesting_numbers(const ArcDiagram& c) {
  // arcs numbered by right endpoint, left to right
  auto arcs = c.arcs;
  std::sort(arcs.begin(), arcs.end(),
            [](auto& a, auto& b) { return a.second < b.second; });
  std::vector<int> nes(arcs.size(), 0);
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = 0; j < arcs.size(); ++j)
      if (arcs[i].first < arcs[j].first && arcs[j].second < arcs[i].second)
        ++nes[i];
  return nes;
}

}  // namespace arcext
