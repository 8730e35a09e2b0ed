#include "arcext/klpoly.hpp"

#include <algorithm>
#include <functional>

#include "arcext/check.hpp"

namespace arcext {

namespace {

struct CapForest {
  std::vector<std::pair<int, int>> caps;  // sorted by left endpoint
  std::vector<int> parent;                // -1 for outermost caps
  std::vector<std::vector<int>> children;
  std::vector<int> roots;
};

CapForest build_forest(const ArcDiagram& cap) {
  CapForest f;
  f.caps = cap.arcs;
  std::sort(f.caps.begin(), f.caps.end());
  size_t k = f.caps.size();
  f.parent.assign(k, -1);
  f.children.assign(k, {});
  for (size_t i = 0; i < k; ++i) {
    // tightest enclosing cap
    int best = -1;
    for (size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (f.caps[j].first < f.caps[i].first && f.caps[i].second < f.caps[j].second)
        if (best < 0 ||
            f.caps[static_cast<size_t>(best)].first < f.caps[j].first)
          best = static_cast<int>(j);
    }
    f.parent[i] = best;
    if (best >= 0)
      f.children[static_cast<size_t>(best)].push_back(static_cast<int>(i));
    else
      f.roots.push_back(static_cast<int>(i));
  }
  return f;
}

}  // namespace

std::vector<LabeledCapDiagram> enumerate_labelings(const Weight& la,
                                                   const Weight& mu) {
  std::vector<LabeledCapDiagram> out;
  if (la.size() != mu.size() || la.num_up() != mu.num_up())
    throw domain_error("enumerate_labelings: weights from different blocks");
  if (!bruhat_leq(la, mu)) return out;

  ArcDiagram capmu = cap_diagram_of(mu);
  CapForest f = build_forest(capmu);
  size_t k = f.caps.size();

  // Upper bound along each cap: innermost caps are capped by the relative
  // length at their down vertex; labels grow towards the inside, so an
  // outer cap is bounded by the minimum over its innermost descendants.
  std::vector<int> ub(k, 0);
  std::function<int(int)> compute_ub = [&](int i) -> int {
    const auto& ch = f.children[static_cast<size_t>(i)];
    if (ch.empty()) {
      int v = f.caps[static_cast<size_t>(i)].first;  // the down vertex
      ARCEXT_CHECK(mu.down(v), "cap of cap(mu) must start at a down vertex");
      int b = relative_length(v, la, mu);
      ARCEXT_CHECK(b >= 0, "relative length negative below a comparable pair");
      return b;
    }
    int b = compute_ub(ch[0]);
    for (size_t j = 1; j < ch.size(); ++j) b = std::min(b, compute_ub(ch[j]));
    return b;
  };
  for (size_t i = 0; i < k; ++i)
    ub[i] = compute_ub(static_cast<int>(i));

  LabeledCapDiagram cur;
  cur.base = capmu;
  cur.caps = f.caps;
  cur.labels.assign(k, 0);

  // depth-first assignment, parents before children
  std::vector<int> order;
  std::function<void(int)> visit = [&](int i) {
    order.push_back(i);
    for (int c : f.children[static_cast<size_t>(i)]) visit(c);
  };
  for (int r : f.roots) visit(r);

  std::function<void(size_t)> rec = [&](size_t oi) {
    if (oi == order.size()) {
      out.push_back(cur);
      return;
    }
    int i = order[oi];
    int lo = f.parent[static_cast<size_t>(i)] < 0
                 ? 0
                 : cur.labels[static_cast<size_t>(f.parent[static_cast<size_t>(i)])];
    for (int l = lo; l <= ub[static_cast<size_t>(i)]; ++l) {
      cur.labels[static_cast<size_t>(i)] = l;
      rec(oi + 1);
    }
    cur.labels[static_cast<size_t>(i)] = 0;
  };
  rec(0);
  return out;
}

LaurentPoly kl_poly(const Weight& la, const Weight& mu) {
  LaurentPoly p;
  if (!bruhat_leq(la, mu)) return p;
  int shift = weight_length(la) - weight_length(mu);
  for (const LabeledCapDiagram& c : enumerate_labelings(la, mu))
    p.add(shift - 2 * c.total(), 1);
  return p;
}

long long kl_coeff(const Weight& la, const Weight& mu, int i) {
  return kl_poly(la, mu).coeff(i);
}

}  // namespace arcext
