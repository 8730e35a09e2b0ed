#include "arcext/algebra.hpp"

#include <algorithm>

#include "arcext/check.hpp"

namespace arcext {

namespace {

// Nodes of the stacked multiplication diagram: the crossing of the bottom
// weight line at vertex v is node 2v, of the top line 2v+1.  Node order is
// exactly (vertex, bottom-before-top), which is the order used to read off
// the orientation of a circle: a circle is anticlockwise iff the strand at
// its minimal node points down.
struct Dsu {
  std::vector<int> p;
  explicit Dsu(int k) : p(static_cast<size_t>(k)) {
    for (int i = 0; i < k; ++i) p[static_cast<size_t>(i)] = i;
  }
  int find(int a) {
    while (p[static_cast<size_t>(a)] != a) {
      p[static_cast<size_t>(a)] = p[static_cast<size_t>(p[static_cast<size_t>(a)])];
      a = p[static_cast<size_t>(a)];
    }
    return a;
  }
  void join(int a, int b) { p[static_cast<size_t>(find(a))] = find(b); }
};

struct Edge {
  int u, v;
  bool flip;  // cup/cap: labels differ across; vertical strand: labels agree
};

struct Term {
  std::vector<Label> lab;  // per node
  mpq_class coeff;
};

constexpr bool kAnticlockwise = true;

}  // namespace

ArcAlgebra::ArcAlgebra(int m, int n) : m_(m), n_(n) {
  weights_ = enumerate_weights(m, n);
  // rayless closure: n downs on the left catch the unmatched ups, m ups on
  // the right catch the rest, independently of the weight
  for (size_t i = 0; i < weights_.size(); ++i) {
    windex_[weights_[i]] = static_cast<int>(i);
    cups_.push_back(cup_diagram_of(weights_[i]));
    wlen_.push_back(weight_length(weights_[i]));
    Weight padded;
    padded.labels.assign(static_cast<size_t>(n), Label::Down);
    padded.labels.insert(padded.labels.end(), weights_[i].labels.begin(),
                         weights_[i].labels.end());
    padded.labels.insert(padded.labels.end(), static_cast<size_t>(m), Label::Up);
    padded_weights_.push_back(padded);
    padded_cups_.push_back(cup_diagram_of(padded));
    ARCEXT_CHECK(padded_cups_.back().rays.empty(), "closure left a ray open");
  }
  const int W = num_weights();
  blocks_.assign(static_cast<size_t>(W) * static_cast<size_t>(W), {});
  for (int a = 0; a < W; ++a)
    for (int b = 0; b < W; ++b)
      for (int nu = 0; nu < W; ++nu) {
        const ArcDiagram& ca = cups_[static_cast<size_t>(a)];
        const ArcDiagram& cb = cups_[static_cast<size_t>(b)];
        const Weight& wn = weights_[static_cast<size_t>(nu)];
        if (!oriented_half(ca, wn) || !oriented_half(cb, wn)) continue;
        BasisDiagram d;
        d.cup_w = a;
        d.mid_w = nu;
        d.cap_w = b;
        d.degree = half_degree(ca, wn) + half_degree(cb, wn);
        int idx = static_cast<int>(basis_.size());
        basis_.push_back(d);
        blocks_[static_cast<size_t>(a) * static_cast<size_t>(W) + static_cast<size_t>(b)]
            .push_back(idx);
        long long key = (static_cast<long long>(a) * W + nu) * W + b;
        basis_idx_[key] = idx;
      }
  use_dense_memo_ = dim() <= 4096;
  if (use_dense_memo_)
    memo_dense_.resize(static_cast<size_t>(dim()) * static_cast<size_t>(dim()));
}

int ArcAlgebra::weight_index(const Weight& w) const {
  auto it = windex_.find(w);
  if (it == windex_.end()) throw domain_error("weight not in this block: " + w.str());
  return it->second;
}

int ArcAlgebra::zero_weight_index() const { return weight_index(zero_weight(m_, n_)); }

int ArcAlgebra::basis_index(int a, int nu, int b) const {
  const int W = num_weights();
  long long key = (static_cast<long long>(a) * W + nu) * W + b;
  auto it = basis_idx_.find(key);
  return it == basis_idx_.end() ? -1 : it->second;
}

const std::vector<int>& ArcAlgebra::block(int a, int b) const {
  const int W = num_weights();
  return blocks_[static_cast<size_t>(a) * static_cast<size_t>(W) + static_cast<size_t>(b)];
}

LaurentPoly ArcAlgebra::cartan_entry(int a, int b) const {
  LaurentPoly p;
  for (int idx : block(a, b)) p.add(diagram(idx).degree, 1);
  return p;
}

std::string ArcAlgebra::diagram_str(int idx) const {
  const BasisDiagram& d = diagram(idx);
  return weight(d.cup_w).str() + "|" + weight(d.mid_w).str() + "|" +
         weight(d.cap_w).str();
}

const AlgebraElement& ArcAlgebra::multiply(int x, int y) const {
  {
    std::lock_guard<std::mutex> lk(memo_mu_);
    if (use_dense_memo_) {
      const auto& slot =
          memo_dense_[static_cast<size_t>(x) * static_cast<size_t>(dim()) +
                      static_cast<size_t>(y)];
      if (slot) return *slot;
    } else {
      auto it = memo_sparse_.find({x, y});
      if (it != memo_sparse_.end()) return *it->second;
    }
  }
  auto value = std::make_unique<const AlgebraElement>(multiply_impl(x, y));
  std::lock_guard<std::mutex> lk(memo_mu_);
  if (use_dense_memo_) {
    auto& slot = memo_dense_[static_cast<size_t>(x) * static_cast<size_t>(dim()) +
                             static_cast<size_t>(y)];
    if (!slot) slot = std::move(value);
    return *slot;
  }
  auto& slot = memo_sparse_[{x, y}];
  if (!slot) slot = std::move(value);
  return *slot;
}

AlgebraElement ArcAlgebra::multiply(const AlgebraElement& x,
                                    const AlgebraElement& y) const {
  AlgebraElement out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) {
      const AlgebraElement& p = multiply(i, j);
      mpq_class c = ci * cj;
      for (const auto& [k, ck] : p) {
        auto it = out.find(k);
        if (it == out.end()) {
          out.emplace(k, c * ck);
        } else {
          it->second += c * ck;
          if (sgn(it->second) == 0) out.erase(it);
        }
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Surgery procedure.
//
// Products are computed in a rayless closure: every weight nu is padded to
// (v^k nu ^k) with k = m+n, which matches all rays of the cup diagrams with
// nested closure arcs.  In the padded picture the stacked diagram for
// (a la b)(b* mu d) consists of circles only, and the surgery over the
// mirror-image middle cup/cap pairs (leftmost right endpoint first) needs
// nothing beyond the Frobenius rules on circle orientations, anticlockwise
// standing for 1 and clockwise for x:
//
//   merge:  1*1 -> 1,   1*x -> x,   x*x -> 0
//   split:  1 -> (1,x) + (x,1),     x -> (x,x)
//
// A circle is anticlockwise iff its strand points down at the leftmost
// lowest crossing.  At the end every middle vertex carries a vertical
// strand, the rows agree, and the terms whose row restricts to the padding
// (downs left, ups right) read off as diagrams (a nu d); the others vanish
// under the corner projection back to K_m^n.
// ---------------------------------------------------------------------------

AlgebraElement ArcAlgebra::multiply_impl(int xi, int yi) const {
  const BasisDiagram& x = diagram(xi);
  const BasisDiagram& y = diagram(yi);
  AlgebraElement out;
  if (x.cap_w != y.cup_w) return out;  // b != c*: zero, not an error

  const int kl = n_;  // left padding (downs); the right padding has m_ ups
  const int V = 2 * vertices();  // padded vertex count
  const int N = 2 * V;
  const ArcDiagram& bot = padded_cups_[static_cast<size_t>(x.cup_w)];
  const ArcDiagram& mid = padded_cups_[static_cast<size_t>(x.cap_w)];
  const ArcDiagram& top = padded_cups_[static_cast<size_t>(y.cap_w)];
  const Weight& la = padded_weights_[static_cast<size_t>(x.mid_w)];
  const Weight& mu = padded_weights_[static_cast<size_t>(y.mid_w)];

  auto bnode = [](int v) { return 2 * v; };
  auto tnode = [](int v) { return 2 * v + 1; };

  std::vector<std::pair<int, int>> sites = mid.arcs;
  std::sort(sites.begin(), sites.end(),
            [](auto& p, auto& q) { return p.second < q.second; });

  std::vector<Edge> fixed;
  for (auto [i, j] : bot.arcs) fixed.push_back({bnode(i), bnode(j), true});
  for (auto [i, j] : top.arcs) fixed.push_back({tnode(i), tnode(j), true});

  // Edge list for the configuration where sites [0,kdone) are surgered.
  auto edges_at = [&](size_t kdone) {
    std::vector<Edge> e = fixed;
    for (size_t s = 0; s < sites.size(); ++s) {
      auto [i, j] = sites[s];
      if (s < kdone) {
        e.push_back({bnode(i), tnode(i), false});
        e.push_back({bnode(j), tnode(j), false});
      } else {
        e.push_back({bnode(i), bnode(j), true});
        e.push_back({tnode(i), tnode(j), true});
      }
    }
    return e;
  };

  auto components = [&](const std::vector<Edge>& e) {
    Dsu dsu(N);
    for (const Edge& ed : e) dsu.join(ed.u, ed.v);
    return dsu;
  };

  auto consistent = [&](const std::vector<Edge>& e, Dsu& dsu, int root,
                        const std::vector<Label>& lab) {
    for (const Edge& ed : e) {
      if (dsu.find(ed.u) != root) continue;
      bool differ = lab[static_cast<size_t>(ed.u)] != lab[static_cast<size_t>(ed.v)];
      if (differ != ed.flip) return false;
    }
    return true;
  };

  auto comp_min_node = [&](Dsu& dsu, int root) {
    for (int v = 0; v < N; ++v)
      if (dsu.find(v) == root) return v;
    ARCEXT_CHECK(false, "empty component");
    return -1;
  };

  // Assign the labels of one whole circle from its orientation.
  auto orient_circle = [&](const std::vector<Edge>& e, Dsu& dsu, int root,
                           std::vector<Label>& lab, bool anticlockwise) {
    std::vector<std::vector<std::pair<int, bool>>> adj(static_cast<size_t>(N));
    for (const Edge& ed : e) {
      if (dsu.find(ed.u) != root) continue;
      adj[static_cast<size_t>(ed.u)].push_back({ed.v, ed.flip});
      adj[static_cast<size_t>(ed.v)].push_back({ed.u, ed.flip});
    }
    int anchor = comp_min_node(dsu, root);
    std::vector<char> seen(static_cast<size_t>(N), 0);
    std::vector<int> queue{anchor};
    lab[static_cast<size_t>(anchor)] = anticlockwise ? Label::Down : Label::Up;
    seen[static_cast<size_t>(anchor)] = 1;
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (auto [v, flip] : adj[static_cast<size_t>(u)]) {
        if (seen[static_cast<size_t>(v)]) continue;
        seen[static_cast<size_t>(v)] = 1;
        lab[static_cast<size_t>(v)] =
            flip ? (lab[static_cast<size_t>(u)] == Label::Up ? Label::Down : Label::Up)
                 : lab[static_cast<size_t>(u)];
        queue.push_back(v);
      }
    }
  };

  auto anticlockwise_of = [&](Dsu& dsu, int root, const std::vector<Label>& lab) {
    return lab[static_cast<size_t>(comp_min_node(dsu, root))] == Label::Down;
  };

  std::vector<Term> terms;
  {
    Term t;
    t.lab.resize(static_cast<size_t>(N));
    for (int v = 0; v < V; ++v) {
      t.lab[static_cast<size_t>(bnode(v))] = la.at(v);
      t.lab[static_cast<size_t>(tnode(v))] = mu.at(v);
    }
    t.coeff = 1;
    terms.push_back(std::move(t));
  }

  for (size_t step = 0; step < sites.size() && !terms.empty(); ++step) {
    auto [i, j] = sites[step];
    std::vector<Edge> before = edges_at(step);
    std::vector<Edge> after = edges_at(step + 1);
    Dsu dsu_b = components(before);
    Dsu dsu_a = components(after);
    int cap_root = dsu_b.find(bnode(i));
    int cup_root = dsu_b.find(tnode(i));

    std::vector<Term> next;
    for (Term& t : terms) {
      ARCEXT_CHECK(consistent(before, dsu_b, cap_root, t.lab),
                   "inconsistently oriented circle in surgery");
      if (cup_root != cap_root)
        ARCEXT_CHECK(consistent(before, dsu_b, cup_root, t.lab),
                     "inconsistently oriented circle in surgery");
      if (cap_root != cup_root) {
        // merge
        bool anti1 = anticlockwise_of(dsu_b, cap_root, t.lab);
        bool anti2 = anticlockwise_of(dsu_b, cup_root, t.lab);
        if (!anti1 && !anti2) continue;  // x*x = 0
        Term s = t;
        orient_circle(after, dsu_a, dsu_a.find(bnode(i)), s.lab, anti1 && anti2);
        next.push_back(std::move(s));
      } else {
        // split
        int r1 = dsu_a.find(bnode(i));
        int r2 = dsu_a.find(bnode(j));
        ARCEXT_CHECK(r1 != r2, "planar circle failed to split");
        if (anticlockwise_of(dsu_b, cap_root, t.lab)) {
          Term s1 = t;
          orient_circle(after, dsu_a, r1, s1.lab, kAnticlockwise);
          orient_circle(after, dsu_a, r2, s1.lab, !kAnticlockwise);
          Term s2 = t;
          orient_circle(after, dsu_a, r1, s2.lab, !kAnticlockwise);
          orient_circle(after, dsu_a, r2, s2.lab, kAnticlockwise);
          next.push_back(std::move(s1));
          next.push_back(std::move(s2));
        } else {
          Term s = t;
          orient_circle(after, dsu_a, r1, s.lab, !kAnticlockwise);
          orient_circle(after, dsu_a, r2, s.lab, !kAnticlockwise);
          next.push_back(std::move(s));
        }
      }
    }

    std::sort(next.begin(), next.end(),
              [](const Term& a, const Term& b) { return a.lab < b.lab; });
    terms.clear();
    for (Term& t : next) {
      if (!terms.empty() && terms.back().lab == t.lab)
        terms.back().coeff += t.coeff;
      else
        terms.push_back(std::move(t));
    }
  }

  // Read off: rows agree on every strand; keep the terms in the corner,
  // i.e. whose middle weight still carries the padding pattern.
  {
    std::vector<Edge> fin = edges_at(sites.size());
    Dsu dsu_f = components(fin);
    for (Term& t : terms) {
      bool ok = true;
      for (int v = 0; v < N; ++v)
        if (dsu_f.find(v) == v && !consistent(fin, dsu_f, v, t.lab)) ok = false;
      ARCEXT_CHECK(ok, "inconsistent final orientation in a closed diagram");
      bool padded_shape = true;
      for (int v = 0; v < kl && padded_shape; ++v)
        if (t.lab[static_cast<size_t>(bnode(v))] != Label::Down) padded_shape = false;
      for (int v = kl + vertices(); v < V && padded_shape; ++v)
        if (t.lab[static_cast<size_t>(bnode(v))] != Label::Up) padded_shape = false;
      if (!padded_shape) continue;  // projected away from the corner
      Weight nu;
      nu.labels.resize(static_cast<size_t>(vertices()));
      for (int v = 0; v < vertices(); ++v)
        nu.labels[static_cast<size_t>(v)] = t.lab[static_cast<size_t>(bnode(v + kl))];
      int nu_idx = weight_index(nu);
      int res = basis_index(x.cup_w, nu_idx, y.cap_w);
      ARCEXT_CHECK(res >= 0, "surgery produced a non-oriented diagram");
      auto it = out.find(res);
      if (it == out.end())
        out.emplace(res, t.coeff);
      else
        it->second += t.coeff;
    }
  }
  return out;
}

}  // namespace arcext
