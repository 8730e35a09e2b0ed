#include "arcext/io.hpp"

#include <json.hpp>

#include "arcext/klpoly.hpp"

namespace arcext {

using nlohmann::json;

namespace {
json laurent_json(const LaurentPoly& p) { return p.str(); }
}  // namespace

std::string cartan_csv(const ArcAlgebra& A) {
  std::string s = "la\\mu";
  for (int b = 0; b < A.num_weights(); ++b) s += "," + A.weight(b).str();
  s += "\n";
  for (int a = 0; a < A.num_weights(); ++a) {
    s += A.weight(a).str();
    for (int b = 0; b < A.num_weights(); ++b) s += "," + A.cartan_entry(a, b).str();
    s += "\n";
  }
  return s;
}

std::string cartan_json(const ArcAlgebra& A) {
  json j;
  j["m"] = A.m();
  j["n"] = A.n();
  json rows = json::array();
  for (int a = 0; a < A.num_weights(); ++a) {
    json row = json::array();
    for (int b = 0; b < A.num_weights(); ++b)
      row.push_back(A.cartan_entry(a, b).str());
    rows.push_back(row);
  }
  j["weights"] = json::array();
  for (const Weight& w : A.weights()) j["weights"].push_back(w.str());
  j["cartan"] = rows;
  return j.dump(2) + "\n";
}

std::string basis_table_json(const ArcAlgebra& A, bool with_products) {
  json j;
  j["m"] = A.m();
  j["n"] = A.n();
  j["dim"] = A.dim();
  json basis = json::array();
  for (int i = 0; i < A.dim(); ++i) {
    const BasisDiagram& d = A.diagram(i);
    json e;
    e["cup"] = A.weight(d.cup_w).str();
    e["mid"] = A.weight(d.mid_w).str();
    e["cap"] = A.weight(d.cap_w).str();
    e["degree"] = d.degree;
    basis.push_back(e);
  }
  j["basis"] = basis;
  if (with_products) {
    json prods = json::array();
    for (int x = 0; x < A.dim(); ++x)
      for (int y = 0; y < A.dim(); ++y) {
        const AlgebraElement& p = A.multiply(x, y);
        if (p.empty()) continue;
        json e;
        e["x"] = x;
        e["y"] = y;
        json terms = json::array();
        for (const auto& [k, c] : p) {
          json t;
          t["idx"] = k;
          t["coeff"] = c.get_str();
          terms.push_back(t);
        }
        e["terms"] = terms;
        prods.push_back(e);
      }
    j["products"] = prods;
  }
  return j.dump(2) + "\n";
}

std::string module_json(const ArcAlgebra& A, const GradedModule& M,
                        const std::string& kind, int la) {
  json j;
  j["m"] = A.m();
  j["n"] = A.n();
  j["kind"] = kind;
  j["weight"] = A.weight(la).str();
  json basis = json::array();
  for (const auto& v : M.basis) {
    json e;
    e["name"] = v.name;
    e["block"] = A.weight(v.block_w).str();
    e["degree"] = v.degree;
    basis.push_back(e);
  }
  j["basis"] = basis;
  j["graded_dim"] = M.graded_dim().str();
  return j.dump(2) + "\n";
}

std::string kl_matrix_json(int m, int n) {
  auto ws = enumerate_weights(m, n);
  json j;
  j["m"] = m;
  j["n"] = n;
  j["weights"] = json::array();
  for (const Weight& w : ws) j["weights"].push_back(w.str());
  json rows = json::array();
  for (const Weight& la : ws) {
    json row = json::array();
    for (const Weight& mu : ws) row.push_back(laurent_json(kl_poly(la, mu)));
    rows.push_back(row);
  }
  j["p"] = rows;
  return j.dump(2) + "\n";
}

std::string kl_matrix_csv(int m, int n) {
  auto ws = enumerate_weights(m, n);
  std::string s = "la\\mu";
  for (const Weight& w : ws) s += "," + w.str();
  s += "\n";
  for (const Weight& la : ws) {
    s += la.str();
    for (const Weight& mu : ws) s += "," + kl_poly(la, mu).str();
    s += "\n";
  }
  return s;
}

std::string kl_pair_json(const Weight& la, const Weight& mu) {
  json j;
  j["la"] = la.str();
  j["mu"] = mu.str();
  j["p"] = kl_poly(la, mu).str();
  json labels = json::array();
  for (const LabeledCapDiagram& c : enumerate_labelings(la, mu)) {
    json e;
    e["caps"] = json::array();
    for (size_t i = 0; i < c.caps.size(); ++i) {
      json cap;
      cap["from"] = c.caps[i].first;
      cap["to"] = c.caps[i].second;
      cap["label"] = c.labels[i];
      e["caps"].push_back(cap);
    }
    labels.push_back(e);
  }
  j["labelings"] = labels;
  return j.dump(2) + "\n";
}

std::string resolve_json(const ArcAlgebra& A, const ProjComplex& C, bool betti) {
  json j;
  j["weight"] = A.weight(C.lambda).str();
  json terms = json::array();
  for (size_t i = 0; i < C.terms.size(); ++i) {
    json pos = json::array();
    for (const Summand& s : C.terms[i]) {
      json e;
      e["weight"] = A.weight(s.weight).str();
      e["shift"] = s.shift;
      pos.push_back(e);
    }
    terms.push_back(pos);
  }
  j["terms"] = terms;
  json diffs = json::array();
  for (size_t i = 0; i < C.diffs.size(); ++i) {
    const AlgMatrix& D = C.diffs[i];
    json mat = json::array();
    for (int r = 0; r < D.rows; ++r)
      for (int c = 0; c < D.cols; ++c) {
        const AlgebraElement& e = D.at(r, c);
        if (e.empty()) continue;
        json entry;
        entry["row"] = r;
        entry["col"] = c;
        json tt = json::array();
        for (const auto& [k, q] : e) {
          json t;
          t["id"] = k;
          t["diagram"] = A.diagram_str(k);
          t["coeff"] = q.get_str();
          tt.push_back(t);
        }
        entry["terms"] = tt;
        mat.push_back(entry);
      }
    diffs.push_back(mat);
  }
  j["differentials"] = diffs;
  if (betti) {
    json b = json::array();
    for (size_t i = 0; i < C.terms.size(); ++i) {
      std::map<std::string, int> count;
      for (const Summand& s : C.terms[i]) ++count[A.weight(s.weight).str()];
      b.push_back(count);
    }
    j["betti"] = b;
  }
  return j.dump(2) + "\n";
}

std::string ext_table_json(DgExt& E, bool graded, bool structure) {
  const ArcAlgebra& A = E.algebra();
  json j;
  j["m"] = A.m();
  j["n"] = A.n();
  json table = json::array();
  for (int la = 0; la < A.num_weights(); ++la)
    for (int mu = 0; mu < A.num_weights(); ++mu) {
      const auto& dims = E.ext_dims(la, mu);
      if (dims.empty()) continue;
      json e;
      e["la"] = A.weight(la).str();
      e["mu"] = A.weight(mu).str();
      json dd;
      for (auto [r, d] : dims) dd[std::to_string(r)] = d;
      e["dims"] = dd;
      if (graded) {
        json gg = json::array();
        for (auto [key, d] : E.ext_dims_graded(la, mu)) {
          json g;
          g["k"] = key.first;
          g["internal"] = key.second;
          g["dim"] = d;
          gg.push_back(g);
        }
        e["graded"] = gg;
      }
      table.push_back(e);
    }
  j["ext"] = table;
  if (structure) {
    ExtClassTable tab = ext_class_table(E);
    json cls = json::array();
    for (const auto& c : tab.classes) {
      json e;
      e["la"] = A.weight(c.la).str();
      e["mu"] = A.weight(c.mu).str();
      e["k"] = c.r;
      e["idx"] = c.k;
      cls.push_back(e);
    }
    j["classes"] = cls;
    json prods = json::array();
    for (size_t x = 0; x < tab.classes.size(); ++x)
      for (size_t y = 0; y < tab.classes.size(); ++y) {
        const auto& cx = tab.classes[x];
        const auto& cy = tab.classes[y];
        if (cx.mu != cy.la) continue;
        QVec hx{{cx.k, mpq_class(1)}}, hy{{cy.k, mpq_class(1)}};
        QVec v = E.yoneda(cx.la, cx.mu, cx.r, hx, cy.mu, cy.r, hy);
        if (v.empty()) continue;
        json e;
        e["x"] = static_cast<int>(x);
        e["y"] = static_cast<int>(y);
        json terms = json::array();
        for (const auto& [k, c] : v) {
          json t;
          t["class"] = tab.index.at({cx.la, cy.mu, cx.r + cy.r, k});
          t["coeff"] = c.get_str();
          terms.push_back(t);
        }
        e["terms"] = terms;
        prods.push_back(e);
      }
    j["yoneda"] = prods;
  }
  return j.dump(2) + "\n";
}

std::string ext_table_csv(DgExt& E) {
  const ArcAlgebra& A = E.algebra();
  std::string s = "la,mu,k,dim\n";
  for (int la = 0; la < A.num_weights(); ++la)
    for (int mu = 0; mu < A.num_weights(); ++mu)
      for (auto [r, d] : E.ext_dims(la, mu))
        s += A.weight(la).str() + "," + A.weight(mu).str() + "," +
             std::to_string(r) + "," + std::to_string(d) + "\n";
  return s;
}

std::string shelton_json(SheltonOracle& S) {
  json j;
  json table = json::array();
  const auto& ws = S.weights();
  for (size_t x = 0; x < ws.size(); ++x)
    for (size_t y = 0; y < ws.size(); ++y) {
      const ExtDimVector& v = S.dims(static_cast<int>(x), static_cast<int>(y));
      if (v.empty()) continue;
      json e;
      e["x"] = ws[x].str();
      e["y"] = ws[y].str();
      json dd;
      for (auto [k, c] : v) dd[std::to_string(k)] = c;
      e["dims"] = dd;
      table.push_back(e);
    }
  j["shelton"] = table;
  return j.dump(2) + "\n";
}

std::string shelton_csv(SheltonOracle& S) {
  std::string s = "x,y,k,dim\n";
  const auto& ws = S.weights();
  for (size_t x = 0; x < ws.size(); ++x)
    for (size_t y = 0; y < ws.size(); ++y)
      for (auto [k, c] : S.dims(static_cast<int>(x), static_cast<int>(y)))
        s += ws[x].str() + "," + ws[y].str() + "," + std::to_string(k) + "," +
             std::to_string(c) + "\n";
  return s;
}

std::string ainfty_json(const AinftyModel& M, bool dump_m3) {
  json j;
  j["basis_size"] = static_cast<int>(M.basis.size());
  j["max_arity"] = M.max_arity;
  json counts;
  for (const auto& [l, t] : M.tables)
    counts[std::to_string(l)] = static_cast<int>(t.size());
  j["nonzero_entries"] = counts;
  json tables = json::array();
  for (const auto& [l, t] : M.tables) {
    if (l == 2) continue;  // the full Yoneda table lives under ext --structure
    if (l == 3 && !dump_m3) continue;
    for (const auto& [tup, val] : t) {
      json e;
      e["arity"] = l;
      e["tuple"] = tup;
      json terms = json::array();
      for (const auto& [k, c] : val) {
        json x;
        x["class"] = k;
        x["coeff"] = c.get_str();
        terms.push_back(x);
      }
      e["value"] = terms;
      tables.push_back(e);
    }
  }
  j["higher"] = tables;
  json basis = json::array();
  for (const auto& e : M.basis) {
    json b;
    b["la"] = e.la;
    b["mu"] = e.mu;
    b["k"] = e.r;
    b["idx"] = e.k;
    basis.push_back(b);
  }
  j["basis"] = basis;
  return j.dump(2) + "\n";
}

std::string quiver_json(const ArcAlgebra& A, const Quiver& q,
                        const QuiverReport& rep) {
  json j;
  j["m"] = A.m();
  j["n"] = A.n();
  json vs = json::array();
  for (int w : q.vertices) vs.push_back(A.weight(w).str());
  j["vertices"] = vs;
  json as = json::array();
  for (const QuiverArrow& a : q.arrows) {
    json e;
    e["src"] = A.weight(a.src).str();
    e["dst"] = A.weight(a.dst).str();
    e["k"] = a.r;
    e["color"] = a.color;
    as.push_back(e);
  }
  j["arrows"] = as;
  j["arrows_generate"] = q.arrows_generate;
  j["span_dim_with_idempotents"] = q.span_dim_with_idempotents;
  json sq = json::array();
  for (const SquareCheck& s : rep.squares) {
    json e;
    e["pattern"] = s.pattern;
    e["at"] = s.at;
    e["applicable"] = s.applicable;
    e["ok"] = s.ok;
    e["scalar"] = s.scalar;
    sq.push_back(e);
  }
  j["squares"] = sq;
  j["gauge_consistent"] = rep.gauge_consistent;
  j["relations_ok"] = rep.relations_ok;
  j["derived"] = rep.derived_notes;
  return j.dump(2) + "\n";
}

}  // namespace arcext
