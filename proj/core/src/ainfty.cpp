#include "arcext/ainfty.hpp"

#include <set>

#include "arcext/check.hpp"

namespace arcext {

namespace {
inline int par(long long e) { return static_cast<int>(((e % 2) + 2) % 2); }
}  // namespace

AinftyModel minimal_model(DgExt& E, int max_arity) {
  AinftyModel M;
  M.ext = &E;
  M.max_arity = max_arity;
  ExtClassTable tab = ext_class_table(E);
  for (const auto& e : tab.classes) M.basis.push_back({e.la, e.mu, e.r, e.k});
  M.index = tab.index;

  const int B = static_cast<int>(M.basis.size());
  auto src = [&](int id) { return M.basis[static_cast<size_t>(id)].la; };
  auto tgt = [&](int id) { return M.basis[static_cast<size_t>(id)].mu; };

  // Q(lambda_k) on contiguous tuples; arity 1 is -Id on representatives.
  std::map<int, std::map<std::vector<int>, Cochain>> qlam;
  for (int id = 0; id < B; ++id) {
    const auto& e = M.basis[static_cast<size_t>(id)];
    Cochain c = E.h_rep(e.la, e.mu, e.r, e.k);
    for (auto& [i, v] : c.coords) {
      (void)i;
      v = -v;
    }
    qlam[1][{id}] = std::move(c);
  }

  for (int l = 2; l <= max_arity; ++l) {
    // candidate tuples: concatenations of supported prefixes and suffixes
    std::set<std::vector<int>> cand;
    for (int k = 1; k <= l - 1; ++k) {
      auto itp = qlam.find(k);
      auto its = qlam.find(l - k);
      if (itp == qlam.end() || its == qlam.end()) continue;
      // group suffixes by their leading source weight
      std::map<int, std::vector<const std::vector<int>*>> by_src;
      for (const auto& [tup, c] : its->second) {
        (void)c;
        by_src[src(tup[0])].push_back(&tup);
      }
      for (const auto& [tup, c] : itp->second) {
        (void)c;
        auto jt = by_src.find(tgt(tup.back()));
        if (jt == by_src.end()) continue;
        for (const auto* suf : jt->second) {
          std::vector<int> full = tup;
          full.insert(full.end(), suf->begin(), suf->end());
          cand.insert(std::move(full));
        }
      }
    }

    for (const auto& tup : cand) {
      long long degsum_all = 0;
      for (int id : tup) degsum_all += M.deg(id);
      Cochain lam;
      lam.la = src(tup[0]);
      lam.mu = tgt(tup.back());
      lam.r = static_cast<int>(degsum_all) + 2 - l;

      long long degpre = 0;
      for (int k = 1; k <= l - 1; ++k) {
        degpre += M.deg(tup[static_cast<size_t>(k - 1)]);
        auto itp = qlam.find(k);
        auto its = qlam.find(l - k);
        if (itp == qlam.end() || its == qlam.end()) continue;
        std::vector<int> pre(tup.begin(), tup.begin() + k);
        std::vector<int> suf(tup.begin() + k, tup.end());
        auto p = itp->second.find(pre);
        if (p == itp->second.end()) continue;
        auto s = its->second.find(suf);
        if (s == its->second.end()) continue;
        Cochain prod = E.compose(p->second, s->second);
        if (prod.zero()) continue;
        // overall minus times (-1)^{k + (l-k-1) * deg(prefix)}
        mpq_class sgn = (par(k + (l - k - 1) * degpre) == 0) ? -1 : 1;
        for (const auto& [i, c] : prod.coords) vec_add(lam.coords, sgn, QVec{{i, c}});
      }
      if (lam.zero()) continue;
      ARCEXT_CHECK(lam.r == static_cast<int>(degsum_all) + 2 - l,
                   "lambda landed in the wrong cohomological degree");

      QVec h = E.project_h(lam);
      if (!h.empty()) {
        QVec coords;
        for (const auto& [k2, c] : h) {
          auto it = M.index.find({lam.la, lam.mu, lam.r, k2});
          ARCEXT_CHECK(it != M.index.end(), "H coordinate without a class");
          coords.emplace(it->second, c);
        }
        M.tables[l][tup] = std::move(coords);
      }
      Cochain q = E.apply_q(lam);
      if (!q.zero()) qlam[l][tup] = std::move(q);
    }
    M.qlambda_support[l] = qlam.count(l) ? qlam[l].size() : 0;
  }
  return M;
}

StasheffReport stasheff_check(const AinftyModel& M, int max_total_arity) {
  StasheffReport rep;
  const int B = static_cast<int>(M.basis.size());
  std::map<int, std::vector<int>> by_src;
  for (int id = 0; id < B; ++id)
    by_src[M.basis[static_cast<size_t>(id)].la].push_back(id);

  std::vector<int> tup;
  auto check_tuple = [&](const std::vector<int>& t) {
    const int a = static_cast<int>(t.size());
    QVec total;
    for (int s = 2; s <= a; ++s) {
      for (int r = 0; r + s <= a; ++r) {
        int tt = a - s - r;
        int outer = r + tt + 1;
        if (outer == 1) continue;  // m_1 = 0 on the model
        std::vector<int> window(t.begin() + r, t.begin() + r + s);
        QVec inner = M.m_value(s, window);
        if (inner.empty()) continue;
        long long degpre = 0;
        for (int i = 0; i < r; ++i) degpre += M.deg(t[static_cast<size_t>(i)]);
        // (-1)^{r+st} together with the Koszul sign (-1)^{(2-s) degpre}
        int sgn_par = par(r + static_cast<long long>(s) * tt +
                          static_cast<long long>(s) * degpre);
        mpq_class sgn = (sgn_par == 0) ? 1 : -1;
        for (const auto& [w, cw] : inner) {
          std::vector<int> ot(t.begin(), t.begin() + r);
          ot.push_back(w);
          ot.insert(ot.end(), t.begin() + r + s, t.end());
          QVec val = M.m_value(outer, ot);
          for (const auto& [x, cx] : val) vec_add(total, sgn * cw, QVec{{x, cx}});
        }
      }
    }
    ++rep.tuples_checked;
    if (!total.empty()) rep.violations.push_back(t);
  };

  std::function<void(int)> extend = [&](int remaining) {
    if (tup.size() >= 2) check_tuple(tup);
    if (remaining == 0) return;
    int next_src = M.basis[static_cast<size_t>(tup.back())].mu;
    auto it = by_src.find(next_src);
    if (it == by_src.end()) return;
    for (int id : it->second) {
      tup.push_back(id);
      extend(remaining - 1);
      tup.pop_back();
    }
  };
  for (int id = 0; id < B; ++id) {
    tup.assign(1, id);
    extend(max_total_arity - 1);
  }
  return rep;
}

VanishingScan vanishing_scan(const AinftyModel& M) {
  VanishingScan v;
  for (const auto& [l, table] : M.tables) {
    if (table.empty()) continue;
    v.nonzero_counts[l] = table.size();
    if (l > v.max_nonzero_arity) {
      v.max_nonzero_arity = l;
      v.witness = table.begin()->first;
    }
  }
  return v;
}

}  // namespace arcext
