#include "arcext/extdg.hpp"

#include <algorithm>

#include "arcext/check.hpp"

namespace arcext {

namespace {
inline mpq_class sign_of(int r) { return ((r % 2 + 2) % 2 == 0) ? 1 : -1; }
}  // namespace

DgExt::DgExt(const ResolutionSet& R) : A_(R.algebra()), R_(R) {}

void DgExt::build_block(int la, int mu, int r, Block& b) const {
  const ProjComplex& Pla = R_.of(la);
  const ProjComplex& Pmu = R_.of(mu);
  std::vector<CochainElt> elts;
  for (int p = std::max(0, r); p <= Pla.length() && p - r <= Pmu.length(); ++p) {
    if (p - r < 0) continue;
    const auto& src = Pla.terms[static_cast<size_t>(p)];
    const auto& tgt = Pmu.terms[static_cast<size_t>(p - r)];
    for (int s = 0; s < static_cast<int>(src.size()); ++s)
      for (int t = 0; t < static_cast<int>(tgt.size()); ++t)
        for (int alg : A_.block(src[static_cast<size_t>(s)].weight,
                                tgt[static_cast<size_t>(t)].weight)) {
          int intdeg = A_.diagram(alg).degree +
                       tgt[static_cast<size_t>(t)].shift -
                       src[static_cast<size_t>(s)].shift;
          elts.push_back({p, s, t, alg, intdeg});
        }
  }
  std::sort(elts.begin(), elts.end(), [](const CochainElt& a, const CochainElt& b2) {
    return std::tie(a.intdeg, a.p, a.s, a.t, a.alg) <
           std::tie(b2.intdeg, b2.p, b2.s, b2.t, b2.alg);
  });
  b.basis = std::move(elts);
  for (size_t i = 0; i < b.basis.size(); ++i) {
    const CochainElt& e = b.basis[i];
    b.index[{e.p, e.s, e.t, e.alg}] = static_cast<int>(i);
  }
}

const DgExt::Block& DgExt::block(int la, int mu, int r) const {
  auto key = std::make_tuple(la, mu, r);
  auto it = blocks_.find(key);
  if (it != blocks_.end()) return it->second;
  Block b;
  build_block(la, mu, r, b);
  return blocks_.emplace(key, std::move(b)).first->second;
}

const std::vector<CochainElt>& DgExt::block_basis(int la, int mu, int r) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  return block(la, mu, r).basis;
}

int DgExt::block_dim(int la, int mu, int r) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  return static_cast<int>(block(la, mu, r).basis.size());
}

int DgExt::elt_index(int la, int mu, int r, int p, int s, int t, int alg) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  const Block& b = block(la, mu, r);
  auto it = b.index.find({p, s, t, alg});
  return it == b.index.end() ? -1 : it->second;
}

Cochain DgExt::delta(const Cochain& f) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  Cochain out;
  out.la = f.la;
  out.mu = f.mu;
  out.r = f.r + 1;
  if (f.zero()) return out;
  const ProjComplex& Pla = R_.of(f.la);
  const ProjComplex& Pmu = R_.of(f.mu);
  const Block& src = block(f.la, f.mu, f.r);
  const Block& dst = block(f.la, f.mu, f.r + 1);
  // d(f) = d.f - (-1)^{|f|} f.d with composition written left to right:
  // first apply d then f, minus sign times first f then d.  This makes the
  // hom complex a dg algebra for the left-to-right product.
  mpq_class sg = -sign_of(f.r);
  for (const auto& [i, c] : f.coords) {
    const CochainElt& e = src.basis[static_cast<size_t>(i)];
    int q = e.p - f.r;
    // f then d, with the sign: P_p(la) -> P_{q}(mu) -> P_{q-1}(mu)
    if (q - 1 >= 0) {
      const AlgMatrix& D = Pmu.diffs[static_cast<size_t>(q - 1)];
      for (int u = 0; u < D.cols; ++u) {
        const AlgebraElement& d = D.at(e.t, u);
        if (d.empty()) continue;
        const AlgebraElement prod =
            A_.multiply(AlgebraElement{{e.alg, mpq_class(1)}}, d);
        for (const auto& [z, cz] : prod) {
          auto it = dst.index.find({e.p, e.s, u, z});
          ARCEXT_CHECK(it != dst.index.end(), "delta: missing target element");
          auto jt = out.coords.find(it->second);
          if (jt == out.coords.end()) {
            out.coords.emplace(it->second, sg * c * cz);
            if (sgn(out.coords[it->second]) == 0) out.coords.erase(it->second);
          } else {
            jt->second += sg * c * cz;
            if (sgn(jt->second) == 0) out.coords.erase(jt);
          }
        }
      }
    }
    // d then f: P_{p+1}(la) -> P_p(la) -> P_q(mu)
    if (e.p + 1 <= Pla.length()) {
      const AlgMatrix& D = Pla.diffs[static_cast<size_t>(e.p)];
      for (int s2 = 0; s2 < D.rows; ++s2) {
        const AlgebraElement& d = D.at(s2, e.s);
        if (d.empty()) continue;
        const AlgebraElement prod =
            A_.multiply(d, AlgebraElement{{e.alg, mpq_class(1)}});
        for (const auto& [z, cz] : prod) {
          auto it = dst.index.find({e.p + 1, s2, e.t, z});
          ARCEXT_CHECK(it != dst.index.end(), "delta: missing target element");
          auto jt = out.coords.find(it->second);
          if (jt == out.coords.end()) {
            out.coords.emplace(it->second, c * cz);
            if (sgn(out.coords[it->second]) == 0) out.coords.erase(it->second);
          } else {
            jt->second += c * cz;
            if (sgn(jt->second) == 0) out.coords.erase(jt);
          }
        }
      }
    }
  }
  return out;
}

Cochain DgExt::compose(const Cochain& f, const Cochain& g) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  ARCEXT_CHECK(f.mu == g.la, "compose: mismatched middle weight");
  Cochain out;
  out.la = f.la;
  out.mu = g.mu;
  out.r = f.r + g.r;
  if (f.zero() || g.zero()) return out;
  const Block& bf = block(f.la, f.mu, f.r);
  const Block& bg = block(g.la, g.mu, g.r);
  const Block& bo = block(f.la, g.mu, f.r + g.r);
  for (const auto& [i, ci] : f.coords) {
    const CochainElt& ef = bf.basis[static_cast<size_t>(i)];
    for (const auto& [j, cj] : g.coords) {
      const CochainElt& eg = bg.basis[static_cast<size_t>(j)];
      if (eg.p != ef.p - f.r || eg.s != ef.t) continue;
      const AlgebraElement& prod = A_.multiply(ef.alg, eg.alg);
      for (const auto& [z, cz] : prod) {
        auto it = bo.index.find({ef.p, ef.s, eg.t, z});
        ARCEXT_CHECK(it != bo.index.end(), "compose: missing target element");
        auto jt = out.coords.find(it->second);
        if (jt == out.coords.end()) {
          out.coords.emplace(it->second, ci * cj * cz);
          if (sgn(out.coords[it->second]) == 0) out.coords.erase(it->second);
        } else {
          jt->second += ci * cj * cz;
          if (sgn(jt->second) == 0) out.coords.erase(jt);
        }
      }
    }
  }
  return out;
}

const std::map<int, int>& DgExt::ext_dims(int la, int mu) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  auto key = std::make_pair(la, mu);
  auto it = extdims_.find(key);
  if (it != extdims_.end()) return it->second;

  std::map<int, int> dims;
  std::map<int, int> rank;  // rank of delta on block r
  int lo = rmin(la, mu), hi = rmax(la, mu);
  for (int r = lo; r <= hi; ++r) {
    const Block& b = block(la, mu, r);
    RowBasis rb;
    for (size_t i = 0; i < b.basis.size(); ++i) {
      Cochain f;
      f.la = la;
      f.mu = mu;
      f.r = r;
      f.coords = QVec{{static_cast<int>(i), mpq_class(1)}};
      rb.insert(delta(f).coords);
    }
    rank[r] = static_cast<int>(rb.rank());
  }
  for (int r = lo; r <= hi; ++r) {
    int dim = static_cast<int>(block(la, mu, r).basis.size());
    int rk = rank.count(r) ? rank[r] : 0;
    int rkprev = rank.count(r - 1) ? rank[r - 1] : 0;
    int h = dim - rk - rkprev;
    ARCEXT_CHECK(h >= 0, "negative cohomology dimension");
    if (h > 0) dims[r] = h;
  }
  return extdims_.emplace(key, std::move(dims)).first->second;
}

std::map<std::pair<int, int>, int> DgExt::ext_dims_graded(int la, int mu) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  // Rank bookkeeping per internal degree; delta preserves the internal
  // degree, which we check on the fly.
  std::map<std::pair<int, int>, int> dims;
  std::map<std::pair<int, int>, int> rank;
  int lo = rmin(la, mu), hi = rmax(la, mu);
  for (int r = lo; r <= hi; ++r) {
    const Block& b = block(la, mu, r);
    std::map<int, RowBasis> rb;
    for (size_t i = 0; i < b.basis.size(); ++i) {
      Cochain f;
      f.la = la;
      f.mu = mu;
      f.r = r;
      f.coords = QVec{{static_cast<int>(i), mpq_class(1)}};
      Cochain d = delta(f);
      if (d.zero()) continue;
      const Block& b2 = block(la, mu, r + 1);
      int id = b.basis[i].intdeg;
      for (const auto& [j, c] : d.coords) {
        (void)c;
        ARCEXT_CHECK(b2.basis[static_cast<size_t>(j)].intdeg == id,
                     "delta does not preserve the internal degree");
      }
      rb[id].insert(d.coords);
    }
    for (auto& [id, basis] : rb) rank[{r, id}] += static_cast<int>(basis.rank());
  }
  for (int r = lo; r <= hi; ++r) {
    const Block& b = block(la, mu, r);
    std::map<int, int> dim_by_id;
    for (const CochainElt& e : b.basis) ++dim_by_id[e.intdeg];
    for (auto [id, d] : dim_by_id) {
      int rk = rank.count({r, id}) ? rank[{r, id}] : 0;
      int rkprev = rank.count({r - 1, id}) ? rank[{r - 1, id}] : 0;
      int h = d - rk - rkprev;
      ARCEXT_CHECK(h >= 0, "negative graded cohomology dimension");
      if (h > 0) dims[{r, id}] = h;
    }
  }
  return dims;
}

// --- splitting --------------------------------------------------------

std::vector<Cochain> DgExt::n1_override(int la, int mu, int r,
                                        std::vector<int>& kinds) const {
  std::vector<Cochain> reps;
  kinds.clear();
  if (A_.n() != 1) return reps;
  auto up_pos = [&](int w) {
    const Weight& wt = A_.weight(w);
    for (int i = 0; i < wt.size(); ++i)
      if (wt.up(i)) return i;
    ARCEXT_CHECK(false, "n=1 weight without an up");
    return -1;
  };
  auto weight_of_up = [&](int j) {
    Weight w;
    w.labels.assign(static_cast<size_t>(A_.vertices()), Label::Down);
    w.labels[static_cast<size_t>(j)] = Label::Up;
    return A_.weight_index(w);
  };
  int jla = up_pos(la), jmu = up_pos(mu);
  const ProjComplex& Pla = R_.of(la);

  if (jla >= jmu && r == jla - jmu) {
    // identity-type chain map: id on P(s) for s <= jmu
    Cochain f;
    f.la = la;
    f.mu = mu;
    f.r = r;
    for (int p = r; p <= Pla.length(); ++p) {
      int w = weight_of_up(jla - p);
      int e = A_.idempotent(w);
      int idx = elt_index(la, mu, r, p, 0, 0, e);
      ARCEXT_CHECK(idx >= 0, "n=1 identity component missing");
      f.coords[idx] = 1;
    }
    reps.push_back(std::move(f));
    kinds.push_back(1);
  }
  if (jla > jmu && r == jla - jmu - 1) {
    // lowering chain map: the distinguished degree-1 morphisms P(s) -> P(s-1),
    // present at positions with s = jla - p >= 1
    Cochain f;
    f.la = la;
    f.mu = mu;
    f.r = r;
    for (int p = r; p <= Pla.length() - 1; ++p) {
      int wsrc = weight_of_up(jla - p);
      int wdst = weight_of_up(jla - p - 1);
      int g = degree_one_generator(A_, wsrc, wdst);
      ARCEXT_CHECK(g >= 0, "n=1 lowering morphism missing");
      int idx = elt_index(la, mu, r, p, 0, 0, g);
      ARCEXT_CHECK(idx >= 0, "n=1 lowering component missing");
      f.coords[idx] = 1;
    }
    reps.push_back(std::move(f));
    kinds.push_back(2);
  }
  return reps;
}

void DgExt::build_split(int la, int mu, Split& sp) const {
  int lo = rmin(la, mu), hi = rmax(la, mu);
  for (int r = lo; r <= hi; ++r) {
    const Block& b = block(la, mu, r);
    int dim = static_cast<int>(b.basis.size());

    std::vector<QVec> images;
    for (int i = 0; i < dim; ++i) {
      Cochain f;
      f.la = la;
      f.mu = mu;
      f.r = r;
      f.coords = QVec{{i, mpq_class(1)}};
      images.push_back(delta(f).coords);
    }
    std::vector<QVec> Z = kernel(images);

    RowBasis zspan;
    for (const QVec& z : Z) ARCEXT_CHECK(zspan.insert(z), "dependent kernel basis");
    std::vector<QVec> L;
    {
      RowBasis ext = zspan;
      for (int j = 0; j < dim; ++j) {
        QVec u{{j, mpq_class(1)}};
        if (ext.insert(u)) L.push_back(u);
      }
    }

    // B^r = delta(L^{r-1}), with the L vectors as canonical preimages.
    std::vector<QVec> B, Bpre;
    if (sp.L.count(r - 1)) {
      for (const QVec& l : sp.L.at(r - 1)) {
        Cochain f;
        f.la = la;
        f.mu = mu;
        f.r = r - 1;
        f.coords = l;
        QVec img = delta(f).coords;
        ARCEXT_CHECK(!img.empty(), "delta not injective on L");
        B.push_back(std::move(img));
        Bpre.push_back(l);
      }
    }
    RowBasis bspan;
    for (const QVec& v : B)
      ARCEXT_CHECK(bspan.insert(v), "boundary images are dependent");

    // H: a complement of B inside Z.
    std::vector<Cochain> H;
    std::vector<int> kinds;
    bool overridden = false;
    if (la == mu && r == 0) {
      // the class of the identity chain map
      Cochain id;
      id.la = la;
      id.mu = mu;
      id.r = 0;
      const ProjComplex& P = R_.of(la);
      for (int p = 0; p <= P.length(); ++p) {
        const auto& ts = P.terms[static_cast<size_t>(p)];
        for (int s = 0; s < static_cast<int>(ts.size()); ++s) {
          int e = A_.idempotent(ts[static_cast<size_t>(s)].weight);
          int idx = elt_index(la, mu, 0, p, s, s, e);
          ARCEXT_CHECK(idx >= 0, "identity component missing");
          id.coords[idx] = 1;
        }
      }
      H.push_back(std::move(id));
      kinds.push_back(1);
      overridden = true;
    } else if (A_.n() == 1) {
      H = n1_override(la, mu, r, kinds);
      overridden = true;
    }

    size_t wantH = Z.size() - B.size();
    if (overridden) {
      ARCEXT_CHECK(H.size() == wantH,
                   "prescribed H has the wrong dimension");
      RowBasis chk = bspan;
      for (const Cochain& h : H) {
        ARCEXT_CHECK(delta(h).zero(), "prescribed H representative is not closed");
        ARCEXT_CHECK(chk.insert(h.coords), "prescribed H meets B + previous H");
      }
    } else {
      RowBasis chk = bspan;
      for (const QVec& z : Z) {
        if (H.size() == wantH) break;
        if (chk.insert(z)) {
          Cochain h;
          h.la = la;
          h.mu = mu;
          h.r = r;
          h.coords = z;
          H.push_back(std::move(h));
          kinds.push_back(0);
        }
      }
      ARCEXT_CHECK(H.size() == wantH, "could not complete H inside Z");
    }

    SolvBasis solver;
    int tag = 0;
    for (const QVec& v : B) ARCEXT_CHECK(solver.insert(v, tag++), "B dependent");
    for (const Cochain& h : H)
      ARCEXT_CHECK(solver.insert(h.coords, tag++), "H dependent against B");
    for (const QVec& l : L)
      ARCEXT_CHECK(solver.insert(l, tag++), "L dependent against Z");
    ARCEXT_CHECK(tag == dim, "B+H+L does not decompose the block");

    sp.B[r] = std::move(B);
    sp.B_preim[r] = std::move(Bpre);
    sp.H[r] = std::move(H);
    sp.H_kind[r] = std::move(kinds);
    sp.L[r] = std::move(L);
    sp.solver[r] = std::move(solver);
    sp.dimB[r] = static_cast<int>(sp.B[r].size());
    sp.dimH[r] = static_cast<int>(sp.H[r].size());
    sp.dimL[r] = static_cast<int>(sp.L[r].size());
  }
}

const DgExt::Split& DgExt::split(int la, int mu) const {
  auto key = std::make_pair(la, mu);
  auto it = splits_.find(key);
  if (it != splits_.end()) return it->second;
  Split sp;
  build_split(la, mu, sp);
  return splits_.emplace(key, std::move(sp)).first->second;
}

int DgExt::h_dim(int la, int mu, int r) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  const Split& sp = split(la, mu);
  auto it = sp.dimH.find(r);
  return it == sp.dimH.end() ? 0 : it->second;
}

const Cochain& DgExt::h_rep(int la, int mu, int r, int k) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  return split(la, mu).H.at(r)[static_cast<size_t>(k)];
}

int DgExt::h_kind(int la, int mu, int r, int k) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  return split(la, mu).H_kind.at(r)[static_cast<size_t>(k)];
}

QVec DgExt::project_h(const Cochain& f) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  const Split& sp = split(f.la, f.mu);
  QVec out;
  if (f.zero()) return out;
  const SolvBasis& sol = sp.solver.at(f.r);
  QVec combo;
  ARCEXT_CHECK(sol.solve(f.coords, combo), "cochain outside B+H+L");
  int nb = sp.dimB.at(f.r);
  int nh = sp.dimH.at(f.r);
  for (const auto& [tag, c] : combo)
    if (tag >= nb && tag < nb + nh) out.emplace(tag - nb, c);
  return out;
}

Cochain DgExt::apply_q(const Cochain& f) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  Cochain out;
  out.la = f.la;
  out.mu = f.mu;
  out.r = f.r - 1;
  if (f.zero()) return out;
  const Split& sp = split(f.la, f.mu);
  const SolvBasis& sol = sp.solver.at(f.r);
  QVec combo;
  ARCEXT_CHECK(sol.solve(f.coords, combo), "cochain outside B+H+L");
  int nb = sp.dimB.at(f.r);
  const auto& pre = sp.B_preim.at(f.r);
  for (const auto& [tag, c] : combo)
    if (tag < nb) vec_add(out.coords, c, pre[static_cast<size_t>(tag)]);
  return out;
}

Cochain DgExt::apply_pi(const Cochain& f) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  Cochain out;
  out.la = f.la;
  out.mu = f.mu;
  out.r = f.r;
  QVec h = project_h(f);
  const Split& sp = split(f.la, f.mu);
  for (const auto& [k, c] : h)
    vec_add(out.coords, c, sp.H.at(f.r)[static_cast<size_t>(k)].coords);
  return out;
}

bool DgExt::verify_homotopy_identity(int la, int mu) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  int lo = rmin(la, mu), hi = rmax(la, mu);
  for (int r = lo; r <= hi; ++r) {
    int dim = block_dim(la, mu, r);
    for (int i = 0; i < dim; ++i) {
      Cochain f;
      f.la = la;
      f.mu = mu;
      f.r = r;
      f.coords = QVec{{i, mpq_class(1)}};
      Cochain lhs = f;
      Cochain pi = apply_pi(f);
      for (const auto& [j, c] : pi.coords) {
        auto it = lhs.coords.find(j);
        if (it == lhs.coords.end()) {
          lhs.coords.emplace(j, -c);
        } else {
          it->second -= c;
          if (sgn(it->second) == 0) lhs.coords.erase(it);
        }
      }
      Cochain rhs1 = apply_q(delta(f));
      Cochain rhs2 = delta(apply_q(f));
      QVec sum = rhs1.coords;
      for (const auto& [j, c] : rhs2.coords) vec_add(sum, 1, QVec{{j, c}});
      if (lhs.coords != sum) return false;
    }
  }
  return true;
}

QVec DgExt::yoneda(int la, int mu, int r, const QVec& hf, int nu, int t,
                   const QVec& hg) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  Cochain f = h_combination(la, mu, r, hf);
  Cochain g = h_combination(mu, nu, t, hg);
  return project_h(compose(f, g));
}

Cochain DgExt::h_combination(int la, int mu, int r, const QVec& h_coords) const {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  const Split& sp = split(la, mu);
  Cochain out;
  out.la = la;
  out.mu = mu;
  out.r = r;
  if (!sp.H.count(r)) {
    ARCEXT_CHECK(h_coords.empty(), "H coordinates in an empty block");
    return out;
  }
  for (const auto& [k, c] : h_coords)
    vec_add(out.coords, c, sp.H.at(r)[static_cast<size_t>(k)].coords);
  return out;
}

ExtClassTable ext_class_table(DgExt& E) {
  ExtClassTable tab;
  const ArcAlgebra& A = E.algebra();
  for (int la = 0; la < A.num_weights(); ++la)
    for (int mu = 0; mu < A.num_weights(); ++mu)
      for (int r = E.rmin(la, mu); r <= E.rmax(la, mu); ++r) {
        int h = E.h_dim(la, mu, r);
        for (int k = 0; k < h; ++k) {
          tab.index[{la, mu, r, k}] = static_cast<int>(tab.classes.size());
          tab.classes.push_back({la, mu, r, k});
        }
      }
  return tab;
}

}  // namespace arcext
