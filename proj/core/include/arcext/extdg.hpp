#pragma once

// The dg algebra A = hom(P_, P_) over the fixed linear projective
// resolutions, its cohomology E = Ext((+)M(la), (+)M(mu)) with the Yoneda
// product, and the B/H/L splitting with homotopy Q feeding the Merkulov
// recursion.
//
// Conventions.  A cochain of degree r has components P_p(la) -> P_{p-r}(mu),
// written as right multiplication; composition is left to right,
// (f.g)(x) = g(f(x)).  The differential is d(f) = d o f - (-1)^{|f|} f o d.
// Cocycles are the (anti)commuting chain maps and the cohomology in degree
// r is Ext^r(M(la), M(mu)).

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "arcext/linalg.hpp"
#include "arcext/resolver.hpp"

namespace arcext {

struct CochainElt {
  int p;       // source position in P_(la)
  int s;       // summand index in terms_la[p]
  int t;       // summand index in terms_mu[p - r]
  int alg;     // algebra basis element of e_{w(s)} K e_{w(t)}
  int intdeg;  // internal degree of the component as a graded map
};

// A cochain in block (la, mu, r): sparse coordinates over the block basis.
struct Cochain {
  int la = -1, mu = -1, r = 0;
  QVec coords;
  bool zero() const { return coords.empty(); }
};

class DgExt {
 public:
  DgExt(const ResolutionSet& R);

  const ArcAlgebra& algebra() const { return A_; }
  const ResolutionSet& resolutions() const { return R_; }

  int len(int la) const { return R_.of(la).length(); }
  int rmin(int /*la*/, int mu) const { return -len(mu); }
  int rmax(int la, int /*mu*/) const { return len(la); }

  const std::vector<CochainElt>& block_basis(int la, int mu, int r) const;
  int block_dim(int la, int mu, int r) const;
  int elt_index(int la, int mu, int r, int p, int s, int t, int alg) const;

  Cochain delta(const Cochain& f) const;
  Cochain compose(const Cochain& f, const Cochain& g) const;

  // dim Ext^r(M(la), M(mu)) for all r with nonzero entries.
  const std::map<int, int>& ext_dims(int la, int mu) const;
  // bigraded refinement: (r, internal degree) -> dim
  std::map<std::pair<int, int>, int> ext_dims_graded(int la, int mu) const;

  // --- splitting A = B + H + L with homotopy Q ------------------------
  // Built lazily per (la, mu).  H representatives are deterministic
  // (first-free-pivot); the identity cochain represents Ext^0(la,la), and
  // for n = 1 the explicit identity/lowering chain maps are installed.
  int h_dim(int la, int mu, int r) const;
  const Cochain& h_rep(int la, int mu, int r, int k) const;
  // 0 = plain representative, 1 = identity-type, 2 = lowering-type (n=1)
  int h_kind(int la, int mu, int r, int k) const;

  QVec project_h(const Cochain& f) const;  // H-coordinates in f's block
  Cochain apply_q(const Cochain& f) const;
  Cochain apply_pi(const Cochain& f) const;

  // Verify 1 - Pi = dQ + Qd on every block basis element (exact).
  bool verify_homotopy_identity(int la, int mu) const;

  // Yoneda product of H-classes, as H-coordinates of the target block.
  QVec yoneda(int la, int mu, int r, const QVec& h_coords_f, int nu, int t,
              const QVec& h_coords_g) const;

  Cochain h_combination(int la, int mu, int r, const QVec& h_coords) const;

 private:
  struct Block {
    std::vector<CochainElt> basis;
    std::map<std::tuple<int, int, int, int>, int> index;
  };
  struct Split {
    // per r: H reps, kinds, L basis vectors, solver over [B|H|L]
    std::map<int, std::vector<Cochain>> H;
    std::map<int, std::vector<int>> H_kind;
    std::map<int, std::vector<QVec>> L;
    std::map<int, std::vector<QVec>> B;        // delta of L one level down
    std::map<int, std::vector<QVec>> B_preim;  // the matching L vectors
    std::map<int, SolvBasis> solver;           // tags: B, then H, then L
    std::map<int, int> dimB, dimH, dimL;
  };

  const Block& block(int la, int mu, int r) const;
  const Split& split(int la, int mu) const;
  void build_block(int la, int mu, int r, Block& b) const;
  void build_split(int la, int mu, Split& s) const;
  std::vector<Cochain> n1_override(int la, int mu, int r,
                                   std::vector<int>& kinds) const;

  const ArcAlgebra& A_;
  const ResolutionSet& R_;
  mutable std::map<std::tuple<int, int, int>, Block> blocks_;
  mutable std::map<std::pair<int, int>, Split> splits_;
  mutable std::map<std::pair<int, int>, std::map<int, int>> extdims_;
  mutable std::recursive_mutex mu_;
};

// All Ext classes of a block pair map, flattened deterministically.
struct ExtClassTable {
  struct Entry {
    int la, mu, r, k;
  };
  std::vector<Entry> classes;
  std::map<std::tuple<int, int, int, int>, int> index;
};
ExtClassTable ext_class_table(DgExt& E);

}  // namespace arcext
