#pragma once

// Minimal linear projective resolutions of cell modules, built by iterated
// minimal projective covers: compute the kernel of the previous cover, take
// its top modulo the radical (the positive-degree part acts as the radical
// since degree zero is spanned by the idempotents), lift a cover and repeat.
// Everything is exact over Q and deterministic (first-pivot elimination), so
// the fixed resolutions the downstream Ext and A-infinity machinery depends
// on are stable run to run.

#include <string>
#include <vector>

#include "arcext/algebra.hpp"

namespace arcext {

struct Summand {
  int weight;
  int shift;
};

// Matrix of algebra elements, acting by right multiplication: it maps
// (+) over rows of P(w_row) to (+) over cols of P(w_col), and entry (r,c)
// lies in e_{w_row} K e_{w_col}.
struct AlgMatrix {
  int rows = 0, cols = 0;
  std::vector<AlgebraElement> e;
  AlgebraElement& at(int r, int c) {
    return e[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
  }
  const AlgebraElement& at(int r, int c) const {
    return e[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
  }
  static AlgMatrix zero(int r, int c) {
    AlgMatrix m;
    m.rows = r;
    m.cols = c;
    m.e.assign(static_cast<size_t>(r) * static_cast<size_t>(c), {});
    return m;
  }
};

struct ProjComplex {
  int lambda = -1;
  std::vector<std::vector<Summand>> terms;  // terms[i]: summands of P_i
  std::vector<AlgMatrix> diffs;  // diffs[i]: P_{i+1} (rows) -> P_i (cols)
  int length() const { return static_cast<int>(terms.size()) - 1; }
};

// Resolve the cell module M(lambda).
ProjComplex resolve(const ArcAlgebra& A, int lambda);

// The distinguished degree-1 morphism: the unique degree-1 basis diagram of
// e_la K e_mu, or -1 when the space vanishes.
int degree_one_generator(const ArcAlgebra& A, int la, int mu);

// For n = 1 every position has a single summand and entries are scalar
// multiples of the distinguished morphism; rescale summands so the entry
// from position p+1 to p becomes exactly (-1)^p times it.  This realizes
// the textbook sign pattern in which the identity and lowering chain maps
// are cocycles on the nose.
void normalize_chain_signs(const ArcAlgebra& A, ProjComplex& c);

struct BoundViolation {
  int position;
  int weight;
  std::string detail;
};
struct BoundReport {
  std::vector<BoundViolation> violations;
  bool ok() const { return violations.empty(); }
};
// Check l(la) - i - (n^2 - n - 2 sum nes) <= l(nu) <= l(la) - i for every
// summand P(nu) in position i.
BoundReport verify_bounds(const ArcAlgebra& A, const ProjComplex& c);

// All resolutions for a block, optionally built in parallel.
class ResolutionSet {
 public:
  ResolutionSet(const ArcAlgebra& A, int jobs = 1);
  const ArcAlgebra& algebra() const { return A_; }
  const ProjComplex& of(int la) const { return res_[static_cast<size_t>(la)]; }
  int max_length() const;

 private:
  const ArcAlgebra& A_;
  std::vector<ProjComplex> res_;
};

}  // namespace arcext
