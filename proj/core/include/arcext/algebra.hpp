#pragma once

// The generalized Khovanov arc algebra K_m^n: distinguished basis of oriented
// circle diagrams, orthogonal idempotents, and the surgery multiplication.
//
// A basis diagram is a triple (alpha, nu, beta) of weights standing for the
// oriented circle diagram cup(alpha) nu cap(beta); both halves must be
// oriented by nu.  Since weights biject with cup diagrams, triples of weight
// indices are a faithful encoding.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "arcext/diagrams.hpp"
#include "arcext/laurent.hpp"
#include "arcext/weights.hpp"

namespace arcext {

struct BasisDiagram {
  int cup_w;   // alpha: left (cup) half is the cup diagram of alpha
  int mid_w;   // nu: the orienting weight
  int cap_w;   // beta: right (cap) half is the mirrored cup diagram of beta
  int degree;  // clockwise cups + clockwise caps
};

// Finite rational combination of basis diagrams; no zero coefficients.
using AlgebraElement = std::map<int, mpq_class>;

class ArcAlgebra {
 public:
  ArcAlgebra(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int vertices() const { return m_ + n_; }

  int num_weights() const { return static_cast<int>(weights_.size()); }
  const std::vector<Weight>& weights() const { return weights_; }
  const Weight& weight(int w) const { return weights_[static_cast<size_t>(w)]; }
  int weight_index(const Weight& w) const;
  int weight_len(int w) const { return wlen_[static_cast<size_t>(w)]; }
  const ArcDiagram& cup_of(int w) const { return cups_[static_cast<size_t>(w)]; }
  int zero_weight_index() const;

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisDiagram>& basis() const { return basis_; }
  const BasisDiagram& diagram(int idx) const { return basis_[static_cast<size_t>(idx)]; }
  // -1 when cup(a) nu cap(b) is not oriented.
  int basis_index(int a, int nu, int b) const;
  int idempotent(int w) const { return basis_index(w, w, w); }
  // Basis indices of e_a K e_b, ascending.
  const std::vector<int>& block(int a, int b) const;

  // Surgery product of two basis diagrams (memoized, write-once).
  const AlgebraElement& multiply(int x, int y) const;
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

  // c_{a,b}(q) = graded dimension of e_a K e_b.
  LaurentPoly cartan_entry(int a, int b) const;

  std::string diagram_str(int idx) const;

 private:
  AlgebraElement multiply_impl(int x, int y) const;

  int m_, n_;
  std::vector<Weight> weights_;
  std::map<Weight, int> windex_;
  std::vector<ArcDiagram> cups_;
  std::vector<int> wlen_;
  std::vector<Weight> padded_weights_;   // v^k la ^k, the rayless closure
  std::vector<ArcDiagram> padded_cups_;
  std::vector<BasisDiagram> basis_;
  std::vector<std::vector<int>> blocks_;           // [a * W + b]
  std::unordered_map<long long, int> basis_idx_;   // (a,nu,b) key -> index

  mutable std::mutex memo_mu_;
  mutable std::vector<std::unique_ptr<const AlgebraElement>> memo_dense_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<const AlgebraElement>>
      memo_sparse_;
  bool use_dense_memo_;
};

}  // namespace arcext
