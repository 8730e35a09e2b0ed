#pragma once

// Exact sparse linear algebra over Q.  Everything is deterministic: rows are
// processed in the order given and pivots are always the first free column,
// so kernels, complements and solved combinations are reproducible run to
// run.  No floating point anywhere.

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace arcext {

using QVec = std::map<int, mpq_class>;  // index -> nonzero coefficient

inline void vec_add(QVec& y, const mpq_class& a, const QVec& x) {
  if (sgn(a) == 0) return;
  for (const auto& [i, c] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      y.emplace(i, a * c);
    } else {
      it->second += a * c;
      if (sgn(it->second) == 0) y.erase(it);
    }
  }
}

inline void vec_scale(QVec& y, const mpq_class& a) {
  for (auto& [i, c] : y) {
    (void)i;
    c *= a;
  }
}

// Echelon row space: rows keyed by pivot column, pivot coefficient 1.
class RowBasis {
 public:
  // Reduce v against the stored rows (leading-term elimination).
  // The result is zero iff v lies in the span.
  QVec reduce(QVec v) const;
  // Reduce and store if independent; returns true if the rank grew.
  bool insert(QVec v);
  size_t rank() const { return rows_.size(); }
  const std::map<int, QVec>& rows() const { return rows_; }

 private:
  std::map<int, QVec> rows_;
};

// Kernel of the linear map with matrix columns images[i] (the image of the
// i-th domain basis vector).  Kernel vectors are in domain coordinates.
std::vector<QVec> kernel(const std::vector<QVec>& images);

// Echelon basis with combination tracking: solve() expresses a vector as a
// linear combination of the inserted ones, by their insertion tags.
class SolvBasis {
 public:
  bool insert(QVec v, int tag);
  // On success combo holds tag -> coefficient with v = sum coeff * inserted.
  bool solve(QVec v, QVec& combo) const;
  size_t rank() const { return rows_.size(); }

 private:
  std::map<int, std::pair<QVec, QVec>> rows_;  // pivot -> (vector, combo)
};

}  // namespace arcext
