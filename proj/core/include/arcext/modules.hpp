#pragma once

// Concrete graded modules over the arc algebra: projective covers P(la) and
// cell modules M(la) with explicit action matrices, the q-decomposition
// matrix, cell filtrations of projectives and graded Jordan-Hoelder data.

#include <gmpxx.h>

#include <string>
#include <tuple>
#include <vector>

#include "arcext/algebra.hpp"
#include "arcext/laurent.hpp"

namespace arcext {

struct GradedModule {
  struct BasisVec {
    std::string name;
    int block_w;  // e_{block_w} acts as identity on this vector
    int degree;
  };
  std::vector<BasisVec> basis;
  // action[g]: sparse matrix of the left action of algebra basis element g:
  // g . basis[col] = sum coeff * basis[row]
  std::vector<std::vector<std::tuple<int, int, mpq_class>>> action;

  LaurentPoly graded_dim() const {
    LaurentPoly p;
    for (const auto& v : basis) p.add(v.degree, 1);
    return p;
  }
};

// P(la) = K e_la with basis the oriented diagrams (cup(alpha) nu cap(la)).
GradedModule projective_module(const ArcAlgebra& A, int la);

// M(la): quotient of P(la) by the span of basis vectors with middle weight
// different from la.  Throws internal_error if that span were not stable.
GradedModule cell_module(const ArcAlgebra& A, int la);

struct DecompositionMatrix {
  std::vector<std::vector<LaurentPoly>> d;  // d[la][mu]
};
DecompositionMatrix decomposition_matrix(const ArcAlgebra& A);

// Layers (mu_i, shift deg(mu_i cap(la))) of the cell filtration of P(la),
// ordered so that bigger weights come first.
std::vector<std::pair<int, int>> cell_filtration(const ArcAlgebra& A, int la);

// Graded composition multiplicities of M(mu): tuples (la, j, [M(mu):L(la)<j>]).
std::vector<std::tuple<int, int, long long>> graded_jordan_holder(
    const ArcAlgebra& A, int mu);

}  // namespace arcext
