#pragma once

// Combinatorial Kazhdan-Lusztig polynomials p_{la,mu}(q) via labeled cap
// diagrams: label the chambers of cap(mu) by nonnegative integers, zero on
// the unbounded chambers, weakly increasing towards the inside, and bounded
// on every innermost cap by the relative length at its down vertex.  Then
//
//   p_{la,mu}(q) = q^{l(la)-l(mu)} sum_C q^{-2|C|},
//
// the sum over all such labelings, and 0 when la is not below mu.

#include <vector>

#include "arcext/diagrams.hpp"
#include "arcext/laurent.hpp"
#include "arcext/weights.hpp"

namespace arcext {

struct LabeledCapDiagram {
  ArcDiagram base;                        // cap(mu)
  std::vector<std::pair<int, int>> caps;  // sorted by left endpoint
  std::vector<int> labels;                // label of the chamber inside caps[i]
  int total() const {
    int t = 0;
    for (int l : labels) t += l;
    return t;
  }
};

std::vector<LabeledCapDiagram> enumerate_labelings(const Weight& la,
                                                   const Weight& mu);

LaurentPoly kl_poly(const Weight& la, const Weight& mu);

// Coefficient p^{(i)}_{la,mu}, the multiplicity of P(mu)<i> in position i of
// the linear projective resolution of M(la).
long long kl_coeff(const Weight& la, const Weight& mu, int i);

}  // namespace arcext
