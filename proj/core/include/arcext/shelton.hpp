#pragma once

// Shelton's recursion for the dimensions E^k(x,y) of Ext groups between
// parabolic Verma modules, realized entirely on diagrammatical weights.
// The coset representative x corresponds to the weight la0.x, with
// l(x) = weight_length and the group Bruhat order reversed against the
// weight order.  This module is the independent oracle for the hom-complex
// Ext computation; it never touches the algebra.

#include <map>
#include <string>
#include <vector>

#include "arcext/weights.hpp"

namespace arcext {

using ExtDimVector = std::map<int, long long>;  // k -> dim, no zeros

struct RightMultResult {
  Weight weight;   // la . s_i (labels at i-1, i swapped)
  bool in_wp;      // labels differ, i.e. xs remains a minimal representative
  bool longer;     // l(xs) > l(x)
};
RightMultResult right_multiply(const Weight& la, int i);

class SheltonOracle {
 public:
  SheltonOracle(int m, int n);

  const std::vector<Weight>& weights() const { return weights_; }
  int weight_index(const Weight& w) const;

  // E^k(x, y) for x, y given by their weights la0.x, la0.y.
  const ExtDimVector& dims(int x, int y);

  long long total_dim();

  // Metamorphic check: rerun with the largest admissible simple reflection
  // instead of the smallest; the recursion is independent of the choice.
  bool invariant_under_s_choice();

 private:
  ExtDimVector compute(int x, int y, bool largest_s);
  const ExtDimVector& dims_impl(int x, int y, bool largest_s);

  int m_, n_;
  std::vector<Weight> weights_;
  std::map<Weight, int> index_;
  std::map<std::pair<int, int>, ExtDimVector> memo_[2];
};

}  // namespace arcext
