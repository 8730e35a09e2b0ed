#include "arcext/modules.hpp"

#include <algorithm>
#include <map>

#include "arcext/check.hpp"

namespace arcext {

namespace {

std::vector<int> projective_basis(const ArcAlgebra& A, int la) {
  std::vector<int> out;
  for (int a = 0; a < A.num_weights(); ++a)
    for (int idx : A.block(a, la)) out.push_back(idx);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GradedModule projective_module(const ArcAlgebra& A, int la) {
  std::vector<int> pb = projective_basis(A, la);
  std::map<int, int> pos;
  for (size_t i = 0; i < pb.size(); ++i) pos[pb[i]] = static_cast<int>(i);

  GradedModule M;
  for (int idx : pb) {
    const BasisDiagram& d = A.diagram(idx);
    M.basis.push_back({A.diagram_str(idx), d.cup_w, d.degree});
  }
  M.action.resize(static_cast<size_t>(A.dim()));
  for (int g = 0; g < A.dim(); ++g) {
    auto& mat = M.action[static_cast<size_t>(g)];
    for (size_t c = 0; c < pb.size(); ++c) {
      const AlgebraElement& prod = A.multiply(g, pb[c]);
      for (const auto& [k, coeff] : prod) {
        auto it = pos.find(k);
        ARCEXT_CHECK(it != pos.end(), "left action left P(la)");
        mat.emplace_back(it->second, static_cast<int>(c), coeff);
      }
    }
  }
  return M;
}

GradedModule cell_module(const ArcAlgebra& A, int la) {
  std::vector<int> pb = projective_basis(A, la);
  std::vector<int> cb;  // middle weight equal to la
  std::map<int, int> cpos;
  for (int idx : pb)
    if (A.diagram(idx).mid_w == la) {
      cpos[idx] = static_cast<int>(cb.size());
      cb.push_back(idx);
    }

  GradedModule M;
  for (int idx : cb) {
    const BasisDiagram& d = A.diagram(idx);
    M.basis.push_back({"(" + A.weight(d.cup_w).str() + "|" + A.weight(la).str() + ")",
                       d.cup_w, d.degree});
  }
  M.action.resize(static_cast<size_t>(A.dim()));
  for (int g = 0; g < A.dim(); ++g) {
    auto& mat = M.action[static_cast<size_t>(g)];
    for (size_t c = 0; c < cb.size(); ++c) {
      const AlgebraElement& prod = A.multiply(g, cb[c]);
      for (const auto& [k, coeff] : prod) {
        auto it = cpos.find(k);
        if (it != cpos.end()) mat.emplace_back(it->second, static_cast<int>(c), coeff);
      }
    }
    // stability of the quotient: the span of mid != la vectors is a submodule
    for (int idx : pb) {
      if (A.diagram(idx).mid_w == la) continue;
      const AlgebraElement& prod = A.multiply(g, idx);
      for (const auto& [k, coeff] : prod) {
        (void)coeff;
        ARCEXT_CHECK(A.diagram(k).mid_w != la,
                     "cell quotient is not action-stable");
      }
    }
  }
  return M;
}

DecompositionMatrix decomposition_matrix(const ArcAlgebra& A) {
  const int W = A.num_weights();
  DecompositionMatrix D;
  D.d.assign(static_cast<size_t>(W), std::vector<LaurentPoly>(static_cast<size_t>(W)));
  for (int la = 0; la < W; ++la)
    for (int mu = 0; mu < W; ++mu) {
      const ArcDiagram& c = A.cup_of(la);
      const Weight& wmu = A.weight(mu);
      if (!oriented_half(c, wmu)) continue;
      ARCEXT_CHECK(bruhat_leq(A.weight(la), wmu),
                   "oriented cup(la) mu with la not below mu");
      D.d[static_cast<size_t>(la)][static_cast<size_t>(mu)] =
          LaurentPoly::q_power(half_degree(c, wmu));
    }
  return D;
}

std::vector<std::pair<int, int>> cell_filtration(const ArcAlgebra& A, int la) {
  std::vector<std::pair<int, int>> layers;
  for (int mu = 0; mu < A.num_weights(); ++mu) {
    const ArcDiagram& c = A.cup_of(la);
    const Weight& wmu = A.weight(mu);
    if (oriented_half(c, wmu)) layers.emplace_back(mu, half_degree(c, wmu));
  }
  // bigger weights first; length ascending is a linear extension of that
  std::sort(layers.begin(), layers.end(), [&](auto& x, auto& y) {
    int lx = A.weight_len(x.first), ly = A.weight_len(y.first);
    if (lx != ly) return lx < ly;
    return x.first < y.first;
  });
  return layers;
}

std::vector<std::tuple<int, int, long long>> graded_jordan_holder(
    const ArcAlgebra& A, int mu) {
  std::vector<std::tuple<int, int, long long>> out;
  for (int la = 0; la < A.num_weights(); ++la) {
    const ArcDiagram& c = A.cup_of(la);
    const Weight& wmu = A.weight(mu);
    if (oriented_half(c, wmu)) out.emplace_back(la, half_degree(c, wmu), 1);
  }
  return out;
}

}  // namespace arcext
