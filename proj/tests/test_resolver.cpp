#include <doctest.h>

#include "arcext/klpoly.hpp"
#include "arcext/resolver.hpp"

using namespace arcext;

TEST_CASE("resolution of the zero weight is the projective itself") {
  ArcAlgebra A(2, 2);
  ProjComplex C = resolve(A, A.zero_weight_index());
  CHECK(C.length() == 0);
  REQUIRE(C.terms[0].size() == 1);
  CHECK(C.terms[0][0].weight == A.zero_weight_index());
  CHECK(C.terms[0][0].shift == 0);
}

TEST_CASE("K_1^1 resolution of the non-zero weight") {
  ArcAlgebra A(1, 1);
  int vu = A.weight_index(Weight::parse("v^"));
  int uv = A.weight_index(Weight::parse("^v"));
  ProjComplex C = resolve(A, vu);
  REQUIRE(C.length() == 1);
  CHECK(C.terms[0][0].weight == vu);
  CHECK(C.terms[1][0].weight == uv);
  CHECK(C.terms[1][0].shift == 1);
  // the differential entry is the distinguished degree-1 morphism
  const AlgebraElement& d = C.diffs[0].at(0, 0);
  REQUIRE(d.size() == 1);
  CHECK(A.diagram(d.begin()->first).degree == 1);
}

TEST_CASE("n=1 resolutions are the twisted chain complexes") {
  ArcAlgebra A(4, 1);
  ResolutionSet R(A, 1);  // applies the sign normalization for n = 1
  for (int la = 0; la < A.num_weights(); ++la) {
    const ProjComplex& C = R.of(la);
    int l = A.weight_len(la);
    CHECK(C.length() == l);
    for (int i = 0; i <= C.length(); ++i) {
      REQUIRE(C.terms[static_cast<size_t>(i)].size() == 1);
      const Summand& s = C.terms[static_cast<size_t>(i)][0];
      CHECK(s.shift == i);
      CHECK(A.weight_len(s.weight) == l - i);
    }
    for (size_t p = 0; p < C.diffs.size(); ++p) {
      const AlgebraElement& e = C.diffs[p].at(0, 0);
      REQUIRE(e.size() == 1);
      int f = degree_one_generator(A, C.terms[p + 1][0].weight, C.terms[p][0].weight);
      CHECK(e.begin()->first == f);
      CHECK(e.begin()->second == ((p % 2 == 0) ? 1 : -1));
    }
  }
}

TEST_CASE("d o d vanishes") {
  ArcAlgebra A(2, 2);
  for (int la = 0; la < A.num_weights(); ++la) {
    ProjComplex C = resolve(A, la);
    for (size_t i = 0; i + 1 < C.diffs.size(); ++i) {
      const AlgMatrix& D1 = C.diffs[i + 1];  // P_{i+2} -> P_{i+1}
      const AlgMatrix& D0 = C.diffs[i];      // P_{i+1} -> P_i
      for (int r = 0; r < D1.rows; ++r)
        for (int c = 0; c < D0.cols; ++c) {
          AlgebraElement sum;
          for (int k = 0; k < D1.cols; ++k) {
            AlgebraElement prod = A.multiply(D1.at(r, k), D0.at(k, c));
            for (const auto& [idx, q] : prod) {
              sum[idx] += q;
              if (sgn(sum[idx]) == 0) sum.erase(idx);
            }
          }
          CHECK(sum.empty());
        }
    }
  }
}

TEST_CASE("Betti numbers equal KL coefficients on (2,2) and (3,1)") {
  for (auto [m, n] : {std::pair<int, int>{2, 2}, {3, 1}}) {
    ArcAlgebra A(m, n);
    for (int la = 0; la < A.num_weights(); ++la) {
      ProjComplex C = resolve(A, la);
      for (int i = 0; i <= A.weight_len(la); ++i) {
        std::map<int, long long> have;
        if (i < static_cast<int>(C.terms.size()))
          for (const Summand& s : C.terms[static_cast<size_t>(i)]) {
            CHECK(s.shift == i);  // linearity
            ++have[s.weight];
          }
        for (int mu = 0; mu < A.num_weights(); ++mu) {
          long long want = kl_coeff(A.weight(la), A.weight(mu), i);
          CHECK(want == (have.count(mu) ? have[mu] : 0));
        }
      }
    }
  }
}

TEST_CASE("degree-one generators") {
  ArcAlgebra A(2, 1);
  int w0 = A.weight_index(Weight::parse("^vv"));
  int w1 = A.weight_index(Weight::parse("v^v"));
  int w2 = A.weight_index(Weight::parse("vv^"));
  CHECK(degree_one_generator(A, w0, w1) >= 0);
  CHECK(degree_one_generator(A, w1, w0) >= 0);
  CHECK(degree_one_generator(A, w1, w2) >= 0);
  CHECK(degree_one_generator(A, w0, w0) == -1);
  CHECK(degree_one_generator(A, w0, w2) == -1);
}

TEST_CASE("position bounds hold") {
  ArcAlgebra A(3, 2);
  for (int la = 0; la < A.num_weights(); ++la) {
    ProjComplex C = resolve(A, la);
    CHECK(C.length() <= A.weight_len(la));
    BoundReport rep = verify_bounds(A, C);
    CHECK(rep.ok());
    // position 0 carries only P(la) itself
    REQUIRE(C.terms[0].size() == 1);
    CHECK(C.terms[0][0].weight == la);
  }
}
