#include <doctest.h>

#include "arcext/shelton.hpp"

using namespace arcext;

TEST_CASE("right multiplication") {
  Weight la0 = zero_weight(3, 2);
  // first up-down boundary: s_n moves the rightmost up one step right
  RightMultResult r = right_multiply(la0, 2);
  CHECK(r.in_wp);
  CHECK(r.longer);
  CHECK(r.weight.str() == "^v^vv");
  // equal labels: not in W^p, weight unchanged
  RightMultResult r2 = right_multiply(la0, 1);
  CHECK(!r2.in_wp);
  CHECK(r2.weight == la0);
  // n=1: (j) . s_{j+1} = (j+1)
  Weight w = Weight::parse("v^vv");
  RightMultResult r3 = right_multiply(w, 2);
  CHECK(r3.weight.str() == "vv^v");
  CHECK(r3.longer);
}

TEST_CASE("K_1^1 dimensions") {
  SheltonOracle S(1, 1);
  int e = S.weight_index(Weight::parse("^v"));   // la0 <-> identity
  int s1 = S.weight_index(Weight::parse("v^"));  // length 1
  CHECK(S.dims(e, e) == ExtDimVector{{0, 1}});
  CHECK(S.dims(s1, s1) == ExtDimVector{{0, 1}});
  CHECK(S.dims(s1, e) == ExtDimVector{{0, 1}, {1, 1}});
  CHECK(S.dims(e, s1).empty());  // y not below x
  CHECK(S.total_dim() == 4);
}

TEST_CASE("diagonal is delta") {
  SheltonOracle S(2, 2);
  for (int x = 0; x < 6; ++x) CHECK(S.dims(x, x) == ExtDimVector{{0, 1}});
}

TEST_CASE("total dimension (N+1)^2 for one up") {
  for (int N = 1; N <= 5; ++N) {
    SheltonOracle S(N, 1);
    CHECK(S.total_dim() == static_cast<long long>(N + 1) * (N + 1));
  }
}

TEST_CASE("choice of simple reflection does not matter") {
  for (auto [m, n] : {std::pair<int, int>{2, 1}, {2, 2}, {3, 2}}) {
    SheltonOracle S(m, n);
    CHECK(S.invariant_under_s_choice());
  }
}

TEST_CASE("support bound") {
  SheltonOracle S(3, 2);
  const auto& ws = S.weights();
  for (size_t x = 0; x < ws.size(); ++x)
    for (size_t y = 0; y < ws.size(); ++y)
      for (auto [k, c] : S.dims(static_cast<int>(x), static_cast<int>(y))) {
        CHECK(c > 0);
        CHECK(k >= 0);
        CHECK(k <= weight_length(ws[x]) - weight_length(ws[y]));
      }
}
