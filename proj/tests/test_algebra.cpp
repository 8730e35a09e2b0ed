#include <doctest.h>

#include "arcext/algebra.hpp"

using namespace arcext;

namespace {
AlgebraElement unit_elt(int idx) { return AlgebraElement{{idx, mpq_class(1)}}; }
}  // namespace

TEST_CASE("K_1^1 basis and Cartan") {
  ArcAlgebra A(1, 1);
  int uv = A.weight_index(Weight::parse("^v"));
  int vu = A.weight_index(Weight::parse("v^"));
  // one diagram per oriented circle diagram: e_{^v}; e_{v^}; the degree-2
  // element of e_{v^} K e_{v^}; one degree-1 element in each mixed block
  CHECK(A.dim() == 5);
  CHECK(A.block(uv, uv).size() == 1);
  CHECK(A.block(vu, vu).size() == 2);
  CHECK(A.block(uv, vu).size() == 1);
  CHECK(A.block(vu, uv).size() == 1);
  CHECK(A.cartan_entry(uv, uv).str() == "1");
  CHECK(A.cartan_entry(vu, vu).str() == "1+q^2");
  CHECK(A.cartan_entry(uv, vu).str() == "q");
  CHECK(A.cartan_entry(vu, uv).str() == "q");
  // degree-0 elements biject with weights
  int deg0 = 0;
  for (const BasisDiagram& d : A.basis())
    if (d.degree == 0) ++deg0;
  CHECK(deg0 == A.num_weights());
}

TEST_CASE("degenerate blocks have a single diagram") {
  CHECK(ArcAlgebra(3, 0).dim() == 1);
  CHECK(ArcAlgebra(0, 2).dim() == 1);
}

TEST_CASE("idempotents") {
  ArcAlgebra A(2, 1);
  for (int w = 0; w < A.num_weights(); ++w) {
    int e = A.idempotent(w);
    CHECK(A.multiply(e, e) == unit_elt(e));
    for (int v = 0; v < A.num_weights(); ++v)
      if (v != w) CHECK(A.multiply(e, A.idempotent(v)).empty());
  }
  // the sum of all idempotents is a two-sided identity
  for (int x = 0; x < A.dim(); ++x) {
    AlgebraElement left, right;
    for (int w = 0; w < A.num_weights(); ++w) {
      for (const auto& [k, c] : A.multiply(A.idempotent(w), x)) left[k] += c;
      for (const auto& [k, c] : A.multiply(x, A.idempotent(w))) right[k] += c;
    }
    CHECK(left == unit_elt(x));
    CHECK(right == unit_elt(x));
  }
}

TEST_CASE("K_1^1 surgery products") {
  ArcAlgebra A(1, 1);
  int uv = A.weight_index(Weight::parse("^v"));
  int vu = A.weight_index(Weight::parse("v^"));
  int e_vu = A.idempotent(vu);
  int x2 = -1;  // the degree-2 diagram of e_{v^} K e_{v^}
  for (int idx : A.block(vu, vu))
    if (A.diagram(idx).degree == 2) x2 = idx;
  REQUIRE(x2 >= 0);
  int g = A.block(uv, vu)[0];  // degree 1
  int h = A.block(vu, uv)[0];  // degree 1
  CHECK(A.diagram(g).degree == 1);
  CHECK(A.diagram(h).degree == 1);

  // left idempotent acts as identity
  CHECK(A.multiply(e_vu, x2) == unit_elt(x2));
  // g.h = 0 (degree 2 in e_{^v} K e_{^v}, which is concentrated in degree 0)
  CHECK(A.multiply(g, h).empty());
  // h.g is the degree-2 element
  CHECK(A.multiply(h, g) == unit_elt(x2));
  // x2 squares to zero
  CHECK(A.multiply(x2, x2).empty());
  CHECK(A.multiply(g, x2).empty());
}

TEST_CASE("K_2^1 down-up products") {
  ArcAlgebra A(2, 1);
  auto widx = [&](const char* s) { return A.weight_index(Weight::parse(s)); };
  int w0 = widx("^vv"), w1 = widx("v^v"), w2 = widx("vv^");
  auto deg1 = [&](int a, int b) {
    for (int idx : A.block(a, b))
      if (A.diagram(idx).degree == 1) return idx;
    return -1;
  };
  auto deg2 = [&](int a, int b) {
    for (int idx : A.block(a, b))
      if (A.diagram(idx).degree == 2) return idx;
    return -1;
  };
  int f01 = deg1(w0, w1), f10 = deg1(w1, w0), f12 = deg1(w1, w2), f21 = deg1(w2, w1);
  REQUIRE(f01 >= 0);
  REQUIRE(f10 >= 0);
  REQUIRE(f12 >= 0);
  REQUIRE(f21 >= 0);

  // two-line surgeries vanish
  CHECK(A.multiply(f01, f12).empty());
  CHECK(A.multiply(f01, f10).empty());
  // up-down and down-up composites give the degree-2 loops
  CHECK(A.multiply(f10, f01) == unit_elt(deg2(w1, w1)));
  CHECK(A.multiply(f12, f21) == unit_elt(deg2(w1, w1)));
  CHECK(A.multiply(f21, f12) == unit_elt(deg2(w2, w2)));
  // e_{^vv} K e_{^vv} is one dimensional, so this block has no degree-2 loop
  CHECK(deg2(w0, w0) == -1);
}

TEST_CASE("associativity and degree additivity on small blocks") {
  for (auto [m, n] : {std::pair<int, int>{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    ArcAlgebra A(m, n);
    for (int x = 0; x < A.dim(); ++x)
      for (int y = 0; y < A.dim(); ++y) {
        if (A.diagram(x).cap_w != A.diagram(y).cup_w) {
          CHECK(A.multiply(x, y).empty());
          continue;
        }
        const AlgebraElement& xy = A.multiply(x, y);
        for (const auto& [k, c] : xy) {
          CHECK(c > 0);
          CHECK(A.diagram(k).degree == A.diagram(x).degree + A.diagram(y).degree);
          CHECK(A.diagram(k).cup_w == A.diagram(x).cup_w);
          CHECK(A.diagram(k).cap_w == A.diagram(y).cap_w);
        }
        for (int z = 0; z < A.dim(); ++z) {
          if (A.diagram(y).cap_w != A.diagram(z).cup_w) continue;
          AlgebraElement lhs = A.multiply(xy, unit_elt(z));
          AlgebraElement rhs = A.multiply(unit_elt(x), A.multiply(unit_elt(y), unit_elt(z)));
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("graded dimension equals Cartan entries") {
  ArcAlgebra A(2, 2);
  for (int a = 0; a < A.num_weights(); ++a)
    for (int b = 0; b < A.num_weights(); ++b) {
      LaurentPoly p;
      for (int idx : A.block(a, b)) p.add(A.diagram(idx).degree, 1);
      CHECK(p == A.cartan_entry(a, b));
      CHECK(A.cartan_entry(a, b) == A.cartan_entry(b, a));
    }
}
