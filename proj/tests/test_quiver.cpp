#include <doctest.h>

#include "arcext/io.hpp"
#include "arcext/quiver.hpp"

using namespace arcext;

TEST_CASE("n=1 line quivers") {
  for (int N : {1, 2, 3}) {
    ArcAlgebra A(N, 1);
    ResolutionSet R(A, 1);
    DgExt E(R);
    QuiverReport rep;
    Quiver q = quiver_presentation(E, &rep);
    CHECK(static_cast<int>(q.vertices.size()) == N + 1);
    // two arrows (cyan and black) between consecutive vertices
    CHECK(static_cast<int>(q.arrows.size()) == 2 * N);
    for (const QuiverArrow& a : q.arrows) {
      CHECK(A.weight_len(a.src) == A.weight_len(a.dst) + 1);
      CHECK((a.color == "cyan" || a.color == "black"));
      CHECK(((a.r == 0 && a.color == "cyan") || (a.r == 1 && a.color == "black")));
    }
    CHECK(q.arrows_generate);
    CHECK(q.span_dim_with_idempotents == static_cast<long long>(N + 1) * (N + 1));
    CHECK(rep.relations_ok);
  }
}

TEST_CASE("dot output is deterministic and well formed") {
  ArcAlgebra A(2, 1);
  ResolutionSet R(A, 1);
  DgExt E(R);
  QuiverReport rep;
  Quiver q = quiver_presentation(E, &rep);
  std::string d1 = emit_dot(A, q);
  std::string d2 = emit_dot(A, q);
  CHECK(d1 == d2);
  CHECK(d1.find("digraph") == 0);
  CHECK(d1.find("cyan") != std::string::npos);
  CHECK(d1.find("black") != std::string::npos);
  // 2 nodes and 2 arrows for N = 1
  ArcAlgebra B(1, 1);
  ResolutionSet RB(B, 1);
  DgExt EB(RB);
  QuiverReport repB;
  Quiver qB = quiver_presentation(EB, &repB);
  CHECK(qB.vertices.size() == 2);
  CHECK(qB.arrows.size() == 2);
}

TEST_CASE("n=2 grid relations on the smallest block") {
  ArcAlgebra A(2, 2);
  ResolutionSet R(A, 1);
  DgExt E(R);
  QuiverReport rep;
  Quiver q = quiver_presentation(E, &rep);
  CHECK(q.arrows_generate);
  int applicable = 0;
  for (const SquareCheck& sc : rep.squares)
    if (sc.applicable) {
      ++applicable;
      CHECK(sc.ok);
    }
  CHECK(applicable > 0);
  CHECK(rep.gauge_consistent);
  CHECK(rep.relations_ok);
  // grid plus the corner diagonal double arrows (two columns to the right
  // and two rows down, a length drop of four)
  int corner = 0;
  for (const QuiverArrow& a : q.arrows)
    if (A.weight_len(a.src) - A.weight_len(a.dst) == 4) ++corner;
  CHECK(corner == 2);
}
