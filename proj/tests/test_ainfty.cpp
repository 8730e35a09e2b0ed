#include <doctest.h>

#include "arcext/ainfty.hpp"
#include "arcext/shelton.hpp"

using namespace arcext;

TEST_CASE("model basis size equals the oracle total") {
  for (auto [m, n] : {std::pair<int, int>{2, 2}, {3, 2}, {4, 1}}) {
    ArcAlgebra A(m, n);
    ResolutionSet R(A, 1);
    DgExt E(R);
    AinftyModel M = minimal_model(E, 2);
    SheltonOracle S(m, n);
    CHECK(static_cast<long long>(M.basis.size()) == S.total_dim());
  }
}

TEST_CASE("n=1 models are formal") {
  for (auto [m, n] : {std::pair<int, int>{1, 1}, {3, 1}}) {
    ArcAlgebra A(m, n);
    ResolutionSet R(A, 1);
    DgExt E(R);
    AinftyModel M = minimal_model(E, 4);
    for (const auto& [l, t] : M.tables)
      if (l >= 3) CHECK(t.empty());
    // m_2 is nontrivial
    REQUIRE(M.tables.count(2));
    CHECK(!M.tables.at(2).empty());
  }
}

TEST_CASE("m_2 equals the Yoneda product") {
  ArcAlgebra A(2, 1);
  ResolutionSet R(A, 1);
  DgExt E(R);
  AinftyModel M = minimal_model(E, 3);
  for (size_t x = 0; x < M.basis.size(); ++x)
    for (size_t y = 0; y < M.basis.size(); ++y) {
      const auto& ex = M.basis[x];
      const auto& ey = M.basis[y];
      if (ex.mu != ey.la) continue;
      QVec hx{{ex.k, mpq_class(1)}}, hy{{ey.k, mpq_class(1)}};
      QVec yon = E.yoneda(ex.la, ex.mu, ex.r, hx, ey.mu, ey.r, hy);
      QVec want;
      for (const auto& [k, c] : yon)
        want.emplace(M.index.at({ex.la, ey.mu, ex.r + ey.r, k}), c);
      QVec got = M.m_value(2, {static_cast<int>(x), static_cast<int>(y)});
      CHECK(got == want);
    }
}

TEST_CASE("degrees of the tables") {
  // m_l is homogeneous of cohomological degree 2 - l
  ArcAlgebra A(2, 2);
  ResolutionSet R(A, 1);
  DgExt E(R);
  AinftyModel M = minimal_model(E, 5);
  for (const auto& [l, table] : M.tables)
    for (const auto& [tup, val] : table) {
      long long in_deg = 0;
      for (int id : tup) in_deg += M.deg(id);
      for (const auto& [out, c] : val) {
        (void)c;
        CHECK(M.deg(out) == in_deg + 2 - l);
      }
    }
}

TEST_CASE("composability constraint") {
  // values only appear on chains with matching middle weights
  ArcAlgebra A(2, 2);
  ResolutionSet R(A, 1);
  DgExt E(R);
  AinftyModel M = minimal_model(E, 4);
  for (const auto& [l, table] : M.tables) {
    (void)l;
    for (const auto& [tup, val] : table) {
      (void)val;
      for (size_t i = 0; i + 1 < tup.size(); ++i)
        CHECK(M.basis[static_cast<size_t>(tup[i])].mu ==
              M.basis[static_cast<size_t>(tup[i + 1])].la);
    }
  }
}

TEST_CASE("Koszul sign engine on hand-expanded small cases") {
  // Evaluating Id^r (x) m_s (x) Id^t multiplies by (-1)^{(2-s)(|a_1|+..+|a_r|)}.
  // For s = 2 the sign is always +; for s = 3 it alternates with the parity
  // of the prefix degree.  Verify the arity-3 and arity-4 identities reduce
  // to the expected signed combinations on a synthetic model.
  AinftyModel M;
  M.basis = {{0, 0, 1, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}};
  // m_2(x,y) = e0 for all pairs; m_3 = 0: Stasheff arity 3 is associativity
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      M.tables[2][{x, y}] = QVec{{0, mpq_class(1)}};
  StasheffReport r3 = stasheff_check(M, 3);
  // (m_2(m_2 (x) id) - m_2(id (x) m_2)) on constant tables: both terms e0
  // with signs (-1)^{0+2*1} = + and (-1)^{1+2*0} = -, so the sum cancels.
  CHECK(r3.ok());

  // now make m_2 non-associative: the checker must flag arity 3
  M.tables[2][{0, 0}] = QVec{{1, mpq_class(1)}};
  M.tables[2][{1, 0}] = QVec{{2, mpq_class(1)}};
  M.tables[2][{0, 1}] = QVec{{3, mpq_class(1)}};
  StasheffReport bad = stasheff_check(M, 3);
  CHECK(!bad.ok());
}

TEST_CASE("lambda support diagnostics stay within the proven window") {
  ArcAlgebra A(2, 2);
  ResolutionSet R(A, 1);
  DgExt E(R);
  AinftyModel M = minimal_model(E, 7);
  // arities above n^2+2 = 6 must vanish; the scan reports the largest arity
  VanishingScan v = vanishing_scan(M);
  CHECK(v.max_nonzero_arity <= 6);
  for (const auto& [l, t] : M.tables)
    if (l == 7) CHECK(t.empty());
}
