#include <doctest.h>

#include "arcext/klpoly.hpp"
#include "arcext/modules.hpp"

using namespace arcext;

TEST_CASE("worked labeled-cap-diagram example") {
  Weight la = Weight::parse("vvvv^^");
  Weight mu = Weight::parse("v^vv^v");
  auto labelings = enumerate_labelings(la, mu);
  CHECK(labelings.size() == 2);
  for (const auto& c : labelings) CHECK((c.total() == 0 || c.total() == 1));
  LaurentPoly p = kl_poly(la, mu);
  CHECK(p.str() == "q^2+q^4");
  CHECK(p.coeff(4) == 1);
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(3) == 0);
}

TEST_CASE("diagonal and incomparable pairs") {
  for (const Weight& w : enumerate_weights(2, 2)) {
    auto l = enumerate_labelings(w, w);
    CHECK(l.size() == 1);
    CHECK(l[0].total() == 0);
    CHECK(kl_poly(w, w).str() == "1");
  }
  Weight a = Weight::parse("^v");
  Weight b = Weight::parse("v^");
  CHECK(kl_poly(a, b).is_zero());  // a is maximal, not below b
}

TEST_CASE("capless targets have one empty labeling") {
  Weight mu = Weight::parse("^^vv");  // zero weight: no caps in cap(mu)
  for (const Weight& la : enumerate_weights(2, 2)) {
    if (!bruhat_leq(la, mu)) continue;
    auto l = enumerate_labelings(la, mu);
    CHECK(l.size() == 1);
    CHECK(kl_poly(la, mu) == LaurentPoly::q_power(weight_length(la)));
  }
}

TEST_CASE("n=1 closed form") {
  for (int N = 1; N <= 5; ++N) {
    auto ws = enumerate_weights(N, 1);
    for (const Weight& la : ws)
      for (const Weight& mu : ws) {
        int j = weight_length(la), s = weight_length(mu);
        LaurentPoly want = (s <= j) ? LaurentPoly::q_power(j - s) : LaurentPoly();
        CHECK(kl_poly(la, mu) == want);
      }
  }
}

TEST_CASE("exponent window and parity") {
  for (const Weight& la : enumerate_weights(3, 2))
    for (const Weight& mu : enumerate_weights(3, 2)) {
      LaurentPoly p = kl_poly(la, mu);
      if (p.is_zero()) continue;
      int diff = weight_length(la) - weight_length(mu);
      CHECK(p.min_exp() >= 0);
      CHECK(p.max_exp() <= diff);
      for (auto [e, c] : p.coeffs()) {
        CHECK(c > 0);
        CHECK((diff - e) % 2 == 0);
      }
      // p^{(0)} = delta_{la,mu}
      CHECK(p.coeff(0) == (la == mu ? 1 : 0));
    }
}

TEST_CASE("graded Euler characteristic of the resolution shape") {
  // grdim M(la) = sum_i (-q)^i sum_nu p^{(i)}_{la,nu} grdim P(nu): the
  // alternating sum over the terms P(nu)<i> prescribed by the polynomials
  // recovers the cell module, as exactness demands.
  ArcAlgebra A(2, 2);
  for (int la = 0; la < A.num_weights(); ++la) {
    LaurentPoly euler;
    for (int i = 0; i <= weight_length(A.weight(la)); ++i)
      for (int nu = 0; nu < A.num_weights(); ++nu) {
        long long c = kl_coeff(A.weight(la), A.weight(nu), i);
        if (!c) continue;
        LaurentPoly grdimP;
        for (const auto& v : projective_module(A, nu).basis) grdimP.add(v.degree, 1);
        euler += LaurentPoly::q_power(i, (i % 2 == 0) ? c : -c) * grdimP;
      }
    CHECK(euler == cell_module(A, la).graded_dim());
  }
}
