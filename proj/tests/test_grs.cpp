#include <doctest.h>

#include "ceqss/grs.hpp"
#include "oracles.hpp"

using namespace ceqss;
using namespace ceqss::testing;

TEST_SUITE_BEGIN("grs");

TEST_CASE("vandermonde rows are point powers") {
  FieldSpec f5(5);
  GrsSpec spec = GrsSpec::make(f5, {1, 2, 3}, 3, {0, 1, 1, 1});
  FqMatrix v = vandermonde(spec);
  // squares mod 5: 1, 4, 9 = 4
  CHECK(v == FqMatrix(f5, {{1, 1, 1}, {1, 2, 3}, {1, 4, 4}}));

  GrsSpec deg0 = GrsSpec::make(f5, {1, 2, 3}, 1, {0, 1, 0, 0});
  CHECK(vandermonde(deg0) == FqMatrix(f5, {{1, 1, 1}}));
}

TEST_CASE("full square vandermonde has full rank") {
  std::mt19937 rng(37);
  for (uint32_t q : {5u, 7u, 11u}) {
    FieldSpec f(q);
    size_t n = q - 1;
    std::vector<uint32_t> pts = GrsSpec::default_points(f, n);
    GrsSpec spec = GrsSpec::make(f, pts, n, {n, 0, 0, 0});
    CHECK(rank(vandermonde(spec)) == n);
  }
}

TEST_CASE("spec validation") {
  FieldSpec f5(5);
  CHECK_THROWS_AS(GrsSpec::make(f5, {1, 2, 2}, 2, {0, 1, 0, 1}), DomainError);
  CHECK_THROWS_AS(GrsSpec::make(f5, {0, 1, 2}, 2, {0, 1, 0, 1}), DomainError);
  CHECK_THROWS_AS(GrsSpec::make(f5, {1, 2, 3}, 3, {0, 1, 0, 1}), DomainError);
  CHECK_THROWS_AS(GrsSpec::make(f5, {1, 2, 3, 4, 1}, 3, {0, 1, 1, 1}), DomainError);
  FieldSpec f3(3);
  CHECK_THROWS_AS(GrsSpec::make(f3, {1, 2, 1}, 2, {0, 1, 0, 1}), DomainError);
}

TEST_CASE("stack blocks for the (t,z,d) = (2,1,3) instance over F5") {
  // Corollary-style dims: b0=3, b1=1, b2=0, e=1, a1=2, a2=1
  FieldSpec f5(5);
  GrsSpec spec = GrsSpec::make(f5, {1, 2, 3}, 3, {1, 1, 0, 1});
  GrsStack st = grs_stack(spec);
  CHECK(st.a1_quotient == FqMatrix(f5, {{1, 1, 1}}));
  CHECK(st.a2 == FqMatrix(f5, {{1, 2, 3}}));
  CHECK(st.b2.rows() == 0);
  CHECK(st.e == FqMatrix(f5, {{1, 4, 4}}));
}

TEST_CASE("empty extension block") {
  FieldSpec f7(7);
  GrsSpec spec = GrsSpec::make(f7, {1, 2, 3, 4}, 3, {1, 1, 1, 0});
  GrsStack st = grs_stack(spec);
  CHECK(st.e.rows() == 0);
}

TEST_CASE("top blocks are MDS: Singleton met with equality") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    size_t n = 3 + rng() % 4;  // n <= 6
    FieldSpec f(next_prime(uint32_t(n) + 1));
    GrsSpec spec = GrsSpec::make(f, GrsSpec::default_points(f, n), n, {n, 0, 0, 0});
    FqMatrix v = vandermonde(spec);
    for (size_t k = 1; k <= n; ++k) {
      FqMatrix top(f, k, n);
      for (size_t r = 0; r < k; ++r)
        for (size_t c = 0; c < n; ++c) top.set(r, c, v.at(r, c));
      LinearCode code = LinearCode::from_generator(top);
      size_t w = weight(code);
      CHECK(w == n - k + 1);
      CHECK(w == oracle_weight(code));
    }
  }
}

TEST_CASE("nested top blocks meet the Singleton floor") {
  FieldSpec f7(7);
  size_t n = 5;
  GrsSpec spec = GrsSpec::make(f7, GrsSpec::default_points(f7, n), n, {n, 0, 0, 0});
  FqMatrix v = vandermonde(spec);
  auto top = [&](size_t k) {
    FqMatrix m(f7, k, n);
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < n; ++c) m.set(r, c, v.at(r, c));
    return LinearCode::from_generator(m);
  };
  for (size_t k0 = 2; k0 <= n; ++k0) {
    for (size_t k1 = 1; k1 < k0; ++k1) {
      CHECK(nested_weight_of(top(k0), top(k1)) >= n - k0 + 1);
    }
  }
}

TEST_SUITE_END();
