#include <doctest.h>

#include "ceqss/ecss.hpp"
#include "oracles.hpp"

using namespace ceqss;
using namespace ceqss::testing;

TEST_SUITE_BEGIN("ecss");

namespace {

// F0 = span{(1,1,1),(1,2,3)}, F1 = 0, GE = [(1,4,4)] over F5
ExtendedCssSpec example_f5() {
  FieldSpec f5(5);
  LinearCode f0 = LinearCode::from_generator(FqMatrix(f5, {{1, 1, 1}, {1, 2, 3}}));
  LinearCode f1 = LinearCode::zero(f5, 3);
  return ecss_new(f0, f1, FqMatrix(f5, {{1, 4, 4}}));
}

ExtendedCssSpec random_ecss(std::mt19937& rng, uint32_t q, size_t max_n,
                            size_t max_e) {
  FieldSpec f(q);
  for (;;) {
    size_t n = 2 + rng() % (max_n - 1);
    size_t e = rng() % (max_e + 1);
    // leave room for the extension rows so rejection stays cheap
    size_t f0_cap = std::max<size_t>(1, n > e ? n - e : 1);
    size_t f0_dim = 1 + rng() % f0_cap;
    size_t f1_dim = rng() % f0_dim;
    auto [f0, f1] = random_nested(rng, f, n, f0_dim, f1_dim);
    FqMatrix ge = random_matrix(rng, f, e, n);
    if (rank(f0.gen().vcat(ge)) != f0.dim() + rank(ge)) continue;
    return ecss_new(f0, f1, ge);
  }
}

}  // namespace

TEST_CASE("construction and the N conditions") {
  ExtendedCssSpec spec = example_f5();
  CHECK(spec.e == 1);
  CHECK(spec.big.length() == 4);
  CHECK(spec.big.k == 2);

  FieldSpec f5(5);
  LinearCode f0 = LinearCode::from_generator(FqMatrix(f5, {{1, 1, 1}, {1, 2, 3}}));
  LinearCode f1 = LinearCode::zero(f5, 3);
  // a GE row inside F0 violates N2
  CHECK_THROWS_AS(ecss_new(f0, f1, FqMatrix(f5, {{1, 2, 3}})), DomainError);
  // F1 = F0 violates N1
  CHECK_THROWS_AS(ecss_new(f0, f0, FqMatrix(f5, {{1, 4, 4}})), DomainError);
}

TEST_CASE("empty extension degenerates to the plain CSS code") {
  FieldSpec f3(3);
  LinearCode f0 = LinearCode::from_generator(FqMatrix(f3, {{1, 1, 1}, {0, 1, 2}}));
  LinearCode f1 = LinearCode::from_generator(FqMatrix(f3, {{1, 1, 1}}));
  ExtendedCssSpec spec = ecss_new(f0, f1, FqMatrix(f3, 0, 3));
  CHECK(spec.e == 0);
  CHECK(spec.big.length() == 3);
  CHECK(spec.big.delta == 2);
  CHECK(tau_full(spec).value == tau_none(spec).value);
}

TEST_CASE("worked F5 thresholds") {
  ExtendedCssSpec spec = example_f5();
  // u = e = 1: wt(F0\0) = 2 and wt((F1+E)^perp \ 0) = 2 via (1,0,1)
  CHECK(tau_full(spec).value == 2);
  // u = 0: F0+E is everything, F1^perp is everything; both weights 1
  CHECK(tau_none(spec).value == 3);
  CHECK(tau_oracle(spec, ExtensionSplit::prefix(spec, 1)) == 2);
  CHECK(tau_oracle(spec, ExtensionSplit::prefix(spec, 0)) == 3);

  CHECK(tau(spec, ExtensionSplit::prefix(spec, 1)).value == 2);
  CHECK(tau(spec, ExtensionSplit::prefix(spec, 0)).value == 3);
}

TEST_CASE("formula equals oracle on randomized specs, every split") {
  std::mt19937 rng(47);
  int specs = 0;
  while (specs < 40) {
    uint32_t q = (specs % 3 == 0) ? 2 : (specs % 3 == 1 ? 3 : 5);
    ExtendedCssSpec spec = random_ecss(rng, q, /*max_n=*/5, /*max_e=*/2);
    ++specs;
    for (size_t u = 0; u <= spec.e; ++u) {
      ExtensionSplit split = ExtensionSplit::prefix(spec, u);
      TauResult formula = tau(spec, split);
      CHECK_FALSE(formula.clamped);
      CHECK(formula.value == tau_oracle(spec, split));
    }
  }
}

TEST_CASE("arbitrary row splits agree with the oracle") {
  std::mt19937 rng(53);
  int specs = 0;
  while (specs < 15) {
    ExtendedCssSpec spec = random_ecss(rng, 3, 5, 2);
    if (spec.e == 0) continue;
    ++specs;
    for (uint32_t mask = 0; mask < (uint32_t(1) << spec.e); ++mask) {
      IndexSet rows;
      for (size_t i = 1; i <= spec.e; ++i)
        if (mask & (uint32_t(1) << (i - 1))) rows.push_back(i);
      ExtensionSplit split = ExtensionSplit::from_rows(spec, rows);
      CHECK(tau(spec, split).value == tau_oracle(spec, split));
    }
  }
}

TEST_CASE("more prior access never raises the threshold") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    ExtendedCssSpec spec = random_ecss(rng, 3, 5, 2);
    size_t prev = tau(spec, ExtensionSplit::prefix(spec, 0)).value;
    for (size_t u = 1; u <= spec.e; ++u) {
      size_t cur = tau(spec, ExtensionSplit::prefix(spec, u)).value;
      CHECK(cur <= prev);
      prev = cur;
    }
    CHECK(tau_full(spec).value <= tau_none(spec).value);
  }
}

TEST_CASE("rank-difference lemmas, both directions, exhaustive") {
  // for all rho: [every |P| = rho has rank G0^(P) - rank G1^(P) = k0-k1]
  //   iff rho >= n - wt(C0\C1) + 1, and the complement-side analogue
  std::mt19937 rng(61);
  int pairs = 0;
  while (pairs < 12) {
    size_t n = 3 + rng() % 4;  // n <= 6
    FieldSpec f(pairs % 2 ? 2 : 3);
    size_t k0 = 1 + rng() % n;
    size_t k1 = rng() % k0;
    auto [c0, c1] = random_nested(rng, f, n, k0, k1);
    if (c0.dim() == c1.dim()) continue;
    ++pairs;

    size_t w_primal = nested_weight_of(c0, c1);
    size_t w_dual = nested_weight_of(dual(c1), dual(c0));

    for (size_t rho = 1; rho <= n; ++rho) {
      bool all_recover = true, all_disentangle = true;
      for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        if (static_cast<size_t>(__builtin_popcount(mask)) != rho) continue;
        IndexSet p = bitmask_to_set(mask, n);
        IndexSet pbar = complement_set(p, n);
        size_t d0 = rank(column_submatrix(c0.gen(), p));
        size_t d1 = rank(column_submatrix(c1.gen(), p));
        if (d0 - d1 != k0 - k1) all_recover = false;
        size_t e0 = rank(column_submatrix(c0.gen(), pbar));
        size_t e1 = rank(column_submatrix(c1.gen(), pbar));
        if (e0 != e1) all_disentangle = false;
      }
      CHECK(all_recover == (rho >= n - std::min(w_primal, n) + 1));
      CHECK(all_disentangle == (rho + w_dual >= n + 1));
    }
  }
}

TEST_SUITE_END();
