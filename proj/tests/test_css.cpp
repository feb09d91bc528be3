#include <doctest.h>

#include "ceqss/css.hpp"
#include "oracles.hpp"

using namespace ceqss;
using namespace ceqss::testing;

TEST_SUITE_BEGIN("css");

namespace {

CssCode code_312() {
  // CSS of the [3,2] evaluation code over span{(1,1,1)}: [[3,1,2]]_3
  FieldSpec f3(3);
  LinearCode c0 = LinearCode::from_generator(FqMatrix(f3, {{1, 1, 1}, {0, 1, 2}}));
  LinearCode c1 = LinearCode::from_generator(FqMatrix(f3, {{1, 1, 1}}));
  return css_new(c0, c1);
}

}  // namespace

TEST_CASE("css_new parameters") {
  CssCode c = code_312();
  CHECK(c.k == 1);
  CHECK(c.delta == 2);

  FieldSpec f2(2);
  CssCode c2 = css_new(LinearCode::full(f2, 2), LinearCode::zero(f2, 2));
  CHECK(c2.k == 2);
  CHECK(c2.delta == 1);

  LinearCode same = LinearCode::full(f2, 2);
  CHECK_THROWS_AS(css_new(same, same), DomainError);
}

TEST_CASE("is_authorized rank conditions") {
  CssCode c = code_312();
  CHECK(is_authorized(c, {1, 2}));
  CHECK(is_authorized(c, {1, 3}));
  CHECK(is_authorized(c, {2, 3}));
  CHECK(is_authorized(c, {1, 2, 3}));
  CHECK_FALSE(is_authorized(c, {1}));
  CHECK_FALSE(is_authorized(c, {}));
}

TEST_CASE("classification of the [[3,1,2]] code") {
  CssCode c = code_312();
  AccessReport rep = classify_subsets(c);
  CHECK(rep.t_min == 2);
  CHECK(rep.z_max == 1);
  CHECK(rep.intermediate.empty());
  CHECK(rep.authorized.size() == 4);   // the three 2-sets and the full set
  CHECK(rep.unauthorized.size() == 4); // the three singletons and {}
  CHECK(rep.authorized.size() + rep.unauthorized.size() + rep.intermediate.size() == 8);
}

TEST_CASE("guaranteed thresholds") {
  CssCode c = code_312();
  QssThresholds th = qss_thresholds(c);
  CHECK(th.t == 2);
  CHECK(th.z == 1);
  CHECK(th.m == 1);
  CHECK(th.w_j == 1);
  CHECK(th.cc_t == 2);

  // delta = 1 pushes the thresholds to the trivial corner
  FieldSpec f2(2);
  CssCode c2 = css_new(LinearCode::full(f2, 3), LinearCode::zero(f2, 3));
  QssThresholds th2 = qss_thresholds(c2);
  CHECK(th2.t == 3);
  CHECK(th2.z == 0);

  AccessReport rep = classify_subsets(c);
  CHECK(rep.t_min <= th.t);
  CHECK(rep.z_max >= th.z);
}

TEST_CASE("structural laws on random small instances") {
  std::mt19937 rng(43);
  int instances = 0;
  while (instances < 25) {
    uint32_t q = (instances % 3 == 0) ? 2 : (instances % 3 == 1 ? 3 : 5);
    FieldSpec f(q);
    size_t n = 2 + rng() % 5;  // n <= 6
    size_t k0 = 1 + rng() % n;
    size_t k1 = rng() % k0;
    auto [c0, c1] = random_nested(rng, f, n, k0, k1);
    if (c0.dim() == c1.dim()) continue;
    CssCode css = css_new(c0, c1);
    AccessReport rep = classify_subsets(css);
    ++instances;

    const uint32_t full = (uint32_t(1) << n) - 1;
    std::vector<char> auth(full + 1, 0);
    for (uint32_t m : rep.authorized) auth[m] = 1;
    std::vector<char> unauth(full + 1, 0);
    for (uint32_t m : rep.unauthorized) unauth[m] = 1;

    // monotonicity: adding one party keeps a set authorized
    for (uint32_t mask = 0; mask <= full; ++mask) {
      if (!auth[mask]) continue;
      for (size_t b = 0; b < n; ++b) {
        CHECK(auth[mask | (uint32_t(1) << b)]);
      }
    }
    // no two disjoint authorized sets
    for (uint32_t m1 : rep.authorized) {
      for (uint32_t m2 : rep.authorized) {
        CHECK((m1 & m2) != 0);
      }
    }
    // pure-state duality
    for (uint32_t mask = 0; mask <= full; ++mask) {
      CHECK(auth[mask] == unauth[full & ~mask]);
    }
    // party-count bound with equality for pure-state schemes
    CHECK(rep.t_min + rep.z_max == n);
  }
}

TEST_CASE("subset classification guard") {
  CssCode c = code_312();
  CHECK_THROWS_AS(classify_subsets(c, /*max_parties=*/2), ResourceError);
}

TEST_SUITE_END();
