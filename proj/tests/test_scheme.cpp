#include <doctest.h>

#include <numeric>

#include "ceqss/scheme.hpp"
#include "oracles.hpp"

using namespace ceqss;
using namespace ceqss::testing;

TEST_SUITE_BEGIN("scheme");

namespace {

Scheme scheme_5231() { return optimal_grs(5, 2, 3, 1); }

// sweep helper: apply fn to every (secret, r12, r2) tuple of the
// (5,2,3,1) instance (R11 is empty there)
template <typename Fn>
void sweep_5231(const Scheme& s, Fn&& fn) {
  FieldSpec f = s.field;
  for (uint32_t s0 = 0; s0 < 5; ++s0)
    for (uint32_t s1 = 0; s1 < 5; ++s1)
      for (uint32_t r12 = 0; r12 < 5; ++r12)
        for (uint32_t r2 = 0; r2 < 5; ++r2) {
          FqMatrix secret(f, 2, 1), m_r11(f, 0, 1), m_r12(f, 1, 1), m_r2(f, 1, 1);
          secret.set(0, 0, s0);
          secret.set(1, 0, s1);
          m_r12.set(0, 0, r12);
          m_r2.set(0, 0, r2);
          fn(secret, m_r11, m_r12, m_r2);
        }
}

}  // namespace

TEST_CASE("corollary instance (5,2,3,1)") {
  Scheme s = scheme_5231();
  CHECK(s.n == 3);
  CHECK(s.v1 == 1);
  CHECK(s.v2 == 1);
  CHECK(s.m == 2);
  CHECK(s.w == 2);
  CHECK(s.cc_t == 4);
  CHECK(s.cc_d == 3);
  CHECK(s.b2 == 0);
  CHECK(s.e == 1);
  // canonical stack is the degree-ordered GRS generator
  CHECK(s.stack == FqMatrix(s.field, {{1, 1, 1}, {1, 2, 3}, {1, 4, 4}}));
}

TEST_CASE("optimal_grs input validation") {
  CHECK_THROWS_AS(optimal_grs(6, 2, 3, 1), DomainError);   // composite q
  CHECK_THROWS_AS(optimal_grs(3, 2, 3, 1), DomainError);   // q < n+1
  CHECK_THROWS_AS(optimal_grs(5, 3, 3, 1), DomainError);   // t = d
  CHECK_THROWS_AS(optimal_grs(5, 2, 4, 1), DomainError);   // d > t+z
  CHECK_THROWS_AS(optimal_grs(5, 2, 3, 0), DomainError);   // z = 0
  try {
    optimal_grs(6, 2, 3, 1);
  } catch (const DomainError& e) {
    CHECK(e.code() == "field");
  }
  try {
    optimal_grs(5, 3, 3, 1);
  } catch (const DomainError& e) {
    CHECK(e.code() == "thresholds");
  }
}

TEST_CASE("build rejects broken nesting and the exact cost ratio") {
  Scheme good = scheme_5231();
  FieldSpec f = good.field;

  // B2 = B1 kills M1 strictness
  SchemeCodes broken = good.codes;
  broken.b2 = good.codes.b1;
  try {
    build(f, broken, good.t, good.d, good.z);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "M1");
  }

  // a2 = 2, e = 1 on a GRS stack over F7 with n = 6: (t, d) = (4, 6) hits
  // d/t = (a2+e)/a2 = 3/2 exactly while every other condition holds
  FieldSpec f7(7);
  GrsSpec spec = GrsSpec::make(f7, {1, 2, 3, 4, 5, 6}, 4, {0, 2, 1, 1});
  GrsStack st = grs_stack(spec);
  SchemeCodes codes{LinearCode::from_generator(vandermonde(spec)),
                    LinearCode::from_generator(st.b2.vcat(st.e)),
                    LinearCode::from_generator(st.b2),
                    LinearCode::from_generator(st.a2),  // A1 = A2 here
                    LinearCode::from_generator(st.a2),
                    LinearCode::from_generator(st.e)};
  try {
    build(f7, codes, 4, 6, 1);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.code() == "Eq15d");
  }
}

TEST_CASE("share encoding of the (5,2,3,1) instance") {
  Scheme s = scheme_5231();
  FieldSpec f = s.field;

  FqMatrix zero_table =
      encode_classical(s, FqMatrix(f, 2, 1), FqMatrix(f, 0, 1), FqMatrix(f, 1, 1),
                       FqMatrix(f, 1, 1));
  CHECK(zero_table.is_zero());

  // layer 1 is s0*(1,1,1) + s1*(1,2,3) + r*(1,4,4); layer 2 only sees D1, R2
  sweep_5231(s, [&](const FqMatrix& secret, const FqMatrix& r11, const FqMatrix& r12,
                    const FqMatrix& r2) {
    FqMatrix table = encode_classical(s, secret, r11, r12, r2);
    for (size_t p = 0; p < 3; ++p) {
      uint32_t x = uint32_t(p) + 1;
      uint32_t expect = f.add(
          f.add(secret.at(0, 0), f.mul(x, secret.at(1, 0))),
          f.mul(f.mul(x, x), r12.at(0, 0)));
      CHECK(table.at(p, 0) == expect);
      // D1 = R12 here (one entry), layer 2 encodes it over (1,2,3) + r2*(1,4,4)
      uint32_t expect2 = f.add(f.mul(x, r12.at(0, 0)),
                               f.mul(f.mul(x, x), r2.at(0, 0)));
      CHECK(table.at(p, 1) == expect2);
    }
  });
}

TEST_CASE("layer 2 never depends on the secret") {
  Scheme s = scheme_5231();
  FieldSpec f = s.field;
  FqMatrix r11(f, 0, 1), r12(f, 1, 1), r2(f, 1, 1);
  r12.set(0, 0, 3);
  r2.set(0, 0, 2);
  FqMatrix base(f, 2, 1);
  FqMatrix table0 = encode_classical(s, base, r11, r12, r2);
  for (uint32_t s0 = 0; s0 < 5; ++s0)
    for (uint32_t s1 = 0; s1 < 5; ++s1) {
      FqMatrix secret(f, 2, 1);
      secret.set(0, 0, s0);
      secret.set(1, 0, s1);
      FqMatrix table = encode_classical(s, secret, r11, r12, r2);
      for (size_t p = 0; p < 3; ++p) CHECK(table.at(p, 1) == table0.at(p, 1));
    }
}

TEST_CASE("exhaustive d-recovery round trip") {
  Scheme s = scheme_5231();
  size_t cases = 0;
  sweep_5231(s, [&](const FqMatrix& secret, const FqMatrix& r11, const FqMatrix& r12,
                    const FqMatrix& r2) {
    FqMatrix table = encode_classical(s, secret, r11, r12, r2);
    FqMatrix layer1(s.field, 3, 1);
    for (size_t p = 0; p < 3; ++p) layer1.set(p, 0, table.at(p, 0));
    RecoveryAccounting acct{};
    FqMatrix rec = recover_from_d(s, {1, 2, 3}, layer1, &acct);
    CHECK(rec == secret);
    CHECK(acct.total == s.cc_d);
    CHECK(acct.per_party == s.v1);
    ++cases;
  });
  CHECK(cases == 625);
}

TEST_CASE("exhaustive t-recovery round trip over all pairs") {
  Scheme s = scheme_5231();
  const IndexSet pairs[] = {{1, 2}, {1, 3}, {2, 3}};
  size_t cases = 0;
  sweep_5231(s, [&](const FqMatrix& secret, const FqMatrix& r11, const FqMatrix& r12,
                    const FqMatrix& r2) {
    FqMatrix table = encode_classical(s, secret, r11, r12, r2);
    for (const IndexSet& j : pairs) {
      FqMatrix layer1(s.field, 2, 1), layer2(s.field, 2, 1);
      for (size_t i = 0; i < 2; ++i) {
        layer1.set(i, 0, table.at(j[i] - 1, 0));
        layer2.set(i, 0, table.at(j[i] - 1, 1));
      }
      RecoveryAccounting acct{};
      FqMatrix rec = recover_from_t(s, j, layer1, layer2, &acct);
      CHECK(rec == secret);
      CHECK(acct.total == s.cc_t);
      ++cases;
    }
  });
  CHECK(cases == 3 * 625);
}

TEST_CASE("tampered shares raise an integrity error") {
  Scheme s = scheme_5231();
  FieldSpec f = s.field;
  FqMatrix secret(f, 2, 1), r11(f, 0, 1), r12(f, 1, 1), r2(f, 1, 1);
  secret.set(0, 0, 3);
  r12.set(0, 0, 1);
  FqMatrix table = encode_classical(s, secret, r11, r12, r2);
  FqMatrix layer1(f, 3, 1);
  for (size_t p = 0; p < 3; ++p) layer1.set(p, 0, table.at(p, 0));
  layer1.set(1, 0, f.add(layer1.at(1, 0), 1));
  CHECK_THROWS_AS(recover_from_d(s, {1, 2, 3}, layer1), IntegrityError);

  CHECK_THROWS_AS(recover_from_d(s, {1, 2}, FqMatrix(f, 2, 1)), DomainError);
}

TEST_CASE("stage-2 residual is an (A1+B2) codeword") {
  Scheme s = scheme_5231();
  FieldSpec f = s.field;
  LinearCode a1b2 = sum_code(s.codes.a1, s.codes.b2);
  sweep_5231(s, [&](const FqMatrix& secret, const FqMatrix& r11, const FqMatrix& r12,
                    const FqMatrix& r2) {
    FqMatrix table = encode_classical(s, secret, r11, r12, r2);
    // subtract the G_E^T R12 term from the full layer-1 column
    std::vector<uint32_t> residual(3);
    for (size_t p = 0; p < 3; ++p) {
      uint32_t ext = f.mul(s.codes.e.gen().at(0, p), r12.at(0, 0));
      residual[p] = f.sub(table.at(p, 0), ext);
    }
    CHECK(a1b2.contains(residual));
  });
}

TEST_CASE("bounds are tight for the optimal construction") {
  Scheme s = scheme_5231();
  BoundsReport rep = bounds_report(s);
  CHECK(rep.storage.value == 6);
  CHECK(rep.storage.bound_num == 6);
  CHECK(rep.storage.bound_den == 1);
  CHECK(rep.storage.tight);
  CHECK(rep.cc_t.tight);   // 4 = 2*2/(2-1)
  CHECK(rep.cc_d.tight);   // 3 = 3*2/(3-1)
  CHECK(rep.ce_holds);
}

TEST_CASE("(7,3,5,2) parameters") {
  Scheme s = optimal_grs(7, 3, 5, 2);
  CHECK(s.n == 5);
  CHECK(s.m == 3);      // lcm(3,1)
  CHECK(s.w == 3);
  CHECK(s.cc_t == 9);
  CHECK(s.cc_d == 5);
  BoundsReport rep = bounds_report(s);
  CHECK(rep.storage.tight);
  CHECK(rep.cc_t.tight);
  CHECK(rep.cc_d.tight);
}

TEST_CASE("corollary sweep with small n") {
  for (size_t z = 1; z <= 2; ++z) {
    for (size_t t = z + 1; t <= z + 2; ++t) {
      for (size_t d = t + 1; d <= t + z && t + z <= 5; ++d) {
        size_t n = t + z;
        uint32_t q = next_prime(uint32_t(n) + 1);
        Scheme s = optimal_grs(q, t, d, z);
        size_t g = std::gcd(d - z, t - z);
        CHECK(s.m == (d - z) * (t - z) / g);  // lcm(d-z, t-z)
        CHECK(s.w == (d - z) / g);
        CHECK(s.conditions.all_pass());
      }
    }
  }
}

TEST_CASE("rearrangement is a bijection") {
  // (7,4,5,2): a2 = 2, e = 1, so R12 is 1x2 and D1 is 2x1
  Scheme s = optimal_grs(7, 4, 5, 2);
  CHECK(s.e == 1);
  CHECK(s.v1 == 2);
  CHECK(s.v2 == 1);
  std::mt19937 rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    FqMatrix r12 = random_matrix(rng, s.field, s.e, s.v1);
    FqMatrix d1 = rearrange_r12(s, r12);
    CHECK(d1.rows() == s.a2);
    CHECK(d1.cols() == s.v2);
    CHECK(unrearrange_d1(s, d1) == r12);
  }
}

TEST_CASE("grouped access structure of the flattened code") {
  Scheme s = scheme_5231();
  FlattenedScheme flat = flatten_css(s);
  CHECK(flat.css.length() == 6);
  CHECK(flat.css.k == 2);

  auto coords_of = [&](std::initializer_list<size_t> parties) {
    IndexSet out;
    for (size_t p : parties) {
      IndexSet pc = s.party_coords(p);
      out.insert(out.end(), pc.begin(), pc.end());
    }
    return out;
  };

  // every pair of parties recovers, every single party learns nothing
  for (size_t a = 1; a <= 3; ++a) {
    CHECK_FALSE(is_authorized(flat.css, coords_of({a})));
    // complement of a singleton is a pair: unauthorized by duality
    for (size_t b = a + 1; b <= 3; ++b) {
      CHECK(is_authorized(flat.css, coords_of({a, b})));
    }
  }
  CHECK(is_authorized(flat.css, coords_of({1, 2, 3})));

  // layer-1-only erasure pattern: all three layer-1 coordinates recover
  IndexSet layer1_all;
  for (size_t p = 1; p <= 3; ++p) {
    IndexSet l1 = s.layer1_coords(p);
    layer1_all.insert(layer1_all.end(), l1.begin(), l1.end());
  }
  CHECK(is_authorized(flat.css, layer1_all));
}

TEST_CASE("explicit build accepts the GRS codes it was given") {
  Scheme viaGrs = optimal_grs(7, 2, 3, 1);
  Scheme direct = build(viaGrs.field, viaGrs.codes, 2, 3, 1);
  CHECK(direct.stack == viaGrs.stack);
  CHECK(direct.m == viaGrs.m);
}

TEST_SUITE_END();
