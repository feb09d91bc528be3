#include "ceqss/demo.hpp"

#include <map>

#include "ceqss/errors.hpp"
#include "ceqss/gf.hpp"

namespace ceqss {

namespace {

const FieldSpec& f5() {
  static FieldSpec f(5);
  return f;
}

uint32_t l1(uint32_t s, uint32_t r1, uint32_t r2, uint32_t party) {
  // s + party*r1 + party^2*r2
  const FieldSpec& f = f5();
  uint32_t sq = f.mul(party, party);
  return f.add(s, f.add(f.mul(party, r1), f.mul(sq, r2)));
}

uint32_t l2(uint32_t r2, uint32_t r3, uint32_t party) {
  const FieldSpec& f = f5();
  return f.add(r2, f.mul(party, r3));
}

}  // namespace

StaircaseShares demo_encode(uint32_t s, uint32_t r1, uint32_t r2, uint32_t r3) {
  const FieldSpec& f = f5();
  for (uint32_t v : {s, r1, r2, r3}) {
    if (v >= f.q()) throw DomainError("element", "symbol out of range");
  }
  StaircaseShares out;
  for (uint32_t p = 1; p <= 3; ++p) {
    out.layer1[p - 1] = l1(s, r1, r2, p);
    out.layer2[p - 1] = l2(r2, r3, p);
  }
  return out;
}

uint32_t demo_recover_two(const StaircaseShares& shares, uint32_t party_a,
                          uint32_t party_b, TwoPartySteps* steps) {
  if (party_a < 1 || party_a > 3 || party_b < 1 || party_b > 3 || party_a == party_b)
    throw DomainError("parties", "need two distinct parties in {1,2,3}");
  const FieldSpec& f = f5();
  const uint32_t pa = party_a, pb = party_b;
  const uint32_t ya1 = shares.layer1[pa - 1], yb1 = shares.layer1[pb - 1];
  const uint32_t ya2 = shares.layer2[pa - 1], yb2 = shares.layer2[pb - 1];

  // layer 2 rows are (1, p): subtract to isolate r3, back-substitute r2
  uint32_t r3 = f.mul(f.sub(yb2, ya2), f.inv(f.sub(pb, pa)));
  uint32_t r2 = f.sub(ya2, f.mul(pa, r3));

  // cancel the extension symbol r2 from layer 1 (coefficient p^2)
  uint32_t ca = f.sub(ya1, f.mul(f.mul(pa, pa), r2));
  uint32_t cb = f.sub(yb1, f.mul(f.mul(pb, pb), r2));

  // rows are now (1, p): solve for (s, r1)
  uint32_t r1 = f.mul(f.sub(cb, ca), f.inv(f.sub(pb, pa)));
  uint32_t s = f.sub(ca, f.mul(pa, r1));

  if (steps) {
    steps->parties = {pa, pb};
    steps->layer1_start = {ya1, yb1};
    steps->layer2_start = {ya2, yb2};
    steps->after_layer2 = {r2, r3};
    steps->after_cancel = {ca, cb};
    steps->solved = {s, r1};
  }
  return s;
}

uint32_t demo_recover_three(const std::array<uint32_t, 3>& layer1) {
  const FieldSpec& f = f5();
  // Vandermonde system on (s, r1, r2) at points 1, 2, 3; forward
  // elimination of the differences isolates r2 first
  uint32_t d1 = f.sub(layer1[1], layer1[0]);  // r1 + 3 r2
  uint32_t d2 = f.sub(layer1[2], layer1[1]);  // r1 + 5 r2 = r1 (mod 5)... keep general
  // second difference removes r1: d2 - d1 = (3-2)(... ) use exact rows:
  // row p: s + p r1 + p^2 r2 -> d(p) = r1 + (2p+1) r2
  uint32_t r2 = f.mul(f.sub(d2, d1), f.inv(2));  // (d2-d1) = 2 r2
  uint32_t r1 = f.sub(d1, f.mul(3, r2));
  uint32_t s = f.sub(layer1[0], f.add(r1, r2));
  return s;
}

bool demo_secrecy_check() {
  const uint32_t q = 5;
  for (uint32_t party = 1; party <= 3; ++party) {
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> baseline;
    for (uint32_t s = 0; s < q; ++s) {
      std::map<std::pair<uint32_t, uint32_t>, uint32_t> counts;
      for (uint32_t r1 = 0; r1 < q; ++r1)
        for (uint32_t r2 = 0; r2 < q; ++r2)
          for (uint32_t r3 = 0; r3 < q; ++r3) {
            StaircaseShares sh = demo_encode(s, r1, r2, r3);
            counts[{sh.layer1[party - 1], sh.layer2[party - 1]}]++;
          }
      // uniform over the 25 symbol pairs
      if (counts.size() != q * q) return false;
      for (const auto& [pair, c] : counts) {
        if (c != q) return false;
      }
      if (s == 0) {
        baseline = counts;
      } else if (counts != baseline) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ceqss
