#pragma once

#include <array>
#include <cstdint>

namespace ceqss {

/// The worked 3-party staircase example over F_5 with t = 2, d = 3:
///   layer 1: s + r1 + r2,   s + 2 r1 + 4 r2,   s + 3 r1 + 4 r2
///   layer 2: r2 + r3,       r2 + 2 r3,         r2 + 3 r3
/// Kept verbatim as a golden fixture; it is not derived from the general
/// construction machinery on purpose.
struct StaircaseShares {
  std::array<uint32_t, 3> layer1;
  std::array<uint32_t, 3> layer2;
};

StaircaseShares demo_encode(uint32_t s, uint32_t r1, uint32_t r2, uint32_t r3);

/// Snapshots of the two-party recovery walkthrough: decode layer 2 for
/// (r2, r3), cancel r2 from layer 1, then solve for (s, r1).
struct TwoPartySteps {
  std::array<uint32_t, 2> parties;
  std::array<uint32_t, 2> layer1_start, layer2_start;
  std::array<uint32_t, 2> after_layer2;   // (r2, r3)
  std::array<uint32_t, 2> after_cancel;   // (s + p r1) per accessed party
  std::array<uint32_t, 2> solved;         // (s, r1)
};

/// Recover s from the full shares of two distinct parties (1-based).
uint32_t demo_recover_two(const StaircaseShares& shares, uint32_t party_a,
                          uint32_t party_b, TwoPartySteps* steps = nullptr);

/// Recover s from layer 1 of all three parties (3 downloaded symbols vs 4).
uint32_t demo_recover_three(const std::array<uint32_t, 3>& layer1);

/// Exact counting over all 5^3 randomness tuples: every single party's
/// (layer1, layer2) pair distribution is uniform and independent of s.
bool demo_secrecy_check();

}  // namespace ceqss
