#pragma once

#include <cstdint>

#include "ceqss/codes.hpp"

namespace ceqss {

/// CSS(C0, C1): an [[n, k0-k1, delta]]_q quantum code from a strictly
/// nested classical pair.  The encoded state for a secret s is the coset
/// superposition over G_{C0/C1}^T s + C1; only that classical coset map
/// lives here, every access-structure statement is a rank condition.
struct CssCode {
  NestedPair pair;
  size_t k;      // k0 - k1
  size_t delta;  // min{wt(C0\C1), wt(C1^perp \ C0^perp)}

  size_t length() const { return pair.c0.length(); }
  const FieldSpec& field() const { return pair.c0.field(); }
};

CssCode css_new(const LinearCode& c0, const LinearCode& c1,
                size_t budget = kDefaultEnumBudget);

/// Rank test for an authorized set: recovery on J plus disentanglement
/// on the complement.
bool is_authorized(const CssCode& css, const IndexSet& j);

/// Guaranteed thresholds t = n - delta + 1, z = delta - 1, with the share
/// and communication accounting of the basic CSS secret sharing scheme.
struct QssThresholds {
  size_t t, z;
  size_t m;     // secret qudits, k0 - k1
  size_t w_j;   // one qudit per party
  size_t cc_t;  // t * w_j
};

QssThresholds qss_thresholds(const CssCode& css);

/// Exhaustive classification of all 2^n subsets.  Subsets are bitmasks
/// (bit i-1 = party i).  authorized/unauthorized/intermediate partition
/// 2^[n]; t_min and z_max are the extremal thresholds.
struct AccessReport {
  size_t n;
  std::vector<uint32_t> authorized;
  std::vector<uint32_t> unauthorized;
  std::vector<uint32_t> intermediate;
  size_t t_min;
  size_t z_max;
};

AccessReport classify_subsets(const CssCode& css, size_t max_parties = 20);

IndexSet bitmask_to_set(uint32_t mask, size_t n);

}  // namespace ceqss
