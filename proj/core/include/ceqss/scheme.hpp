#pragma once

#include <array>
#include <optional>

#include "ceqss/css.hpp"
#include "ceqss/grs.hpp"

namespace ceqss {

/// The six classical codes behind a concatenated CE-QSS scheme.  All live
/// on the same n coordinates; E is held as a full-row-rank basis, so its
/// dimension equals its row count.
struct SchemeCodes {
  LinearCode b0, b1, b2, a1, a2, e;
};

struct BuildOptions {
  size_t enum_budget = kDefaultEnumBudget;
};

/// Nesting conditions and threshold inequalities for the concatenation.
/// The five minimum weights feed every inequality; they are only computed
/// once m1..m3 hold (the code sums are ill-formed otherwise).
struct ConditionReport {
  bool m1 = false, m2 = false, m3 = false;
  bool weights_computed = false;
  size_t w_a2b1_over_b1 = 0;        // wt((A2+B1)\B1)
  size_t w_a1b2_over_b2 = 0;        // wt((A1+B2)\B2)
  size_t w_dual_b1_over_dual_b0 = 0;  // wt(B1^perp \ B0^perp)
  size_t w_b0_over_b1 = 0;          // wt(B0\B1)
  size_t w_dual_b2_over_dual_a1b2 = 0;  // wt(B2^perp \ (A1+B2)^perp)
  size_t t_floor = 0;  // smallest admissible t
  size_t d_floor = 0;  // smallest admissible d
  size_t z_cap = 0;    // largest admissible z
  bool eq15a = false, eq15b = false, eq15c = false, eq15d = false;

  bool all_pass() const { return m1 && m2 && m3 && eq15a && eq15b && eq15c && eq15d; }
  /// "M1", ..., "Eq15d", or empty when everything passes.
  std::string first_failure() const;
};

class Scheme {
 public:
  FieldSpec field;
  SchemeCodes codes;
  /// Canonical generator [G_{A1/A2}; G_{A2}; G_{B2}; G_E] of B0; the
  /// encoding is G_{B0}^T M against exactly this row order.
  FqMatrix stack;

  size_t n, t, d, z;
  size_t b0, b1, b2, a1, a2, e;
  size_t v1, v2;
  size_t m;     // secret qudits per encoding, a1*v1
  size_t w;     // share size per party, v1+v2
  size_t cc_t;  // t*(v1+v2)
  size_t cc_d;  // d*v1

  ConditionReport conditions;

  /// Qudits downloaded from each accessed party under the two plans.
  size_t downloads_per_party_t() const { return v1 + v2; }
  size_t downloads_per_party_d() const { return v1; }

  /// Global coordinates (1-based, party-major, layer 1 before layer 2).
  IndexSet party_coords(size_t party) const;
  IndexSet layer1_coords(size_t party) const;
  IndexSet layer2_coords(size_t party) const;
  size_t total_coords() const { return n * (v1 + v2); }
};

/// Evaluates M1-M3 and Eq. 15 without throwing on a failed condition.
ConditionReport analyze_conditions(const FieldSpec& field, const SchemeCodes& codes,
                                   size_t t, size_t d, size_t z,
                                   const BuildOptions& opts = {});

/// Builds the scheme; throws DomainError carrying the first violated
/// condition code ("M1".."M3", "Eq15a".."Eq15d", "thresholds", ...).
Scheme build(const FieldSpec& field, const SchemeCodes& codes, size_t t, size_t d,
             size_t z, const BuildOptions& opts = {});

/// Corollary-style optimal instantiation from a stacked GRS generator:
/// b0=d, b1=z, b2=z-d+t, e=d-t, a1=d-z, a2=t-z on n = t+z parties.
/// Default evaluation points are 1..n.
Scheme optimal_grs(uint32_t q, size_t t, size_t d, size_t z,
                   std::optional<std::vector<uint32_t>> points = std::nullopt,
                   const BuildOptions& opts = {});

/// D1 is R12 read column-major and written column-major into a2 x v2.
FqMatrix rearrange_r12(const Scheme& s, const FqMatrix& r12);
FqMatrix unrearrange_d1(const Scheme& s, const FqMatrix& d1);

/// Share table G_{B0}^T M, one row per party; columns 1..v1 are layer 1,
/// the rest layer 2.
FqMatrix encode_classical(const Scheme& s, const FqMatrix& secret,
                          const FqMatrix& r11, const FqMatrix& r12,
                          const FqMatrix& r2);

struct RecoveryAccounting {
  size_t per_party;
  size_t total;
};

/// Layer-1-only recovery from >= d parties.  layer1 rows follow the
/// ascending party order of the (normalized) set.
FqMatrix recover_from_d(const Scheme& s, const IndexSet& parties,
                        const FqMatrix& layer1,
                        RecoveryAccounting* accounting = nullptr);

/// Two-stage recovery from >= t parties: layer 2 yields D1, the
/// rearrangement is inverted to R12, and layer 1 is solved with the
/// extension contribution cancelled.
FqMatrix recover_from_t(const Scheme& s, const IndexSet& parties,
                        const FqMatrix& layer1, const FqMatrix& layer2,
                        RecoveryAccounting* accounting = nullptr);

struct BoundCheck {
  uint64_t value;
  uint64_t bound_num, bound_den;  // bound = num/den, exact rational
  bool satisfied;                 // value >= bound
  bool tight;                     // value == bound
};

struct BoundsReport {
  BoundCheck storage;  // sum w_j vs n*m/(t-z)
  BoundCheck cc_t;     // CC(t) vs t*m/(t-z)
  BoundCheck cc_d;     // CC(d) vs d*m/(d-z)
  bool ce_holds;       // CC(d) < CC(t)
};

BoundsReport bounds_report(const Scheme& s);

/// The whole concatenated encoding as one CSS code on n*(v1+v2)
/// coordinates, for grouped-erasure access checks and simulation.
/// secret_directions is the exact coset offset map of the encoding.
struct FlattenedScheme {
  CssCode css;
  FqMatrix secret_directions;   // (a1*v1) x n*(v1+v2)
  FqMatrix randomness_directions;  // ((b2+e)*v1 + b1*v2) x n*(v1+v2)
};

FlattenedScheme flatten_css(const Scheme& s, size_t budget = kDefaultEnumBudget);

}  // namespace ceqss
