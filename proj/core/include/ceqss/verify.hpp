#pragma once

#include "ceqss/io.hpp"

namespace ceqss {

struct VerifyFlags {
  bool access = false;
  bool simulate = false;
  bool tau = false;
  size_t enum_budget = kDefaultEnumBudget;
  size_t state_guard = size_t(1) << 24;
  size_t max_access_parties = 20;
};

struct VerifyOutcome {
  bool pass = false;
  std::string report_json;  // deterministic bytes
};

/// Evaluates the construction conditions, cost formulas and bounds, plus
/// the optional exhaustive suites, and serializes a verification report
/// echoing the descriptor hash.  Resource guards surface as
/// ResourceError; condition failures are reported, not thrown.
VerifyOutcome run_verify(const SchemeDescriptor& desc, const std::string& descriptor_bytes,
                         const VerifyFlags& flags);

/// Exhaustive grouped-erasure access classification of a built scheme
/// (rank side only), serialized as JSON.
std::string access_report_json(const Scheme& s, size_t enum_budget,
                               size_t max_parties = 20);

/// Formula-vs-oracle table for the scheme's ECSS(A1+B2, B2, G_E) at
/// every prior-access count u.
std::string tau_report_json(const Scheme& s, size_t enum_budget, bool* all_match);

/// Rank vs entropy classification of every party subset on the
/// reference-entangled flattened encoding.
std::string simulation_report_json(const Scheme& s, size_t enum_budget,
                                   size_t state_guard, bool* all_match);

std::string bounds_report_json(const Scheme& s);

}  // namespace ceqss
