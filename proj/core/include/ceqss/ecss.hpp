#pragma once

#include "ceqss/css.hpp"

namespace ceqss {

/// Extended CSS code ECSS(F0, F1, GE): the CSS code on n+e coordinates
/// whose generators append an identity block to GE,
///   G_{C0} = [[G_{F0}, 0], [GE, I_e]],  G_{C1} = [[G_{F1}, 0], [GE, I_e]].
/// Coordinates 1..n are the original qudits, n+1..n+e the extension
/// qudits.  GE may have dependent rows; e counts rows, not rank.
struct ExtendedCssSpec {
  LinearCode f0;
  LinearCode f1;
  FqMatrix ge;
  size_t e;
  CssCode big;

  size_t original_len() const { return f0.length(); }
};

/// Validates F1 strictly inside F0 (throws DomainError("nesting")) and
/// F0 meeting rowspace(GE) only in 0 (throws DomainError("intersection")).
ExtendedCssSpec ecss_new(const LinearCode& f0, const LinearCode& f1, FqMatrix ge,
                         size_t budget = kDefaultEnumBudget);

/// Which GE rows (equivalently, which extension qudits) the combiner
/// already holds.  Theorem-level statements only need the two row spaces,
/// so arbitrary row subsets are allowed, not just prefixes.
struct ExtensionSplit {
  std::vector<size_t> u_rows;  // 1-based GE row indices, ascending
  FqMatrix gu;
  FqMatrix gv;

  static ExtensionSplit prefix(const ExtendedCssSpec& spec, size_t u);
  static ExtensionSplit from_rows(const ExtendedCssSpec& spec, IndexSet rows);
};

struct TauResult {
  size_t value;
  bool clamped;  // formula landed outside [0, n]
};

/// tau_u = n - min{ wt((F0+V)\(F1+V)), wt((F1+U)^perp \ (F0+U)^perp) } + 1.
TauResult tau(const ExtendedCssSpec& spec, const ExtensionSplit& split,
              size_t budget = kDefaultEnumBudget);

/// Specializations u = e and u = 0.
TauResult tau_full(const ExtendedCssSpec& spec, size_t budget = kDefaultEnumBudget);
TauResult tau_none(const ExtendedCssSpec& spec, size_t budget = kDefaultEnumBudget);

/// Exhaustive reference value: the smallest tau such that every
/// J subseteq [n] of size tau has J plus the accessible extension
/// coordinates authorized in the big CSS code.
size_t tau_oracle(const ExtendedCssSpec& spec, const ExtensionSplit& split);

}  // namespace ceqss
