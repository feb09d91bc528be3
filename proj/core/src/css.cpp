#include "ceqss/css.hpp"

namespace ceqss {

CssCode css_new(const LinearCode& c0, const LinearCode& c1, size_t budget) {
  NestedPair pair = NestedPair::make(c0, c1);
  if (!pair.strict) throw DomainError("nesting", "CSS needs C1 strictly inside C0");
  size_t w_primal = nested_weight(pair, budget);
  // dual pair: C0 strictly above C1 makes C1^perp strictly above C0^perp
  size_t w_dual = nested_weight_of(dual(c1), dual(c0), budget);
  size_t k = c0.dim() - c1.dim();
  return CssCode{std::move(pair), k, std::min(w_primal, w_dual)};
}

bool is_authorized(const CssCode& css, const IndexSet& j) {
  const size_t n = css.length();
  IndexSet jj = normalize_index_set(j, n);
  IndexSet comp = complement_set(jj, n);
  const FqMatrix& g0 = css.pair.c0.gen();
  const FqMatrix& g1 = css.pair.c1.gen();
  size_t on_j = rank(column_submatrix(g0, jj)) - rank(column_submatrix(g1, jj));
  if (on_j != css.k) return false;
  size_t on_comp = rank(column_submatrix(g0, comp)) - rank(column_submatrix(g1, comp));
  return on_comp == 0;
}

QssThresholds qss_thresholds(const CssCode& css) {
  const size_t n = css.length();
  QssThresholds th;
  th.t = n - css.delta + 1;
  th.z = css.delta - 1;
  th.m = css.k;
  th.w_j = 1;
  th.cc_t = th.t;
  return th;
}

IndexSet bitmask_to_set(uint32_t mask, size_t n) {
  IndexSet s;
  for (size_t i = 1; i <= n; ++i) {
    if (mask & (uint32_t(1) << (i - 1))) s.push_back(i);
  }
  return s;
}

AccessReport classify_subsets(const CssCode& css, size_t max_parties) {
  const size_t n = css.length();
  if (n > max_parties || n >= 31)
    throw ResourceError("subset_budget", "too many parties for exhaustive classification");

  const uint32_t full = (uint32_t(1) << n) - 1;
  std::vector<char> auth(full + 1);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    auth[mask] = is_authorized(css, bitmask_to_set(mask, n));
  }

  AccessReport rep;
  rep.n = n;
  size_t largest_not_auth = 0;
  size_t smallest_not_unauth = n;
  for (uint32_t mask = 0; mask <= full; ++mask) {
    size_t size = static_cast<size_t>(__builtin_popcount(mask));
    bool is_auth = auth[mask];
    // pure-state duality: unauthorized exactly when the complement recovers
    bool is_unauth = auth[full & ~mask];
    if (is_auth) {
      rep.authorized.push_back(mask);
    } else if (is_unauth) {
      rep.unauthorized.push_back(mask);
    } else {
      rep.intermediate.push_back(mask);
    }
    if (!is_auth) largest_not_auth = std::max(largest_not_auth, size);
    if (!is_unauth) smallest_not_unauth = std::min(smallest_not_unauth, size);
  }
  rep.t_min = largest_not_auth + 1;
  rep.z_max = smallest_not_unauth == 0 ? 0 : smallest_not_unauth - 1;
  return rep;
}

}  // namespace ceqss
