#include "ceqss/ecss.hpp"

#include <algorithm>

namespace ceqss {

namespace {

// [[top, 0], [ge, I_e]] on n+e coordinates
FqMatrix extended_generator(const FqMatrix& top, const FqMatrix& ge) {
  const FieldSpec& f = top.field();
  const size_t e = ge.rows();
  FqMatrix zeros(f, top.rows(), e);
  FqMatrix upper = top.hcat(zeros);
  FqMatrix lower = ge.hcat(FqMatrix::identity(f, e));
  return upper.vcat(lower);
}

}  // namespace

ExtendedCssSpec ecss_new(const LinearCode& f0, const LinearCode& f1, FqMatrix ge,
                         size_t budget) {
  if (f0.field() != f1.field() || f0.length() != f1.length() ||
      ge.field() != f0.field() || ge.cols() != f0.length())
    throw DomainError("dimension", "ECSS component length/field mismatch");
  if (!row_space_contained(f1.gen(), f0.gen()) || f1.dim() >= f0.dim())
    throw DomainError("nesting", "N1: F1 must be strictly inside F0");
  // N2 against the row space of GE, so dependent GE rows are fine
  if (rank(f0.gen().vcat(ge)) != f0.dim() + rank(ge))
    throw DomainError("intersection", "N2: F0 and rowspace(GE) must meet only in 0");

  const size_t e = ge.rows();
  LinearCode c0 = LinearCode::from_generator(extended_generator(f0.gen(), ge));
  LinearCode c1 = LinearCode::from_generator(extended_generator(f1.gen(), ge));
  CssCode big = css_new(c0, c1, budget);
  return ExtendedCssSpec{f0, f1, std::move(ge), e, std::move(big)};
}

ExtensionSplit ExtensionSplit::prefix(const ExtendedCssSpec& spec, size_t u) {
  if (u > spec.e) throw DomainError("split", "u exceeds extension count");
  IndexSet rows(u);
  for (size_t i = 0; i < u; ++i) rows[i] = i + 1;
  return from_rows(spec, std::move(rows));
}

ExtensionSplit ExtensionSplit::from_rows(const ExtendedCssSpec& spec, IndexSet rows) {
  IndexSet u_rows = normalize_index_set(std::move(rows), spec.e);
  IndexSet v_rows = complement_set(u_rows, spec.e);
  const FieldSpec& f = spec.ge.field();
  const size_t n = spec.ge.cols();
  auto pick = [&](const IndexSet& which) {
    FqMatrix out(f, which.size(), n);
    for (size_t i = 0; i < which.size(); ++i)
      for (size_t c = 0; c < n; ++c) out.set(i, c, spec.ge.at(which[i] - 1, c));
    return out;
  };
  return ExtensionSplit{u_rows, pick(u_rows), pick(v_rows)};
}

TauResult tau(const ExtendedCssSpec& spec, const ExtensionSplit& split, size_t budget) {
  const size_t n = spec.original_len();
  LinearCode u_space = LinearCode::from_span(split.gu);
  LinearCode v_space = LinearCode::from_span(split.gv);

  size_t w_recover =
      nested_weight_of(sum_code(spec.f0, v_space), sum_code(spec.f1, v_space), budget);
  size_t w_disentangle = nested_weight_of(dual(sum_code(spec.f1, u_space)),
                                          dual(sum_code(spec.f0, u_space)), budget);
  size_t w = std::min(w_recover, w_disentangle);

  // w can reach the n+1 sentinel only for degenerate inputs; the formula
  // then goes negative and is clamped
  if (w > n) return TauResult{0, true};
  return TauResult{n - w + 1, false};
}

TauResult tau_full(const ExtendedCssSpec& spec, size_t budget) {
  return tau(spec, ExtensionSplit::prefix(spec, spec.e), budget);
}

TauResult tau_none(const ExtendedCssSpec& spec, size_t budget) {
  return tau(spec, ExtensionSplit::prefix(spec, 0), budget);
}

size_t tau_oracle(const ExtendedCssSpec& spec, const ExtensionSplit& split) {
  const size_t n = spec.original_len();
  if (n >= 31) throw ResourceError("subset_budget", "too many coordinates for oracle");

  IndexSet accessible;
  for (size_t row : split.u_rows) accessible.push_back(n + row);

  auto all_of_size_authorized = [&](size_t size) {
    const uint32_t limit = uint32_t(1) << n;
    for (uint32_t mask = 0; mask < limit; ++mask) {
      if (static_cast<size_t>(__builtin_popcount(mask)) != size) continue;
      IndexSet j = bitmask_to_set(mask, n);
      j.insert(j.end(), accessible.begin(), accessible.end());
      if (!is_authorized(spec.big, j)) return false;
    }
    return true;
  };

  for (size_t t = 0; t <= n; ++t) {
    if (all_of_size_authorized(t)) return t;
  }
  throw InternalError("tau", "no threshold found; [n] plus extension not authorized");
}

}  // namespace ceqss
