#pragma once

// Test-only reference implementations: brute-force sweeps over whole
// vector spaces with membership decided by rank comparisons.  These stay
// independent of the odometer enumeration inside the library so the two
// paths can check each other.

#include <random>

#include "ceqss/codes.hpp"

namespace ceqss::testing {

inline std::vector<std::vector<uint32_t>> all_vectors(const FieldSpec& f, size_t n) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> v(n, 0);
  for (;;) {
    out.push_back(v);
    size_t i = 0;
    while (i < n && v[i] + 1 == f.q()) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

inline bool oracle_member(const FqMatrix& gen, const std::vector<uint32_t>& v) {
  FqMatrix row(gen.field(), 1, gen.cols());
  for (size_t c = 0; c < gen.cols(); ++c) row.set(0, c, v[c]);
  return rank(gen.vcat(row)) == rank(gen);
}

inline size_t oracle_hw(const std::vector<uint32_t>& v) {
  size_t w = 0;
  for (uint32_t x : v) w += (x != 0);
  return w;
}

inline size_t oracle_weight(const LinearCode& c) {
  size_t best = c.length() + 1;
  for (const auto& v : all_vectors(c.field(), c.length())) {
    if (oracle_hw(v) == 0 || oracle_hw(v) >= best) continue;
    if (oracle_member(c.gen(), v)) best = oracle_hw(v);
  }
  return best;
}

inline size_t oracle_nested_weight(const LinearCode& c0, const LinearCode& c1) {
  size_t best = c0.length() + 1;
  for (const auto& v : all_vectors(c0.field(), c0.length())) {
    if (oracle_hw(v) >= best) continue;
    if (oracle_member(c0.gen(), v) && !oracle_member(c1.gen(), v)) best = oracle_hw(v);
  }
  return best;
}

inline FqMatrix random_matrix(std::mt19937& rng, const FieldSpec& f, size_t rows,
                              size_t cols) {
  FqMatrix m(f, rows, cols);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) m.set(r, c, uint32_t(rng() % f.q()));
  return m;
}

/// Random [n,k] code; generator is the random matrix's RREF basis.
inline LinearCode random_code(std::mt19937& rng, const FieldSpec& f, size_t n,
                              size_t k) {
  for (;;) {
    FqMatrix m = random_matrix(rng, f, k, n);
    if (rank(m) == k) return LinearCode::from_generator(m);
  }
}

/// Random strictly nested pair with dim C1 = k1 < k0 = dim C0.
inline std::pair<LinearCode, LinearCode> random_nested(std::mt19937& rng,
                                                       const FieldSpec& f, size_t n,
                                                       size_t k0, size_t k1) {
  LinearCode c0 = random_code(rng, f, n, k0);
  for (;;) {
    FqMatrix mixer = random_matrix(rng, f, k1, k0);
    if (rank(mixer) != k1) continue;
    return {c0, LinearCode::from_generator(mixer * c0.gen())};
  }
}

inline IndexSet random_subset(std::mt19937& rng, size_t n) {
  IndexSet s;
  for (size_t i = 1; i <= n; ++i) {
    if (rng() % 2) s.push_back(i);
  }
  return s;
}

}  // namespace ceqss::testing
