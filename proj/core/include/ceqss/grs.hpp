#pragma once

#include "ceqss/codes.hpp"

namespace ceqss {

/// Stacked generalized Reed-Solomon generator data: n distinct nonzero
/// evaluation points and b0 total monomial rows split into the four
/// consecutive degree blocks (a1-a2, a2, b2, e).
struct GrsSpec {
  FieldSpec field;
  std::vector<uint32_t> points;
  size_t b0;
  struct Partition {
    size_t a1_minus_a2, a2, b2, e;
    size_t total() const { return a1_minus_a2 + a2 + b2 + e; }
  } partition;

  static GrsSpec make(FieldSpec field, std::vector<uint32_t> points, size_t b0,
                      Partition partition);

  /// Default evaluation points 1..n (needs q >= n+1).
  static std::vector<uint32_t> default_points(const FieldSpec& field, size_t n);
};

/// b0 x n matrix whose row r (0-indexed) is (x_1^r, ..., x_n^r).  Any b0
/// columns are independent, so every top block generates an MDS code.
FqMatrix vandermonde(const GrsSpec& spec);

struct GrsStack {
  FqMatrix a1_quotient;  // G_{A1/A2}, degrees [0, a1-a2)
  FqMatrix a2;           // G_{A2},    degrees [a1-a2, a1)
  FqMatrix b2;           // G_{B2},    degrees [a1, a1+b2)
  FqMatrix e;            // G_E,       degrees [a1+b2, b0)
};

GrsStack grs_stack(const GrsSpec& spec);

}  // namespace ceqss
