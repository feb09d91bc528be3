#pragma once

#include <cstddef>
#include <functional>

#include "ceqss/linalg.hpp"

namespace ceqss {

/// Default cap on q^k codeword enumerations.
inline constexpr size_t kDefaultEnumBudget = size_t(1) << 24;

/// [n,k]_q linear code held as a full-row-rank generator matrix.  The
/// zero code (k = 0) is a 0 x n matrix.
class LinearCode {
 public:
  /// Keeps gen verbatim; throws DomainError("rank") if rows are dependent.
  static LinearCode from_generator(FqMatrix gen);
  /// Canonicalizes an arbitrary spanning matrix to its RREF basis.
  static LinearCode from_span(const FqMatrix& any);
  static LinearCode zero(FieldSpec field, size_t n);
  static LinearCode full(FieldSpec field, size_t n);

  size_t length() const { return gen_.cols(); }
  size_t dim() const { return gen_.rows(); }
  const FqMatrix& gen() const { return gen_; }
  const FieldSpec& field() const { return gen_.field(); }

  bool contains(const std::vector<uint32_t>& word) const;
  bool operator==(const LinearCode& o) const;  // row-space equality

 private:
  explicit LinearCode(FqMatrix gen) : gen_(std::move(gen)) {}
  FqMatrix gen_;
};

/// Validated nested pair C1 subseteq C0 with the deterministic complement
/// generator G_{C0/C1} (rows of G_{C0} verbatim, greedy order).
struct NestedPair {
  LinearCode c0;
  LinearCode c1;
  FqMatrix quotient_gen;
  bool strict;  // C1 != C0

  static NestedPair make(LinearCode c0, LinearCode c1);
};

LinearCode dual(const LinearCode& c);
LinearCode puncture(const LinearCode& c, const IndexSet& a);
LinearCode shorten(const LinearCode& c, const IndexSet& a);
LinearCode sum_code(const LinearCode& c, const LinearCode& d);

/// Minimum-distance sentinel for empty difference sets / the zero code.
inline size_t weight_infinity(size_t n) { return n + 1; }

/// Minimum Hamming weight over nonzero codewords by exhaustive
/// enumeration; weight_infinity(n) for the zero code.
size_t weight(const LinearCode& c, size_t budget = kDefaultEnumBudget);

/// wt(C0 \ C1): minimum weight over codewords of C0 outside C1;
/// weight_infinity(n) when C0 = C1.
size_t nested_weight(const NestedPair& pair, size_t budget = kDefaultEnumBudget);

/// Convenience for wt((A+...) \ (B+...)) style expressions: forms the
/// nested pair of two spans (sup must contain sub).
size_t nested_weight_of(const LinearCode& sup, const LinearCode& sub,
                        size_t budget = kDefaultEnumBudget);

/// Enumerate every codeword of rowspace(basis) exactly once, including
/// zero.  Callback may return false to stop early.
void for_each_codeword(const FqMatrix& basis, size_t budget,
                       const std::function<bool(const std::vector<uint32_t>&)>& fn);

}  // namespace ceqss
