#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ceqss/gf.hpp"

namespace ceqss {

/// 1-based coordinate subsets, matching [n] = {1,...,n}.
using IndexSet = std::vector<size_t>;

/// Sorted ascending, duplicates removed; throws on an index outside [1, n].
IndexSet normalize_index_set(IndexSet s, size_t n);
IndexSet complement_set(const IndexSet& s, size_t n);

/// Dense row-major matrix over a prime field.  Entries are canonical
/// residues; value semantics throughout.
class FqMatrix {
 public:
  FqMatrix(FieldSpec field, size_t rows, size_t cols);
  FqMatrix(FieldSpec field, std::initializer_list<std::initializer_list<uint32_t>> rows);
  static FqMatrix identity(FieldSpec field, size_t n);
  static FqMatrix from_rows(FieldSpec field, size_t cols,
                            const std::vector<std::vector<uint32_t>>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  uint32_t at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  void set(size_t r, size_t c, uint32_t v);

  std::vector<uint32_t> row(size_t r) const;
  const std::vector<uint32_t>& data() const { return e_; }

  FqMatrix transpose() const;
  FqMatrix operator*(const FqMatrix& rhs) const;
  FqMatrix operator+(const FqMatrix& rhs) const;
  FqMatrix operator-(const FqMatrix& rhs) const;

  /// Stack this over other (same cols/field).
  FqMatrix vcat(const FqMatrix& other) const;
  /// This beside other (same rows/field).
  FqMatrix hcat(const FqMatrix& other) const;

  bool operator==(const FqMatrix& o) const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  size_t rows_, cols_;
  FieldSpec field_;
  std::vector<uint32_t> e_;
};

FqMatrix mat_vec_to_col(const FieldSpec& f, const std::vector<uint32_t>& v);

/// Reduced row echelon form.  Pivot columns are 1-based and strictly
/// increasing; pivot entries are 1 with zeros above and below.
struct Rref {
  FqMatrix mat;
  size_t rank;
  std::vector<size_t> pivots;
};

Rref rref(const FqMatrix& m);
size_t rank(const FqMatrix& m);

/// M^{(P)}: columns of m indexed by the set p, ascending.
FqMatrix column_submatrix(const FqMatrix& m, const IndexSet& p);

/// Full-row-rank basis of {x : M x^T = 0}, rows in RREF-of-kernel form,
/// (cols - rank) rows.
FqMatrix null_space(const FqMatrix& m);

/// Generator of a complement of rowspace(g1) in rowspace(g0): greedy
/// extension of g1 by the rows of g0 in order, so the result is
/// deterministic and consists of rows of g0 verbatim.
/// Pre: both full row rank, rowspace(g1) subseteq rowspace(g0).
FqMatrix complement_basis(const FqMatrix& g0, const FqMatrix& g1);

struct AffineSolution {
  std::vector<uint32_t> particular;
  FqMatrix kernel;  // basis of {x : A x^T = 0}
};

/// Solve A x^T = b.  Returns nullopt when inconsistent.
std::optional<AffineSolution> solve_affine(const FqMatrix& a,
                                           const std::vector<uint32_t>& b);

bool in_row_space(const FqMatrix& g, const std::vector<uint32_t>& v);
bool row_space_contained(const FqMatrix& sub, const FqMatrix& sup);
bool row_space_equal(const FqMatrix& a, const FqMatrix& b);

/// Incremental row-space builder: feed rows, rank grows when a row is
/// independent of everything fed so far.
class RowReducer {
 public:
  RowReducer(FieldSpec field, size_t cols);
  /// Returns true (and absorbs the row) when v is independent.
  bool add(std::vector<uint32_t> v);
  /// Reduces v against the absorbed rows; zero iff v is in the span.
  bool contains(std::vector<uint32_t> v) const;
  size_t rank() const { return rows_.size(); }

 private:
  FieldSpec field_;
  size_t cols_;
  std::vector<std::vector<uint32_t>> rows_;  // echelon rows
  std::vector<size_t> pivot_col_;
};

}  // namespace ceqss
