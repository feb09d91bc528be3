#include "ceqss/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace ceqss {

IndexSet normalize_index_set(IndexSet s, size_t n) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (size_t i : s) {
    if (i < 1 || i > n) throw DomainError("index", "coordinate index out of range");
  }
  return s;
}

IndexSet complement_set(const IndexSet& s, size_t n) {
  IndexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  IndexSet out;
  size_t j = 0;
  for (size_t i = 1; i <= n; ++i) {
    if (j < sorted.size() && sorted[j] == i) {
      ++j;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

FqMatrix::FqMatrix(FieldSpec field, size_t rows, size_t cols)
    : rows_(rows), cols_(cols), field_(field), e_(rows * cols, 0) {}

FqMatrix::FqMatrix(FieldSpec field, std::initializer_list<std::initializer_list<uint32_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), field_(field) {
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("dimension", "ragged initializer");
    for (uint32_t v : r) {
      if (v >= field.q()) throw DomainError("element", "entry out of range");
      e_.push_back(v);
    }
  }
}

FqMatrix FqMatrix::identity(FieldSpec field, size_t n) {
  FqMatrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::from_rows(FieldSpec field, size_t cols,
                             const std::vector<std::vector<uint32_t>>& rows) {
  FqMatrix m(field, rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("dimension", "ragged row list");
    for (size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void FqMatrix::set(size_t r, size_t c, uint32_t v) {
  if (v >= field_.q()) throw DomainError("element", "entry out of range");
  e_[r * cols_ + c] = v;
}

std::vector<uint32_t> FqMatrix::row(size_t r) const {
  return std::vector<uint32_t>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(field_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
  if (field_ != rhs.field_) throw DomainError("field_mismatch", "matrix product across fields");
  if (cols_ != rhs.rows_) throw DomainError("dimension", "matrix product shape mismatch");
  FqMatrix out(field_, rows_, rhs.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      uint32_t a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j) {
        out.e_[i * rhs.cols_ + j] =
            field_.add(out.e_[i * rhs.cols_ + j], field_.mul(a, rhs.at(k, j)));
      }
    }
  }
  return out;
}

FqMatrix FqMatrix::operator+(const FqMatrix& rhs) const {
  if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DomainError("dimension", "matrix sum shape mismatch");
  FqMatrix out(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.add(e_[i], rhs.e_[i]);
  return out;
}

FqMatrix FqMatrix::operator-(const FqMatrix& rhs) const {
  if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DomainError("dimension", "matrix difference shape mismatch");
  FqMatrix out(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.sub(e_[i], rhs.e_[i]);
  return out;
}

FqMatrix FqMatrix::vcat(const FqMatrix& other) const {
  if (field_ != other.field_ || cols_ != other.cols_)
    throw DomainError("dimension", "vcat shape mismatch");
  FqMatrix out(field_, rows_ + other.rows_, cols_);
  std::copy(e_.begin(), e_.end(), out.e_.begin());
  std::copy(other.e_.begin(), other.e_.end(), out.e_.begin() + e_.size());
  return out;
}

FqMatrix FqMatrix::hcat(const FqMatrix& other) const {
  if (field_ != other.field_ || rows_ != other.rows_)
    throw DomainError("dimension", "hcat shape mismatch");
  FqMatrix out(field_, rows_, cols_ + other.cols_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
    for (size_t c = 0; c < other.cols_; ++c) out.set(r, cols_ + c, other.at(r, c));
  }
  return out;
}

bool FqMatrix::operator==(const FqMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool FqMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](uint32_t v) { return v == 0; });
}

std::string FqMatrix::to_string() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ");
    for (size_t c = 0; c < cols_; ++c) os << at(r, c) << (c + 1 < cols_ ? " " : "");
    os << (r + 1 < rows_ ? ";\n" : "]");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

FqMatrix mat_vec_to_col(const FieldSpec& f, const std::vector<uint32_t>& v) {
  FqMatrix m(f, v.size(), 1);
  for (size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

Rref rref(const FqMatrix& m) {
  const FieldSpec& f = m.field();
  FqMatrix r = m;
  const size_t rows = r.rows(), cols = r.cols();
  std::vector<size_t> pivots;
  size_t pr = 0;  // next pivot row
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t sel = pr;
    while (sel < rows && r.at(sel, pc) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pr) {
      for (size_t c = 0; c < cols; ++c) {
        uint32_t tmp = r.at(pr, c);
        r.set(pr, c, r.at(sel, c));
        r.set(sel, c, tmp);
      }
    }
    uint32_t piv_inv = f.inv(r.at(pr, pc));
    for (size_t c = pc; c < cols; ++c) r.set(pr, c, f.mul(piv_inv, r.at(pr, c)));
    for (size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      uint32_t factor = r.at(i, pc);
      if (factor == 0) continue;
      for (size_t c = pc; c < cols; ++c) {
        r.set(i, c, f.sub(r.at(i, c), f.mul(factor, r.at(pr, c))));
      }
    }
    pivots.push_back(pc + 1);
    ++pr;
  }
  return Rref{std::move(r), pivots.size(), std::move(pivots)};
}

size_t rank(const FqMatrix& m) { return rref(m).rank; }

FqMatrix column_submatrix(const FqMatrix& m, const IndexSet& p) {
  IndexSet cols = normalize_index_set(p, m.cols());
  FqMatrix out(m.field(), m.rows(), cols.size());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t j = 0; j < cols.size(); ++j) out.set(r, j, m.at(r, cols[j] - 1));
  return out;
}

FqMatrix null_space(const FqMatrix& m) {
  const FieldSpec& f = m.field();
  const size_t n = m.cols();
  Rref rr = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (size_t p : rr.pivots) is_pivot[p - 1] = true;

  FqMatrix basis(f, n - rr.rank, n);
  size_t bi = 0;
  for (size_t free_c = 0; free_c < n; ++free_c) {
    if (is_pivot[free_c]) continue;
    basis.set(bi, free_c, 1);
    // pivot variable values from the reduced rows
    for (size_t pr = 0; pr < rr.rank; ++pr) {
      size_t pc = rr.pivots[pr] - 1;
      basis.set(bi, pc, f.neg(rr.mat.at(pr, free_c)));
    }
    ++bi;
  }
  // canonical RREF-of-kernel form
  return rref(basis).mat;
}

FqMatrix complement_basis(const FqMatrix& g0, const FqMatrix& g1) {
  if (g0.field() != g1.field() || g0.cols() != g1.cols())
    throw DomainError("dimension", "complement_basis shape mismatch");
  if (rank(g0) != g0.rows() || rank(g1) != g1.rows())
    throw DomainError("rank", "complement_basis requires full row rank inputs");

  RowReducer reducer(g0.field(), g0.cols());
  for (size_t r = 0; r < g1.rows(); ++r) {
    if (!reducer.add(g1.row(r))) throw InternalError("rank", "full-rank g1 collapsed");
  }
  std::vector<std::vector<uint32_t>> chosen;
  for (size_t r = 0; r < g0.rows(); ++r) {
    if (reducer.add(g0.row(r))) chosen.push_back(g0.row(r));
  }
  if (reducer.rank() != g0.rows())
    throw DomainError("nesting", "rowspace(g1) is not contained in rowspace(g0)");
  return FqMatrix::from_rows(g0.field(), g0.cols(), chosen);
}

std::optional<AffineSolution> solve_affine(const FqMatrix& a,
                                           const std::vector<uint32_t>& b) {
  if (b.size() != a.rows()) throw DomainError("dimension", "rhs length mismatch");
  const FieldSpec& f = a.field();
  const size_t n = a.cols();
  FqMatrix aug = a.hcat(mat_vec_to_col(f, b));
  Rref rr = rref(aug);
  // inconsistent iff some pivot sits in the rhs column
  for (size_t p : rr.pivots) {
    if (p == n + 1) return std::nullopt;
  }
  std::vector<uint32_t> x(n, 0);
  for (size_t pr = 0; pr < rr.rank; ++pr) {
    x[rr.pivots[pr] - 1] = rr.mat.at(pr, n);
  }
  return AffineSolution{std::move(x), null_space(a)};
}

bool in_row_space(const FqMatrix& g, const std::vector<uint32_t>& v) {
  RowReducer reducer(g.field(), g.cols());
  for (size_t r = 0; r < g.rows(); ++r) reducer.add(g.row(r));
  return reducer.contains(v);
}

bool row_space_contained(const FqMatrix& sub, const FqMatrix& sup) {
  if (sub.field() != sup.field() || sub.cols() != sup.cols())
    throw DomainError("dimension", "row space comparison shape mismatch");
  RowReducer reducer(sup.field(), sup.cols());
  for (size_t r = 0; r < sup.rows(); ++r) reducer.add(sup.row(r));
  for (size_t r = 0; r < sub.rows(); ++r) {
    if (!reducer.contains(sub.row(r))) return false;
  }
  return true;
}

bool row_space_equal(const FqMatrix& a, const FqMatrix& b) {
  return row_space_contained(a, b) && row_space_contained(b, a);
}

RowReducer::RowReducer(FieldSpec field, size_t cols) : field_(field), cols_(cols) {}

bool RowReducer::add(std::vector<uint32_t> v) {
  if (v.size() != cols_) throw DomainError("dimension", "row length mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t factor = v[pivot_col_[i]];
    if (factor == 0) continue;
    for (size_t c = pivot_col_[i]; c < cols_; ++c) {
      v[c] = field_.sub(v[c], field_.mul(factor, rows_[i][c]));
    }
  }
  size_t lead = 0;
  while (lead < cols_ && v[lead] == 0) ++lead;
  if (lead == cols_) return false;
  uint32_t piv_inv = field_.inv(v[lead]);
  for (size_t c = lead; c < cols_; ++c) v[c] = field_.mul(piv_inv, v[c]);
  // keep rows sorted by pivot for cheap later reductions
  size_t pos = 0;
  while (pos < rows_.size() && pivot_col_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivot_col_.insert(pivot_col_.begin() + pos, lead);
  return true;
}

bool RowReducer::contains(std::vector<uint32_t> v) const {
  if (v.size() != cols_) throw DomainError("dimension", "row length mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t factor = v[pivot_col_[i]];
    if (factor == 0) continue;
    for (size_t c = pivot_col_[i]; c < cols_; ++c) {
      v[c] = field_.sub(v[c], field_.mul(factor, rows_[i][c]));
    }
  }
  return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

}  // namespace ceqss
