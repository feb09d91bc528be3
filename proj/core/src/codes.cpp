#include "ceqss/codes.hpp"

#include <algorithm>

namespace ceqss {

LinearCode LinearCode::from_generator(FqMatrix gen) {
  if (rank(gen) != gen.rows())
    throw DomainError("rank", "generator matrix must have full row rank");
  return LinearCode(std::move(gen));
}

LinearCode LinearCode::from_span(const FqMatrix& any) {
  Rref rr = rref(any);
  FqMatrix basis(any.field(), rr.rank, any.cols());
  for (size_t r = 0; r < rr.rank; ++r)
    for (size_t c = 0; c < any.cols(); ++c) basis.set(r, c, rr.mat.at(r, c));
  return LinearCode(std::move(basis));
}

LinearCode LinearCode::zero(FieldSpec field, size_t n) {
  return LinearCode(FqMatrix(field, 0, n));
}

LinearCode LinearCode::full(FieldSpec field, size_t n) {
  return LinearCode(FqMatrix::identity(field, n));
}

bool LinearCode::contains(const std::vector<uint32_t>& word) const {
  return in_row_space(gen_, word);
}

bool LinearCode::operator==(const LinearCode& o) const {
  return length() == o.length() && dim() == o.dim() && row_space_equal(gen_, o.gen_);
}

NestedPair NestedPair::make(LinearCode c0, LinearCode c1) {
  if (c0.field() != c1.field() || c0.length() != c1.length())
    throw DomainError("dimension", "nested pair length/field mismatch");
  // complement_basis validates rowspace(c1) subseteq rowspace(c0)
  FqMatrix quotient = complement_basis(c0.gen(), c1.gen());
  bool strict = quotient.rows() > 0;
  return NestedPair{std::move(c0), std::move(c1), std::move(quotient), strict};
}

LinearCode dual(const LinearCode& c) {
  return LinearCode::from_generator(null_space(c.gen()));
}

LinearCode puncture(const LinearCode& c, const IndexSet& a) {
  return LinearCode::from_span(column_submatrix(c.gen(), a));
}

LinearCode shorten(const LinearCode& c, const IndexSet& a) {
  IndexSet aa = normalize_index_set(a, c.length());
  IndexSet comp = complement_set(aa, c.length());
  // messages x with x G^{(comp)} = 0 give the subcode vanishing on comp
  FqMatrix g_comp_t = column_submatrix(c.gen(), comp).transpose();
  FqMatrix msgs = null_space(g_comp_t);
  FqMatrix sub = msgs * c.gen();
  return LinearCode::from_span(column_submatrix(sub, aa));
}

LinearCode sum_code(const LinearCode& c, const LinearCode& d) {
  if (c.field() != d.field() || c.length() != d.length())
    throw DomainError("dimension", "code sum length/field mismatch");
  return LinearCode::from_span(c.gen().vcat(d.gen()));
}

namespace {

// q^k, or a ResourceError once it would exceed budget
uint64_t checked_pow(uint64_t q, size_t k, size_t budget) {
  uint64_t total = 1;
  for (size_t i = 0; i < k; ++i) {
    if (total > budget / q)
      throw ResourceError("enum_budget", "codeword enumeration over budget");
    total *= q;
  }
  return total;
}

size_t hamming_weight(const std::vector<uint32_t>& v) {
  size_t w = 0;
  for (uint32_t x : v) w += (x != 0);
  return w;
}

// One odometer step: adds basis rows to word for every carried digit.
// Wrapping a digit from q-1 to 0 equals adding the row once more (mod q).
void odometer_step(const FqMatrix& basis, std::vector<uint32_t>& digits,
                   std::vector<uint32_t>& word) {
  const FieldSpec& f = basis.field();
  const size_t n = basis.cols();
  size_t i = 0;
  for (;;) {
    for (size_t c = 0; c < n; ++c) word[c] = f.add(word[c], basis.at(i, c));
    if (digits[i] + 1 < f.q()) {
      ++digits[i];
      return;
    }
    digits[i] = 0;
    ++i;
  }
}

}  // namespace

void for_each_codeword(const FqMatrix& basis, size_t budget,
                       const std::function<bool(const std::vector<uint32_t>&)>& fn) {
  const uint64_t total = checked_pow(basis.field().q(), basis.rows(), budget);
  std::vector<uint32_t> word(basis.cols(), 0), digits(basis.rows(), 0);
  if (!fn(word)) return;
  for (uint64_t step = 1; step < total; ++step) {
    odometer_step(basis, digits, word);
    if (!fn(word)) return;
  }
}

namespace {

// min weight over { s*quotient + r*sub : s != 0 }; sentinel when the
// quotient block is empty (the difference set is empty).
size_t min_weight_off_subcode(const FqMatrix& quotient, const FqMatrix& sub,
                              size_t budget) {
  const size_t n = quotient.cols();
  if (quotient.rows() == 0) return weight_infinity(n);
  const uint64_t q = quotient.field().q();
  checked_pow(q, quotient.rows() + sub.rows(), budget);  // whole-sweep guard
  const uint64_t outer = checked_pow(q, quotient.rows(), budget);
  const uint64_t inner = checked_pow(q, sub.rows(), budget);

  size_t best = weight_infinity(n);
  std::vector<uint32_t> s_digits(quotient.rows(), 0);
  std::vector<uint32_t> base(n, 0);
  std::vector<uint32_t> word(n), r_digits;
  for (uint64_t s_step = 1; s_step < outer && best > 1; ++s_step) {
    odometer_step(quotient, s_digits, base);
    word = base;
    r_digits.assign(sub.rows(), 0);
    best = std::min(best, hamming_weight(word));
    for (uint64_t r_step = 1; r_step < inner && best > 1; ++r_step) {
      odometer_step(sub, r_digits, word);
      best = std::min(best, hamming_weight(word));
    }
  }
  return best;
}

}  // namespace

size_t weight(const LinearCode& c, size_t budget) {
  FqMatrix empty_sub(c.field(), 0, c.length());
  return min_weight_off_subcode(c.gen(), empty_sub, budget);
}

size_t nested_weight(const NestedPair& pair, size_t budget) {
  return min_weight_off_subcode(pair.quotient_gen, pair.c1.gen(), budget);
}

size_t nested_weight_of(const LinearCode& sup, const LinearCode& sub, size_t budget) {
  return nested_weight(NestedPair::make(sup, sub), budget);
}

}  // namespace ceqss
