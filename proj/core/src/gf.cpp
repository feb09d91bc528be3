#include "ceqss/gf.hpp"

namespace ceqss {

bool is_prime(uint32_t q) {
  if (q < 2) return false;
  if (q < 4) return true;
  if (q % 2 == 0) return false;
  for (uint32_t d = 3; uint64_t(d) * d <= q; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

uint32_t next_prime(uint32_t lo) {
  uint32_t p = lo < 2 ? 2 : lo;
  while (!is_prime(p)) ++p;
  return p;
}

FieldSpec::FieldSpec(uint32_t q) : q_(q) {
  if (!is_prime(q)) throw DomainError("field", "q must be prime");
}

uint32_t FieldSpec::inv(uint32_t a) const {
  if (a == 0) throw DomainError("division_by_zero", "inverse of zero");
  // extended Euclid on (a, q); q prime so gcd = 1
  int64_t t = 0, new_t = 1;
  int64_t r = q_, new_r = a;
  while (new_r != 0) {
    int64_t quot = r / new_r;
    int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
  uint32_t result = 1 % q_;
  uint32_t base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

namespace {
void check_same_field(const Fe& a, const Fe& b) {
  if (a.field != b.field) throw DomainError("field_mismatch", "elements from different fields");
}
}  // namespace

Fe operator+(const Fe& a, const Fe& b) {
  check_same_field(a, b);
  return Fe(a.field.add(a.value, b.value), a.field);
}

Fe operator-(const Fe& a, const Fe& b) {
  check_same_field(a, b);
  return Fe(a.field.sub(a.value, b.value), a.field);
}

Fe operator*(const Fe& a, const Fe& b) {
  check_same_field(a, b);
  return Fe(a.field.mul(a.value, b.value), a.field);
}

Fe inv(const Fe& a) { return Fe(a.field.inv(a.value), a.field); }

bool operator==(const Fe& a, const Fe& b) {
  return a.field == b.field && a.value == b.value;
}

}  // namespace ceqss
