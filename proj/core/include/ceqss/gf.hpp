#pragma once

#include <cstdint>

#include "ceqss/errors.hpp"

namespace ceqss {

/// Prime field F_q.  All element values are canonical residues in [0, q).
///
/// Arithmetic is exposed both on raw residues (the hot path used by the
/// matrix and enumeration code) and on the checked Fe wrapper.
class FieldSpec {
 public:
  /// Throws DomainError("field") unless q is prime.
  explicit FieldSpec(uint32_t q);

  uint32_t q() const { return q_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : q_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((uint64_t(a) * uint64_t(b)) % q_);
  }
  /// Multiplicative inverse by extended Euclid.  Throws on a = 0.
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  /// Canonical residue of an arbitrary signed integer.
  uint32_t reduce(int64_t v) const {
    int64_t r = v % int64_t(q_);
    return static_cast<uint32_t>(r < 0 ? r + q_ : r);
  }

  bool operator==(const FieldSpec& o) const { return q_ == o.q_; }
  bool operator!=(const FieldSpec& o) const { return q_ != o.q_; }

 private:
  uint32_t q_;
};

bool is_prime(uint32_t q);

/// Smallest prime >= lo.
uint32_t next_prime(uint32_t lo);

/// A field element bound to its field; mixing fields throws.
struct Fe {
  uint32_t value;
  FieldSpec field;

  Fe(uint32_t v, FieldSpec f) : value(v), field(f) {
    if (v >= f.q()) throw DomainError("element", "residue out of range");
  }
};

Fe operator+(const Fe& a, const Fe& b);
Fe operator-(const Fe& a, const Fe& b);
Fe operator*(const Fe& a, const Fe& b);
Fe inv(const Fe& a);
bool operator==(const Fe& a, const Fe& b);

}  // namespace ceqss
