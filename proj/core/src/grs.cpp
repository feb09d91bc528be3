#include "ceqss/grs.hpp"

#include <set>

namespace ceqss {

GrsSpec GrsSpec::make(FieldSpec field, std::vector<uint32_t> points, size_t b0,
                      Partition partition) {
  const size_t n = points.size();
  if (field.q() < n + 1)
    throw DomainError("field", "GRS needs q >= n+1");
  std::set<uint32_t> seen;
  for (uint32_t x : points) {
    if (x == 0 || x >= field.q())
      throw DomainError("points", "evaluation points must be nonzero residues");
    if (!seen.insert(x).second)
      throw DomainError("points", "evaluation points must be distinct");
  }
  if (partition.total() != b0)
    throw DomainError("partition", "row blocks must sum to b0");
  if (b0 > n) throw DomainError("partition", "b0 must not exceed n");
  return GrsSpec{field, std::move(points), b0, partition};
}

std::vector<uint32_t> GrsSpec::default_points(const FieldSpec& field, size_t n) {
  if (field.q() < n + 1) throw DomainError("field", "default points need q >= n+1");
  std::vector<uint32_t> pts(n);
  for (size_t i = 0; i < n; ++i) pts[i] = static_cast<uint32_t>(i + 1);
  return pts;
}

FqMatrix vandermonde(const GrsSpec& spec) {
  const size_t n = spec.points.size();
  FqMatrix m(spec.field, spec.b0, n);
  for (size_t c = 0; c < n; ++c) {
    uint32_t v = 1;
    for (size_t r = 0; r < spec.b0; ++r) {
      m.set(r, c, v);
      v = spec.field.mul(v, spec.points[c]);
    }
  }
  return m;
}

GrsStack grs_stack(const GrsSpec& spec) {
  FqMatrix v = vandermonde(spec);
  const size_t n = spec.points.size();
  auto rows_range = [&](size_t lo, size_t count) {
    FqMatrix out(spec.field, count, n);
    for (size_t r = 0; r < count; ++r)
      for (size_t c = 0; c < n; ++c) out.set(r, c, v.at(lo + r, c));
    return out;
  };
  const auto& p = spec.partition;
  size_t off = 0;
  FqMatrix a1q = rows_range(off, p.a1_minus_a2);
  off += p.a1_minus_a2;
  FqMatrix a2 = rows_range(off, p.a2);
  off += p.a2;
  FqMatrix b2 = rows_range(off, p.b2);
  off += p.b2;
  FqMatrix e = rows_range(off, p.e);
  return GrsStack{std::move(a1q), std::move(a2), std::move(b2), std::move(e)};
}

}  // namespace ceqss
