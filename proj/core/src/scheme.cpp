#include "ceqss/scheme.hpp"

#include <numeric>

namespace ceqss {

std::string ConditionReport::first_failure() const {
  if (!m1) return "M1";
  if (!m2) return "M2";
  if (!m3) return "M3";
  if (!eq15a) return "Eq15a";
  if (!eq15b) return "Eq15b";
  if (!eq15c) return "Eq15c";
  if (!eq15d) return "Eq15d";
  return "";
}

namespace {

void check_shapes(const FieldSpec& field, const SchemeCodes& codes) {
  const LinearCode* all[] = {&codes.b0, &codes.b1, &codes.b2,
                             &codes.a1, &codes.a2, &codes.e};
  for (const LinearCode* c : all) {
    if (c->field() != field) throw DomainError("field", "code field mismatch");
    if (c->length() != codes.b0.length())
      throw DomainError("dimension", "codes must share one length n");
  }
}

bool trivially_intersect(const LinearCode& a, const LinearCode& b) {
  return rank(a.gen().vcat(b.gen())) == a.dim() + b.dim();
}

}  // namespace

ConditionReport analyze_conditions(const FieldSpec& field, const SchemeCodes& codes,
                                   size_t t, size_t d, size_t z,
                                   const BuildOptions& opts) {
  check_shapes(field, codes);
  if (!(z < t && t < d && d <= codes.b0.length()))
    throw DomainError("thresholds", "need 0 <= z < t < d <= n");

  const size_t n = codes.b0.length();
  ConditionReport rep;

  rep.m1 = row_space_contained(codes.b2.gen(), codes.b1.gen()) &&
           codes.b2.dim() < codes.b1.dim() &&
           row_space_contained(codes.b1.gen(), codes.b0.gen()) &&
           codes.b1.dim() < codes.b0.dim();
  rep.m2 = row_space_contained(codes.a2.gen(), codes.a1.gen()) &&
           row_space_contained(codes.a1.gen(), codes.b0.gen()) &&
           codes.a1.dim() < codes.b0.dim() &&
           sum_code(codes.b1, codes.a1) == codes.b0 &&
           trivially_intersect(codes.b1, codes.a1) && codes.a2.dim() > 0;
  rep.m3 = row_space_contained(codes.e.gen(), codes.b1.gen()) &&
           sum_code(codes.b2, codes.e) == codes.b1 &&
           trivially_intersect(codes.b2, codes.e);
  if (!(rep.m1 && rep.m2 && rep.m3)) return rep;

  const size_t budget = opts.enum_budget;
  rep.w_a2b1_over_b1 = nested_weight_of(sum_code(codes.a2, codes.b1), codes.b1, budget);
  rep.w_a1b2_over_b2 = nested_weight_of(sum_code(codes.a1, codes.b2), codes.b2, budget);
  rep.w_dual_b1_over_dual_b0 = nested_weight_of(dual(codes.b1), dual(codes.b0), budget);
  rep.w_b0_over_b1 = nested_weight_of(codes.b0, codes.b1, budget);
  rep.w_dual_b2_over_dual_a1b2 =
      nested_weight_of(dual(codes.b2), dual(sum_code(codes.a1, codes.b2)), budget);
  rep.weights_computed = true;

  const size_t t_side_min = std::min(
      {rep.w_a2b1_over_b1, rep.w_a1b2_over_b2, rep.w_dual_b1_over_dual_b0});
  const size_t d_side_min = std::min(rep.w_b0_over_b1, rep.w_dual_b2_over_dual_a1b2);
  rep.t_floor = n - std::min(t_side_min, n) + 1;
  rep.d_floor = n - std::min(d_side_min, n) + 1;
  rep.z_cap = t_side_min - 1;

  rep.eq15a = t >= rep.t_floor;
  rep.eq15b = d >= rep.d_floor;
  rep.eq15c = z <= rep.z_cap;
  const size_t a2 = codes.a2.dim(), ext = codes.b1.dim() - codes.b2.dim();
  rep.eq15d = uint64_t(d) * a2 < uint64_t(t) * (a2 + ext);
  return rep;
}

Scheme build(const FieldSpec& field, const SchemeCodes& codes, size_t t, size_t d,
             size_t z, const BuildOptions& opts) {
  ConditionReport rep = analyze_conditions(field, codes, t, d, z, opts);
  if (!rep.all_pass())
    throw DomainError(rep.first_failure(),
                      "construction condition " + rep.first_failure() + " violated");

  Scheme s{field,
           codes,
           FqMatrix(field, 0, 0),
           codes.b0.length(),
           t,
           d,
           z,
           codes.b0.dim(),
           codes.b1.dim(),
           codes.b2.dim(),
           codes.a1.dim(),
           codes.a2.dim(),
           codes.e.dim(),
           0,
           0,
           0,
           0,
           0,
           0,
           rep};

  FqMatrix a1_quotient = complement_basis(codes.a1.gen(), codes.a2.gen());
  s.stack = a1_quotient.vcat(codes.a2.gen()).vcat(codes.b2.gen()).vcat(codes.e.gen());
  if (rank(s.stack) != s.b0)
    throw InternalError("stack", "canonical B0 stack lost rank");

  const size_t g = std::gcd(s.a2, s.e);
  s.v1 = s.a2 / g;
  s.v2 = s.e / g;
  s.m = s.a1 * s.v1;
  s.w = s.v1 + s.v2;
  s.cc_t = t * s.w;
  s.cc_d = d * s.v1;
  return s;
}

Scheme optimal_grs(uint32_t q, size_t t, size_t d, size_t z,
                   std::optional<std::vector<uint32_t>> points,
                   const BuildOptions& opts) {
  if (!(0 < z && z < t && t < d && d <= t + z))
    throw DomainError("thresholds", "need 0 < z < t < d <= t+z");
  const size_t n = t + z;
  FieldSpec field(q);  // throws "field" when q is composite
  if (q < n + 1) throw DomainError("field", "need prime q >= n+1");

  std::vector<uint32_t> pts =
      points ? *points : GrsSpec::default_points(field, n);
  if (pts.size() != n) throw DomainError("points", "need exactly n evaluation points");

  GrsSpec::Partition part{d - t, t - z, z - d + t, d - t};
  GrsSpec spec = GrsSpec::make(field, std::move(pts), d, part);
  GrsStack stack = grs_stack(spec);

  SchemeCodes codes{
      LinearCode::from_generator(vandermonde(spec)),
      LinearCode::from_generator(stack.b2.vcat(stack.e)),
      LinearCode::from_generator(stack.b2),
      LinearCode::from_generator(stack.a1_quotient.vcat(stack.a2)),
      LinearCode::from_generator(stack.a2),
      LinearCode::from_generator(stack.e),
  };
  return build(field, codes, t, d, z, opts);
}

IndexSet Scheme::party_coords(size_t party) const {
  if (party < 1 || party > n) throw DomainError("index", "party out of range");
  IndexSet out;
  for (size_t c = 1; c <= v1 + v2; ++c) out.push_back((party - 1) * (v1 + v2) + c);
  return out;
}

IndexSet Scheme::layer1_coords(size_t party) const {
  IndexSet all = party_coords(party);
  return IndexSet(all.begin(), all.begin() + v1);
}

IndexSet Scheme::layer2_coords(size_t party) const {
  IndexSet all = party_coords(party);
  return IndexSet(all.begin() + v1, all.end());
}

FqMatrix rearrange_r12(const Scheme& s, const FqMatrix& r12) {
  if (r12.rows() != s.e || r12.cols() != s.v1)
    throw DomainError("dimension", "R12 must be e x v1");
  FqMatrix d1(s.field, s.a2, s.v2);
  size_t idx = 0;  // column-major position shared by both shapes
  for (size_t c = 0; c < s.v1; ++c) {
    for (size_t r = 0; r < s.e; ++r) {
      d1.set(idx % s.a2, idx / s.a2, r12.at(r, c));
      ++idx;
    }
  }
  return d1;
}

FqMatrix unrearrange_d1(const Scheme& s, const FqMatrix& d1) {
  if (d1.rows() != s.a2 || d1.cols() != s.v2)
    throw DomainError("dimension", "D1 must be a2 x v2");
  FqMatrix r12(s.field, s.e, s.v1);
  size_t idx = 0;
  for (size_t c = 0; c < s.v2; ++c) {
    for (size_t r = 0; r < s.a2; ++r) {
      r12.set(idx % s.e, idx / s.e, d1.at(r, c));
      ++idx;
    }
  }
  return r12;
}

FqMatrix encode_classical(const Scheme& s, const FqMatrix& secret,
                          const FqMatrix& r11, const FqMatrix& r12,
                          const FqMatrix& r2) {
  if (secret.rows() != s.a1 || secret.cols() != s.v1)
    throw DomainError("dimension", "secret must be a1 x v1");
  if (r11.rows() != s.b2 || r11.cols() != s.v1)
    throw DomainError("dimension", "R11 must be b2 x v1");
  if (r12.rows() != s.e || r12.cols() != s.v1)
    throw DomainError("dimension", "R12 must be e x v1");
  if (r2.rows() != s.b1 || r2.cols() != s.v2)
    throw DomainError("dimension", "R2 must be b1 x v2");

  FqMatrix d1 = rearrange_r12(s, r12);

  // staircase message matrix: zero block top-right, D1 under it
  FqMatrix msg(s.field, s.b0, s.v1 + s.v2);
  for (size_t r = 0; r < s.a1; ++r)
    for (size_t c = 0; c < s.v1; ++c) msg.set(r, c, secret.at(r, c));
  for (size_t r = 0; r < s.b2; ++r)
    for (size_t c = 0; c < s.v1; ++c) msg.set(s.a1 + r, c, r11.at(r, c));
  for (size_t r = 0; r < s.e; ++r)
    for (size_t c = 0; c < s.v1; ++c) msg.set(s.a1 + s.b2 + r, c, r12.at(r, c));
  for (size_t r = 0; r < s.a2; ++r)
    for (size_t c = 0; c < s.v2; ++c)
      msg.set(s.a1 - s.a2 + r, s.v1 + c, d1.at(r, c));
  for (size_t r = 0; r < s.b1; ++r)
    for (size_t c = 0; c < s.v2; ++c) msg.set(s.a1 + r, s.v1 + c, r2.at(r, c));

  return s.stack.transpose() * msg;
}

namespace {

// Rows of stack[lo, hi) restricted to the party columns, transposed into
// a |parties| x (hi-lo) solve matrix.
FqMatrix observation_matrix(const Scheme& s, size_t lo, size_t hi,
                            const IndexSet& parties) {
  FqMatrix block(s.field, hi - lo, s.n);
  for (size_t r = lo; r < hi; ++r)
    for (size_t c = 0; c < s.n; ++c) block.set(r - lo, c, s.stack.at(r, c));
  return column_submatrix(block, parties).transpose();
}

// Solves sys * x = obs column-by-column and returns the first
// `head` entries of x per column; the kernel must vanish on that head
// block, otherwise the construction theorems were violated.
FqMatrix solve_head_block(const FqMatrix& sys, const FqMatrix& obs, size_t head,
                          const char* what) {
  FqMatrix out(sys.field(), head, obs.cols());
  for (size_t c = 0; c < obs.cols(); ++c) {
    std::vector<uint32_t> rhs(obs.rows());
    for (size_t r = 0; r < obs.rows(); ++r) rhs[r] = obs.at(r, c);
    auto sol = solve_affine(sys, rhs);
    if (!sol) throw IntegrityError("shares", std::string(what) + ": inconsistent share data");
    for (size_t kr = 0; kr < sol->kernel.rows(); ++kr) {
      for (size_t kc = 0; kc < head; ++kc) {
        if (sol->kernel.at(kr, kc) != 0)
          throw InternalError("uniqueness",
                              std::string(what) + ": solution block not unique");
      }
    }
    for (size_t r = 0; r < head; ++r) out.set(r, c, sol->particular[r]);
  }
  return out;
}

}  // namespace

FqMatrix recover_from_d(const Scheme& s, const IndexSet& parties,
                        const FqMatrix& layer1, RecoveryAccounting* accounting) {
  IndexSet ps = normalize_index_set(parties, s.n);
  if (ps.size() < s.d) throw DomainError("parties", "need at least d parties");
  if (layer1.rows() != ps.size() || layer1.cols() != s.v1)
    throw DomainError("dimension", "layer1 must be |D| x v1");

  // unknowns (s; r11; r12) against the full stack on the accessed columns
  FqMatrix sys = observation_matrix(s, 0, s.b0, ps);
  FqMatrix secret = solve_head_block(sys, layer1, s.a1, "d-recovery");
  if (accounting) *accounting = {s.v1, ps.size() * s.v1};
  return secret;
}

FqMatrix recover_from_t(const Scheme& s, const IndexSet& parties,
                        const FqMatrix& layer1, const FqMatrix& layer2,
                        RecoveryAccounting* accounting) {
  IndexSet ps = normalize_index_set(parties, s.n);
  if (ps.size() < s.t) throw DomainError("parties", "need at least t parties");
  if (layer1.rows() != ps.size() || layer1.cols() != s.v1)
    throw DomainError("dimension", "layer1 must be |J| x v1");
  if (layer2.rows() != ps.size() || layer2.cols() != s.v2)
    throw DomainError("dimension", "layer2 must be |J| x v2");

  // stage 1: layer 2 is the CSS(A2+B1, B1) encoding of D1
  FqMatrix sys2 = observation_matrix(s, s.a1 - s.a2, s.b0, ps);
  FqMatrix d1 = solve_head_block(sys2, layer2, s.a2, "t-recovery stage 1");
  FqMatrix r12 = unrearrange_d1(s, d1);

  // stage 2: cancel the extension term, then layer 1 is an (A1+B2) system
  FqMatrix ge(s.field, s.e, s.n);
  for (size_t r = 0; r < s.e; ++r)
    for (size_t c = 0; c < s.n; ++c) ge.set(r, c, s.stack.at(s.a1 + s.b2 + r, c));
  FqMatrix ext_part = column_submatrix(ge, ps).transpose() * r12;
  FqMatrix residual = layer1 - ext_part;

  FqMatrix sys1 = observation_matrix(s, 0, s.a1 + s.b2, ps);
  FqMatrix secret = solve_head_block(sys1, residual, s.a1, "t-recovery stage 2");
  if (accounting) *accounting = {s.v1 + s.v2, ps.size() * (s.v1 + s.v2)};
  return secret;
}

namespace {

BoundCheck make_bound(uint64_t value, uint64_t num, uint64_t den) {
  BoundCheck b;
  b.value = value;
  b.bound_num = num;
  b.bound_den = den;
  b.satisfied = value * den >= num;
  b.tight = value * den == num;
  return b;
}

}  // namespace

BoundsReport bounds_report(const Scheme& s) {
  BoundsReport rep;
  rep.storage = make_bound(uint64_t(s.n) * s.w, uint64_t(s.n) * s.m, s.t - s.z);
  rep.cc_t = make_bound(s.cc_t, uint64_t(s.t) * s.m, s.t - s.z);
  rep.cc_d = make_bound(s.cc_d, uint64_t(s.d) * s.m, s.d - s.z);
  rep.ce_holds = s.cc_d < s.cc_t;
  return rep;
}

FlattenedScheme flatten_css(const Scheme& s, size_t budget) {
  const size_t coords = s.total_coords();
  auto flat_encode = [&](const FqMatrix& secret, const FqMatrix& r11,
                         const FqMatrix& r12, const FqMatrix& r2) {
    FqMatrix table = encode_classical(s, secret, r11, r12, r2);
    std::vector<uint32_t> v;
    v.reserve(coords);
    for (size_t r = 0; r < table.rows(); ++r)
      for (size_t c = 0; c < table.cols(); ++c) v.push_back(table.at(r, c));
    return v;
  };

  FqMatrix z_s(s.field, s.a1, s.v1), z_r11(s.field, s.b2, s.v1);
  FqMatrix z_r12(s.field, s.e, s.v1), z_r2(s.field, s.b1, s.v2);

  std::vector<std::vector<uint32_t>> secret_rows, rand_rows;
  for (size_t r = 0; r < s.a1; ++r)
    for (size_t c = 0; c < s.v1; ++c) {
      FqMatrix unit = z_s;
      unit.set(r, c, 1);
      secret_rows.push_back(flat_encode(unit, z_r11, z_r12, z_r2));
    }
  for (size_t r = 0; r < s.b2; ++r)
    for (size_t c = 0; c < s.v1; ++c) {
      FqMatrix unit = z_r11;
      unit.set(r, c, 1);
      rand_rows.push_back(flat_encode(z_s, unit, z_r12, z_r2));
    }
  for (size_t r = 0; r < s.e; ++r)
    for (size_t c = 0; c < s.v1; ++c) {
      FqMatrix unit = z_r12;
      unit.set(r, c, 1);
      rand_rows.push_back(flat_encode(z_s, z_r11, unit, z_r2));
    }
  for (size_t r = 0; r < s.b1; ++r)
    for (size_t c = 0; c < s.v2; ++c) {
      FqMatrix unit = z_r2;
      unit.set(r, c, 1);
      rand_rows.push_back(flat_encode(z_s, z_r11, z_r12, unit));
    }

  FqMatrix secret_dirs = FqMatrix::from_rows(s.field, coords, secret_rows);
  FqMatrix rand_dirs = FqMatrix::from_rows(s.field, coords, rand_rows);

  LinearCode c1 = LinearCode::from_generator(rand_dirs);
  LinearCode c0 = LinearCode::from_generator(secret_dirs.vcat(rand_dirs));
  CssCode css = css_new(c0, c1, budget);
  return FlattenedScheme{std::move(css), std::move(secret_dirs), std::move(rand_dirs)};
}

}  // namespace ceqss
