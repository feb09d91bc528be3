#include "ceqss/qsim.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace ceqss {

namespace {

using cd = std::complex<double>;
using EigenMat =
    Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

uint64_t checked_dim(uint64_t q, size_t n, size_t guard, const char* what) {
  uint64_t total = 1;
  for (size_t i = 0; i < n; ++i) {
    if (total > guard / q) throw ResourceError("state_guard", what);
    total *= q;
  }
  return total;
}

double kahan_norm_sq(const std::vector<cd>& v) {
  double sum = 0.0, comp = 0.0;
  for (const cd& a : v) {
    double term = std::norm(a) - comp;
    double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  return sum;
}

size_t digits_to_index(const std::vector<uint32_t>& digits, uint64_t q) {
  size_t idx = 0;
  for (uint32_t d : digits) idx = idx * q + d;
  return idx;
}

// canonical full-row-rank basis so the affine set is swept without
// multiplicity
FqMatrix canonical_basis(const FqMatrix& gen) {
  Rref rr = rref(gen);
  FqMatrix basis(gen.field(), rr.rank, gen.cols());
  for (size_t r = 0; r < rr.rank; ++r)
    for (size_t c = 0; c < gen.cols(); ++c) basis.set(r, c, rr.mat.at(r, c));
  return basis;
}

}  // namespace

DenseState DenseState::make(uint32_t q, size_t num_qudits,
                            std::vector<std::complex<double>> amps, size_t guard) {
  uint64_t dim = checked_dim(q, num_qudits, guard, "dense state over guard");
  if (amps.size() != dim) throw DomainError("dimension", "amplitude count mismatch");
  if (std::abs(kahan_norm_sq(amps) - 1.0) > 1e-12)
    throw DomainError("norm", "state vector is not normalized");
  return DenseState{q, num_qudits, std::move(amps)};
}

CosetEncoder css_encoder(const CssCode& css) {
  return CosetEncoder{css.pair.quotient_gen, css.pair.c1.gen()};
}

DenseState entangle_reference(const CosetEncoder& encoder, size_t m, size_t guard) {
  if (m != encoder.offset_map.rows())
    throw DomainError("dimension", "m must match the offset map rows");
  if (encoder.offset_map.cols() != encoder.randomness.cols() ||
      encoder.offset_map.field() != encoder.randomness.field())
    throw DomainError("dimension", "encoder component mismatch");

  const FieldSpec& f = encoder.offset_map.field();
  const uint64_t q = f.q();
  const size_t n_enc = encoder.offset_map.cols();
  const size_t total_qudits = m + n_enc;
  uint64_t dim = checked_dim(q, total_qudits, guard, "entangled state over guard");

  FqMatrix rnd_basis = canonical_basis(encoder.randomness);
  const uint64_t secrets = checked_dim(q, m, guard, "secret sweep over guard");
  const double amp = 1.0 / std::sqrt(double(secrets) *
                                     double(checked_dim(q, rnd_basis.rows(), guard,
                                                        "coset sweep over guard")));

  std::vector<cd> amps(dim, cd(0, 0));
  std::vector<uint32_t> s_digits(m, 0);
  std::vector<uint32_t> offset(n_enc, 0);
  for (uint64_t s_step = 0; s_step < secrets; ++s_step) {
    if (s_step > 0) {
      // odometer over the secret block; adding row i of the offset map
      // tracks offset = offset_map^T s
      size_t i = 0;
      for (;;) {
        for (size_t c = 0; c < n_enc; ++c)
          offset[c] = f.add(offset[c], encoder.offset_map.at(i, c));
        if (s_digits[i] + 1 < q) {
          ++s_digits[i];
          break;
        }
        s_digits[i] = 0;
        ++i;
      }
    }
    const size_t ref_base = digits_to_index(s_digits, q);
    for_each_codeword(rnd_basis, kDefaultEnumBudget,
                      [&](const std::vector<uint32_t>& r) {
                        std::vector<uint32_t> word(n_enc);
                        for (size_t c = 0; c < n_enc; ++c)
                          word[c] = f.add(offset[c], r[c]);
                        size_t idx = ref_base;
                        for (uint32_t x : word) idx = idx * q + x;
                        amps[idx] += amp;
                        return true;
                      });
  }
  return DenseState::make(f.q(), total_qudits, std::move(amps), guard);
}

DenseState expand(const CosetState& cs, size_t guard) {
  const FieldSpec& f = cs.gen.field();
  const uint64_t q = f.q();
  const size_t n = cs.gen.cols();
  if (cs.offset.size() != n) throw DomainError("dimension", "offset length mismatch");
  for (uint32_t v : cs.offset) {
    if (v >= q) throw DomainError("element", "offset entry out of range");
  }
  uint64_t dim = checked_dim(q, n, guard, "coset expansion over guard");

  FqMatrix basis = canonical_basis(cs.gen);
  const double amp =
      1.0 / std::sqrt(double(checked_dim(q, basis.rows(), guard, "coset over guard")));
  std::vector<cd> amps(dim, cd(0, 0));
  for_each_codeword(basis, kDefaultEnumBudget, [&](const std::vector<uint32_t>& r) {
    size_t idx = 0;
    for (size_t c = 0; c < n; ++c) idx = idx * q + f.add(cs.offset[c], r[c]);
    amps[idx] += amp;
    return true;
  });
  return DenseState::make(f.q(), n, std::move(amps), guard);
}

DensityMatrix partial_trace(const DenseState& state, const IndexSet& keep,
                            size_t density_guard) {
  const uint64_t q = state.q;
  const size_t nq = state.num_qudits;
  IndexSet kept = normalize_index_set(keep, nq);
  IndexSet traced = complement_set(kept, nq);

  uint64_t kdim = checked_dim(q, kept.size(), density_guard, "marginal over guard");
  uint64_t tdim = 1;
  for (size_t i = 0; i < traced.size(); ++i) tdim *= q;

  // mixed-radix weights of each qudit inside the (keep, traced) split
  std::vector<uint64_t> kw(nq, 0), tw(nq, 0);
  {
    uint64_t w = kdim;
    for (size_t i : kept) kw[i - 1] = (w /= q);
    w = tdim;
    for (size_t i : traced) tw[i - 1] = (w /= q);
  }
  std::vector<uint64_t> place(nq);
  {
    uint64_t w = state.dim();
    for (size_t i = 0; i < nq; ++i) place[i] = (w /= q);
  }

  EigenMat a = EigenMat::Zero(kdim, tdim);
  for (size_t idx = 0; idx < state.dim(); ++idx) {
    const cd& v = state.amps[idx];
    if (v == cd(0, 0)) continue;
    uint64_t ki = 0, ti = 0;
    for (size_t i = 0; i < nq; ++i) {
      uint64_t digit = (idx / place[i]) % q;
      ki += digit * kw[i];
      ti += digit * tw[i];
    }
    a(ki, ti) = v;
  }

  EigenMat rho = a * a.adjoint();
  DensityMatrix out;
  out.dim = kdim;
  out.entries.assign(rho.data(), rho.data() + kdim * kdim);
  return out;
}

double entropy(const DensityMatrix& rho, uint32_t q) {
  const size_t d = rho.dim;
  if (rho.entries.size() != d * d)
    throw DomainError("dimension", "density matrix storage mismatch");
  Eigen::MatrixXcd m = Eigen::Map<const EigenMat>(rho.entries.data(), d, d);
  if (d > 0 && (m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
    throw DomainError("hermitian", "density matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  double s = 0.0;
  const double logq = std::log(double(q));
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double lam = solver.eigenvalues()[i];
    if (lam > kEigenvalueCutoff) s -= lam * std::log(lam) / logq;
  }
  return s < 0 ? 0.0 : s;
}

double subset_entropy(const DenseState& state, const IndexSet& keep,
                      size_t density_guard) {
  IndexSet kept = normalize_index_set(keep, state.num_qudits);
  IndexSet side = kept;
  if (kept.size() * 2 > state.num_qudits)
    side = complement_set(kept, state.num_qudits);
  return entropy(partial_trace(state, side, density_guard), state.q);
}

EntropyClassification classify_by_entropy_detailed(const DenseState& state,
                                                   const IndexSet& x, size_t m,
                                                   size_t density_guard) {
  if (m > state.num_qudits) throw DomainError("dimension", "reference larger than state");
  IndexSet reference;
  for (size_t i = 1; i <= m; ++i) reference.push_back(i);
  IndexSet shares;
  for (size_t i : normalize_index_set(x, state.num_qudits - m))
    shares.push_back(m + i);
  IndexSet joint = reference;
  joint.insert(joint.end(), shares.begin(), shares.end());

  EntropyClassification out{};
  out.s_reference = subset_entropy(state, reference, density_guard);
  out.s_shares = subset_entropy(state, shares, density_guard);
  out.s_joint = subset_entropy(state, joint, density_guard);
  out.residual_authorized = std::abs(out.s_joint - (out.s_shares - out.s_reference));
  out.residual_unauthorized = std::abs(out.s_joint - (out.s_shares + out.s_reference));

  bool auth = out.residual_authorized < kEntropyTol;
  bool unauth = out.residual_unauthorized < kEntropyTol;
  if (auth && unauth)
    throw InternalError("entropy", "both subset conditions fired; S(R) below tolerance");
  out.cls = auth ? SetClass::authorized
                 : (unauth ? SetClass::unauthorized : SetClass::intermediate);
  return out;
}

SetClass classify_by_entropy(const DenseState& state, const IndexSet& x, size_t m,
                             size_t density_guard) {
  return classify_by_entropy_detailed(state, x, m, density_guard).cls;
}

double coset_entropy(const CosetState& cs, const IndexSet& a) {
  const size_t n = cs.gen.cols();
  IndexSet aa = normalize_index_set(a, n);
  IndexSet comp = complement_set(aa, n);
  size_t r_a = rank(column_submatrix(cs.gen, aa));
  size_t r_comp = rank(column_submatrix(cs.gen, comp));
  size_t r = rank(cs.gen);
  return double(r_a + r_comp - r);
}

bool significant_set_check(const DenseState& state, const IndexSet& l, size_t m,
                           size_t density_guard) {
  IndexSet shares;
  for (size_t i : normalize_index_set(l, state.num_qudits - m))
    shares.push_back(m + i);
  double s = subset_entropy(state, shares, density_guard);
  return s >= double(m) - kEntropyTol;
}

}  // namespace ceqss
