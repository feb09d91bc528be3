#pragma once

#include <complex>

#include "ceqss/css.hpp"

namespace ceqss {

/// scratch dimension cap for dense states (q^N amplitudes)
inline constexpr size_t kDefaultStateGuard = size_t(1) << 24;
/// cap on reduced density matrix dimension q^{|keep|}
inline constexpr size_t kDensityGuard = size_t(1) << 14;

inline constexpr double kEntropyTol = 1e-6;
inline constexpr double kEigenvalueCutoff = 1e-12;

/// Pure state of N qudits of dimension q.  Basis index reads the ket
/// string left to right, first qudit most significant.
struct DenseState {
  uint32_t q;
  size_t num_qudits;
  std::vector<std::complex<double>> amps;

  /// Validates the L2 norm (1 within 1e-12) and the dimension guard.
  static DenseState make(uint32_t q, size_t num_qudits,
                         std::vector<std::complex<double>> amps,
                         size_t guard = kDefaultStateGuard);
  size_t dim() const { return amps.size(); }
};

/// Hermitian reduced density matrix, row-major.
struct DensityMatrix {
  size_t dim;
  std::vector<std::complex<double>> entries;

  std::complex<double> at(size_t r, size_t c) const { return entries[r * dim + c]; }
};

/// Coset map of a CSS-style encoding: secret s goes to the uniform
/// superposition over offset_map^T s + rowspace(randomness).
struct CosetEncoder {
  FqMatrix offset_map;   // m x n_enc, e.g. G_{C0/C1}
  FqMatrix randomness;   // k1 x n_enc, e.g. G_{C1}
};

/// Uniform superposition over the affine set offset + rowspace(gen).
struct CosetState {
  std::vector<uint32_t> offset;
  FqMatrix gen;
};

CosetEncoder css_encoder(const CssCode& css);

/// |Phi> = q^{-m/2} sum_s |s>_R (x) Enc|s>: the secret side maximally
/// mixed, reference on the first m qudits.
DenseState entangle_reference(const CosetEncoder& encoder, size_t m,
                              size_t guard = kDefaultStateGuard);

DenseState expand(const CosetState& cs, size_t guard = kDefaultStateGuard);

/// Reduced density matrix on the kept qudits (1-based, order preserved).
DensityMatrix partial_trace(const DenseState& state, const IndexSet& keep,
                            size_t density_guard = kDensityGuard);

/// Von Neumann entropy in base-q qudit units, eigenvalues below the
/// cutoff dropped.  Throws DomainError on a non-Hermitian input.
double entropy(const DensityMatrix& rho, uint32_t q);

/// Entropy of a subset of a pure state, computed on whichever of
/// subset/complement is smaller (equal by Araki-Lieb at purity).
double subset_entropy(const DenseState& state, const IndexSet& keep,
                      size_t density_guard = kDensityGuard);

enum class SetClass { authorized, unauthorized, intermediate };

struct EntropyClassification {
  SetClass cls;
  double s_reference;
  double s_shares;      // S(W_X)
  double s_joint;       // S(R W_X)
  double residual_authorized;
  double residual_unauthorized;
};

/// Appendix-style subset test on a reference-entangled encoding:
/// authorized when S(RW_X) = S(W_X) - S(R), unauthorized when
/// S(RW_X) = S(W_X) + S(R), intermediate otherwise.  x holds share
/// coordinates (1-based among the n_enc encoded qudits).
EntropyClassification classify_by_entropy_detailed(const DenseState& state,
                                                   const IndexSet& x, size_t m,
                                                   size_t density_guard = kDensityGuard);
SetClass classify_by_entropy(const DenseState& state, const IndexSet& x, size_t m,
                             size_t density_guard = kDensityGuard);

/// Marginal entropy of a coset state from ranks alone:
///   S_A = rank G^{(A)} + rank G^{(Abar)} - rank G
/// in base-q units.  Locked against the dense partial-trace oracle.
double coset_entropy(const CosetState& cs, const IndexSet& a);

/// S(W_L) >= m - tol; every set completing some unauthorized set to an
/// authorized one must pass.
bool significant_set_check(const DenseState& state, const IndexSet& l, size_t m,
                           size_t density_guard = kDensityGuard);

}  // namespace ceqss
