#pragma once

// Finite-dimensional quantum mechanics kernel in natural units (hbar = 1).
// Entropies are in nats.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>

namespace tempus {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Default ceiling on the storage of one dense dim x dim complex matrix.
inline constexpr std::size_t kDefaultMemoryCapBytes = std::size_t{1} << 32;

/// A normalized state vector.
class QuantumState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws NotNormalized unless | |psi| - 1 | <= 1e-12.
  explicit QuantumState(ComplexVector amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static QuantumState normalized(ComplexVector amplitudes);
  static QuantumState basis(Eigen::Index dim, Eigen::Index k);

  Eigen::Index dim() const noexcept { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

/// |<a|b>|^2
double fidelity(const QuantumState& a, const QuantumState& b);

/// A Hamiltonian. Construction checks Hermiticity relative to the largest
/// entry magnitude and throws NonHermitianInput on failure.
class HermitianOperator {
 public:
  static constexpr double kHermiticityTolerance = 1e-12;

  explicit HermitianOperator(ComplexMatrix entries);

  Eigen::Index dim() const noexcept { return entries_.rows(); }
  const ComplexMatrix& entries() const noexcept { return entries_; }
  double max_abs_entry() const;

  HermitianOperator scaled(double factor) const;

 private:
  ComplexMatrix entries_;
};

/// Eigenvalues in ascending order with the matching orthonormal
/// eigenvectors as columns. Only produced by diagonalize().
class SpectralDecomposition {
 public:
  Eigen::Index dim() const noexcept { return eigenvalues_.size(); }
  const RealVector& eigenvalues() const noexcept { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const noexcept { return eigenvectors_; }

  /// c_n = <n|psi>
  ComplexVector to_eigenbasis(const ComplexVector& original) const;
  ComplexVector to_original_basis(const ComplexVector& eigen_coords) const;
  /// U A U^dagger for an operator given in the eigenbasis.
  ComplexMatrix to_original_basis(const ComplexMatrix& eigen_coords) const;

  /// U diag(eps) U^dagger
  ComplexMatrix reconstruct() const;

 private:
  friend SpectralDecomposition diagonalize(const HermitianOperator& h);
  SpectralDecomposition(RealVector values, ComplexMatrix vectors)
      : eigenvalues_(std::move(values)), eigenvectors_(std::move(vectors)) {}

  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
};

/// Hermitian, unit trace, positive semidefinite. The spectrum is computed
/// once at construction; violations beyond 1e-10 throw NotADensityMatrix.
class DensityMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  explicit DensityMatrix(ComplexMatrix entries);
  static DensityMatrix pure(const QuantumState& psi);

  Eigen::Index dim() const noexcept { return entries_.rows(); }
  const ComplexMatrix& entries() const noexcept { return entries_; }
  /// Ascending eigenvalues.
  const RealVector& eigenvalues() const noexcept { return eigenvalues_; }

 private:
  ComplexMatrix entries_;
  RealVector eigenvalues_;
};

struct EnergyStatistics {
  double mean = 0.0;
  double width = 0.0;
  /// 1 / width, +infinity when the width vanishes.
  double boltzmann_time = 0.0;
  /// Set when the state is an eigenstate (within round-off).
  bool zero_width = false;
};

SpectralDecomposition diagonalize(const HermitianOperator& h);

/// |psi(t)> = sum_n c_n exp(-i eps_n t) |n>. Negative t runs backwards.
QuantumState evolve(const SpectralDecomposition& spec, const QuantumState& psi0, double t);

/// p_n = |<n|psi0>|^2
RealVector occupations(const SpectralDecomposition& spec, const QuantumState& psi0);

EnergyStatistics energy_statistics(const SpectralDecomposition& spec, const QuantumState& psi0);
EnergyStatistics energy_statistics(const RealVector& eigenvalues, const RealVector& p);

/// -sum lambda ln lambda over the spectrum, 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// GUE with E|H_ij|^2 = 1/dim off the diagonal and Var H_ii = 1/dim, so the
/// spectrum is a semicircle of radius 2 regardless of dim.
HermitianOperator build_gue(Eigen::Index dim, std::uint64_t seed,
                            std::size_t memory_cap_bytes = kDefaultMemoryCapBytes);

/// Real symmetric GOE with Var H_ij = 1/dim off the diagonal and
/// Var H_ii = 2/dim (semicircle of radius 2).
HermitianOperator build_goe(Eigen::Index dim, std::uint64_t seed,
                            std::size_t memory_cap_bytes = kDefaultMemoryCapBytes);

/// Open Ising chain -J sum Z_i Z_{i+1} - g sum X_i - h sum Z_i on L sites.
/// Basis index bits are read with site 0 as the most significant bit and a
/// 0 bit meaning spin up, giving (uu, ud, du, dd) for L = 2.
HermitianOperator build_spin_chain(int sites, double coupling, double transverse_field,
                                   double longitudinal_field,
                                   std::size_t memory_cap_bytes = kDefaultMemoryCapBytes);

}  // namespace tempus
