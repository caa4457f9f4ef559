#include "tempus/quantum_core.hpp"

#include "tempus/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace tempus {

namespace {

void require_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": dimension " +
                                                  std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_capacity(Eigen::Index dim, std::size_t cap) {
  const auto d = static_cast<std::size_t>(dim);
  if (d != 0 && d > cap / sizeof(Complex) / d) {
    throw Error(ErrorKind::DimensionTooLarge,
                "dimension " + std::to_string(dim) + " exceeds the dense memory cap of " +
                    std::to_string(cap) + " bytes");
  }
}

}  // namespace

QuantumState::QuantumState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) throw Error(ErrorKind::NotNormalized, "state has dimension 0");
  const double norm = amplitudes_.norm();
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw Error(ErrorKind::NotNormalized, "state norm " + std::to_string(norm) + " is not 1");
  }
}

QuantumState QuantumState::normalized(ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorKind::NotNormalized, "cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return QuantumState(std::move(amplitudes));
}

QuantumState QuantumState::basis(Eigen::Index dim, Eigen::Index k) {
  if (k < 0 || k >= dim) {
    throw Error(ErrorKind::IndexOutOfRange,
                "basis index " + std::to_string(k) + " outside [0, " + std::to_string(dim) + ")");
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(k) = 1.0;
  return QuantumState(std::move(v));
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  require_dim(a.dim(), b.dim(), "fidelity");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

HermitianOperator::HermitianOperator(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw Error(ErrorKind::NonHermitianInput, "operator must be a non-empty square matrix");
  }
  const double scale = max_abs_entry();
  const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= kHermiticityTolerance * scale)) {
    throw Error(ErrorKind::NonHermitianInput,
                "max |H - H^dagger| = " + std::to_string(asym) + " relative to max entry " +
                    std::to_string(scale));
  }
}

double HermitianOperator::max_abs_entry() const { return entries_.cwiseAbs().maxCoeff(); }

HermitianOperator HermitianOperator::scaled(double factor) const {
  return HermitianOperator(entries_ * factor);
}

ComplexVector SpectralDecomposition::to_eigenbasis(const ComplexVector& original) const {
  require_dim(dim(), original.size(), "to_eigenbasis");
  return eigenvectors_.adjoint() * original;
}

ComplexVector SpectralDecomposition::to_original_basis(const ComplexVector& eigen_coords) const {
  require_dim(dim(), eigen_coords.size(), "to_original_basis");
  return eigenvectors_ * eigen_coords;
}

ComplexMatrix SpectralDecomposition::to_original_basis(const ComplexMatrix& eigen_coords) const {
  require_dim(dim(), eigen_coords.rows(), "to_original_basis");
  return eigenvectors_ * eigen_coords * eigenvectors_.adjoint();
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors_ * eigenvalues_.cast<Complex>().asDiagonal() * eigenvectors_.adjoint();
}

DensityMatrix::DensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw Error(ErrorKind::NotADensityMatrix, "density matrix must be non-empty and square");
  }
  const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= kTolerance)) {
    throw Error(ErrorKind::NotADensityMatrix, "not Hermitian: " + std::to_string(asym));
  }
  const Complex trace = entries_.trace();
  if (!(std::abs(trace - Complex(1.0)) <= kTolerance)) {
    throw Error(ErrorKind::NotADensityMatrix, "trace is not 1: " + std::to_string(trace.real()));
  }
  const ComplexMatrix hermitian = 0.5 * (entries_ + entries_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NotADensityMatrix, "eigenvalue solver did not converge");
  }
  eigenvalues_ = solver.eigenvalues();
  if (!(eigenvalues_.minCoeff() >= -kTolerance)) {
    throw Error(ErrorKind::NotADensityMatrix,
                "negative eigenvalue " + std::to_string(eigenvalues_.minCoeff()));
  }
}

DensityMatrix DensityMatrix::pure(const QuantumState& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

SpectralDecomposition diagonalize(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.entries(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::InvariantViolation, "eigensolver did not converge");
  }
  return SpectralDecomposition(solver.eigenvalues(), solver.eigenvectors());
}

QuantumState evolve(const SpectralDecomposition& spec, const QuantumState& psi0, double t) {
  require_dim(spec.dim(), psi0.dim(), "evolve");
  if (t == 0.0) return psi0;
  ComplexVector c = spec.to_eigenbasis(psi0.amplitudes());
  const RealVector& eps = spec.eigenvalues();
  for (Eigen::Index n = 0; n < c.size(); ++n) {
    c(n) *= std::polar(1.0, -eps(n) * t);
  }
  return QuantumState(spec.to_original_basis(c));
}

RealVector occupations(const SpectralDecomposition& spec, const QuantumState& psi0) {
  require_dim(spec.dim(), psi0.dim(), "occupations");
  const ComplexVector c = spec.to_eigenbasis(psi0.amplitudes());
  return c.cwiseAbs2();
}

EnergyStatistics energy_statistics(const RealVector& eigenvalues, const RealVector& p) {
  require_dim(eigenvalues.size(), p.size(), "energy_statistics");
  EnergyStatistics stats;
  stats.mean = p.dot(eigenvalues);
  const double variance = p.dot((eigenvalues.array() - stats.mean).square().matrix());
  const double scale = std::max(1.0, eigenvalues.cwiseAbs().maxCoeff());
  const double width = std::sqrt(std::max(0.0, variance));
  if (width <= 1e-10 * scale) {
    stats.width = 0.0;
    stats.boltzmann_time = std::numeric_limits<double>::infinity();
    stats.zero_width = true;
  } else {
    stats.width = width;
    stats.boltzmann_time = 1.0 / width;
  }
  return stats;
}

EnergyStatistics energy_statistics(const SpectralDecomposition& spec, const QuantumState& psi0) {
  return energy_statistics(spec.eigenvalues(), occupations(spec, psi0));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double entropy = 0.0;
  for (const double lambda : rho.eigenvalues()) {
    if (lambda > 0.0) entropy -= lambda * std::log(lambda);
  }
  // eigenvalues a hair above 1 can push a pure state slightly negative
  return std::max(0.0, entropy);
}

HermitianOperator build_gue(Eigen::Index dim, std::uint64_t seed, std::size_t memory_cap_bytes) {
  if (dim < 2) throw Error(ErrorKind::OutOfRange, "GUE dimension must be at least 2");
  require_capacity(dim, memory_cap_bytes);
  std::mt19937_64 rng(seed);
  const double d = static_cast<double>(dim);
  std::normal_distribution<double> diagonal(0.0, std::sqrt(1.0 / d));
  std::normal_distribution<double> component(0.0, std::sqrt(0.5 / d));
  ComplexMatrix h(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    h(i, i) = diagonal(rng);
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      const double re = component(rng);
      const double im = component(rng);
      h(i, j) = Complex(re, im);
      h(j, i) = Complex(re, -im);
    }
  }
  return HermitianOperator(std::move(h));
}

HermitianOperator build_goe(Eigen::Index dim, std::uint64_t seed, std::size_t memory_cap_bytes) {
  if (dim < 2) throw Error(ErrorKind::OutOfRange, "GOE dimension must be at least 2");
  require_capacity(dim, memory_cap_bytes);
  std::mt19937_64 rng(seed);
  const double d = static_cast<double>(dim);
  std::normal_distribution<double> diagonal(0.0, std::sqrt(2.0 / d));
  std::normal_distribution<double> off(0.0, std::sqrt(1.0 / d));
  ComplexMatrix h(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    h(i, i) = diagonal(rng);
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      const double x = off(rng);
      h(i, j) = x;
      h(j, i) = x;
    }
  }
  return HermitianOperator(std::move(h));
}

HermitianOperator build_spin_chain(int sites, double coupling, double transverse_field,
                                   double longitudinal_field, std::size_t memory_cap_bytes) {
  if (sites < 2) throw Error(ErrorKind::OutOfRange, "spin chain needs at least 2 sites");
  if (sites > 14) {
    throw Error(ErrorKind::DimensionTooLarge, "spin chain is limited to 14 sites");
  }
  const Eigen::Index dim = Eigen::Index{1} << sites;
  require_capacity(dim, memory_cap_bytes);

  auto z = [sites](Eigen::Index state, int site) {
    return ((state >> (sites - 1 - site)) & 1) == 0 ? 1.0 : -1.0;
  };

  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    double diag = 0.0;
    for (int i = 0; i + 1 < sites; ++i) diag -= coupling * z(s, i) * z(s, i + 1);
    for (int i = 0; i < sites; ++i) diag -= longitudinal_field * z(s, i);
    h(s, s) = diag;
    if (transverse_field != 0.0) {
      for (int i = 0; i < sites; ++i) {
        const Eigen::Index flipped = s ^ (Eigen::Index{1} << (sites - 1 - i));
        h(flipped, s) -= transverse_field;
      }
    }
  }
  return HermitianOperator(std::move(h));
}

}  // namespace tempus
