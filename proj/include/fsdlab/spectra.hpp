#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace fsdlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerances shared across the library.  All spectral tolerances are
// relative to max(1, spectral norm) of the operator at hand.
inline constexpr double kHermitianTolRel = 1e-12;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kInvertibilityTolRel = 1e-12;
inline constexpr double kKernelWeightTol = 1e-14;
inline constexpr int kMaxDim = 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Thrown when log / negative powers are requested for an operator whose
// spectrum touches the invertibility cutoff.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

class EigenSolverError : public Error {
 public:
  using Error::Error;
};

// Thrown by checkers whose hypotheses fail on the given inputs; callers
// record these as "hypothesis-violated", never as a pass.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Dense self-adjoint operator.  Construction symmetrizes via (A + A*)/2 and
// rejects inputs whose anti-Hermitian defect exceeds the relative tolerance.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix entries);

  static HermitianMatrix identity(Eigen::Index n);
  static HermitianMatrix zero(Eigen::Index n);
  static HermitianMatrix diagonal(const RealVector& d);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  double frobenius_norm() const { return entries_.norm(); }

  HermitianMatrix scaled(double t) const { return HermitianMatrix(t * entries_); }

 private:
  Matrix entries_;
};

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator*(double t, const HermitianMatrix& a);

// Eigen-system of a HermitianMatrix: ascending eigenvalues and orthonormal
// eigenvector columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  double min_eig() const { return eigenvalues(0); }
  double max_eig() const { return eigenvalues(eigenvalues.size() - 1); }
  double spectral_norm() const;

  // Sum f(lambda_j) v_j v_j^*.
  HermitianMatrix apply(const std::function<double(double)>& f) const;

  // ||sum lambda_j v_j v_j^* - A||_F, used by the reconstruction invariant.
  double reconstruction_error(const HermitianMatrix& a) const;
  // ||V^* V - I||_F.
  double orthonormality_defect() const;
};

class UnitVector {
 public:
  // Normalizes; rejects vectors with norm below 1e-12.
  explicit UnitVector(Vector components);

  static UnitVector basis(Eigen::Index n, Eigen::Index j);

  Eigen::Index dim() const { return components_.size(); }
  const Vector& components() const { return components_; }

 private:
  Vector components_;
};

// Spectral bounds 0 < m <= M for a strictly positive operator.
struct SpectralBounds {
  double m;
  double M;

  SpectralBounds(double m_, double M_);
  double ratio() const { return M / m; }

  // Tightest bounds admissible for a (spectrum-derived m, M).
  static SpectralBounds of(const HermitianMatrix& a);
};

SpectralDecomposition eigh(const HermitianMatrix& a);

double min_eig(const HermitianMatrix& a);
double max_eig(const HermitianMatrix& a);
double spectral_norm(const HermitianMatrix& a);

// Cutoff below which an eigenvalue counts as non-invertible; eps_log in the
// tolerance policy.
double invertibility_cutoff(double spectral_norm);

struct PsdVerdict {
  bool psd;
  double margin;  // smallest eigenvalue
};

// True iff lambda_min(a) >= -kPsdTol * scale.
PsdVerdict is_psd(const HermitianMatrix& a, double scale);

// Spectral functional calculus: sum f(lambda_j) v_j v_j^*.
HermitianMatrix spectral_map(const HermitianMatrix& a, const std::function<double(double)>& f);

// log / exp / power via the spectral calculus.  matrix_log and matrix_power
// with p < 0 require the spectrum to stay above the invertibility cutoff.
HermitianMatrix matrix_log(const HermitianMatrix& a);
HermitianMatrix matrix_exp(const HermitianMatrix& a);
HermitianMatrix matrix_power(const HermitianMatrix& a, double p);

// Rayleigh quotient <A x, x> (real for Hermitian A).
double rayleigh(const HermitianMatrix& a, const UnitVector& x);

// Entrywise (Schur) product relative to the fixed basis.
HermitianMatrix hadamard(const HermitianMatrix& a, const HermitianMatrix& b);

// Diagonal compression A o I.
HermitianMatrix diagonal_part(const HermitianMatrix& a);

// Weighted operator geometric mean A^{1/2} (A^{-1/2} B A^{-1/2})^alpha A^{1/2}.
HermitianMatrix geometric_mean(const HermitianMatrix& a, const HermitianMatrix& b, double alpha);

}  // namespace fsdlab
