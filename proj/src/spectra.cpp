#include "fsdlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fsdlab {

namespace {

std::string dim_mismatch(Eigen::Index a, Eigen::Index b) {
  std::ostringstream os;
  os << "dimension mismatch: " << a << " vs " << b;
  return os.str();
}

}  // namespace

HermitianMatrix::HermitianMatrix(Matrix entries) {
  if (entries.rows() < 1 || entries.rows() != entries.cols()) {
    throw DimensionError("HermitianMatrix requires a square matrix of dim >= 1");
  }
  Matrix sym = 0.5 * (entries + entries.adjoint());
  const double defect = (entries - sym).norm();
  const double scale = std::max(1.0, sym.norm());
  if (defect > kHermitianTolRel * scale) {
    std::ostringstream os;
    os << "matrix is not Hermitian: defect " << defect << " exceeds " << kHermitianTolRel * scale;
    throw Error(os.str());
  }
  entries_ = std::move(sym);
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index n) {
  return HermitianMatrix(Matrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::zero(Eigen::Index n) {
  return HermitianMatrix(Matrix::Zero(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& d) {
  Matrix m = Matrix::Zero(d.size(), d.size());
  for (Eigen::Index j = 0; j < d.size(); ++j) m(j, j) = d(j);
  return HermitianMatrix(std::move(m));
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError(dim_mismatch(a.dim(), b.dim()));
  return HermitianMatrix(a.entries() + b.entries());
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError(dim_mismatch(a.dim(), b.dim()));
  return HermitianMatrix(a.entries() - b.entries());
}

HermitianMatrix operator*(double t, const HermitianMatrix& a) { return a.scaled(t); }

double SpectralDecomposition::spectral_norm() const {
  return std::max(std::abs(min_eig()), std::abs(max_eig()));
}

HermitianMatrix SpectralDecomposition::apply(const std::function<double(double)>& f) const {
  RealVector mapped(eigenvalues.size());
  for (Eigen::Index j = 0; j < eigenvalues.size(); ++j) mapped(j) = f(eigenvalues(j));
  Matrix m = eigenvectors * mapped.asDiagonal() * eigenvectors.adjoint();
  return HermitianMatrix(std::move(m));
}

double SpectralDecomposition::reconstruction_error(const HermitianMatrix& a) const {
  Matrix rec = eigenvectors * eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
               eigenvectors.adjoint();
  return (rec - a.entries()).norm();
}

double SpectralDecomposition::orthonormality_defect() const {
  const Eigen::Index n = eigenvectors.cols();
  return (eigenvectors.adjoint() * eigenvectors - Matrix::Identity(n, n)).norm();
}

UnitVector::UnitVector(Vector components) {
  const double norm = components.norm();
  if (!(norm > 1e-12)) {
    throw Error("cannot normalize a (near-)zero vector");
  }
  components_ = components / norm;
}

UnitVector UnitVector::basis(Eigen::Index n, Eigen::Index j) {
  Vector v = Vector::Zero(n);
  v(j) = 1.0;
  return UnitVector(std::move(v));
}

SpectralBounds::SpectralBounds(double m_, double M_) : m(m_), M(M_) {
  if (!(0.0 < m && m <= M)) {
    throw Error("SpectralBounds require 0 < m <= M");
  }
}

SpectralBounds SpectralBounds::of(const HermitianMatrix& a) {
  const auto d = eigh(a);
  return SpectralBounds(d.min_eig(), d.max_eig());
}

SpectralDecomposition eigh(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.entries());
  if (solver.info() != Eigen::Success) {
    Eigen::FullPivLU<Matrix> lu(a.entries());
    std::ostringstream os;
    os << "eigensolver failed to converge: dim " << a.dim() << ", rcond estimate "
       << lu.rcond();
    throw EigenSolverError(os.str());
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

double min_eig(const HermitianMatrix& a) { return eigh(a).min_eig(); }

double max_eig(const HermitianMatrix& a) { return eigh(a).max_eig(); }

double spectral_norm(const HermitianMatrix& a) { return eigh(a).spectral_norm(); }

double invertibility_cutoff(double spectral_norm) {
  return kInvertibilityTolRel * std::max(1.0, spectral_norm);
}

PsdVerdict is_psd(const HermitianMatrix& a, double scale) {
  if (!(scale > 0.0)) throw Error("is_psd requires scale > 0");
  const double lo = min_eig(a);
  return PsdVerdict{lo >= -kPsdTol * scale, lo};
}

HermitianMatrix spectral_map(const HermitianMatrix& a, const std::function<double(double)>& f) {
  return eigh(a).apply(f);
}

namespace {

void require_invertible(const SpectralDecomposition& d, const char* what) {
  const double cutoff = invertibility_cutoff(d.spectral_norm());
  if (d.min_eig() <= cutoff) {
    std::ostringstream os;
    os << what << ": operator not boundedly invertible (min eigenvalue " << d.min_eig()
       << " at cutoff " << cutoff << ")";
    throw NotInvertibleError(os.str());
  }
}

}  // namespace

HermitianMatrix matrix_log(const HermitianMatrix& a) {
  const auto d = eigh(a);
  require_invertible(d, "matrix_log");
  return d.apply([](double t) { return std::log(t); });
}

HermitianMatrix matrix_exp(const HermitianMatrix& a) {
  return eigh(a).apply([](double t) { return std::exp(t); });
}

HermitianMatrix matrix_power(const HermitianMatrix& a, double p) {
  const auto d = eigh(a);
  if (p == 0.0) return HermitianMatrix::identity(a.dim());
  if (p < 0.0) require_invertible(d, "matrix_power");
  const bool integral = p == std::floor(p);
  return d.apply([p, integral](double t) {
    // fractional powers of PSD-within-tolerance input: clamp rounding noise
    if (!integral && t < 0.0) t = 0.0;
    return std::pow(t, p);
  });
}

double rayleigh(const HermitianMatrix& a, const UnitVector& x) {
  if (a.dim() != x.dim()) throw DimensionError(dim_mismatch(a.dim(), x.dim()));
  return x.components().dot(a.entries() * x.components()).real();
}

HermitianMatrix hadamard(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError(dim_mismatch(a.dim(), b.dim()));
  return HermitianMatrix(a.entries().cwiseProduct(b.entries()));
}

HermitianMatrix diagonal_part(const HermitianMatrix& a) {
  return hadamard(a, HermitianMatrix::identity(a.dim()));
}

HermitianMatrix geometric_mean(const HermitianMatrix& a, const HermitianMatrix& b, double alpha) {
  if (a.dim() != b.dim()) throw DimensionError(dim_mismatch(a.dim(), b.dim()));
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error("geometric_mean requires alpha in [0,1]");
  const auto da = eigh(a);
  require_invertible(da, "geometric_mean");
  const auto db = eigh(b);
  require_invertible(db, "geometric_mean");
  const HermitianMatrix a_half = da.apply([](double t) { return std::sqrt(t); });
  const HermitianMatrix a_ihalf = da.apply([](double t) { return 1.0 / std::sqrt(t); });
  const HermitianMatrix inner =
      HermitianMatrix(a_ihalf.entries() * b.entries() * a_ihalf.entries());
  const HermitianMatrix inner_pow = matrix_power(inner, alpha);
  return HermitianMatrix(a_half.entries() * inner_pow.entries() * a_half.entries());
}

}  // namespace fsdlab
