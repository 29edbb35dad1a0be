#include "fsdlab/levi.hpp"

#include "fsdlab/fsdet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fsdlab::levi {

PhiProfile PhiProfile::log1p() {
  return PhiProfile{
      "log1p",
      [](double t) { return std::log1p(t); },
      [](double t) { return 1.0 / (1.0 + t); },
      [](double t) { return -1.0 / ((1.0 + t) * (1.0 + t)); },
  };
}

PhiProfile PhiProfile::square() {
  return PhiProfile{
      "square",
      [](double t) { return t * t; },
      [](double t) { return 2.0 * t; },
      [](double) { return 2.0; },
  };
}

PhiProfile PhiProfile::linear() {
  return PhiProfile{
      "linear",
      [](double t) { return t; },
      [](double) { return 1.0; },
      [](double) { return 0.0; },
  };
}

PhiProfile PhiProfile::by_name(const std::string& name) {
  if (name == "log1p") return log1p();
  if (name == "square") return square();
  if (name == "linear") return linear();
  throw ConfigError("unknown phi profile: " + name);
}

namespace cutoff {

namespace {
double smoothstep(double x) { return x * x * x * (10.0 + x * (-15.0 + 6.0 * x)); }
double smoothstep_d(double x) { return 30.0 * x * x * (1.0 - x) * (1.0 - x); }
// integral of smoothstep on [0, x]
double smoothstep_i(double x) { return x * x * x * x * (2.5 + x * (-3.0 + x)); }
}  // namespace

double eta(double t) {
  if (t <= 1.0) return 0.0;
  if (t >= 2.0) return 1.0;
  return smoothstep(t - 1.0);
}

double eta_prime(double t) {
  if (t <= 1.0 || t >= 2.0) return 0.0;
  return smoothstep_d(t - 1.0);
}

double chi(double t) {
  if (t <= 1.0) return 0.0;
  if (t >= 2.0) return t - 1.5;
  return smoothstep_i(t - 1.0);
}

double slope(double t) { return eta(t) + t * eta_prime(t); }

double max_slope() { return 5.0 - 8.0 * std::sqrt(3.0) / 9.0; }

}  // namespace cutoff

TestFunction::TestFunction(Kind kind, Eigen::Index dim, std::string name)
    : kind_(kind), dim_(dim), name_(std::move(name)), phi_(PhiProfile::linear()) {
  if (dim < 1) throw Error("TestFunction requires dim >= 1");
}

TestFunction TestFunction::weighted_quadratic(RealVector weights) {
  if (weights.minCoeff() < 0.0) throw Error("weighted_quadratic requires weights >= 0");
  TestFunction f(Kind::weighted_quadratic, weights.size(), "weighted");
  f.weights_ = std::move(weights);
  return f;
}

TestFunction TestFunction::harmonic_quadratic(int n) {
  TestFunction f(Kind::harmonic_quadratic, n, "harmonic-quadratic");
  f.weights_ = RealVector::NullaryExpr(n, [](Eigen::Index j) { return 1.0 / double(j + 1); });
  return f;
}

TestFunction TestFunction::general_quadratic(HermitianMatrix a) {
  const auto d = eigh(a);
  if (d.min_eig() < -kPsdTol * std::max(1.0, d.spectral_norm())) {
    throw Error("general_quadratic requires a PSD matrix");
  }
  TestFunction f(Kind::general_quadratic, a.dim(), "general-quadratic");
  f.matrix_norm_ = d.spectral_norm();
  f.matrix_ = std::move(a);
  return f;
}

TestFunction TestFunction::quartic(int n) { return TestFunction(Kind::quartic, n, "quartic"); }

TestFunction TestFunction::phi_quadratic(HermitianMatrix a, PhiProfile phi,
                                         double working_radius) {
  const auto d = eigh(a);
  if (d.min_eig() < -kPsdTol * std::max(1.0, d.spectral_norm())) {
    throw Error("phi_quadratic requires a PSD matrix");
  }
  if (!(working_radius > 0.0)) throw Error("phi_quadratic requires working_radius > 0");
  // Phi' >= 0 and Phi' + t Phi'' >= 0 on [0, ||A|| R^2], checked on a grid
  const double upper = d.spectral_norm() * working_radius * working_radius;
  const int grid = 256;
  for (int i = 0; i <= grid; ++i) {
    const double t = upper * double(i) / grid;
    const double d1 = phi.d1(t);
    if (d1 < -1e-12 || d1 + t * phi.d2(t) < -1e-12) {
      std::ostringstream os;
      os << "phi profile '" << phi.name << "' violates the factory conditions at t = " << t;
      throw Error(os.str());
    }
  }
  TestFunction f(Kind::phi_quadratic, a.dim(), "phi-" + phi.name);
  f.matrix_norm_ = d.spectral_norm();
  f.matrix_ = std::move(a);
  f.phi_ = std::move(phi);
  f.working_radius_ = working_radius;
  return f;
}

TestFunction TestFunction::multiplication_l2(int n) {
  TestFunction f(Kind::multiplication_l2, n, "multiplication-l2");
  // midpoint discretization of multiplication by t on [0, 1]
  f.weights_ =
      RealVector::NullaryExpr(n, [n](Eigen::Index j) { return (double(j) + 0.5) / double(n); });
  return f;
}

TestFunction TestFunction::finite_rank_moving(int n) {
  return TestFunction(Kind::finite_rank_moving, n, "moving-rank");
}

TestFunction TestFunction::interleaved(int n) {
  TestFunction f(Kind::interleaved, n, "interleaved");
  f.weights_ = RealVector::NullaryExpr(n, [](Eigen::Index j) {
    return (j % 2 == 0) ? 1.0 / double(j / 2 + 1) : 1.0;
  });
  return f;
}

const HermitianMatrix& TestFunction::matrix() const {
  if (!matrix_) throw Error("catalog kind carries no matrix parameter");
  return *matrix_;
}

bool TestFunction::truncation_caveat() const {
  switch (kind_) {
    case Kind::harmonic_quadratic:
    case Kind::quartic:
    case Kind::multiplication_l2:
    case Kind::finite_rank_moving:
    case Kind::interleaved:
      return true;
    default:
      return false;
  }
}

double TestFunction::phi_majorant_coeff() const {
  if (kind_ != Kind::phi_quadratic) throw Error("phi_majorant_coeff: not a phi kind");
  const double upper = matrix_norm_ * working_radius_ * working_radius_;
  const int grid = 512;
  double best = 0.0;
  for (int i = 0; i <= grid; ++i) {
    const double t = upper * double(i) / grid;
    best = std::max(best, phi_.d1(t) + t * std::abs(phi_.d2(t)));
  }
  return best;
}

namespace {

void check_dim(const TestFunction& f, const Vector& z) {
  if (f.dim() != z.size()) {
    std::ostringstream os;
    os << "point dimension " << z.size() << " does not match catalog dimension " << f.dim();
    throw DimensionError(os.str());
  }
}

double quadratic_form(const HermitianMatrix& a, const Vector& z) {
  return z.dot(a.entries() * z).real();
}

}  // namespace

double TestFunction::eval(const Vector& z) const {
  check_dim(*this, z);
  switch (kind_) {
    case Kind::weighted_quadratic:
    case Kind::harmonic_quadratic:
    case Kind::multiplication_l2:
      return weights_.dot(z.cwiseAbs2());
    case Kind::general_quadratic:
      return quadratic_form(*matrix_, z);
    case Kind::quartic:
      return z.cwiseAbs2().squaredNorm();
    case Kind::phi_quadratic:
      return phi_.value(quadratic_form(*matrix_, z));
    case Kind::finite_rank_moving: {
      double acc = 0.0;
      for (Eigen::Index j = 0; j < z.size(); ++j) acc += cutoff::chi(std::norm(z(j)));
      return acc;
    }
    case Kind::interleaved:
      return weights_.dot(z.cwiseAbs2()) + z.cwiseAbs2().squaredNorm();
  }
  throw Error("unreachable");
}

HermitianMatrix TestFunction::levi(const Vector& z) const {
  check_dim(*this, z);
  switch (kind_) {
    case Kind::weighted_quadratic:
    case Kind::harmonic_quadratic:
    case Kind::multiplication_l2:
      return HermitianMatrix::diagonal(weights_);
    case Kind::general_quadratic:
      return *matrix_;
    case Kind::quartic:
      return HermitianMatrix::diagonal(4.0 * z.cwiseAbs2());
    case Kind::phi_quadratic: {
      const double q = quadratic_form(*matrix_, z);
      const Vector az = matrix_->entries() * z;
      Matrix m = phi_.d1(q) * matrix_->entries() + phi_.d2(q) * (az * az.adjoint());
      return HermitianMatrix(std::move(m));
    }
    case Kind::finite_rank_moving: {
      RealVector d(z.size());
      for (Eigen::Index j = 0; j < z.size(); ++j) d(j) = cutoff::slope(std::norm(z(j)));
      return HermitianMatrix::diagonal(d);
    }
    case Kind::interleaved:
      return HermitianMatrix::diagonal(weights_ + 4.0 * z.cwiseAbs2());
  }
  throw Error("unreachable");
}

HermitianMatrix levi_fd(const TestFunction& f, const Vector& z, double step) {
  if (!(step >= 1e-6 && step <= 1e-2)) throw Error("levi_fd requires step in [1e-6, 1e-2]");
  check_dim(f, z);
  const Eigen::Index n = z.size();
  const double f0 = f.eval(z);
  const Complex iu(0.0, 1.0);

  auto second_diff = [&](const Vector& h) {
    return (f.eval(z + step * h) - 2.0 * f0 + f.eval(z - step * h)) / (step * step);
  };
  // <L h, h> = (D^2 f(h,h) + D^2 f(ih,ih)) / 4
  auto quad = [&](const Vector& h) { return 0.25 * (second_diff(h) + second_diff(iu * h)); };

  RealVector diag(n);
  for (Eigen::Index j = 0; j < n; ++j) diag(j) = quad(Vector::Unit(n, j));

  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(j, j) = diag(j);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      const Vector ej = Vector::Unit(n, j), ek = Vector::Unit(n, k);
      const double qs = quad(ej + ek);
      const double qi = quad(ej + iu * ek);
      // e_j^* L e_k via polarization of the real quadratic form
      const double re = 0.5 * (qs - diag(j) - diag(k));
      const double im = -0.5 * (qi - diag(j) - diag(k));
      m(j, k) = Complex(re, im);
      m(k, j) = Complex(re, -im);
    }
  }
  return HermitianMatrix(std::move(m));
}

FsdResult fsd(const TestFunction& f, const Vector& z, int samples, std::uint64_t seed) {
  const HermitianMatrix l = f.levi(z);
  const auto d = eigh(l);
  // the eigenvectors are always in the sample set, so the sampled infimum
  // attains the spectral endpoint delta realizes
  double sampled = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < l.dim(); ++j) {
    sampled = std::min(sampled, fsdet::delta(d, UnitVector(Vector(d.eigenvectors.col(j)))));
  }
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    sampled = std::min(sampled, fsdet::delta(d, rng.unit_vector(l.dim())));
  }
  return FsdResult{d.min_eig(), sampled, samples, f.truncation_caveat()};
}

Region Region::centered_ball(Eigen::Index dim, double radius, int n_interior, int n_boundary,
                             std::uint64_t seed) {
  if (!(radius > 0.0)) throw Error("Region requires radius > 0");
  if (n_interior < 1 || n_boundary < 1) throw Error("Region requires sample counts >= 1");
  return Region{Vector::Zero(dim), radius, n_interior, n_boundary, seed};
}

namespace {

FamilySample make_sample(const TestFunction& f, Vector point) {
  HermitianMatrix l = f.levi(point);
  const auto verdict = is_psd(l, std::max(1.0, l.frobenius_norm()));
  if (!verdict.psd) {
    std::ostringstream os;
    os << "Levi form fails PSD check at a sample point (margin " << verdict.margin << ")";
    throw Error(os.str());
  }
  return FamilySample{std::move(point), std::move(l)};
}

}  // namespace

LeviFamily sample_family(const TestFunction& f, const Region& region) {
  if (f.dim() != region.center.size()) throw DimensionError("sample_family: dimension mismatch");
  Rng rng(region.seed);
  LeviFamily family{f, region, {}, {}};
  const auto n = static_cast<double>(2 * f.dim());  // real dimension of the ball
  family.interior.reserve(region.n_interior);
  for (int i = 0; i < region.n_interior; ++i) {
    const UnitVector dir = rng.unit_vector(f.dim());
    const double r = region.radius * std::pow(rng.uniform(), 1.0 / n);
    family.interior.push_back(make_sample(f, region.center + r * dir.components()));
  }
  family.boundary.reserve(region.n_boundary);
  for (int i = 0; i < region.n_boundary; ++i) {
    const UnitVector dir = rng.unit_vector(f.dim());
    family.boundary.push_back(make_sample(f, region.center + region.radius * dir.components()));
  }
  return family;
}

LeviFamily family_at_points(const TestFunction& f, const Region& region,
                            const std::vector<Vector>& interior_points,
                            const std::vector<Vector>& boundary_points) {
  LeviFamily family{f, region, {}, {}};
  for (const auto& p : interior_points) family.interior.push_back(make_sample(f, p));
  for (const auto& p : boundary_points) family.boundary.push_back(make_sample(f, p));
  return family;
}

TestFunction make_catalog(const std::string& kind, const CatalogParams& params) {
  if (kind == "weighted") {
    if (!params.weights) throw ConfigError("catalog kind 'weighted' needs weights");
    return TestFunction::weighted_quadratic(*params.weights);
  }
  if (kind == "harmonic-quadratic") return TestFunction::harmonic_quadratic(params.dim);
  if (kind == "general-quadratic") {
    if (!params.matrix) throw ConfigError("catalog kind 'general-quadratic' needs a matrix");
    return TestFunction::general_quadratic(*params.matrix);
  }
  if (kind == "quartic") return TestFunction::quartic(params.dim);
  if (kind == "phi-log" || kind == "phi-square" || kind == "phi-linear") {
    HermitianMatrix a = params.matrix
                            ? *params.matrix
                            : HermitianMatrix::diagonal(RealVector::NullaryExpr(
                                  params.dim, [](Eigen::Index j) { return 1.0 / double(j + 1); }));
    const std::string profile = kind.substr(4) == "log" ? "log1p" : kind.substr(4);
    return TestFunction::phi_quadratic(std::move(a), PhiProfile::by_name(profile),
                                       params.working_radius);
  }
  if (kind == "multiplication-l2") return TestFunction::multiplication_l2(params.dim);
  if (kind == "moving-rank") return TestFunction::finite_rank_moving(params.dim);
  if (kind == "interleaved") return TestFunction::interleaved(params.dim);
  throw ConfigError("unknown catalog kind: " + kind);
}

std::vector<std::string> catalog_kinds() {
  return {"weighted",   "harmonic-quadratic", "general-quadratic", "quartic",
          "phi-log",    "phi-square",         "multiplication-l2", "moving-rank",
          "interleaved"};
}

}  // namespace fsdlab::levi
