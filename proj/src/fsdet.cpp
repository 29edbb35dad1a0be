#include "fsdlab/fsdet.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fsdlab::fsdet {

namespace {

void require_psd(const SpectralDecomposition& d) {
  const double scale = std::max(1.0, d.spectral_norm());
  if (d.min_eig() < -kPsdTol * scale) {
    std::ostringstream os;
    os << "operator is not positive semidefinite: min eigenvalue " << d.min_eig();
    throw Error(os.str());
  }
}

RealVector state_weights(const SpectralDecomposition& d, const UnitVector& x) {
  return (d.eigenvectors.adjoint() * x.components()).cwiseAbs2();
}

}  // namespace

ExtendedLogMean ExtendedLogMean::minus_infinity() {
  return ExtendedLogMean{-std::numeric_limits<double>::infinity()};
}

ExtendedLogMean log_mean(const SpectralDecomposition& d, const UnitVector& x) {
  require_psd(d);
  const double cutoff = invertibility_cutoff(d.spectral_norm());
  const RealVector w = state_weights(d, x);
  double acc = 0.0;
  for (Eigen::Index j = 0; j < w.size(); ++j) {
    if (d.eigenvalues(j) <= cutoff) {
      if (w(j) > kKernelWeightTol) return ExtendedLogMean::minus_infinity();
      // negligible weight on the kernel: excluded from the sum
      continue;
    }
    acc += w(j) * std::log(d.eigenvalues(j));
  }
  return ExtendedLogMean{acc};
}

ExtendedLogMean log_mean(const HermitianMatrix& a, const UnitVector& x) {
  if (a.dim() != x.dim()) throw DimensionError("log_mean: dimension mismatch");
  return log_mean(eigh(a), x);
}

double delta(const SpectralDecomposition& d, const UnitVector& x) {
  return std::exp(log_mean(d, x).value);
}

double delta(const HermitianMatrix& a, const UnitVector& x) {
  if (a.dim() != x.dim()) throw DimensionError("delta: dimension mismatch");
  return delta(eigh(a), x);
}

double p_mean(const HermitianMatrix& a, const UnitVector& x, double p) {
  if (a.dim() != x.dim()) throw DimensionError("p_mean: dimension mismatch");
  if (p == 0.0) throw Error("p_mean requires nonzero p");
  const auto d = eigh(a);
  const double cutoff = invertibility_cutoff(d.spectral_norm());
  if (d.min_eig() <= cutoff) {
    throw NotInvertibleError("p_mean requires a strictly positive operator");
  }
  const RealVector w = state_weights(d, x);
  double acc = 0.0;
  for (Eigen::Index j = 0; j < w.size(); ++j) {
    acc += w(j) * std::pow(d.eigenvalues(j), p);
  }
  return std::pow(acc, 1.0 / p);
}

namespace {

EndpointCertificate endpoint(const HermitianMatrix& a, int samples, std::uint64_t seed,
                             bool want_inf) {
  const auto d = eigh(a);
  require_psd(d);
  Rng rng(seed);
  double best = want_inf ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double v = delta(d, rng.unit_vector(a.dim()));
    best = want_inf ? std::min(best, v) : std::max(best, v);
  }
  return EndpointCertificate{want_inf ? d.min_eig() : d.max_eig(), best, samples};
}

}  // namespace

EndpointCertificate delta_inf(const HermitianMatrix& a, int samples, std::uint64_t seed) {
  return endpoint(a, samples, seed, true);
}

EndpointCertificate delta_sup(const HermitianMatrix& a, int samples, std::uint64_t seed) {
  return endpoint(a, samples, seed, false);
}

DegeneracyReport degeneracy_report(const HermitianMatrix& a) {
  const auto d = eigh(a);
  require_psd(d);
  const double cutoff = invertibility_cutoff(d.spectral_norm());

  // four numeric routes to the same spectral fact, each with its own
  // distance-to-singularity quantity
  const bool via_delta = delta_inf(a, 0, 0).value <= cutoff;
  const bool via_rayleigh = d.min_eig() <= cutoff;
  bool via_spectrum = false;
  for (Eigen::Index j = 0; j < d.eigenvalues.size(); ++j) {
    if (std::abs(d.eigenvalues(j)) <= cutoff) via_spectrum = true;
  }
  Eigen::JacobiSVD<Matrix> svd(a.entries());
  const double sigma_min = svd.singularValues()(svd.singularValues().size() - 1);
  const bool via_svd = sigma_min <= cutoff;

  if (via_delta != via_rayleigh || via_rayleigh != via_spectrum || via_spectrum != via_svd) {
    throw Error("degeneracy routes disagree at the tolerance boundary");
  }

  UnitVector witness(Vector(d.eigenvectors.col(0)));
  const double wr = rayleigh(a, witness);
  const double wi = (a.entries() * witness.components()).norm();
  return DegeneracyReport{via_delta, via_rayleigh, via_spectrum, via_svd,
                          via_rayleigh, witness, wr, wi};
}

CommutantReport commutant_variational(const HermitianMatrix& a, const UnitVector& x, int trials,
                                      std::uint64_t seed) {
  const auto d = eigh(a);
  const double cutoff = invertibility_cutoff(d.spectral_norm());
  if (d.min_eig() <= cutoff) {
    throw NotInvertibleError("commutant_variational requires a strictly positive operator");
  }
  const RealVector w = state_weights(d, x);
  const double log_delta = log_mean(d, x).value;
  const double delta_value = std::exp(log_delta);
  const Eigen::Index n = a.dim();

  // normalize lambda to [-1, 1] so the random polynomials are well scaled
  const double lo = d.min_eig(), hi = d.max_eig();
  const double mid = 0.5 * (lo + hi), half = std::max(0.5 * (hi - lo), 1e-30);

  Rng rng(seed);
  double sampled = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    // B = exp(poly(A)) is a positive function of A; rescaling by
    // exp(-<poly(A)x,x>) makes delta(B, x) = 1 exactly
    double c0 = rng.normal(), c1 = rng.normal(), c2 = rng.normal(), c3 = rng.normal();
    RealVector g(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const double s = (d.eigenvalues(j) - mid) / half;
      g(j) = c0 + s * (c1 + s * (c2 + s * c3));
    }
    const double shift = w.dot(g);
    double value = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      value += w(j) * d.eigenvalues(j) * std::exp(g(j) - shift);
    }
    sampled = std::min(sampled, value);
  }

  // B* = delta(A,x) A^{-1}: <A B* x, x> = delta(A,x) exactly and
  // delta(B*, x) = delta(A,x) / delta(A,x) = 1
  double witness_value = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    witness_value += w(j) * d.eigenvalues(j) * (delta_value / d.eigenvalues(j));
  }

  if (trials == 0) sampled = witness_value;
  return CommutantReport{delta_value, sampled, witness_value, trials};
}

}  // namespace fsdlab::fsdet
