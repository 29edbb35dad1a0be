#pragma once

#include "fsdlab/rng.hpp"
#include "fsdlab/spectra.hpp"

#include <cstdint>
#include <optional>

namespace fsdlab::fsdet {

// <(log A) x, x> as an extended real; value is -inf exactly when the state
// puts weight above kKernelWeightTol on the numerical kernel of A.
struct ExtendedLogMean {
  double value;

  bool finite() const { return std::isfinite(value); }
  static ExtendedLogMean minus_infinity();
};

ExtendedLogMean log_mean(const HermitianMatrix& a, const UnitVector& x);
ExtendedLogMean log_mean(const SpectralDecomposition& d, const UnitVector& x);

// Normalized determinant: exp(log_mean), with exp(-inf) = 0.
double delta(const HermitianMatrix& a, const UnitVector& x);
double delta(const SpectralDecomposition& d, const UnitVector& x);

// p-mean <A^p x, x>^{1/p} for nonzero p; requires strict positivity.
double p_mean(const HermitianMatrix& a, const UnitVector& x, double p);

// Spectral endpoints of delta over the unit sphere, with a Monte-Carlo
// certificate: `sampled` is the sampled extreme of delta over random unit
// vectors and must bracket `value` from the correct side.
struct EndpointCertificate {
  double value;    // closed form: min or max eigenvalue
  double sampled;  // sampled inf/sup of delta over random unit vectors
  int samples;
};

EndpointCertificate delta_inf(const HermitianMatrix& a, int samples = 64,
                              std::uint64_t seed = 1);
EndpointCertificate delta_sup(const HermitianMatrix& a, int samples = 64,
                              std::uint64_t seed = 1);

// Six-way degeneracy equivalence for a PSD operator.  The four boolean
// routes must agree; the minimizing eigenvector witnesses the null-sequence
// conditions (its Rayleigh quotient and image norm are reported).
struct DegeneracyReport {
  bool delta_inf_zero;
  bool rayleigh_inf_zero;
  bool spectrum_contains_zero;
  bool not_invertible;
  bool degenerate;  // consensus
  UnitVector witness;
  double witness_rayleigh;
  double witness_image_norm;
};

DegeneracyReport degeneracy_report(const HermitianMatrix& a);

// Variational characterization of delta over the commutant: samples B >= 0
// as random functions of A normalized to delta(B, x) = 1, and minimizes
// <A B x, x>.  The closed-form optimizer B* = delta(A,x) A^{-1} attains the
// value exactly.
struct CommutantReport {
  double delta_value;      // delta(A, x)
  double sampled_infimum;  // min over trials of <A B x, x>
  double witness_value;    // <A B* x, x> for B* = delta * A^{-1}
  int trials;
};

CommutantReport commutant_variational(const HermitianMatrix& a, const UnitVector& x, int trials,
                                      std::uint64_t seed);

}  // namespace fsdlab::fsdet
