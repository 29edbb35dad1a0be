#pragma once

#include "fsdlab/spectra.hpp"

#include <cstdint>
#include <string_view>

namespace fsdlab {

// Deterministic generator (xoshiro256++ seeded via splitmix64).  Hand-rolled
// so that reports replay bit-identically for a given seed across compilers;
// std::normal_distribution is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();
  Complex cnormal();
  int uniform_int(int lo, int hi);  // inclusive bounds

  Vector gaussian_vector(Eigen::Index n);
  UnitVector unit_vector(Eigen::Index n);

  // Haar-like random unitary from the QR of a complex Gaussian matrix.
  Matrix unitary(Eigen::Index n);

  // Hermitian with i.i.d. Gaussian entries scaled by `scale`.
  HermitianMatrix hermitian(Eigen::Index n, double scale = 1.0);

  // PSD as G G^*/n, scaled so the spectral norm is about `norm`.
  HermitianMatrix psd(Eigen::Index n, double norm = 1.0);

  // Strictly positive with eigenvalues log-uniform in [max_eig/cond, max_eig]
  // and a random eigenbasis; cond is capped by the caller's policy.
  HermitianMatrix spd(Eigen::Index n, double cond, double max_eig = 1.0);

 private:
  std::uint64_t state_[4];
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

// Stable 64-bit FNV-1a hash, used to derive per-check seeds from names.
std::uint64_t fnv1a(std::string_view s);

// Sub-seed derivation: mixes a root seed with a label and an index.
std::uint64_t derive_seed(std::uint64_t root, std::string_view label, std::uint64_t index = 0);

}  // namespace fsdlab
