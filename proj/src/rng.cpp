#include "fsdlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace fsdlab {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& w : state_) w = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (have_cached_normal_) {
    have_cached_normal_ = false;
    return cached_normal_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_normal_ = r * std::sin(theta);
  have_cached_normal_ = true;
  return r * std::cos(theta);
}

Complex Rng::cnormal() {
  // independent real and imaginary parts, variance 1/2 each
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::numbers::sqrt2 / 2.0;
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next_u64() % span);
}

Vector Rng::gaussian_vector(Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index j = 0; j < n; ++j) v(j) = cnormal();
  return v;
}

UnitVector Rng::unit_vector(Eigen::Index n) { return UnitVector(gaussian_vector(n)); }

Matrix Rng::unitary(Eigen::Index n) {
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = cnormal();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // fix the phase so Q is a deterministic function of g
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double ad = std::abs(d);
    if (ad > 0.0) q.col(j) *= d / ad;
  }
  return q;
}

HermitianMatrix Rng::hermitian(Eigen::Index n, double scale) {
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = cnormal();
  return HermitianMatrix(scale * 0.5 * (g + g.adjoint()));
}

HermitianMatrix Rng::psd(Eigen::Index n, double norm) {
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = cnormal();
  HermitianMatrix gram(Matrix(g * g.adjoint() / static_cast<double>(n)));
  const double top = max_eig(gram);
  return top > 0.0 ? gram.scaled(norm / top) : gram;
}

HermitianMatrix Rng::spd(Eigen::Index n, double cond, double max_eig) {
  if (cond < 1.0) throw Error("spd generator requires cond >= 1");
  RealVector lambda(n);
  lambda(0) = max_eig;
  if (n > 1) lambda(n - 1) = max_eig / cond;
  for (Eigen::Index j = 1; j + 1 < n; ++j) {
    lambda(j) = max_eig * std::exp(-uniform() * std::log(cond));
  }
  const Matrix u = unitary(n);
  Matrix m = u * lambda.asDiagonal() * u.adjoint();
  return HermitianMatrix(std::move(m));
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view label, std::uint64_t index) {
  std::uint64_t x = root ^ fnv1a(label) ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  return splitmix64(x);
}

}  // namespace fsdlab
