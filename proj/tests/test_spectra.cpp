#include "fsdlab/rng.hpp"
#include "fsdlab/spectra.hpp"

#include <doctest.h>

#include <cmath>

using namespace fsdlab;

namespace {

HermitianMatrix diag2(double a, double b) {
  RealVector d(2);
  d << a, b;
  return HermitianMatrix::diagonal(d);
}

HermitianMatrix fixture_5_5_5_10() {
  Matrix m(2, 2);
  m << 5.0, 5.0, 5.0, 10.0;
  return HermitianMatrix(m);
}

}  // namespace

TEST_CASE("eigh on diagonal and known 2x2 fixtures") {
  const auto d0 = eigh(diag2(1.0, 4.0));
  CHECK(d0.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d0.eigenvalues(1) == doctest::Approx(4.0).epsilon(1e-14));

  const auto id = eigh(HermitianMatrix::identity(3));
  for (int j = 0; j < 3; ++j) CHECK(id.eigenvalues(j) == doctest::Approx(1.0));

  // characteristic polynomial x^2 - 15x + 25 by hand
  const auto d1 = eigh(fixture_5_5_5_10());
  const double lo = (15.0 - std::sqrt(125.0)) / 2.0;
  const double hi = (15.0 + std::sqrt(125.0)) / 2.0;
  CHECK(d1.eigenvalues(0) == doctest::Approx(lo).epsilon(1e-13));
  CHECK(d1.eigenvalues(1) == doctest::Approx(hi).epsilon(1e-13));
  CHECK(min_eig(fixture_5_5_5_10()) == doctest::Approx(lo).epsilon(1e-13));
}

TEST_CASE("eigh reconstruction and orthonormality on random instances") {
  Rng rng(2024);
  for (int dim : {2, 5, 11, 32}) {
    for (int rep = 0; rep < 5; ++rep) {
      const HermitianMatrix a = rng.hermitian(dim, 2.0);
      const auto d = eigh(a);
      const double scale = std::max(1.0, d.spectral_norm());
      CHECK(d.reconstruction_error(a) <= 1e-10 * scale);
      CHECK(d.orthonormality_defect() <= 1e-10);
    }
  }
}

TEST_CASE("hermitian ingestion symmetrizes and rejects far-from-hermitian input") {
  Matrix m(2, 2);
  m << 1.0, Complex(0.0, 1.0), Complex(0.0, -1.0), 2.0;
  CHECK_NOTHROW(HermitianMatrix{m});

  Matrix bad(2, 2);
  bad << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(HermitianMatrix{bad}, Error);

  CHECK_THROWS_AS(HermitianMatrix{Matrix::Zero(0, 0)}, DimensionError);
}

TEST_CASE("functional calculus fixtures") {
  CHECK(matrix_log(HermitianMatrix::identity(3)).frobenius_norm() == doctest::Approx(0.0));

  const auto half = matrix_power(diag2(1.0, 4.0), 0.5);
  CHECK(half(0, 0).real() == doctest::Approx(1.0));
  CHECK(half(1, 1).real() == doctest::Approx(2.0));

  const auto lg = matrix_log(diag2(std::exp(1.0), std::exp(2.0)));
  CHECK(lg(0, 0).real() == doctest::Approx(1.0));
  CHECK(lg(1, 1).real() == doctest::Approx(2.0));

  CHECK_THROWS_AS(matrix_log(diag2(0.0, 1.0)), NotInvertibleError);
  CHECK_THROWS_AS(matrix_power(diag2(0.0, 1.0), -1.0), NotInvertibleError);

  // power(0) is the identity by convention
  const auto zeroth = matrix_power(diag2(0.5, 3.0), 0.0);
  CHECK((zeroth.entries() - Matrix::Identity(2, 2)).norm() == doctest::Approx(0.0));
}

TEST_CASE("functional calculus composition round-trips") {
  Rng rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const int dim = 2 + static_cast<int>(rng.next_u64() % 7);
    const HermitianMatrix a = rng.spd(dim, 50.0, 2.0);
    const double scale = spectral_norm(a);
    for (double p : {2.0, 0.5, -1.0}) {
      const auto round = matrix_power(matrix_power(a, p), 1.0 / p);
      CHECK((round.entries() - a.entries()).norm() <= 1e-8 * scale);
    }
    const auto exp_log = matrix_exp(matrix_log(a));
    CHECK((exp_log.entries() - a.entries()).norm() <= 1e-8 * scale);
  }
}

TEST_CASE("is_psd fixtures and tolerance policy") {
  Matrix m(2, 2);
  m << 4.0, 5.0, 5.0, 6.0;
  const auto not_psd = is_psd(HermitianMatrix(m), 1.0);  // det = -1
  CHECK_FALSE(not_psd.psd);
  CHECK(not_psd.margin < -0.09);

  CHECK(is_psd(HermitianMatrix::zero(3), 1.0).psd);
  CHECK(is_psd(diag2(1e-12, 1.0), 1.0).psd);
  CHECK(is_psd(diag2(-1e-12, 1.0), 1.0).psd);   // within tolerance
  CHECK_FALSE(is_psd(diag2(-1e-6, 1.0), 1.0).psd);
}

TEST_CASE("hadamard product basics and Schur positivity") {
  const auto a = fixture_5_5_5_10();
  const auto sq = hadamard(a, a);
  CHECK(sq(0, 0).real() == doctest::Approx(25.0));
  CHECK(sq(0, 1).real() == doctest::Approx(25.0));
  CHECK(sq(1, 1).real() == doctest::Approx(100.0));

  const auto diag = diagonal_part(a);
  CHECK(diag(0, 0).real() == doctest::Approx(5.0));
  CHECK(diag(0, 1) == Complex(0.0, 0.0));

  const auto id = HermitianMatrix::identity(2);
  CHECK((hadamard(id, id).entries() - id.entries()).norm() == doctest::Approx(0.0));

  CHECK_THROWS_AS(hadamard(a, HermitianMatrix::identity(3)), DimensionError);

  Rng rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    const int dim = 2 + static_cast<int>(rng.next_u64() % 7);
    const HermitianMatrix p = rng.psd(dim, 1.5);
    const HermitianMatrix q = rng.psd(dim, 2.5);
    const HermitianMatrix pq = hadamard(p, q);
    CHECK(is_psd(pq, std::max(1.0, pq.frobenius_norm())).psd);
  }
}

TEST_CASE("geometric mean endpoints, commuting case, and symmetry") {
  Rng rng(41);
  const HermitianMatrix a = rng.spd(4, 20.0, 2.0);
  const HermitianMatrix b = rng.spd(4, 20.0, 1.0);

  CHECK((geometric_mean(a, b, 0.0).entries() - a.entries()).norm() <= 1e-10);
  CHECK((geometric_mean(a, b, 1.0).entries() - b.entries()).norm() <= 1e-10);
  CHECK((geometric_mean(a, a, 0.3).entries() - a.entries()).norm() <= 1e-10);

  // commuting diagonal pair: entrywise scalar geometric means
  const auto gm = geometric_mean(diag2(1.0, 4.0), diag2(4.0, 1.0), 0.5);
  CHECK(gm(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(gm(1, 1).real() == doctest::Approx(2.0).epsilon(1e-12));

  for (int rep = 0; rep < 100; ++rep) {
    const int dim = 2 + static_cast<int>(rng.next_u64() % 5);
    const HermitianMatrix p = rng.spd(dim, 30.0, 1.5);
    const HermitianMatrix q = rng.spd(dim, 30.0, 2.5);
    const double alpha = rng.uniform();
    const auto lhs = geometric_mean(p, q, alpha);
    const auto rhs = geometric_mean(q, p, 1.0 - alpha);
    const double scale = std::max(1.0, spectral_norm(lhs));
    CHECK((lhs.entries() - rhs.entries()).norm() <= 1e-8 * scale);
  }

  CHECK_THROWS_AS(geometric_mean(diag2(0.0, 1.0), diag2(1.0, 1.0), 0.5), NotInvertibleError);
}

TEST_CASE("unit vectors normalize and reject zero") {
  Vector v(2);
  v << Complex(3.0, 0.0), Complex(0.0, 4.0);
  const UnitVector x(v);
  CHECK(x.components().norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(UnitVector{Vector::Zero(3)}, Error);
}

TEST_CASE("spectral bounds validate ordering") {
  CHECK_THROWS_AS(SpectralBounds(0.0, 1.0), Error);
  CHECK_THROWS_AS(SpectralBounds(2.0, 1.0), Error);
  const auto b = SpectralBounds::of(diag2(1.0, 4.0));
  CHECK(b.m == doctest::Approx(1.0));
  CHECK(b.M == doctest::Approx(4.0));
  CHECK(b.ratio() == doctest::Approx(4.0));
}
