#include "fsdlab/fsdet.hpp"
#include "fsdlab/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace fsdlab;
using namespace fsdlab::fsdet;

namespace {

HermitianMatrix diag2(double a, double b) {
  RealVector d(2);
  d << a, b;
  return HermitianMatrix::diagonal(d);
}

UnitVector half_half() {
  Vector v(2);
  v << 1.0, 1.0;
  return UnitVector(v);
}

}  // namespace

TEST_CASE("log_mean fixtures") {
  Rng rng(1);
  CHECK(log_mean(HermitianMatrix::identity(4), rng.unit_vector(4)).value ==
        doctest::Approx(0.0).epsilon(1e-14));

  // kernel-supported state forces -inf
  const auto kernel = log_mean(diag2(0.0, 4.0), UnitVector::basis(2, 0));
  CHECK_FALSE(kernel.finite());

  // hand-computed weighted sum over the eigenbasis
  const auto mixed = log_mean(diag2(1.0, 4.0), half_half());
  CHECK(mixed.value == doctest::Approx(std::log(4.0) / 2.0).epsilon(1e-12));

  CHECK_THROWS_AS(log_mean(diag2(-1.0, 1.0), half_half()), Error);
}

TEST_CASE("delta fixtures") {
  Rng rng(2);
  for (double t : {0.5, 1.0, 3.0}) {
    const auto x = rng.unit_vector(3);
    CHECK(delta(t * HermitianMatrix::identity(3), x) == doctest::Approx(t).epsilon(1e-13));
  }
  CHECK(delta(diag2(1.0, 4.0), half_half()) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(delta(diag2(1.0, 4.0), UnitVector::basis(2, 0)) == doctest::Approx(1.0));
  CHECK(delta(diag2(0.0, 4.0), half_half()) == 0.0);
}

TEST_CASE("p_mean fixtures and preconditions") {
  CHECK(p_mean(diag2(1.0, 4.0), half_half(), 1.0) == doctest::Approx(2.5).epsilon(1e-13));
  // <A^{-1} x, x> = 5/8, so the harmonic mean is 1.6
  CHECK(p_mean(diag2(1.0, 4.0), half_half(), -1.0) == doctest::Approx(1.6).epsilon(1e-13));
  CHECK(p_mean(HermitianMatrix::identity(2), half_half(), 1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(p_mean(diag2(1.0, 4.0), half_half(), 0.0), Error);
  CHECK_THROWS_AS(p_mean(diag2(0.0, 4.0), half_half(), -1.0), NotInvertibleError);
}

TEST_CASE("delta endpoints detect the spectral endpoints") {
  RealVector inv(5);
  for (int j = 0; j < 5; ++j) inv(j) = 1.0 / (j + 1);
  const auto a = HermitianMatrix::diagonal(inv);
  const auto lo = delta_inf(a, 128, 7);
  const auto hi = delta_sup(a, 128, 8);
  CHECK(lo.value == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(hi.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lo.sampled >= lo.value - 1e-12);
  CHECK(hi.sampled <= hi.value + 1e-12);

  const auto kernel = delta_inf(diag2(0.0, 4.0), 16, 9);
  CHECK(kernel.value == doctest::Approx(0.0));
  CHECK(delta_sup(diag2(0.0, 4.0), 16, 10).value == doctest::Approx(4.0));
}

TEST_CASE("degeneracy report equivalences") {
  const auto degenerate = degeneracy_report(diag2(0.0, 1.0));
  CHECK(degenerate.degenerate);
  CHECK(degenerate.delta_inf_zero);
  CHECK(degenerate.rayleigh_inf_zero);
  CHECK(degenerate.spectrum_contains_zero);
  CHECK(degenerate.not_invertible);
  CHECK(degenerate.witness_rayleigh == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(degenerate.witness_image_norm == doctest::Approx(0.0).epsilon(1e-12));

  const auto regular = degeneracy_report(HermitianMatrix::identity(3));
  CHECK_FALSE(regular.degenerate);

  CHECK(degeneracy_report(diag2(1e-13, 1.0)).degenerate);
}

TEST_CASE("commutant variational characterization") {
  Rng rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    const int dim = 2 + static_cast<int>(rng.next_u64() % 7);
    const HermitianMatrix a = rng.spd(dim, 100.0, 2.0);
    const UnitVector x = rng.unit_vector(dim);
    const auto report = commutant_variational(a, x, 64, rng.next_u64());
    const double scale = std::max(1.0, report.delta_value);
    CHECK(report.sampled_infimum >= report.delta_value - 1e-9 * scale);
    CHECK(report.witness_value == doctest::Approx(report.delta_value).epsilon(1e-12));
  }

  // A = I: the infimum is exactly 1
  const auto trivial = commutant_variational(HermitianMatrix::identity(3),
                                             Rng(3).unit_vector(3), 16, 5);
  CHECK(trivial.delta_value == doctest::Approx(1.0));
  CHECK(trivial.sampled_infimum >= 1.0 - 1e-12);
}
