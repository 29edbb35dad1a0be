#include "fsdlab/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace fsdlab;

TEST_CASE("generator stream is frozen") {
  // the report determinism contract depends on this stream never changing
  Rng rng(42);
  CHECK(rng.next_u64() == 15021278609987233951ULL);
  CHECK(rng.next_u64() == 5881210131331364753ULL);
  CHECK(rng.next_u64() == 18149643915985481100ULL);

  Rng again(42);
  CHECK(again.next_u64() == 15021278609987233951ULL);

  Rng other(43);
  CHECK(other.next_u64() != 15021278609987233951ULL);
}

TEST_CASE("uniform and normal draws are in range and reproducible") {
  Rng rng(7);
  double mean = 0.0, var = 0.0;
  for (int i = 0; i < 4096; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    const double g = rng.normal();
    mean += g;
    var += g * g;
  }
  mean /= 4096.0;
  var = var / 4096.0 - mean * mean;
  CHECK(std::abs(mean) < 0.08);
  CHECK(std::abs(var - 1.0) < 0.1);

  Rng a(11), b(11);
  for (int i = 0; i < 16; ++i) CHECK(a.normal() == b.normal());
}

TEST_CASE("complex gaussians have unit total variance") {
  Rng rng(5);
  double var = 0.0;
  for (int i = 0; i < 8192; ++i) var += std::norm(rng.cnormal());
  CHECK(var / 8192.0 == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("unit vectors, unitaries, and spd instances satisfy their contracts") {
  Rng rng(3);
  for (int n : {1, 2, 7, 16}) {
    CHECK(rng.unit_vector(n).components().norm() == doctest::Approx(1.0).epsilon(1e-14));

    const Matrix u = rng.unitary(n);
    CHECK((u.adjoint() * u - Matrix::Identity(n, n)).norm() <= 1e-12 * n);

    const auto d = eigh(rng.spd(n, 100.0, 2.0));
    CHECK(d.max_eig() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(d.min_eig() >= 2.0 / 100.0 - 1e-12);
  }
  CHECK_THROWS_AS(rng.spd(3, 0.5), Error);
}

TEST_CASE("derived seeds separate checks and instances") {
  const auto s1 = derive_seed(42, "check-a", 0);
  const auto s2 = derive_seed(42, "check-a", 1);
  const auto s3 = derive_seed(42, "check-b", 0);
  const auto s4 = derive_seed(43, "check-a", 0);
  CHECK(s1 != s2);
  CHECK(s1 != s3);
  CHECK(s1 != s4);
  CHECK(derive_seed(42, "check-a", 0) == s1);
}
