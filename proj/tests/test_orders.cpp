#include "fsdlab/orders.hpp"
#include "fsdlab/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace fsdlab;
using namespace fsdlab::orders;

namespace {

HermitianMatrix diag2(double a, double b) {
  RealVector d(2);
  d << a, b;
  return HermitianMatrix::diagonal(d);
}

}  // namespace

TEST_CASE("specht ratio values and branches") {
  CHECK(specht(1.0) == 1.0);
  // high-precision evaluation of the closed form at h = 4
  CHECK(specht(4.0) == doctest::Approx(1.2637407212158112).epsilon(1e-13));
  CHECK(specht(2.0) == doctest::Approx(1.0614756908460861).epsilon(1e-13));
  const double near = specht(1.0 + 1e-12);
  CHECK(near >= 1.0);
  CHECK(near <= 1.0 + 1e-10);
  CHECK_THROWS_AS(specht(0.5), Error);

  // series and closed form agree across the branch point
  for (double eps : {1e-9, 1e-8, 1e-7, 1e-4}) {
    const double s = specht(1.0 + eps);
    CHECK(s == doctest::Approx(1.0 + eps * eps / 8.0).epsilon(1e-6));
  }
}

TEST_CASE("specht_p reduces to specht of the power") {
  CHECK(specht_p(4.0, 1.0) == doctest::Approx(specht(4.0)).epsilon(1e-14));
  CHECK(specht_p(1.0, 3.0) == 1.0);
  CHECK(specht_p(4.0, 0.5) == doctest::Approx(specht(2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(specht_p(4.0, 0.0), Error);
}

TEST_CASE("kantorovich constants") {
  CHECK(kantorovich(1.0) == doctest::Approx(1.0));
  CHECK(kantorovich(4.0) == doctest::Approx(25.0 / 16.0).epsilon(1e-15));
  CHECK(gen_kantorovich(1.0, 0.25) == doctest::Approx(1.0));
  CHECK(gen_kantorovich(1.0 + 1e-12, 0.75) == doctest::Approx(1.0));
  CHECK_THROWS_AS(gen_kantorovich(4.0, 1.5), Error);
  // K(h, alpha) <= 1 <= S(h) ordering on a small grid
  for (double h : {1.5, 4.0, 25.0}) {
    for (double alpha : {0.25, 0.5, 0.75}) {
      CHECK(gen_kantorovich(h, alpha) <= 1.0 + 1e-12);
      CHECK(gen_kantorovich(h, alpha) > 0.0);
    }
  }
}

TEST_CASE("additive constant") {
  CHECK(additive_constant(2.0, 2.0) == 0.0);
  CHECK(additive_constant(1.0, 4.0) ==
        doctest::Approx(3.0 / std::log(4.0) * std::log(specht(4.0))).epsilon(1e-13));
  CHECK(additive_constant(1.0, 6.0) > 1.0);
  for (double h : {1.5, 3.0, 10.0, 80.0}) {
    CHECK(additive_constant(1.0, h) < h);
  }
}

TEST_CASE("loewner and chaotic verdicts on the hardcoded pair") {
  const auto pair = counterexample_pair();
  const auto lo = loewner_leq(pair.a, pair.b);
  CHECK_FALSE(lo.holds);
  CHECK(lo.margin == doctest::Approx(-0.09901951359278449).epsilon(1e-10));

  const auto ch = chaotic_leq(pair.a, pair.b);
  CHECK(ch.holds);
  CHECK(ch.margin == doctest::Approx(0.0162691719140636).epsilon(1e-8));

  const auto self = loewner_leq(pair.a, pair.a);
  CHECK(self.holds);
  CHECK(self.margin == doctest::Approx(0.0));

  const auto shifted = loewner_leq(pair.a, pair.a + HermitianMatrix::identity(2));
  CHECK(shifted.holds);
  CHECK(shifted.margin == doctest::Approx(1.0));

  CHECK(chaotic_leq(pair.b, pair.b).holds);
  CHECK(chaotic_leq(pair.b, pair.b).margin == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(chaotic_leq(diag2(0.0, 1.0), diag2(1.0, 1.0)), NotInvertibleError);
}

TEST_CASE("delta order sampling agrees with the chaotic order") {
  Rng rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    const int dim = 2 + static_cast<int>(rng.next_u64() % 5);
    const auto pair = random_chaotic_pair(dim, rng.next_u64());
    const auto sampled = delta_order_sampled(pair.a, pair.b, 24, rng.next_u64());
    CHECK(sampled.holds == chaotic_leq(pair.b, pair.a).holds);
  }
  const auto fixture = counterexample_pair();
  CHECK(delta_order_sampled(fixture.b, fixture.a, 32, 17).holds);
  CHECK_FALSE(delta_order_sampled(fixture.a, fixture.b, 32, 18).holds);

  const HermitianMatrix a = Rng(77).spd(3, 10.0, 2.0);
  const auto doubled = delta_order_sampled(2.0 * a, a, 16, 19);
  CHECK(doubled.holds);
  CHECK(doubled.margin == doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("kti variants on fixtures") {
  const auto pair = counterexample_pair();
  // B >> A here, so the theorem applies with (A_big, B_small) = (b, a)
  const auto bounds = SpectralBounds::of(pair.a);
  for (double p : {0.5, 1.0, 2.0}) {
    for (auto variant : {KtiVariant::weak, KtiVariant::strong, KtiVariant::additive}) {
      const auto m = verify_kti(pair.b, pair.a, bounds, p, variant);
      CHECK(m.holds);
    }
  }

  // m = M collapses the constants to 1 resp. 0
  const HermitianMatrix b_scalar = 2.0 * HermitianMatrix::identity(2);
  const HermitianMatrix a_above = diag2(2.0, 3.0);
  const SpectralBounds scalar_bounds(2.0, 2.0);
  const auto weak = verify_kti(a_above, b_scalar, scalar_bounds, 1.0, KtiVariant::weak);
  CHECK(weak.constant_used == doctest::Approx(1.0));
  CHECK(weak.holds);
  const auto strong = verify_kti(a_above, b_scalar, scalar_bounds, 1.0, KtiVariant::strong);
  CHECK(strong.constant_used == doctest::Approx(1.0));
  CHECK(strong.holds);
  const auto additive = verify_kti(a_above, b_scalar, scalar_bounds, 1.0, KtiVariant::additive);
  CHECK(additive.constant_used == doctest::Approx(0.0));
  CHECK(additive.holds);

  // A = B holds for every variant since the constants are >= 1 resp. >= 0
  const HermitianMatrix a = Rng(4).spd(3, 8.0, 2.0);
  const auto self_bounds = SpectralBounds::of(a);
  for (auto variant : {KtiVariant::weak, KtiVariant::strong, KtiVariant::additive}) {
    CHECK(verify_kti(a, a, self_bounds, 1.0, variant).holds);
  }

  // violated hypotheses are reported, not silently skipped
  CHECK_THROWS_AS(verify_kti(pair.a, pair.b, SpectralBounds::of(pair.b), 1.0, KtiVariant::weak),
                  HypothesisViolated);
}

TEST_CASE("mixed bound endpoints reproduce strong and additive") {
  Rng rng(6);
  const auto pair = random_chaotic_pair(4, rng.next_u64());
  const auto bounds = SpectralBounds::of(pair.b);
  for (double p : {0.5, 1.0}) {
    const double s = specht_p(bounds.ratio(), p);
    const auto strong = verify_kti(pair.a, pair.b, bounds, p, KtiVariant::strong);
    const auto additive = verify_kti(pair.a, pair.b, bounds, p, KtiVariant::additive);
    CHECK(mixed_bound(pair.a, pair.b, bounds, p, s).margin ==
          doctest::Approx(strong.margin).epsilon(1e-10));
    CHECK(mixed_bound(pair.a, pair.b, bounds, p, 1.0).margin ==
          doctest::Approx(additive.margin).epsilon(1e-10));
    CHECK(mixed_bound(pair.a, pair.b, bounds, p, 0.5 * (1.0 + s)).holds);
    CHECK_THROWS_AS(mixed_bound(pair.a, pair.b, bounds, p, s + 0.5), Error);
    CHECK_THROWS_AS(mixed_bound(pair.a, pair.b, bounds, p, 0.5), Error);
  }
}

TEST_CASE("furuta inequality") {
  const auto pair = counterexample_pair();
  for (double p : {0.5, 1.0, 2.0}) {
    for (double r : {0.5, 1.0, 2.0}) {
      CHECK(furuta_check(pair.b, pair.a, p, r).holds);
    }
  }
  const auto at_zero = furuta_check(pair.b, pair.a, 1.0, 0.0);
  CHECK(at_zero.margin == doctest::Approx(0.0).epsilon(1e-14));

  const HermitianMatrix a = Rng(8).spd(3, 5.0, 1.5);
  CHECK(std::abs(furuta_check(a, a, 2.0, 1.0).margin) <= 1e-9);
  CHECK_THROWS_AS(furuta_check(a, a, 0.0, 0.0), Error);
}

TEST_CASE("random chaotic pairs satisfy the order by construction") {
  Rng rng(9);
  for (int rep = 0; rep < 40; ++rep) {
    const int dim = 1 + static_cast<int>(rng.next_u64() % 6);
    PairSpread spread;
    spread.conjugate = rep % 2 == 0;
    const auto pair = random_chaotic_pair(dim, rng.next_u64(), spread);
    CHECK(chaotic_leq(pair.b, pair.a).holds);
  }
  // zero gap gives A = B
  PairSpread no_gap;
  no_gap.gap_scale = 0.0;
  const auto same = random_chaotic_pair(3, 123, no_gap);
  CHECK((same.a.entries() - same.b.entries()).norm() <= 1e-12);

  // diagonal pairs are commuting and Loewner-ordered as well
  PairSpread diag;
  diag.diagonal = true;
  const auto commuting = random_chaotic_pair(4, 99, diag);
  CHECK(loewner_leq(commuting.b, commuting.a).holds);
}

TEST_CASE("counterexample search") {
  CHECK_THROWS_AS(counterexample_search(1, 10, 1), Error);

  const auto empty = counterexample_search(2, 0, 2);
  CHECK(empty.hits.size() == 1);  // the hardcoded pair
  CHECK(empty.found == 0);

  const auto report = counterexample_search(2, 2000, 42);
  CHECK(report.hits.front().chaotic.holds);
  CHECK_FALSE(report.hits.front().loewner.holds);
  for (const auto& hit : report.hits) {
    CHECK(chaotic_leq(hit.a, hit.b).holds);
    CHECK_FALSE(loewner_leq(hit.a, hit.b).holds);
  }
  CHECK(report.hit_rate == doctest::Approx(double(report.found) / 2000.0));
}
