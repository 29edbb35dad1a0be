#include "fsdlab/orders.hpp"

#include "fsdlab/fsdet.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fsdlab::orders {

namespace {

constexpr double kSpechtBranch = 1e-8;  // switch point to the near-1 branch

// S(exp(t)) for t = log h >= 0.
double specht_log(double t) {
  if (t < 0.0) throw Error("specht requires h >= 1");
  const double em = std::expm1(t);  // h - 1
  if (em <= kSpechtBranch) {
    return 1.0 + t * t / 8.0;
  }
  return em * std::exp(t / em) / (std::numbers::e * t);
}

}  // namespace

double specht(double h) {
  if (h < 1.0) throw Error("specht requires h >= 1");
  return specht_log(std::log1p(h - 1.0));
}

double specht_p(double h, double p) {
  if (h < 1.0) throw Error("specht_p requires h >= 1");
  if (!(p > 0.0)) throw Error("specht_p requires p > 0");
  return specht_log(p * std::log1p(h - 1.0));
}

double kantorovich(double h) {
  if (h < 1.0) throw Error("kantorovich requires h >= 1");
  return (h + 1.0) * (h + 1.0) / (4.0 * h);
}

double gen_kantorovich(double h, double alpha) {
  if (h < 1.0) throw Error("gen_kantorovich requires h >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("gen_kantorovich requires alpha in (0,1)");
  if (h - 1.0 <= kSpechtBranch) return 1.0;
  const double ha = std::pow(h, alpha);
  const double first = (ha - h) / ((alpha - 1.0) * (h - 1.0));
  const double inner = (alpha - 1.0) / alpha * (ha - 1.0) / (ha - h);
  return first * std::pow(inner, alpha);
}

double additive_constant(double m, double M, double p) {
  if (!(0.0 < m && m <= M)) throw Error("additive_constant requires 0 < m <= M");
  if (!(p > 0.0)) throw Error("additive_constant requires p > 0");
  const double t = p * (std::log(M) - std::log(m));  // log(M^p) - log(m^p)
  if (t <= kSpechtBranch) return 0.0;
  const double slope = (std::pow(M, p) - std::pow(m, p)) / t;
  return slope * std::log(specht_log(t));
}

namespace {

OrderVerdict difference_verdict(OrderRelation relation, const HermitianMatrix& diff) {
  const auto d = eigh(diff);
  const double scale = std::max(1.0, d.spectral_norm());
  const double margin = d.min_eig();
  return OrderVerdict{relation, margin >= -kPsdTol * scale, margin, scale,
                      UnitVector(Vector(d.eigenvectors.col(0)))};
}

void require_strictly_positive(const HermitianMatrix& a, const char* what) {
  const auto d = eigh(a);
  if (d.min_eig() <= invertibility_cutoff(d.spectral_norm())) {
    std::ostringstream os;
    os << what << ": operator not strictly positive";
    throw NotInvertibleError(os.str());
  }
}

}  // namespace

OrderVerdict loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("loewner_leq: dimension mismatch");
  return difference_verdict(OrderRelation::loewner, b - a);
}

OrderVerdict chaotic_leq(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("chaotic_leq: dimension mismatch");
  require_strictly_positive(a, "chaotic_leq");
  require_strictly_positive(b, "chaotic_leq");
  return difference_verdict(OrderRelation::chaotic, matrix_log(b) - matrix_log(a));
}

OrderVerdict delta_order_sampled(const HermitianMatrix& a, const HermitianMatrix& b, int samples,
                                 std::uint64_t seed) {
  if (a.dim() != b.dim()) throw DimensionError("delta_order_sampled: dimension mismatch");
  require_strictly_positive(a, "delta_order_sampled");
  require_strictly_positive(b, "delta_order_sampled");
  const auto da = eigh(a);
  const auto db = eigh(b);
  const HermitianMatrix log_gap = matrix_log(a) - matrix_log(b);
  const auto dg = eigh(log_gap);

  Rng rng(seed);
  double worst = std::numeric_limits<double>::infinity();
  Vector worst_dir = dg.eigenvectors.col(0);
  auto consider = [&](const UnitVector& x) {
    const double gap = fsdet::log_mean(da, x).value - fsdet::log_mean(db, x).value;
    if (gap < worst) {
      worst = gap;
      worst_dir = x.components();
    }
  };
  for (Eigen::Index j = 0; j < log_gap.dim(); ++j) {
    consider(UnitVector(Vector(dg.eigenvectors.col(j))));
  }
  for (int i = 0; i < samples; ++i) consider(rng.unit_vector(a.dim()));

  const double scale = std::max(1.0, dg.spectral_norm());
  return OrderVerdict{OrderRelation::delta_sampled, worst >= -kPsdTol * scale, worst, scale,
                      UnitVector(std::move(worst_dir))};
}

namespace {

void require_chaotic_hypothesis(const HermitianMatrix& a, const HermitianMatrix& b,
                                const SpectralBounds& bounds, const char* what) {
  const OrderVerdict order = chaotic_leq(b, a);
  if (!order.holds) {
    std::ostringstream os;
    os << what << ": chaotic order hypothesis fails (margin " << order.margin << ")";
    throw HypothesisViolated(os.str());
  }
  const auto db = eigh(b);
  const double tol = kPsdTol * std::max(1.0, db.spectral_norm());
  if (db.min_eig() < bounds.m - tol || db.max_eig() > bounds.M + tol) {
    std::ostringstream os;
    os << what << ": bounds mI <= B <= MI fail (spectrum [" << db.min_eig() << ", "
       << db.max_eig() << "], bounds [" << bounds.m << ", " << bounds.M << "])";
    throw HypothesisViolated(os.str());
  }
}

InequalityMargin margin_of(const std::string& variant, double p, double constant,
                           const HermitianMatrix& lhs, const HermitianMatrix& rhs) {
  const auto d = eigh(lhs - rhs);
  const double scale = std::max(1.0, spectral_norm(rhs));
  const double margin = d.min_eig();
  return InequalityMargin{variant, p, constant, margin, scale, margin >= -kPsdTol * scale};
}

}  // namespace

InequalityMargin verify_kti(const HermitianMatrix& a, const HermitianMatrix& b,
                            const SpectralBounds& bounds, double p, KtiVariant variant) {
  if (!(p > 0.0)) throw Error("verify_kti requires p > 0");
  require_chaotic_hypothesis(a, b, bounds, "verify_kti");
  return kti_inequality_margin(a, b, bounds, p, variant);
}

InequalityMargin kti_inequality_margin(const HermitianMatrix& a, const HermitianMatrix& b,
                                       const SpectralBounds& bounds, double p,
                                       KtiVariant variant) {
  if (!(p > 0.0)) throw Error("kti_inequality_margin requires p > 0");
  const double h = bounds.ratio();
  const HermitianMatrix ap = matrix_power(a, p);
  const HermitianMatrix bp = matrix_power(b, p);
  switch (variant) {
    case KtiVariant::weak: {
      const double k = kantorovich(std::pow(h, p));
      return margin_of("weak", p, k, k * ap, bp);
    }
    case KtiVariant::strong: {
      const double s = specht_p(h, p);
      return margin_of("strong", p, s, s * ap, bp);
    }
    case KtiVariant::additive: {
      const double c = additive_constant(bounds.m, bounds.M, p);
      return margin_of("additive", p, c, ap + c * HermitianMatrix::identity(a.dim()), bp);
    }
  }
  throw Error("kti_inequality_margin: unknown variant");
}

InequalityMargin mixed_bound(const HermitianMatrix& a, const HermitianMatrix& b,
                             const SpectralBounds& bounds, double p, double c) {
  if (!(p > 0.0)) throw Error("mixed_bound requires p > 0");
  require_chaotic_hypothesis(a, b, bounds, "mixed_bound");
  const double s = specht_p(bounds.ratio(), p);
  if (c < 1.0 - 1e-12 || c > s + 1e-12) {
    std::ostringstream os;
    os << "mixed_bound requires c in [1, S] = [1, " << s << "], got " << c;
    throw Error(os.str());
  }
  const double c_add = additive_constant(bounds.m, bounds.M, p);
  const double coeff = (s - 1.0 > 1e-15) ? (s - c) / (s - 1.0) : 0.0;
  const HermitianMatrix lhs(c * matrix_power(a, p).entries() +
                            coeff * c_add * Matrix::Identity(a.dim(), a.dim()));
  return margin_of("mixed", p, c, lhs, matrix_power(b, p));
}

InequalityMargin furuta_check(const HermitianMatrix& a, const HermitianMatrix& b, double p,
                              double r) {
  if (!(p >= 0.0) || !(r >= 0.0) || p + r <= 0.0) {
    throw Error("furuta_check requires p, r >= 0 with p + r > 0");
  }
  require_strictly_positive(a, "furuta_check");
  require_strictly_positive(b, "furuta_check");
  const OrderVerdict order = chaotic_leq(b, a);
  if (!order.holds) {
    std::ostringstream os;
    os << "furuta_check: chaotic order hypothesis fails (margin " << order.margin << ")";
    throw HypothesisViolated(os.str());
  }
  const HermitianMatrix ar = matrix_power(a, r);
  const HermitianMatrix ar2 = matrix_power(a, r / 2.0);
  const HermitianMatrix bp = matrix_power(b, p);
  const HermitianMatrix inner(ar2.entries() * bp.entries() * ar2.entries());
  const HermitianMatrix rhs = matrix_power(inner, r / (p + r));
  return margin_of("furuta", p, r, ar, rhs);
}

OperatorPair random_chaotic_pair(int dim, std::uint64_t seed, const PairSpread& spread) {
  if (dim < 1) throw Error("random_chaotic_pair requires dim >= 1");
  Rng rng(seed);
  HermitianMatrix k = spread.diagonal
                          ? HermitianMatrix::diagonal(RealVector::NullaryExpr(
                                dim, [&](Eigen::Index) { return spread.base_scale * rng.normal(); }))
                          : rng.hermitian(dim, spread.base_scale);
  HermitianMatrix gap =
      spread.diagonal
          ? HermitianMatrix::diagonal(RealVector::NullaryExpr(
                dim, [&](Eigen::Index) { return spread.gap_scale * rng.uniform(); }))
          : rng.psd(dim, spread.gap_scale);
  HermitianMatrix h = k + gap;
  if (spread.conjugate) {
    const Matrix u = rng.unitary(dim);
    k = HermitianMatrix(u * k.entries() * u.adjoint());
    h = HermitianMatrix(u * h.entries() * u.adjoint());
  }
  return OperatorPair{matrix_exp(h), matrix_exp(k)};
}

OperatorPair counterexample_pair() {
  Matrix a(2, 2), b(2, 2);
  a << 1.0, 0.0, 0.0, 4.0;
  b << 5.0, 5.0, 5.0, 10.0;
  return OperatorPair{HermitianMatrix(a), HermitianMatrix(b)};
}

SearchReport counterexample_search(int dim, int trials, std::uint64_t seed) {
  if (dim < 2) throw Error("counterexample_search requires dim >= 2 (scalars are totally ordered)");
  SearchReport report;
  report.trials = trials;
  report.found = 0;

  const OperatorPair fixed = counterexample_pair();
  report.hits.push_back(CounterexampleHit{fixed.a, fixed.b, chaotic_leq(fixed.a, fixed.b),
                                          loewner_leq(fixed.a, fixed.b)});

  PairSpread spread;
  spread.base_scale = 1.0;
  spread.gap_scale = 0.4;
  for (int t = 0; t < trials; ++t) {
    // search among pairs (B, A) with A >> B baked in: a hit is A >> B
    // without A >= B
    const OperatorPair pair = random_chaotic_pair(dim, derive_seed(seed, "cx-search", t), spread);
    const OrderVerdict chaotic = chaotic_leq(pair.b, pair.a);
    const OrderVerdict loewner = loewner_leq(pair.b, pair.a);
    if (chaotic.holds && !loewner.holds) {
      ++report.found;
      if (report.hits.size() < 16) {
        report.hits.push_back(CounterexampleHit{pair.b, pair.a, chaotic, loewner});
      }
    }
  }
  report.hit_rate = trials > 0 ? static_cast<double>(report.found) / trials : 0.0;
  return report;
}

}  // namespace fsdlab::orders
