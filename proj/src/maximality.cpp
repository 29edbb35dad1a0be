#include "fsdlab/maximality.hpp"

#include "fsdlab/fsdet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fsdlab::maximality {

namespace {

double op_norm(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.adjoint() * m);
  if (solver.info() != Eigen::Success) throw EigenSolverError("op_norm: eigensolver failed");
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

double sup_rayleigh(const levi::LeviFamily& family, const UnitVector& x) {
  double sup = -std::numeric_limits<double>::infinity();
  family.for_each_sample([&](const levi::FamilySample& s) {
    sup = std::max(sup, rayleigh(s.levi, x));
  });
  return sup;
}

}  // namespace

std::vector<double> recompute_sup_values(const levi::LeviFamily& family,
                                         const std::vector<UnitVector>& vectors) {
  std::vector<double> values;
  values.reserve(vectors.size());
  for (const auto& x : vectors) values.push_back(sup_rayleigh(family, x));
  return values;
}

NullCertificate null_certificate(const levi::LeviFamily& family, Strategy strategy, int length,
                                 std::optional<UnitVector> fixed,
                                 std::optional<double> decay_target) {
  if (length < 1) throw Error("null_certificate requires length >= 1");
  if (family.sample_count() == 0) throw Error("null_certificate requires a sampled family");
  const Eigen::Index n = family.dim();

  std::vector<UnitVector> vectors;
  vectors.reserve(length);
  switch (strategy) {
    case Strategy::fixed_vector: {
      if (!fixed) throw Error("fixed_vector strategy needs the vector");
      if (fixed->dim() != n) throw DimensionError("fixed_vector: dimension mismatch");
      for (int i = 0; i < length; ++i) vectors.push_back(*fixed);
      break;
    }
    case Strategy::averaging_sets: {
      // index sets per the catalog kind: odd coordinates for the interleaved
      // family, prefixes otherwise
      const bool odd = family.function.kind() == levi::Kind::interleaved;
      const int capacity = odd ? static_cast<int>((n + 1) / 2) : static_cast<int>(n);
      if (length > capacity) {
        std::ostringstream os;
        os << "averaging_sets supports length <= " << capacity << " for this kind";
        throw Error(os.str());
      }
      for (int i = 1; i <= length; ++i) {
        Vector x = Vector::Zero(n);
        for (int j = 0; j < i; ++j) x(odd ? 2 * j : j) = 1.0;
        vectors.push_back(UnitVector(std::move(x)));
      }
      break;
    }
    case Strategy::min_eig_of_sup: {
      if (length > n) throw Error("min_eig_of_sup supports length <= dim");
      // entrywise sup of |L(z)| over samples is real symmetric
      Eigen::MatrixXd agg = Eigen::MatrixXd::Zero(n, n);
      family.for_each_sample([&](const levi::FamilySample& s) {
        agg = agg.cwiseMax(s.levi.entries().cwiseAbs());
      });
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(agg);
      if (solver.info() != Eigen::Success) throw EigenSolverError("aggregate eigensolver failed");
      // descending through the k smallest aggregate directions, so the
      // sequence ends at the best candidate
      for (int i = length - 1; i >= 0; --i) {
        vectors.push_back(UnitVector(solver.eigenvectors().col(i).cast<Complex>()));
      }
      break;
    }
    case Strategy::basis_tail: {
      if (length > n) throw Error("basis_tail supports length <= dim");
      for (int i = 1; i <= length; ++i) vectors.push_back(UnitVector::basis(n, n - i));
      break;
    }
  }

  NullCertificate cert;
  cert.strategy = strategy;
  cert.sup_values = recompute_sup_values(family, vectors);
  cert.vectors = std::move(vectors);
  cert.decay_target = decay_target.value_or(1e-2 * cert.sup_values.front() + 1e-12);
  cert.passes = cert.sup_values.back() <= cert.decay_target;
  return cert;
}

ExclusionReport fsd_necessary_check(const levi::LeviFamily& family, double tol) {
  if (family.sample_count() == 0) throw Error("fsd_necessary_check requires samples");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  family.for_each_sample([&](const levi::FamilySample& s) {
    const double m = min_eig(s.levi);
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  });
  // excluded only when every sample is bounded away from degeneracy; a
  // single numerically null direction blocks the exclusion
  const bool excluded = lo >= tol - kPsdTol * std::max(1.0, tol);
  return ExclusionReport{lo, hi, tol, excluded};
}

namespace {

Matrix orthonormalize(const Matrix& basis) {
  Eigen::HouseholderQR<Matrix> qr(basis);
  Matrix q = qr.householderQ();
  return q.leftCols(basis.cols());
}

}  // namespace

CommonRangeReport common_range_check(const levi::LeviFamily& family, const Matrix& basis,
                                     double tol) {
  const Eigen::Index n = family.dim();
  if (basis.rows() != n) throw DimensionError("common_range_check: basis dimension mismatch");
  if (basis.cols() >= n) throw Error("common_range_check: subspace must be proper");
  if (basis.cols() < 1) throw Error("common_range_check: subspace must be nonzero");

  Eigen::HouseholderQR<Matrix> qr(basis);
  const Matrix full_q = qr.householderQ();
  const Matrix q = full_q.leftCols(basis.cols());
  const Matrix proj = Matrix::Identity(n, n) - q * q.adjoint();

  double worst = 0.0;
  family.for_each_sample([&](const levi::FamilySample& s) {
    worst = std::max(worst, op_norm(proj * s.levi.entries()));
  });

  CommonRangeReport report;
  report.passes = worst <= tol;
  report.worst_residual = worst;
  report.tol = tol;
  report.witness_sup_rayleigh = 0.0;
  if (report.passes) {
    UnitVector witness(Vector(full_q.col(basis.cols())));
    report.witness_sup_rayleigh = sup_rayleigh(family, witness);
    report.witness = std::move(witness);
  }
  return report;
}

ApproxRangeReport approx_common_range(const levi::LeviFamily& family, double eps) {
  if (!(eps > 0.0)) throw Error("approx_common_range requires eps > 0");
  const Eigen::Index n = family.dim();
  const auto m = static_cast<Eigen::Index>(family.sample_count());
  Matrix stacked(n, n * m);
  Eigen::Index col = 0;
  family.for_each_sample([&](const levi::FamilySample& s) {
    stacked.middleCols(col, n) = s.levi.entries();
    col += n;
  });
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinU);
  const Matrix u = svd.matrixU();

  auto residual = [&](Eigen::Index k) {
    const Matrix proj =
        Matrix::Identity(n, n) - u.leftCols(k) * u.leftCols(k).adjoint();
    double worst = 0.0;
    family.for_each_sample([&](const levi::FamilySample& s) {
      worst = std::max(worst, op_norm(proj * s.levi.entries()));
    });
    return worst;
  };

  // residual(k) is nonincreasing in k; find the smallest proper k within eps
  Eigen::Index lo = 0, hi = n - 1;
  if (residual(hi) > eps) {
    return ApproxRangeReport{false, static_cast<int>(n), Matrix::Identity(n, n), residual(hi),
                             eps};
  }
  while (lo < hi) {
    const Eigen::Index mid = (lo + hi) / 2;
    if (residual(mid) <= eps) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return ApproxRangeReport{true, static_cast<int>(lo), Matrix(u.leftCols(lo)), residual(lo), eps};
}

CompactnessReport collectively_compact_check(const levi::LeviFamily& family, double eps,
                                             int probes, std::uint64_t seed) {
  const ApproxRangeReport range = approx_common_range(family, eps);
  const Eigen::Index n = family.dim();
  const bool small = range.success && range.subspace_dim <= n / 2;

  double worst_probe = 0.0;
  if (range.success && probes > 0) {
    const Matrix proj =
        Matrix::Identity(n, n) - range.basis * range.basis.adjoint();
    Rng rng(seed);
    std::vector<const levi::FamilySample*> samples;
    family.for_each_sample([&](const levi::FamilySample& s) { samples.push_back(&s); });
    for (int i = 0; i < probes; ++i) {
      const UnitVector h = rng.unit_vector(n);
      const auto& s = *samples[rng.next_u64() % samples.size()];
      worst_probe = std::max(worst_probe, (proj * (s.levi.entries() * h.components())).norm());
    }
  }
  return CompactnessReport{small, range.subspace_dim, eps, worst_probe, probes};
}

MajorantReport model_majorant_check(const levi::LeviFamily& family, const HermitianMatrix& t,
                                    double tol) {
  if (t.dim() != family.dim()) throw DimensionError("model_majorant_check: dimension mismatch");
  const auto dt = eigh(t);
  const double scale = std::max(1.0, dt.spectral_norm());
  double worst = std::numeric_limits<double>::infinity();
  family.for_each_sample([&](const levi::FamilySample& s) {
    worst = std::min(worst, min_eig(t - s.levi));
  });
  const bool dominates = worst >= -kPsdTol * scale;
  const double inf_t = dt.min_eig();
  return MajorantReport{dominates, worst, inf_t, dominates && inf_t <= tol};
}

ConstantLeviVerdict constant_levi_classify(const levi::LeviFamily& family, double tol) {
  if (family.sample_count() == 0) throw Error("constant_levi_classify requires samples");
  const levi::FamilySample* first = nullptr;
  family.for_each_sample([&](const levi::FamilySample& s) {
    if (first == nullptr) first = &s;
  });
  double deviation = 0.0;
  family.for_each_sample([&](const levi::FamilySample& s) {
    deviation = std::max(deviation, op_norm(s.levi.entries() - first->levi.entries()));
  });
  const auto d = eigh(first->levi);
  const bool constant = deviation <= tol * std::max(1.0, d.spectral_norm());
  const double inf = d.min_eig();
  const bool degenerate = inf <= invertibility_cutoff(d.spectral_norm());
  return ConstantLeviVerdict{constant, deviation, inf, degenerate};
}

BoundaryInfReport boundary_inf_check(const HermitianMatrix& a, const levi::Region& region,
                                     double tol) {
  if (region.center.size() != a.dim()) throw DimensionError("boundary_inf_check: dim mismatch");
  if (region.center.norm() > 1e-12) throw Error("boundary_inf_check requires a region centered at 0");
  const auto d = eigh(a);
  const double r2 = region.radius * region.radius;

  Rng rng(region.seed);
  double inf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < region.n_boundary; ++i) {
    const Vector z = region.radius * rng.unit_vector(a.dim()).components();
    inf = std::min(inf, z.dot(a.entries() * z).real());
  }
  // the lemma's mechanism: push a scaled near-null direction to the boundary
  const Vector z_null = region.radius * d.eigenvectors.col(0);
  inf = std::min(inf, z_null.dot(a.entries() * z_null).real());

  const double bound = r2 * (d.min_eig() + tol);
  return BoundaryInfReport{inf, bound, d.min_eig(), inf <= bound};
}

ClassificationReport classify_family(const levi::LeviFamily& family, double exclusion_tol,
                                     int certificate_length) {
  const auto exclusion = fsd_necessary_check(family, exclusion_tol);
  if (exclusion.excluded) {
    return ClassificationReport{MaximalityVerdict::excluded, "fsd-necessary",
                                exclusion.min_over_samples, std::nullopt};
  }

  const auto constant = constant_levi_classify(family);
  if (constant.constant && constant.degenerate) {
    return ClassificationReport{MaximalityVerdict::established, "constant-levi-degenerate",
                                exclusion.min_over_samples, std::nullopt};
  }

  const int length = std::min<int>(certificate_length, static_cast<int>(family.dim()));
  const bool odd_capacity = family.function.kind() == levi::Kind::interleaved;
  const int avg_length =
      odd_capacity ? std::min<int>(length, static_cast<int>((family.dim() + 1) / 2)) : length;
  const std::pair<Strategy, int> attempts[] = {
      {Strategy::averaging_sets, avg_length},
      {Strategy::min_eig_of_sup, length},
      {Strategy::basis_tail, length},
  };
  for (const auto& [strategy, k] : attempts) {
    auto cert = null_certificate(family, strategy, k);
    if (cert.passes) {
      const char* name = strategy == Strategy::averaging_sets
                             ? "null-certificate-averaging"
                             : (strategy == Strategy::min_eig_of_sup
                                    ? "null-certificate-min-eig-of-sup"
                                    : "null-certificate-basis-tail");
      return ClassificationReport{MaximalityVerdict::established, name,
                                  exclusion.min_over_samples, std::move(cert)};
    }
  }
  return ClassificationReport{MaximalityVerdict::undetermined, "",
                              exclusion.min_over_samples, std::nullopt};
}

namespace {

constexpr double kCheckTol = 1e-9;

struct PointData {
  const levi::FamilySample* sample;
  double u;  // offset applied
  double v;
  double norm2;
};

std::vector<PointData> collect(const ComparisonScenario& sc,
                               const std::vector<levi::FamilySample>& samples) {
  std::vector<PointData> out;
  out.reserve(samples.size());
  for (const auto& s : samples) {
    PointData p;
    p.sample = &s;
    p.u = sc.u.eval(s.point) + sc.u_offset;
    p.v = sc.v ? sc.v->eval(s.point) + sc.v_offset : 0.0;
    p.norm2 = s.point.squaredNorm();
    out.push_back(p);
  }
  return out;
}

void gate(bool ok, const std::string& what) {
  if (!ok) throw HypothesisViolated(what);
}

// mI <= L <= MI at every interior sample
void gate_levi_bounds(const std::vector<levi::FamilySample>& samples, const SpectralBounds& b,
                      const char* name) {
  for (const auto& s : samples) {
    const auto d = eigh(s.levi);
    const double tol = kPsdTol * std::max(1.0, d.spectral_norm());
    if (d.min_eig() < b.m - tol || d.max_eig() > b.M + tol) {
      std::ostringstream os;
      os << name << ": Levi bounds [" << b.m << ", " << b.M << "] fail at a sample (spectrum ["
         << d.min_eig() << ", " << d.max_eig() << "])";
      throw HypothesisViolated(os.str());
    }
  }
}

// delta_x(L_v) <= delta_x(L_u) for all x, realized by the sampled check
void gate_delta_order(const ComparisonScenario& sc, const levi::LeviFamily& v_family,
                      const std::vector<levi::FamilySample>& u_samples, double m,
                      const char* name) {
  for (std::size_t i = 0; i < u_samples.size(); ++i) {
    const auto du = eigh(u_samples[i].levi);
    const double tol = kPsdTol * std::max(1.0, du.spectral_norm());
    if (du.min_eig() < m - tol) {
      std::ostringstream os;
      os << name << ": delta-order hypothesis fails (L_u has spectrum below m)";
      throw HypothesisViolated(os.str());
    }
    const auto verdict = orders::delta_order_sampled(
        u_samples[i].levi, v_family.interior[i].levi, sc.delta_samples,
        derive_seed(sc.seed, "cmp-delta", i));
    if (!verdict.holds) {
      std::ostringstream os;
      os << name << ": delta-order hypothesis fails at a sample (margin " << verdict.margin
         << ")";
      throw HypothesisViolated(os.str());
    }
  }
}

bool max_principle(const std::vector<PointData>& interior, const std::vector<PointData>& boundary,
                   const std::function<double(const PointData&)>& w) {
  double imax = -std::numeric_limits<double>::infinity();
  double bmax = -std::numeric_limits<double>::infinity();
  for (const auto& p : interior) imax = std::max(imax, w(p));
  for (const auto& p : boundary) bmax = std::max(bmax, w(p));
  return imax <= bmax + kCheckTol;
}

ComparisonReport run_cp(const ComparisonScenario& sc, ComparisonKind kind) {
  gate(sc.v.has_value() || kind == ComparisonKind::cp3 || kind == ComparisonKind::cp4,
       "comparison requires a competitor v");
  const levi::LeviFamily u_family = levi::sample_family(sc.u, sc.region);
  std::optional<levi::LeviFamily> v_family;
  if (sc.v) {
    // evaluate v at the same sample points as u
    std::vector<Vector> ipts, bpts;
    for (const auto& s : u_family.interior) ipts.push_back(s.point);
    for (const auto& s : u_family.boundary) bpts.push_back(s.point);
    v_family = levi::family_at_points(*sc.v, sc.region, ipts, bpts);
  }

  const auto interior = collect(sc, u_family.interior);
  const auto boundary = collect(sc, u_family.boundary);

  double constant = 1.0;
  std::function<double(const PointData&)> conclusion;   // must be <= 0
  std::function<Matrix(std::size_t)> conclusion_levi;   // must be PSD, interior index

  switch (kind) {
    case ComparisonKind::cp1: {
      gate(sc.bounds.has_value(), "cp1 needs spectral bounds for L_v");
      gate_levi_bounds(v_family->interior, *sc.bounds, "cp1");
      gate_delta_order(sc, *v_family, u_family.interior, sc.bounds->m, "cp1");
      const double s_min = orders::specht(sc.bounds->ratio());
      constant = sc.constant_override.value_or(s_min);
      if (constant < s_min - 1e-12) throw Error("cp1 constant override must be >= S(M/m)");
      for (const auto& p : boundary) {
        gate(constant * p.u <= p.v + kCheckTol, "cp1: boundary inequality S u <= v fails");
      }
      conclusion = [&](const PointData& p) { return constant * p.u - p.v; };
      conclusion_levi = [&](std::size_t i) {
        return Matrix(constant * u_family.interior[i].levi.entries() -
                      v_family->interior[i].levi.entries());
      };
      break;
    }
    case ComparisonKind::cp2: {
      gate(sc.bounds.has_value(), "cp2 needs spectral bounds for L_v");
      gate_levi_bounds(v_family->interior, *sc.bounds, "cp2");
      gate_delta_order(sc, *v_family, u_family.interior, sc.bounds->m, "cp2");
      constant = orders::additive_constant(sc.bounds->m, sc.bounds->M);
      for (const auto& p : boundary) {
        gate(p.u + constant * p.norm2 <= p.v + kCheckTol,
             "cp2: boundary inequality u + C ||z||^2 <= v fails");
      }
      conclusion = [&](const PointData& p) { return p.u + constant * p.norm2 - p.v; };
      conclusion_levi = [&](std::size_t i) {
        const Eigen::Index n = u_family.dim();
        return Matrix(u_family.interior[i].levi.entries() + constant * Matrix::Identity(n, n) -
                      v_family->interior[i].levi.entries());
      };
      break;
    }
    case ComparisonKind::cp3: {
      for (const auto& p : boundary) {
        gate(p.u <= p.norm2 + kCheckTol, "cp3: boundary inequality u <= ||z||^2 fails");
      }
      for (const auto& s : u_family.interior) {
        gate(min_eig(s.levi) >= 1.0 - kCheckTol,
             "cp3: delta hypothesis delta_x(L_u) >= 1 fails at a sample");
      }
      conclusion = [](const PointData& p) { return p.u - p.norm2; };
      conclusion_levi = [&](std::size_t i) {
        const Eigen::Index n = u_family.dim();
        return Matrix(u_family.interior[i].levi.entries() - Matrix::Identity(n, n));
      };
      break;
    }
    case ComparisonKind::cp4: {
      for (const auto& p : boundary) {
        gate(p.u >= p.norm2 - kCheckTol, "cp4: boundary inequality u >= ||z||^2 fails");
      }
      for (const auto& s : u_family.interior) {
        gate(max_eig(s.levi) <= 1.0 + kCheckTol,
             "cp4: delta hypothesis delta_x(L_u) <= 1 fails at a sample");
      }
      conclusion = [](const PointData& p) { return p.norm2 - p.u; };
      conclusion_levi = [&](std::size_t i) {
        const Eigen::Index n = u_family.dim();
        return Matrix(Matrix::Identity(n, n) - u_family.interior[i].levi.entries());
      };
      break;
    }
    default:
      throw Error("run_cp: unsupported kind");
  }

  double worst_value = std::numeric_limits<double>::infinity();
  for (const auto& p : interior) worst_value = std::min(worst_value, -conclusion(p));
  double worst_levi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < interior.size(); ++i) {
    worst_levi = std::min(worst_levi, min_eig(HermitianMatrix(conclusion_levi(i))));
  }
  const bool mp = max_principle(interior, boundary, conclusion);
  const bool pass = worst_value >= -kCheckTol && worst_levi >= -kCheckTol && mp;

  ComparisonReport report;
  report.kind = kind;
  report.pass = pass;
  report.conclusion_margin = worst_value;
  report.levi_margin = worst_levi;
  report.max_principle_ok = mp;
  report.constant_used = constant;
  report.detail = "conclusion and Levi margins over sampled region";
  return report;
}

ComparisonReport run_bounds(const ComparisonScenario& sc) {
  gate(sc.bounds.has_value(), "bounds check needs spectral bounds for L_u");
  const levi::LeviFamily family = levi::sample_family(sc.u, sc.region);
  gate_levi_bounds(family.interior, *sc.bounds, "bounds");

  const auto interior = collect(sc, family.interior);
  const auto boundary = collect(sc, family.boundary);

  double r2_sup = 0.0, r2_inf = std::numeric_limits<double>::infinity();
  double u_sup = -std::numeric_limits<double>::infinity();
  double u_inf = std::numeric_limits<double>::infinity();
  for (const auto& p : boundary) {
    r2_sup = std::max(r2_sup, p.norm2);
    r2_inf = std::min(r2_inf, p.norm2);
    u_sup = std::max(u_sup, p.u);
    u_inf = std::min(u_inf, p.u);
  }

  const double m = sc.bounds->m, M = sc.bounds->M;
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& p : interior) {
    const double lower = M * (p.norm2 - r2_sup) + u_inf;
    const double upper = m * (p.norm2 - r2_inf) + u_sup;
    margin = std::min(margin, p.u - lower);
    margin = std::min(margin, upper - p.u);
  }

  const bool mp1 = max_principle(interior, boundary,
                                 [&](const PointData& p) { return p.u - m * p.norm2; });
  const bool mp2 = max_principle(interior, boundary,
                                 [&](const PointData& p) { return M * p.norm2 - p.u; });

  ComparisonReport report;
  report.kind = ComparisonKind::bounds;
  report.pass = margin >= -kCheckTol && mp1 && mp2;
  report.conclusion_margin = margin;
  report.levi_margin = 0.0;
  report.max_principle_ok = mp1 && mp2;
  report.constant_used = M;
  report.detail = "two-sided sandwich over sampled region";
  return report;
}

ComparisonReport run_increasing_limit_demo(const ComparisonScenario& sc) {
  const Eigen::Index n = sc.region.center.size();
  gate(sc.region.center.norm() <= 1e-12, "demo requires a region centered at 0");
  const int j = sc.demo_truncation;
  gate(j >= 1 && j < n, "demo requires truncation index in [1, dim)");

  const double r2 = sc.region.radius * sc.region.radius;
  const levi::TestFunction full = levi::TestFunction::weighted_quadratic(RealVector::Ones(n));
  RealVector wj = RealVector::Zero(n);
  wj.head(j).setOnes();
  const levi::TestFunction truncated = levi::TestFunction::weighted_quadratic(wj);
  const levi::LeviFamily family = levi::sample_family(full, sc.region);

  // v == r^2 beats u = ||z||^2 strictly inside although u_j increases to u
  double strict_margin = std::numeric_limits<double>::infinity();
  bool monotone = true;
  for (const auto& s : family.interior) {
    const double u_val = full.eval(s.point);
    strict_margin = std::min(strict_margin, r2 - u_val);
    if (truncated.eval(s.point) > u_val + kCheckTol) monotone = false;
  }
  bool boundary_match = true;
  for (const auto& s : family.boundary) {
    if (std::abs(r2 - full.eval(s.point)) > kCheckTol) boundary_match = false;
  }
  // each truncated stage has an exact null direction past its support
  const HermitianMatrix levi_j = truncated.levi(Vector::Zero(n));
  const double null_value = rayleigh(levi_j, UnitVector::basis(n, j));

  const bool pass =
      strict_margin > 0.0 && monotone && boundary_match && std::abs(null_value) <= kCheckTol;

  ComparisonReport report;
  report.kind = ComparisonKind::increasing_limit_demo;
  report.pass = pass;
  report.conclusion_margin = strict_margin;
  report.levi_margin = null_value;
  report.max_principle_ok = true;  // v - u is not PSH here; the lemma does not apply
  report.constant_used = r2;
  report.detail = "constant competitor exceeds the increasing limit strictly inside";
  return report;
}

}  // namespace

ComparisonReport comparison_check(const ComparisonScenario& scenario, ComparisonKind kind) {
  if (scenario.constant_override && kind != ComparisonKind::cp1) {
    throw ConfigError("constant_override is only meaningful for cp1");
  }
  switch (kind) {
    case ComparisonKind::cp1:
    case ComparisonKind::cp2:
    case ComparisonKind::cp3:
    case ComparisonKind::cp4:
      return run_cp(scenario, kind);
    case ComparisonKind::bounds:
      return run_bounds(scenario);
    case ComparisonKind::increasing_limit_demo:
      return run_increasing_limit_demo(scenario);
  }
  throw Error("comparison_check: unknown kind");
}

}  // namespace fsdlab::maximality
