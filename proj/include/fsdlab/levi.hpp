#pragma once

#include "fsdlab/rng.hpp"
#include "fsdlab/spectra.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fsdlab::levi {

// Smooth scalar profile for the Phi(<Az,z>) factory, with first and second
// derivatives evaluable.
struct PhiProfile {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> d1;
  std::function<double(double)> d2;

  static PhiProfile log1p();   // Phi(t) = log(1 + t)
  static PhiProfile square();  // Phi(t) = t^2
  static PhiProfile linear();  // Phi(t) = t

  static PhiProfile by_name(const std::string& name);
};

// Polynomial smoothstep cutoff for the moving finite-rank example: eta = 0
// on [0,1], eta = 1 on [2,inf), 6x^5-15x^4+10x^3 in between; chi(t) is the
// integral of eta, and slope(t) = eta(t) + t eta'(t) is the Levi diagonal.
namespace cutoff {
double eta(double t);
double eta_prime(double t);
double chi(double t);
double slope(double t);
double max_slope();  // sup_t slope(t) = 5 - 8 sqrt(3)/9, attained in (1,2)
}  // namespace cutoff

enum class Kind {
  weighted_quadratic,
  harmonic_quadratic,
  general_quadratic,
  quartic,
  phi_quadratic,
  multiplication_l2,
  finite_rank_moving,
  interleaved,
};

// A catalog entry: truncation parameters, evaluation, and the closed-form
// Levi form.
class TestFunction {
 public:
  static TestFunction weighted_quadratic(RealVector weights);
  static TestFunction harmonic_quadratic(int n);
  static TestFunction general_quadratic(HermitianMatrix a);
  static TestFunction quartic(int n);
  // Checks Phi' >= 0 and Phi' + t Phi'' >= 0 on a grid over
  // [0, ||A|| * working_radius^2] at construction.
  static TestFunction phi_quadratic(HermitianMatrix a, PhiProfile phi,
                                    double working_radius = 2.0);
  static TestFunction multiplication_l2(int n);
  static TestFunction finite_rank_moving(int n);
  static TestFunction interleaved(int n);

  Kind kind() const { return kind_; }
  Eigen::Index dim() const { return dim_; }
  const std::string& name() const { return name_; }

  double eval(const Vector& z) const;
  HermitianMatrix levi(const Vector& z) const;

  // True for truncations of fixed infinite-dimensional examples whose FSD
  // vanishes in the limit; reports carry the caveat.
  bool truncation_caveat() const;

  const RealVector& weights() const { return weights_; }
  const HermitianMatrix& matrix() const;
  const PhiProfile& phi() const { return phi_; }
  double working_radius() const { return working_radius_; }
  double phi_majorant_coeff() const;  // C_G = sup (Phi' + t|Phi''|) on the working range

 private:
  TestFunction(Kind kind, Eigen::Index dim, std::string name);

  Kind kind_;
  Eigen::Index dim_;
  std::string name_;
  RealVector weights_;                      // weighted / interleaved / harmonic / l2
  std::optional<HermitianMatrix> matrix_;   // general / phi
  double matrix_norm_ = 0.0;
  PhiProfile phi_;
  double working_radius_ = 0.0;
};

// Central second differences along h and ih plus polarization over the
// standard basis; reconstructs the Levi matrix from the quadratic form
//   <L h, h> = (D^2 f(h,h) + D^2 f(ih,ih)) / 4.
HermitianMatrix levi_fd(const TestFunction& f, const Vector& z, double step = 1e-4);

struct FsdResult {
  double value;        // min eigenvalue of the analytic Levi form
  double sampled_inf;  // min of delta over random unit vectors; >= value - tol
  int samples;
  bool truncation_caveat;
};

FsdResult fsd(const TestFunction& f, const Vector& z, int samples = 64, std::uint64_t seed = 1);

// Sampled bounded region: a ball with interior and boundary sample budgets.
struct Region {
  Vector center;
  double radius;
  int n_interior;
  int n_boundary;
  std::uint64_t seed;

  static Region centered_ball(Eigen::Index dim, double radius, int n_interior, int n_boundary,
                              std::uint64_t seed);
};

struct FamilySample {
  Vector point;
  HermitianMatrix levi;
};

// The map z -> Levi(z) over the sampled region; every attached matrix has
// been PSD-checked.
struct LeviFamily {
  TestFunction function;
  Region region;
  std::vector<FamilySample> interior;
  std::vector<FamilySample> boundary;

  Eigen::Index dim() const { return function.dim(); }
  std::size_t sample_count() const { return interior.size() + boundary.size(); }

  template <typename F>
  void for_each_sample(F&& fn) const {
    for (const auto& s : interior) fn(s);
    for (const auto& s : boundary) fn(s);
  }
};

// Interior points uniform in the ball (Gaussian direction, radius * u^{1/(2n)}
// scaling); boundary points uniform on the sphere.
LeviFamily sample_family(const TestFunction& f, const Region& region);

// Family with prescribed sample points (used for fixtures like {2 e_j}).
LeviFamily family_at_points(const TestFunction& f, const Region& region,
                            const std::vector<Vector>& interior_points,
                            const std::vector<Vector>& boundary_points = {});

// Catalog addressable by string identifiers from the CLI / config.
struct CatalogParams {
  int dim = 4;
  std::optional<RealVector> weights;
  std::optional<HermitianMatrix> matrix;
  std::string phi = "log1p";
  double working_radius = 2.0;
};

TestFunction make_catalog(const std::string& kind, const CatalogParams& params);
std::vector<std::string> catalog_kinds();

}  // namespace fsdlab::levi
