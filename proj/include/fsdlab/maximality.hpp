#pragma once

#include "fsdlab/levi.hpp"
#include "fsdlab/orders.hpp"
#include "fsdlab/spectra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fsdlab::maximality {

enum class Strategy { fixed_vector, averaging_sets, min_eig_of_sup, basis_tail };

// Approximate-null-direction certificate: unit vectors x_1..x_k with
// sup_values lambda_i = max over samples of <L(z) x_i, x_i>.  Passes iff the
// last sup value reaches the decay target.
struct NullCertificate {
  Strategy strategy;
  std::vector<UnitVector> vectors;
  std::vector<double> sup_values;
  double decay_target;
  bool passes;
};

NullCertificate null_certificate(const levi::LeviFamily& family, Strategy strategy, int length,
                                 std::optional<UnitVector> fixed = std::nullopt,
                                 std::optional<double> decay_target = std::nullopt);

// Recomputes a certificate's sup values from the family; used by the
// soundness invariant (agreement within 1e-10).
std::vector<double> recompute_sup_values(const levi::LeviFamily& family,
                                         const std::vector<UnitVector>& vectors);

// Necessary condition, used in the contrapositive: maximality is excluded
// only when every sample has its Levi spectrum bounded away from zero by tol.
struct ExclusionReport {
  double min_over_samples;  // min over samples of min_eig(L(z))
  double max_over_samples;
  double tol;
  bool excluded;
};

ExclusionReport fsd_necessary_check(const levi::LeviFamily& family, double tol);

struct CommonRangeReport {
  bool passes;
  double worst_residual;  // max over samples of ||(I - P_E) L(z)||_2
  double tol;
  std::optional<UnitVector> witness;  // unit vector in the orthocomplement
  double witness_sup_rayleigh;        // sup over samples of <L(z) x, x>
};

// Verifies Ran(L(z)) stays in the proper subspace spanned by `basis`
// (columns orthonormalized here); exhibits a null-direction witness in the
// orthocomplement on success.
CommonRangeReport common_range_check(const levi::LeviFamily& family, const Matrix& basis,
                                     double tol = 1e-10);

struct ApproxRangeReport {
  bool success;  // a proper subspace suffices
  int subspace_dim;
  Matrix basis;  // dim x subspace_dim, orthonormal columns
  double worst_residual;
  double eps;
};

// Smallest subspace E (from the SVD of the stacked sampled Levi columns)
// with max_z ||(I - P_E) L(z)||_2 <= eps; fails iff only the full space works.
ApproxRangeReport approx_common_range(const levi::LeviFamily& family, double eps);

struct CompactnessReport {
  bool passes;  // approx common range succeeded with dim <= dim(H)/2
  int subspace_dim;
  double eps;
  double worst_probe_residual;  // max over random probes of ||(I-P_E) L(z) h||
  int probes;
};

// Finite-dimensional proxy for collective compactness: the joint image of
// the unit ball admits a low-dimensional eps-net subspace.
CompactnessReport collectively_compact_check(const levi::LeviFamily& family, double eps,
                                             int probes, std::uint64_t seed);

struct MajorantReport {
  bool dominates;       // L(z) <= T (+ tol) for all samples
  double worst_margin;  // min over samples of min_eig(T - L(z))
  double majorant_min_eig;
  bool criterion;  // dominates and inf spectrum of T at the degeneracy cutoff
};

MajorantReport model_majorant_check(const levi::LeviFamily& family, const HermitianMatrix& t,
                                    double tol = 1e-9);

struct ConstantLeviVerdict {
  bool constant;  // max over samples of ||L(z) - L(z0)||_2 <= tol
  double max_deviation;
  double infimum;   // min_eig of the common Levi form
  bool degenerate;  // infimum <= tol: maximal <=> FSD == 0 <=> inf spectrum 0
};

ConstantLeviVerdict constant_levi_classify(const levi::LeviFamily& family, double tol = 1e-10);

struct BoundaryInfReport {
  double boundary_inf;  // over boundary samples plus the scaled near-null direction
  double bound;         // radius^2 * (min_eig + tol)
  double min_eig;
  bool holds;
};

// For u(z) = <Az, z> on a region centered at 0: scaled near-null directions
// drive the boundary infimum down to radius^2 * inf spectrum.
BoundaryInfReport boundary_inf_check(const HermitianMatrix& a, const levi::Region& region,
                                     double tol = 1e-9);

enum class MaximalityVerdict { established, excluded, undetermined };

// Outcome of running the battery of criteria over a sampled family.  The
// verdict speaks only about the finite sample: "established" means one of
// the sufficient conditions was verified on it, "excluded" that the
// necessary condition failed on every sample, "undetermined" that neither
// fired (the converse question is open).
struct ClassificationReport {
  MaximalityVerdict verdict;
  std::string which;  // the condition that fired, empty when undetermined
  double exclusion_margin;
  std::optional<NullCertificate> certificate;
};

ClassificationReport classify_family(const levi::LeviFamily& family, double exclusion_tol = 0.3,
                                     int certificate_length = 16);

enum class ComparisonKind { cp1, cp2, cp3, cp4, bounds, increasing_limit_demo };

// Hypotheses are gated: violations throw HypothesisViolated and never count
// as a pass.
struct ComparisonScenario {
  levi::TestFunction u;
  std::optional<levi::TestFunction> v;
  levi::Region region;
  std::optional<SpectralBounds> bounds;  // for L_v (cp1/cp2) or L_u (bounds)
  double u_offset = 0.0;                 // affine offsets; Levi forms unchanged
  double v_offset = 0.0;
  int delta_samples = 8;      // per-sample budget for the delta-order hypothesis
  int demo_truncation = 3;    // j in the increasing-limit demo
  std::optional<double> constant_override;  // cp1: any S' >= S(M/m)
  std::uint64_t seed = 1;
};

struct ComparisonReport {
  ComparisonKind kind;
  bool pass;
  double conclusion_margin;  // worst pointwise margin of the conclusion inequality
  double levi_margin;        // worst min_eig of the conclusion Levi form
  bool max_principle_ok;     // sampled interior max <= sampled boundary max + tol
  double constant_used;
  std::string detail;
};

ComparisonReport comparison_check(const ComparisonScenario& scenario, ComparisonKind kind);

}  // namespace fsdlab::maximality
