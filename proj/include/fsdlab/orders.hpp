#pragma once

#include "fsdlab/rng.hpp"
#include "fsdlab/spectra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fsdlab::orders {

// Specht's ratio S(h) = (h-1) h^{1/(h-1)} / (e log h), S(1) = 1.  Evaluated
// through a stable branch for h near 1 (the closed form is 0/0 there).
double specht(double h);

// S(h, p) = S(h^p) for p > 0.
double specht_p(double h, double p);

// Kantorovich constant K(h) = (h+1)^2 / (4h).
double kantorovich(double h);

// Generalized Kantorovich constant K(h, alpha) for alpha in (0,1); K(1,.) = 1.
double gen_kantorovich(double h, double alpha);

// Additive gap constant C_p(m, M); 0 when m = M.  p defaults to 1, giving
// C(m, M) = (M-m)/(log M - log m) * log S(M/m).
double additive_constant(double m, double M, double p = 1.0);

enum class OrderRelation { loewner, chaotic, delta_sampled };

struct OrderVerdict {
  OrderRelation relation;
  bool holds;
  double margin;  // min eigenvalue of the defining difference, or worst sampled gap
  double scale;
  UnitVector witness;  // direction attaining the margin
};

// Verdict on B - A >= 0.
OrderVerdict loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b);

// Verdict on log B - log A >= 0 (chaotic order); requires strict positivity.
OrderVerdict chaotic_leq(const HermitianMatrix& a, const HermitianMatrix& b);

// Sampled check of delta_x(A) >= delta_x(B) over random unit vectors plus
// the eigenvectors of log A - log B; margin in log space.  Must agree with
// chaotic_leq(B, A) on every instance.
OrderVerdict delta_order_sampled(const HermitianMatrix& a, const HermitianMatrix& b, int samples,
                                 std::uint64_t seed);

enum class KtiVariant { weak, strong, additive };

struct InequalityMargin {
  std::string variant;
  double p;
  double constant_used;
  double margin;  // min eigenvalue of LHS - RHS
  double scale;
  bool holds;
};

// Kantorovich-type inequalities for A >> B with mI <= B <= MI:
//   weak:     K(h^p) A^p >= B^p
//   strong:   S(h^p) A^p >= B^p
//   additive: A^p + C_p(m,M) I >= B^p
// Preconditions (chaotic order, bounds) are verified and throw
// HypothesisViolated when they fail.
InequalityMargin verify_kti(const HermitianMatrix& a, const HermitianMatrix& b,
                            const SpectralBounds& bounds, double p, KtiVariant variant);

// Raw inequality margin without the chaotic-order gate; converse probes
// evaluate this on pairs where the order fails.
InequalityMargin kti_inequality_margin(const HermitianMatrix& a, const HermitianMatrix& b,
                                       const SpectralBounds& bounds, double p,
                                       KtiVariant variant);

// Mixed additive-multiplicative interpolation: for c in [1, S],
//   c A^p + (S-c)/(S-1) C_add I >= B^p.
// Endpoints c = S and c = 1 reproduce the strong and additive variants.
InequalityMargin mixed_bound(const HermitianMatrix& a, const HermitianMatrix& b,
                             const SpectralBounds& bounds, double p, double c);

// Furuta-type inequality for A >> B: A^r >= (A^{r/2} B^p A^{r/2})^{r/(p+r)}.
InequalityMargin furuta_check(const HermitianMatrix& a, const HermitianMatrix& b, double p,
                              double r);

struct PairSpread {
  double base_scale = 0.6;  // scale of the random Hermitian log-part
  double gap_scale = 0.5;   // scale of the PSD gap
  bool diagonal = false;    // commuting pair (simultaneously diagonal)
  bool conjugate = false;   // conjugate both by a common random unitary
};

struct OperatorPair {
  HermitianMatrix a;
  HermitianMatrix b;
};

// A = exp(K + G), B = exp(K) with G >= 0, so that chaotic_leq(B, A) holds by
// construction.
OperatorPair random_chaotic_pair(int dim, std::uint64_t seed, const PairSpread& spread = {});

// The hardcoded 2x2 pair with log A <= log B but B - A not PSD.
OperatorPair counterexample_pair();

struct CounterexampleHit {
  HermitianMatrix a;
  HermitianMatrix b;
  OrderVerdict chaotic;  // chaotic_leq(a, b), holds
  OrderVerdict loewner;  // loewner_leq(a, b), fails
};

struct SearchReport {
  std::vector<CounterexampleHit> hits;  // always starts with the hardcoded pair
  int trials;
  int found;  // random hits, excluding the hardcoded pair
  double hit_rate;
};

// Random search for pairs where the chaotic order holds but the Loewner
// order fails; every hit is re-verified by both order tests.
SearchReport counterexample_search(int dim, int trials, std::uint64_t seed);

}  // namespace fsdlab::orders
