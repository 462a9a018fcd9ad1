#pragma once

#include "vilenkin/summation.hpp"

namespace vilenkin {

/// L_p quasi-norm ((1/M_N) sum |v_i|^p)^{1/p}, exact for cell functions.
double lp_quasinorm(const CellFunction& f, double p);

/// weak-L_p quasi-norm: (sup over attained levels v of v^p * mu(|f| >= v))^{1/p}.
double weak_lp_quasinorm(const CellFunction& f, double p);

/// Martingale maximal function f* = max over 0 <= n <= N of |S_{M_n} f|,
/// computed via conditional expectations on rank-n cells.
CellFunction maximal_function(const CellFunction& f);

/// H_p norm = L_p quasi-norm of the maximal function.
double hp_norm(const CellFunction& f, double p);

/// Result of checking the three p-atom conditions for a candidate on the
/// interval I_rank(anchor).
struct AtomCertificate {
  int rank = 0;
  std::uint64_t anchor = 0;
  double p = 0.0;
  bool mean_zero = false;
  bool sup_bound = false;
  bool supported = false;
  bool passed() const { return mean_zero && sup_bound && supported; }
};

AtomCertificate validate_atom(const CellFunction& a, double p, int rank,
                              std::uint64_t anchor, double tol = 1e-12);

/// (sum |mu_k|^p)^{1/p}: the upper-bound certificate of an explicit atomic
/// decomposition.  The infimum over decompositions is not computed.
double atomic_upper_bound(std::span<const double> mus, double p);

/// A nondecreasing weight phi: N_+ -> [1, inf).
class WeightFunction {
public:
  WeightFunction(std::function<double(std::uint64_t)> rule, std::string description);

  double operator()(std::uint64_t n) const { return rule_(n); }
  const std::string& description() const { return description_; }

  static WeightFunction one();
  /// phi(n) = (n+1)^{1/p-2} * log2(n+1)^{2*floor(1/2+p)}, 0 < p <= 1/2.
  static WeightFunction paper(double p);
  /// phi(n) = (n+1)^{beta}.
  static WeightFunction power(double beta);
  /// phi(n) = max(1, log2(n+1)^{e}).
  static WeightFunction log2_power(double e);

private:
  std::function<double(std::uint64_t)> rule_;
  std::string description_;
};

/// Pointwise max over n in `indices` of |T_n f| / phi(n), assembled from a
/// single partial-sum stream pass up to the largest index.
CellFunction weighted_maximal(const Spectrum& s, const CoefficientSequence& q,
                              const WeightFunction& phi,
                              std::span<const std::uint64_t> indices);

}  // namespace vilenkin
