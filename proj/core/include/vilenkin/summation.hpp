#pragma once

#include "vilenkin/spectral.hpp"

#include <functional>
#include <mutex>
#include <optional>
#include <string>

namespace vilenkin {

enum class Monotonicity { nondecreasing, nonincreasing, none };

/// A rule-defined sequence {q_k} of non-negative weights with cached
/// prefix sums Q_n = sum_{k<n} q_k.  The declared monotonicity is
/// validated lazily up to the largest index touched.
class CoefficientSequence {
public:
  CoefficientSequence(std::function<double(std::uint64_t)> rule,
                      Monotonicity monotonicity, std::string description,
                      std::optional<double> bound = std::nullopt);

  double q(std::uint64_t k) const;
  /// Q_n = sum_{k=0}^{n-1} q_k.
  double prefix(std::uint64_t n) const;
  Monotonicity monotonicity() const { return monotonicity_; }
  const std::optional<double>& bound() const { return bound_; }
  const std::string& description() const { return description_; }

  static CoefficientSequence constant(double value = 1.0);
  /// q_0 = 0, q_k = 1/k: the Riesz logarithmic weights.
  static CoefficientSequence riesz_weights();
  /// q_0 = 0, q_k = k^{beta}.
  static CoefficientSequence powers(double beta);

private:
  void ensure(std::uint64_t upto) const;

  std::function<double(std::uint64_t)> rule_;
  Monotonicity monotonicity_;
  std::string description_;
  std::optional<double> bound_;
  mutable std::vector<double> cache_;   // q_0..q_{hi-1}
  mutable std::vector<double> prefix_;  // Q_0..Q_hi
  mutable std::mutex mutex_;
};

using SequencePtr = std::shared_ptr<const CoefficientSequence>;

// Shared-ownership factories (CoefficientSequence itself is pinned in
// place by its memo mutex).
SequencePtr make_sequence(std::function<double(std::uint64_t)> rule,
                          Monotonicity monotonicity, std::string description,
                          std::optional<double> bound = std::nullopt);
SequencePtr make_constant_sequence(double value = 1.0);
SequencePtr make_riesz_sequence();
SequencePtr make_power_sequence(double beta);

// --- Means.  All take the spectrum of f and the order n; cost is one
// incremental partial-sum stream, O(n * M_N).

/// T mean (1/Q_n) sum_{k=0}^{n-1} q_k S_k f.
CellFunction t_mean(const Spectrum& s, const CoefficientSequence& q, std::uint64_t n);

/// Norlund mean (1/Q_n) sum_{k=1}^{n} q_{n-k} S_k f.
CellFunction norlund_mean(const Spectrum& s, const CoefficientSequence& q, std::uint64_t n);

/// Fejer mean (1/n) sum_{k=1}^{n} S_k f.
CellFunction fejer_mean(const Spectrum& s, std::uint64_t n);

/// Cesaro number A_n^alpha = (alpha+1)...(alpha+n)/n!.  A_0^alpha is 1 by
/// the standard convention; pass a0_zero = true for the literal A_0 = 0.
double cesaro_number(double alpha, std::uint64_t n, bool a0_zero = false);

/// (C,alpha) mean (1/A_n^a) sum_{k=1}^{n} A_{n-k}^{a-1} S_k f, 0 < alpha < 1.
CellFunction cesaro_mean(const Spectrum& s, double alpha, std::uint64_t n,
                         bool a0_zero = false);

/// Inverse (C,alpha) mean U_n^a = (1/A_n^a) sum_{k=0}^{n-1} A_k^{a-1} S_k f.
CellFunction inverse_cesaro_mean(const Spectrum& s, double alpha, std::uint64_t n,
                                 bool a0_zero = false);

/// V_n^alpha: T mean with q_0 = 0, q_k = k^{alpha-1}.
CellFunction v_alpha_mean(const Spectrum& s, double alpha, std::uint64_t n);

/// Riesz logarithmic mean (1/l_n) sum_{k=1}^{n-1} S_k f / k, l_n = sum_{k<n} 1/k.
CellFunction riesz_mean(const Spectrum& s, std::uint64_t n);

/// Norlund logarithmic mean (1/l_n) sum_{k=1}^{n-1} S_k f / (n-k).
CellFunction norlund_log_mean(const Spectrum& s, std::uint64_t n);

/// B mean (1/Q_n) sum_{k=1}^{n-1} q_k S_k f for monotone bounded q.
CellFunction b_mean(const Spectrum& s, const CoefficientSequence& q, std::uint64_t n);

// --- Condition checkers.  Asymptotic O-conditions are witnessed by an
// explicit constant over an explicit range rather than inferred.

struct ConditionReport {
  bool passed = true;
  std::uint64_t witness = 0;  // first violating index when !passed
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Regularity surrogate for lim Q_n = infinity: the tail Q_horizon -
/// Q_{horizon/2} must still carry mass relative to Q_horizon.
ConditionReport check_regularity(const CoefficientSequence& q, std::uint64_t horizon);

/// 1/Q_n <= c/n for all 2 <= n <= horizon.
ConditionReport check_cond0(const CoefficientSequence& q, std::uint64_t horizon, double c);

/// q_{n-1}/Q_n <= c/n for all 2 <= n <= horizon.
ConditionReport check_fn011(const CoefficientSequence& q, std::uint64_t horizon, double c);

/// q_0 / Q_{M_{2k}+2} >= c / M_{2k} for every k in ks.
ConditionReport check_kachzcond1(const CoefficientSequence& q, const VilenkinBase& base,
                                 std::span<const int> ks, double c);

/// q_{M_{2k}+1} / Q_{M_{2k}+2} >= c / M_{2k} for every k in ks.
ConditionReport check_kachzcond2(const CoefficientSequence& q, const VilenkinBase& base,
                                 std::span<const int> ks, double c);

}  // namespace vilenkin
