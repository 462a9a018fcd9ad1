#include "vilenkin/summation.hpp"

#include <cmath>
#include <stdexcept>

namespace vilenkin {
namespace {

constexpr double kMonotoneSlack = 1e-12;

// Weighted combination sum_{k=lo}^{hi} w(k) * S_k f via one stream pass.
CellFunction weighted_partial_sums(const Spectrum& s, std::uint64_t lo, std::uint64_t hi,
                                   const std::function<double(std::uint64_t)>& weight) {
  CellFunction acc(s.base());
  PartialSumStream stream(s);
  for (std::uint64_t k = 0; k <= hi; ++k) {
    if (k >= lo) {
      const double w = weight(k);
      if (w != 0.0) {
        for (std::uint64_t i = 0; i < acc.size(); ++i) {
          acc[i] += w * stream.current()[i];
        }
      }
    }
    if (k < hi) stream.advance();
  }
  return acc;
}

}  // namespace

CoefficientSequence::CoefficientSequence(std::function<double(std::uint64_t)> rule,
                                         Monotonicity monotonicity,
                                         std::string description,
                                         std::optional<double> bound)
    : rule_(std::move(rule)),
      monotonicity_(monotonicity),
      description_(std::move(description)),
      bound_(bound) {
  prefix_.push_back(0.0);  // Q_0
}

void CoefficientSequence::ensure(std::uint64_t upto) const {
  std::lock_guard<std::mutex> lock(mutex_);
  while (cache_.size() < upto) {
    const auto k = static_cast<std::uint64_t>(cache_.size());
    const double v = rule_(k);
    if (v < 0.0) throw std::domain_error("CoefficientSequence: negative q_" + std::to_string(k));
    if (!cache_.empty()) {
      const double prev = cache_.back();
      if (monotonicity_ == Monotonicity::nondecreasing && v < prev - kMonotoneSlack) {
        throw std::logic_error("CoefficientSequence: declared nondecreasing, violated at k=" +
                               std::to_string(k));
      }
      if (monotonicity_ == Monotonicity::nonincreasing && v > prev + kMonotoneSlack) {
        throw std::logic_error("CoefficientSequence: declared nonincreasing, violated at k=" +
                               std::to_string(k));
      }
    }
    if (bound_ && v > *bound_ + kMonotoneSlack) {
      throw std::logic_error("CoefficientSequence: declared bound exceeded at k=" +
                             std::to_string(k));
    }
    cache_.push_back(v);
    prefix_.push_back(prefix_.back() + v);
  }
}

double CoefficientSequence::q(std::uint64_t k) const {
  ensure(k + 1);
  return cache_[static_cast<std::size_t>(k)];
}

double CoefficientSequence::prefix(std::uint64_t n) const {
  ensure(n);
  return prefix_[static_cast<std::size_t>(n)];
}

CoefficientSequence CoefficientSequence::constant(double value) {
  return CoefficientSequence([value](std::uint64_t) { return value; },
                             Monotonicity::nondecreasing,
                             "const:" + std::to_string(value), value);
}

CoefficientSequence CoefficientSequence::riesz_weights() {
  return CoefficientSequence(
      [](std::uint64_t k) { return k == 0 ? 0.0 : 1.0 / static_cast<double>(k); },
      Monotonicity::none, "riesz", 1.0);
}

CoefficientSequence CoefficientSequence::powers(double beta) {
  return CoefficientSequence(
      [beta](std::uint64_t k) {
        return k == 0 ? 0.0 : std::pow(static_cast<double>(k), beta);
      },
      Monotonicity::none, "powers:" + std::to_string(beta));
}

SequencePtr make_sequence(std::function<double(std::uint64_t)> rule,
                          Monotonicity monotonicity, std::string description,
                          std::optional<double> bound) {
  return std::make_shared<const CoefficientSequence>(std::move(rule), monotonicity,
                                                     std::move(description), bound);
}

SequencePtr make_constant_sequence(double value) {
  return make_sequence([value](std::uint64_t) { return value; },
                       Monotonicity::nondecreasing, "const:" + std::to_string(value),
                       value);
}

SequencePtr make_riesz_sequence() {
  return make_sequence(
      [](std::uint64_t k) { return k == 0 ? 0.0 : 1.0 / static_cast<double>(k); },
      Monotonicity::none, "riesz", 1.0);
}

SequencePtr make_power_sequence(double beta) {
  return make_sequence(
      [beta](std::uint64_t k) {
        return k == 0 ? 0.0 : std::pow(static_cast<double>(k), beta);
      },
      Monotonicity::none, "powers:" + std::to_string(beta));
}

CellFunction t_mean(const Spectrum& s, const CoefficientSequence& q, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("t_mean: order must be >= 1");
  const double Q = q.prefix(n);
  if (Q <= 0.0) throw std::domain_error("t_mean: Q_n = 0");
  CellFunction out =
      weighted_partial_sums(s, 0, n - 1, [&q](std::uint64_t k) { return q.q(k); });
  out *= cplx{1.0 / Q, 0.0};
  return out;
}

CellFunction norlund_mean(const Spectrum& s, const CoefficientSequence& q, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("norlund_mean: order must be >= 1");
  const double Q = q.prefix(n);
  if (Q <= 0.0) throw std::domain_error("norlund_mean: Q_n = 0");
  CellFunction out =
      weighted_partial_sums(s, 1, n, [&q, n](std::uint64_t k) { return q.q(n - k); });
  out *= cplx{1.0 / Q, 0.0};
  return out;
}

CellFunction fejer_mean(const Spectrum& s, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("fejer_mean: order must be >= 1");
  CellFunction out = weighted_partial_sums(s, 1, n, [](std::uint64_t) { return 1.0; });
  out *= cplx{1.0 / static_cast<double>(n), 0.0};
  return out;
}

double cesaro_number(double alpha, std::uint64_t n, bool a0_zero) {
  if (n == 0) return a0_zero ? 0.0 : 1.0;
  double a = 1.0;
  for (std::uint64_t j = 1; j <= n; ++j) {
    a *= (alpha + static_cast<double>(j)) / static_cast<double>(j);
  }
  return a;
}

CellFunction cesaro_mean(const Spectrum& s, double alpha, std::uint64_t n, bool a0_zero) {
  if (alpha <= 0.0 || alpha >= 1.0) throw std::domain_error("cesaro_mean: alpha outside (0,1)");
  if (n < 1) throw std::invalid_argument("cesaro_mean: order must be >= 1");
  CellFunction out = weighted_partial_sums(s, 1, n, [&](std::uint64_t k) {
    return cesaro_number(alpha - 1.0, n - k, a0_zero);
  });
  out *= cplx{1.0 / cesaro_number(alpha, n), 0.0};
  return out;
}

CellFunction inverse_cesaro_mean(const Spectrum& s, double alpha, std::uint64_t n,
                                 bool a0_zero) {
  if (alpha <= 0.0 || alpha >= 1.0) {
    throw std::domain_error("inverse_cesaro_mean: alpha outside (0,1)");
  }
  if (n < 1) throw std::invalid_argument("inverse_cesaro_mean: order must be >= 1");
  CellFunction out = weighted_partial_sums(s, 0, n - 1, [&](std::uint64_t k) {
    return cesaro_number(alpha - 1.0, k, a0_zero);
  });
  out *= cplx{1.0 / cesaro_number(alpha, n), 0.0};
  return out;
}

CellFunction v_alpha_mean(const Spectrum& s, double alpha, std::uint64_t n) {
  if (alpha <= 0.0 || alpha >= 1.0) throw std::domain_error("v_alpha_mean: alpha outside (0,1)");
  if (n < 2) throw std::invalid_argument("v_alpha_mean: order must be >= 2");
  double Q = 0.0;
  for (std::uint64_t k = 1; k < n; ++k) Q += std::pow(static_cast<double>(k), alpha - 1.0);
  CellFunction out = weighted_partial_sums(s, 1, n - 1, [alpha](std::uint64_t k) {
    return std::pow(static_cast<double>(k), alpha - 1.0);
  });
  out *= cplx{1.0 / Q, 0.0};
  return out;
}

CellFunction riesz_mean(const Spectrum& s, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("riesz_mean: order must be >= 2");
  double l = 0.0;
  for (std::uint64_t k = 1; k < n; ++k) l += 1.0 / static_cast<double>(k);
  CellFunction out = weighted_partial_sums(
      s, 1, n - 1, [](std::uint64_t k) { return 1.0 / static_cast<double>(k); });
  out *= cplx{1.0 / l, 0.0};
  return out;
}

CellFunction norlund_log_mean(const Spectrum& s, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("norlund_log_mean: order must be >= 2");
  double l = 0.0;
  for (std::uint64_t k = 1; k < n; ++k) l += 1.0 / static_cast<double>(k);
  CellFunction out = weighted_partial_sums(
      s, 1, n - 1, [n](std::uint64_t k) { return 1.0 / static_cast<double>(n - k); });
  out *= cplx{1.0 / l, 0.0};
  return out;
}

CellFunction b_mean(const Spectrum& s, const CoefficientSequence& q, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("b_mean: order must be >= 2");
  if (q.monotonicity() == Monotonicity::none) {
    throw std::invalid_argument("b_mean: sequence must be declared monotone");
  }
  // Nonincreasing non-negative sequences are bounded by q_0; nondecreasing
  // ones need a declared bound.
  if (q.monotonicity() == Monotonicity::nondecreasing && !q.bound()) {
    throw std::invalid_argument("b_mean: nondecreasing sequence needs a declared bound");
  }
  const double Q = q.prefix(n);
  if (Q <= 0.0) throw std::domain_error("b_mean: Q_n = 0");
  CellFunction out =
      weighted_partial_sums(s, 1, n - 1, [&q](std::uint64_t k) { return q.q(k); });
  out *= cplx{1.0 / Q, 0.0};
  return out;
}

ConditionReport check_regularity(const CoefficientSequence& q, std::uint64_t horizon) {
  if (horizon < 2) throw std::invalid_argument("check_regularity: horizon must be >= 2");
  const double head = q.prefix(horizon / 2);
  const double tail = q.prefix(horizon) - head;
  ConditionReport r;
  r.lhs = tail;
  r.rhs = 1e-9 * std::max(q.prefix(horizon), 1.0);
  if (tail <= r.rhs) {
    r.passed = false;
    r.witness = horizon;
  }
  return r;
}

namespace {

template <typename Lhs>
ConditionReport check_upper(std::uint64_t horizon, double c, Lhs lhs_at) {
  ConditionReport r;
  for (std::uint64_t n = 2; n <= horizon; ++n) {
    const double lhs = lhs_at(n);
    const double rhs = c / static_cast<double>(n);
    if (lhs > rhs) {
      r.passed = false;
      r.witness = n;
      r.lhs = lhs;
      r.rhs = rhs;
      return r;
    }
  }
  return r;
}

ConditionReport check_kachz(const CoefficientSequence& q, const VilenkinBase& base,
                            std::span<const int> ks, double c, bool use_q0) {
  ConditionReport r;
  for (int k : ks) {
    if (2 * k > base.resolution()) {
      throw std::out_of_range("kachz condition: 2k exceeds resolution");
    }
    const std::uint64_t M = base.scale(2 * k);
    const double numerator = use_q0 ? q.q(0) : q.q(M + 1);
    const double lhs = numerator / q.prefix(M + 2);
    const double rhs = c / static_cast<double>(M);
    if (lhs < rhs) {
      r.passed = false;
      r.witness = M;
      r.lhs = lhs;
      r.rhs = rhs;
      return r;
    }
  }
  return r;
}

}  // namespace

ConditionReport check_cond0(const CoefficientSequence& q, std::uint64_t horizon, double c) {
  if (horizon < 2) throw std::invalid_argument("check_cond0: horizon must be >= 2");
  return check_upper(horizon, c, [&q](std::uint64_t n) { return 1.0 / q.prefix(n); });
}

ConditionReport check_fn011(const CoefficientSequence& q, std::uint64_t horizon, double c) {
  if (horizon < 2) throw std::invalid_argument("check_fn011: horizon must be >= 2");
  return check_upper(horizon, c,
                     [&q](std::uint64_t n) { return q.q(n - 1) / q.prefix(n); });
}

ConditionReport check_kachzcond1(const CoefficientSequence& q, const VilenkinBase& base,
                                 std::span<const int> ks, double c) {
  return check_kachz(q, base, ks, c, /*use_q0=*/true);
}

ConditionReport check_kachzcond2(const CoefficientSequence& q, const VilenkinBase& base,
                                 std::span<const int> ks, double c) {
  return check_kachz(q, base, ks, c, /*use_q0=*/false);
}

}  // namespace vilenkin
