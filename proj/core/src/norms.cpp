#include "vilenkin/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vilenkin {

double lp_quasinorm(const CellFunction& f, double p) {
  if (p <= 0.0) throw std::domain_error("lp_quasinorm: p must be positive");
  double acc = 0.0;
  for (std::uint64_t i = 0; i < f.size(); ++i) acc += std::pow(std::abs(f[i]), p);
  return std::pow(acc / static_cast<double>(f.size()), 1.0 / p);
}

double weak_lp_quasinorm(const CellFunction& f, double p) {
  if (p <= 0.0) throw std::domain_error("weak_lp_quasinorm: p must be positive");
  std::vector<double> levels(f.size());
  for (std::uint64_t i = 0; i < f.size(); ++i) levels[i] = std::abs(f[i]);
  std::sort(levels.begin(), levels.end(), std::greater<double>());
  // mu(|f| >= levels[i]) = (i+1)/M_N once levels are sorted descending;
  // ties only enlarge the tail, so scanning every position covers them.
  double best = 0.0;
  const double inv = 1.0 / static_cast<double>(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] <= 0.0) break;
    best = std::max(best, std::pow(levels[i], p) * (static_cast<double>(i + 1) * inv));
  }
  return std::pow(best, 1.0 / p);
}

CellFunction maximal_function(const CellFunction& f) {
  const auto& base = *f.base();
  CellFunction out(f.base());
  // Level n = N: |f| itself.
  for (std::uint64_t i = 0; i < f.size(); ++i) out[i] = std::abs(f[i]);
  // Coarser levels: S_{M_n} f equals the average of f over each rank-n cell.
  std::vector<cplx> block(f.values().begin(), f.values().end());
  for (int n = base.resolution() - 1; n >= 0; --n) {
    const int m = base.radix(n);
    const std::uint64_t cells = base.scale(n);
    // Average the m children of each rank-n cell.  block currently holds the
    // rank-(n+1) averages laid out as [child digit][cell].
    std::vector<cplx> next(cells);
    for (std::uint64_t c = 0; c < cells; ++c) {
      cplx acc{};
      for (int d = 0; d < m; ++d) {
        acc += block[c + static_cast<std::uint64_t>(d) * cells];
      }
      next[c] = acc / static_cast<double>(m);
    }
    block = std::move(next);
    const std::uint64_t stride = f.size() / cells;
    for (std::uint64_t c = 0; c < cells; ++c) {
      const double v = std::abs(block[c]);
      for (std::uint64_t r = 0; r < stride; ++r) {
        const std::uint64_t i = c + r * cells;
        if (v > out[i].real()) out[i] = cplx{v, 0.0};
      }
    }
  }
  return out;
}

double hp_norm(const CellFunction& f, double p) {
  return lp_quasinorm(maximal_function(f), p);
}

AtomCertificate validate_atom(const CellFunction& a, double p, int rank,
                              std::uint64_t anchor, double tol) {
  const auto& base = *a.base();
  if (rank < 0 || rank > base.resolution()) {
    throw std::out_of_range("validate_atom: rank beyond resolution");
  }
  AtomCertificate cert;
  cert.rank = rank;
  cert.anchor = anchor;
  cert.p = p;

  const CellFunction indicator = interval_indicator(a.base(), rank, anchor);
  cplx mean{};
  double sup = 0.0;
  bool outside = false;
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    const bool in = indicator[i].real() > 0.5;
    if (in) {
      mean += a[i];
      sup = std::max(sup, std::abs(a[i]));
    } else if (std::abs(a[i]) > tol) {
      outside = true;
    }
  }
  mean /= static_cast<double>(a.size());
  const double measure = 1.0 / static_cast<double>(base.scale(rank));
  cert.mean_zero = std::abs(mean) <= tol;
  cert.sup_bound = sup <= std::pow(measure, -1.0 / p) + tol;
  cert.supported = !outside;
  return cert;
}

double atomic_upper_bound(std::span<const double> mus, double p) {
  if (mus.empty()) throw std::invalid_argument("atomic_upper_bound: empty coefficient list");
  if (p <= 0.0 || p > 1.0) throw std::domain_error("atomic_upper_bound: p outside (0,1]");
  double acc = 0.0;
  for (double mu : mus) acc += std::pow(std::abs(mu), p);
  return std::pow(acc, 1.0 / p);
}

WeightFunction::WeightFunction(std::function<double(std::uint64_t)> rule,
                               std::string description)
    : rule_(std::move(rule)), description_(std::move(description)) {}

WeightFunction WeightFunction::one() {
  return WeightFunction([](std::uint64_t) { return 1.0; }, "one");
}

WeightFunction WeightFunction::paper(double p) {
  if (p <= 0.0 || p > 0.5) throw std::domain_error("WeightFunction::paper: p outside (0,1/2]");
  const double power = 1.0 / p - 2.0;
  const int log_exp = 2 * static_cast<int>(std::floor(0.5 + p));
  return WeightFunction(
      [power, log_exp](std::uint64_t n) {
        const double np1 = static_cast<double>(n) + 1.0;
        double phi = std::pow(np1, power);
        if (log_exp > 0) phi *= std::pow(std::log2(np1), log_exp);
        return phi;
      },
      "paper:p=" + std::to_string(p));
}

WeightFunction WeightFunction::power(double beta) {
  return WeightFunction(
      [beta](std::uint64_t n) { return std::pow(static_cast<double>(n) + 1.0, beta); },
      "power:" + std::to_string(beta));
}

WeightFunction WeightFunction::log2_power(double e) {
  return WeightFunction(
      [e](std::uint64_t n) {
        return std::max(1.0, std::pow(std::log2(static_cast<double>(n) + 1.0), e));
      },
      "log2pow:" + std::to_string(e));
}

CellFunction weighted_maximal(const Spectrum& s, const CoefficientSequence& q,
                              const WeightFunction& phi,
                              std::span<const std::uint64_t> indices) {
  if (indices.empty()) throw std::invalid_argument("weighted_maximal: empty index set");
  std::vector<std::uint64_t> order(indices.begin(), indices.end());
  std::sort(order.begin(), order.end());
  if (order.front() < 1) throw std::invalid_argument("weighted_maximal: indices must be >= 1");

  CellFunction out(s.base());
  CellFunction acc(s.base());  // sum_{j<=k} q_j S_j f after step k
  PartialSumStream stream(s);
  std::size_t next = 0;
  for (std::uint64_t k = 0; k < order.back(); ++k) {
    const double w = q.q(k);
    if (w != 0.0) {
      for (std::uint64_t i = 0; i < acc.size(); ++i) acc[i] += w * stream.current()[i];
    }
    const std::uint64_t n = k + 1;
    while (next < order.size() && order[next] == n) ++next;
    if (next > 0 && order[next - 1] == n) {
      const double Q = q.prefix(n);
      if (Q <= 0.0) throw std::domain_error("weighted_maximal: Q_n = 0 at evaluated index");
      const double scale = 1.0 / (Q * phi(n));
      for (std::uint64_t i = 0; i < out.size(); ++i) {
        const double v = std::abs(acc[i]) * scale;
        if (v > out[i].real()) out[i] = cplx{v, 0.0};
      }
    }
    stream.advance();
  }
  return out;
}

}  // namespace vilenkin
