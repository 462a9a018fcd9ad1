#include "vilenkin/sharpness.hpp"

#include "vilenkin/characters.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vilenkin {
namespace {

void require_representable(const VilenkinBase& base, int k) {
  if (k < 1) throw std::invalid_argument("counterexample: k must be >= 1");
  if (2 * k + 1 > base.resolution()) {
    throw std::invalid_argument("counterexample: resolution too small, need N >= 2k+1");
  }
}

// Integral over the cells where `mask` is nonzero of g^{p} d(mu).
double integral_pow_on(const CellFunction& g, double p, const CellFunction* mask) {
  double acc = 0.0;
  for (std::uint64_t i = 0; i < g.size(); ++i) {
    if (mask && std::abs((*mask)[i]) < 0.5) continue;
    acc += std::pow(std::abs(g[i]), p);
  }
  return acc / static_cast<double>(g.size());
}

std::vector<std::uint64_t> full_index_set(const VilenkinBase& base) {
  std::vector<std::uint64_t> idx(base.cell_count());
  std::iota(idx.begin(), idx.end(), std::uint64_t{1});
  return idx;
}

}  // namespace

void CounterexampleSpec::validate(char part) const {
  if (!base) throw std::invalid_argument("CounterexampleSpec: null base");
  if (!q) throw std::invalid_argument("CounterexampleSpec: null coefficient sequence");
  if (k_list.empty()) throw std::invalid_argument("CounterexampleSpec: empty k list");
  int prev = 0;
  for (int k : k_list) {
    if (k <= prev) throw std::invalid_argument("CounterexampleSpec: k list must be strictly increasing");
    require_representable(*base, k);
    prev = k;
  }
  if (part == 'a') {
    if (p != 0.5) throw std::invalid_argument("part a requires p = 1/2");
  } else if (part == 'b') {
    if (p <= 0.0 || p >= 0.5) throw std::invalid_argument("part b requires 0 < p < 1/2");
  } else {
    throw std::invalid_argument("part must be 'a' or 'b'");
  }
}

CellFunction counterexample(const BasePtr& base, int k) {
  require_representable(*base, k);
  return dirichlet(base, base->scale(2 * k + 1)) - dirichlet(base, base->scale(2 * k));
}

SnCheck verify_7sn(const BasePtr& base, int k, double tol) {
  const CellFunction f = counterexample(base, k);
  const Spectrum s = analyze(f);
  const std::uint64_t lo = base->scale(2 * k);
  const std::uint64_t hi = base->scale(2 * k + 1);
  const CellFunction d_lo = dirichlet(base, lo);

  SnCheck check;
  for (std::uint64_t i = 0; i <= base->cell_count(); ++i) {
    const CellFunction actual = partial_sum(s, i);
    CellFunction expected(base);
    if (i > lo && i < hi) {
      expected = dirichlet(base, i) - d_lo;
    } else if (i >= hi) {
      expected = f;
    }
    const double err = sup_distance(actual, expected);
    if (err > check.sup_error) {
      check.sup_error = err;
      check.bad_index = i;
    }
  }
  check.ok = check.sup_error <= tol;
  return check;
}

double hp_closed_form(const VilenkinBase& base, int k, double p) {
  if (p <= 0.0) throw std::domain_error("hp_closed_form: p must be positive");
  require_representable(base, k);
  return std::pow(static_cast<double>(base.scale(2 * k)), 1.0 - 1.0 / p);
}

std::vector<AnnulusWitness> part_a_annuli(const CounterexampleSpec& spec, int k) {
  require_representable(*spec.base, k);
  const auto& base = *spec.base;
  const std::uint64_t M = base.scale(2 * k);

  std::vector<std::uint64_t> sparse;
  for (int s = 1; s <= k; ++s) sparse.push_back(M + base.scale(2 * s));

  const Spectrum spectrum = analyze(counterexample(spec.base, k));
  const CellFunction g = weighted_maximal(spectrum, *spec.q, spec.phi, sparse);

  std::vector<AnnulusWitness> out;
  const double phi_top = spec.phi(base.scale(2 * k + 1));
  for (int s = 1; s <= k; ++s) {
    const std::uint64_t inner = base.scale(2 * s);
    const std::uint64_t outer = base.scale(2 * s + 1);
    AnnulusWitness w;
    w.s = s;
    w.min_value = -1.0;
    for (std::uint64_t i = 0; i < g.size(); ++i) {
      const bool in_annulus = (i % inner == 0) && (i % outer != 0);
      if (!in_annulus) continue;
      const double v = std::abs(g[i]);
      if (w.min_value < 0.0 || v < w.min_value) w.min_value = v;
    }
    w.bound = static_cast<double>(inner) * static_cast<double>(inner) /
              (static_cast<double>(M) * phi_top);
    w.c = w.min_value / w.bound;
    out.push_back(w);
  }
  return out;
}

RatioRow part_a_row(const CounterexampleSpec& spec, int k) {
  require_representable(*spec.base, k);
  const auto& base = *spec.base;
  const std::uint64_t M = base.scale(2 * k);

  const CellFunction f = counterexample(spec.base, k);
  const Spectrum s = analyze(f);

  RatioRow row;
  row.n_k = k;
  row.m_2nk = M;
  row.hp_computed = hp_norm(f, 0.5);
  row.hp_closed = hp_closed_form(base, k, 0.5);

  // Conservative lower-bound estimate: maximal over the sparse index set
  // {M_{2k} + M_{2s}}, integrated over the union of annuli only.
  std::vector<std::uint64_t> sparse;
  for (int t = 1; t <= k; ++t) sparse.push_back(M + base.scale(2 * t));
  const CellFunction g_sparse = weighted_maximal(s, *spec.q, spec.phi, sparse);
  CellFunction annuli(spec.base);
  for (int t = 1; t <= k; ++t) {
    const std::uint64_t inner = base.scale(2 * t);
    const std::uint64_t outer = base.scale(2 * t + 1);
    for (std::uint64_t i = 0; i < annuli.size(); ++i) {
      if (i % inner == 0 && i % outer != 0) annuli[i] = cplx{1.0, 0.0};
    }
  }
  const double sparse_int = integral_pow_on(g_sparse, 0.5, &annuli);
  row.numerator_sparse = sparse_int * sparse_int;

  // Honest full maximal over every index up to M_N.
  const auto full = full_index_set(base);
  const CellFunction g_full = weighted_maximal(s, *spec.q, spec.phi, full);
  const double full_int = integral_pow_on(g_full, 0.5, nullptr);
  row.numerator_full = full_int * full_int;

  row.ratio = row.numerator_full / row.hp_computed;
  row.lower_bound = static_cast<double>(k) * static_cast<double>(k) /
                    spec.phi(base.scale(2 * k + 1));
  row.witnessed_c = row.ratio / row.lower_bound;
  return row;
}

RatioRow part_b_row(const CounterexampleSpec& spec, int k) {
  require_representable(*spec.base, k);
  const auto& base = *spec.base;
  const std::uint64_t M = base.scale(2 * k);
  const std::uint64_t n = M + 2;

  const CellFunction f = counterexample(spec.base, k);
  const Spectrum s = analyze(f);

  RatioRow row;
  row.n_k = k;
  row.m_2nk = M;
  row.hp_computed = hp_norm(f, spec.p);
  row.hp_closed = hp_closed_form(base, k, spec.p);

  // The single-index operator at n = M+2: |T_{M+2} f| is constant with value
  // q_{M+1}/Q_{M+2}; its weak-L_p norm against mu = 1 is the constant itself.
  const CellFunction t = t_mean(s, *spec.q, n);
  double lo = std::abs(t[0]), hi = lo;
  for (std::uint64_t i = 1; i < t.size(); ++i) {
    const double v = std::abs(t[i]);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi - lo > 1e-10) {
    throw std::logic_error("part_b_row: |T_{M+2} f| is not constant across cells");
  }
  row.numerator_sparse = hi / spec.phi(n);

  const auto full = full_index_set(base);
  const CellFunction g_full = weighted_maximal(s, *spec.q, spec.phi, full);
  row.numerator_full = weak_lp_quasinorm(g_full, spec.p);

  row.ratio = row.numerator_sparse / row.hp_computed;
  row.lower_bound =
      std::pow(static_cast<double>(n), 1.0 / spec.p - 2.0) / spec.phi(n);
  row.witnessed_c = row.ratio / row.lower_bound;
  return row;
}

RatioReport run_sweep(const CounterexampleSpec& spec, char part) {
  spec.validate(part);
  RatioReport report;
  report.part = part;
  report.radices = spec.base->radices();
  report.resolution = spec.base->resolution();
  report.q_description = spec.q->description();
  report.phi_description = spec.phi.description();
  report.p = spec.p;
  for (int k : spec.k_list) {
    report.rows.push_back(part == 'a' ? part_a_row(spec, k) : part_b_row(spec, k));
  }
  return report;
}

}  // namespace vilenkin
