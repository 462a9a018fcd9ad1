#pragma once

#include "vilenkin/norms.hpp"

#include <memory>

namespace vilenkin {

/// Configuration of one divergence experiment: the group, the tested
/// subsequence values n_k, the weight sequence behind the T means, the
/// weight function phi, and the exponent p.
struct CounterexampleSpec {
  BasePtr base;
  std::vector<int> k_list;  // strictly increasing, 2k+1 <= N each
  std::shared_ptr<const CoefficientSequence> q;
  WeightFunction phi = WeightFunction::one();
  double p = 0.5;

  void validate(char part) const;
};

struct RatioRow {
  int n_k = 0;
  std::uint64_t m_2nk = 0;
  double hp_computed = 0.0;
  double hp_closed = 0.0;
  double numerator_sparse = 0.0;  // part b: the single-index value at M+2
  double numerator_full = 0.0;    // honest full-maximal counterpart
  double ratio = 0.0;
  double lower_bound = 0.0;  // theoretical lower bound with c = 1
  double witnessed_c = 0.0;  // ratio / lower_bound
};

struct RatioReport {
  char part = 'a';
  std::vector<int> radices;
  int resolution = 0;
  std::string q_description;
  std::string phi_description;
  double p = 0.0;
  std::string log_base = "2";
  std::vector<RatioRow> rows;
};

/// f_{n_k} = D_{M_{2k+1}} - D_{M_{2k}}; spectrum is 1 on [M_{2k}, M_{2k+1}).
CellFunction counterexample(const BasePtr& base, int k);

struct SnCheck {
  bool ok = true;
  std::uint64_t bad_index = 0;
  double sup_error = 0.0;
};

/// Checks S_i f_{n_k} branch by branch for every 0 <= i <= M_N:
/// 0 below M_{2k}, D_i - D_{M_{2k}} in between, f itself from M_{2k+1} on.
SnCheck verify_7sn(const BasePtr& base, int k, double tol = 1e-12);

/// Closed-form H_p norm M_{2k}^{1 - 1/p} of f_{n_k}.
double hp_closed_form(const VilenkinBase& base, int k, double p);

/// One annulus I_{2s}(0) \ I_{2s+1}(0) of the part a) lower bound: the
/// minimum of the sparse weighted maximal over the annulus against the
/// bound M_{2s}^2 / (M_{2k} * phi(M_{2k+1})).
struct AnnulusWitness {
  int s = 0;
  double min_value = 0.0;
  double bound = 0.0;
  double c = 0.0;  // min_value / bound
};

std::vector<AnnulusWitness> part_a_annuli(const CounterexampleSpec& spec, int k);

RatioRow part_a_row(const CounterexampleSpec& spec, int k);
RatioRow part_b_row(const CounterexampleSpec& spec, int k);

/// One row per k in spec.k_list; part is 'a' or 'b'.
RatioReport run_sweep(const CounterexampleSpec& spec, char part);

}  // namespace vilenkin
