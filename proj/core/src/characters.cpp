#include "vilenkin/characters.hpp"

#include <numbers>
#include <stdexcept>
#include <vector>

namespace vilenkin {
namespace {

// m-th roots of unity, indexed by exponent mod m.
std::vector<cplx> unity_roots(int m) {
  std::vector<cplx> roots(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / m;
    roots[static_cast<std::size_t>(j)] = cplx{std::cos(angle), std::sin(angle)};
  }
  roots[0] = cplx{1.0, 0.0};
  return roots;
}

// Multiplies f pointwise by r_k^power.
void apply_rademacher_power(CellFunction& f, int k, int power) {
  const auto& base = *f.base();
  const int m = base.radix(k);
  power %= m;
  if (power == 0) return;
  const auto roots = unity_roots(m);
  const std::uint64_t inner = base.scale(k);
  const std::uint64_t outer = base.scale(k + 1);
  for (std::uint64_t hi = 0; hi < f.size(); hi += outer) {
    for (int digit = 0; digit < m; ++digit) {
      const cplx w = roots[static_cast<std::size_t>((digit * power) % m)];
      const std::uint64_t lo0 = hi + static_cast<std::uint64_t>(digit) * inner;
      for (std::uint64_t lo = lo0; lo < lo0 + inner; ++lo) f[lo] *= w;
    }
  }
}

std::uint64_t leading_digit_position(const VilenkinBase& base, std::uint64_t n) {
  int t = 0;
  for (int k = 1; k < base.resolution(); ++k) {
    if (n >= base.scale(k)) t = k;
  }
  return static_cast<std::uint64_t>(t);
}

CellFunction dirichlet_direct(const BasePtr& base, std::uint64_t n) {
  CellFunction acc(base);
  for (std::uint64_t k = 0; k < n; ++k) acc += vilenkin_character(base, k);
  return acc;
}

}  // namespace

CellFunction rademacher(const BasePtr& base, int k) {
  if (k < 0 || k >= base->resolution()) {
    throw std::out_of_range("rademacher: coordinate beyond resolution");
  }
  CellFunction f(base);
  for (auto& v : f.values()) v = cplx{1.0, 0.0};
  apply_rademacher_power(f, k, 1);
  return f;
}

CellFunction vilenkin_character(const BasePtr& base, std::uint64_t n) {
  if (n >= base->cell_count()) {
    throw std::out_of_range("vilenkin_character: frequency beyond M_N");
  }
  CellFunction f(base);
  for (auto& v : f.values()) v = cplx{1.0, 0.0};
  const auto digits = base->to_digits(n);
  for (int k = 0; k < base->resolution(); ++k) {
    apply_rademacher_power(f, k, digits[static_cast<std::size_t>(k)]);
  }
  return f;
}

CellFunction dirichlet(const BasePtr& base, std::uint64_t n) {
  if (n > base->cell_count()) {
    throw std::out_of_range("dirichlet: order beyond M_N");
  }
  if (n == 0) return CellFunction(base);
  if (n == 1) {
    CellFunction f(base);
    for (auto& v : f.values()) v = cplx{1.0, 0.0};
    return f;
  }
  const auto t = static_cast<int>(leading_digit_position(*base, n));
  const std::uint64_t mt = base->scale(t);
  if (n == mt || n == base->cell_count()) {
    // Paley: D_{M_t} = M_t * 1_{I_t(0)}.
    const int rank = (n == mt) ? t : base->resolution();
    CellFunction f = interval_indicator(base, rank, 0);
    f *= cplx{static_cast<double>(base->scale(rank)), 0.0};
    return f;
  }
  if (n / mt == 1) {
    CellFunction tail = dirichlet(base, n - mt);
    apply_rademacher_power(tail, t, 1);
    return dirichlet(base, mt) + tail;
  }
  // Leading digit > 1: the one-step recursion is not stated for this case.
  return dirichlet_direct(base, n);
}

CellFunction dirichlet_recursive(const BasePtr& base, std::uint64_t n) {
  if (n > base->cell_count()) {
    throw std::out_of_range("dirichlet_recursive: order beyond M_N");
  }
  if (n == 0 || n == 1) return dirichlet(base, n);
  const auto t = static_cast<int>(leading_digit_position(*base, n));
  const std::uint64_t mt = base->scale(t);
  if (n == mt) return dirichlet(base, n);
  CellFunction tail = dirichlet(base, n - mt);
  apply_rademacher_power(tail, t, 1);
  return dirichlet(base, mt) + tail;
}

CellFunction fejer_kernel(const BasePtr& base, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("fejer_kernel: order must be >= 1");
  if (n > base->cell_count()) {
    throw std::out_of_range("fejer_kernel: order beyond M_N");
  }
  CellFunction running(base);  // D_k, grown one character at a time
  CellFunction sum(base);
  for (std::uint64_t k = 1; k <= n; ++k) {
    running += vilenkin_character(base, k - 1);
    sum += running;
  }
  sum *= cplx{1.0 / static_cast<double>(n), 0.0};
  return sum;
}

}  // namespace vilenkin
