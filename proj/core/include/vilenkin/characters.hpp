#pragma once

#include "vilenkin/base.hpp"

namespace vilenkin {

/// Generalized Rademacher function r_k: value exp(2*pi*i*x_k/m_k) on cell x.
CellFunction rademacher(const BasePtr& base, int k);

/// Vilenkin character psi_n = prod_k r_k^{n_k} with n_k the mixed-radix
/// digits of n.  psi_0 is identically 1.
CellFunction vilenkin_character(const BasePtr& base, std::uint64_t n);

/// Dirichlet kernel D_n = sum_{k=0}^{n-1} psi_k, with D_0 = 0.
///
/// Uses D_{M_t} = M_t * 1_{I_t(0)} plus the one-step recursion
/// D_n = D_{M_t} + r_t * D_{n - M_t} when the leading digit of n is 1,
/// and falls back to direct character summation otherwise.
CellFunction dirichlet(const BasePtr& base, std::uint64_t n);

/// One explicit recursion step D_n = D_{M_t} + r_t * D_{n - M_t} where
/// t is the position of the leading digit of n.  Coincides with
/// dirichlet() whenever that leading digit equals 1.
CellFunction dirichlet_recursive(const BasePtr& base, std::uint64_t n);

/// Fejer kernel K_n = (1/n) sum_{k=1}^{n} D_k, n >= 1.
CellFunction fejer_kernel(const BasePtr& base, std::uint64_t n);

}  // namespace vilenkin
