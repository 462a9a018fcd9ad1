#pragma once

#include "vilenkin/base.hpp"

namespace vilenkin {

/// Vilenkin-Fourier coefficients hat{f}(0..M_N-1) of a CellFunction.
class Spectrum {
public:
  Spectrum(BasePtr base, std::vector<cplx> coeffs);
  explicit Spectrum(BasePtr base);

  const BasePtr& base() const { return base_; }
  std::uint64_t size() const { return coeffs_.size(); }
  cplx operator[](std::uint64_t n) const { return coeffs_[n]; }
  cplx& operator[](std::uint64_t n) { return coeffs_[n]; }
  std::span<const cplx> coeffs() const { return coeffs_; }

private:
  BasePtr base_;
  std::vector<cplx> coeffs_;
};

/// hat{f}(n) = integral of f * conj(psi_n) over G_m, for all n < M_N.
/// Axis-by-axis sweep of size-m_k transforms, O(M_N * sum_k m_k).
Spectrum analyze(const CellFunction& f);

/// f(x) = sum_n hat{f}(n) * psi_n(x); exact inverse of analyze.
CellFunction synthesize(const Spectrum& s);

/// Partial sum S_n f = sum_{k<n} hat{f}(k) psi_k.  S_0 f = 0; for
/// n >= M_N returns the full synthesis.
CellFunction partial_sum(const Spectrum& s, std::uint64_t n);

/// Incremental partial sums: after k calls to next(), current() holds
/// S_k f.  Keeps O(M_N) live state.
class PartialSumStream {
public:
  explicit PartialSumStream(Spectrum s);

  /// Advances from S_k to S_{k+1}; returns the new index k+1.
  std::uint64_t advance();
  std::uint64_t index() const { return index_; }
  const CellFunction& current() const { return sum_; }

private:
  Spectrum spectrum_;
  CellFunction sum_;
  CellFunction character_;  // psi_{index_}, updated in place
  std::uint64_t index_ = 0;
};

}  // namespace vilenkin
