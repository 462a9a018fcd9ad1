#include "vilenkin/spectral.hpp"

#include <numbers>
#include <stdexcept>
#include <vector>

namespace vilenkin {
namespace {

// In-place axis sweep: for every axis k applies the size-m_k kernel
// w^{sign * n_k * x_k} (w = exp(2*pi*i/m_k)) along the stride-M_k digit,
// scaling each output by `scale`.
void axis_sweep(const VilenkinBase& base, std::vector<cplx>& data, int sign,
                bool normalize) {
  std::vector<cplx> slot;
  for (int k = 0; k < base.resolution(); ++k) {
    const int m = base.radix(k);
    const std::uint64_t inner = base.scale(k);
    const std::uint64_t outer = base.scale(k + 1);
    std::vector<cplx> kernel(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        const double angle = sign * 2.0 * std::numbers::pi * ((a * b) % m) / m;
        kernel[static_cast<std::size_t>(a) * m + b] = cplx{std::cos(angle), std::sin(angle)};
      }
    }
    const double scale = normalize ? 1.0 / m : 1.0;
    slot.assign(static_cast<std::size_t>(m), cplx{});
    for (std::uint64_t hi = 0; hi < data.size(); hi += outer) {
      for (std::uint64_t lo = hi; lo < hi + inner; ++lo) {
        for (int d = 0; d < m; ++d) {
          slot[static_cast<std::size_t>(d)] = data[lo + static_cast<std::uint64_t>(d) * inner];
        }
        for (int a = 0; a < m; ++a) {
          cplx acc{};
          for (int b = 0; b < m; ++b) {
            acc += kernel[static_cast<std::size_t>(a) * m + b] * slot[static_cast<std::size_t>(b)];
          }
          data[lo + static_cast<std::uint64_t>(a) * inner] = acc * scale;
        }
      }
    }
  }
}

}  // namespace

Spectrum::Spectrum(BasePtr base, std::vector<cplx> coeffs)
    : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  if (!base_) throw std::invalid_argument("Spectrum: null base");
  if (coeffs_.size() != base_->cell_count()) {
    throw std::invalid_argument("Spectrum: coefficients must have length M_N");
  }
}

Spectrum::Spectrum(BasePtr base) : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("Spectrum: null base");
  coeffs_.assign(base_->cell_count(), cplx{});
}

Spectrum analyze(const CellFunction& f) {
  std::vector<cplx> data(f.values().begin(), f.values().end());
  axis_sweep(*f.base(), data, -1, true);
  return Spectrum(f.base(), std::move(data));
}

CellFunction synthesize(const Spectrum& s) {
  std::vector<cplx> data(s.coeffs().begin(), s.coeffs().end());
  axis_sweep(*s.base(), data, +1, false);
  return CellFunction(s.base(), std::move(data));
}

CellFunction partial_sum(const Spectrum& s, std::uint64_t n) {
  if (n >= s.size()) return synthesize(s);
  std::vector<cplx> head(s.coeffs().begin(), s.coeffs().end());
  for (std::uint64_t k = n; k < s.size(); ++k) head[k] = cplx{};
  return synthesize(Spectrum(s.base(), std::move(head)));
}

PartialSumStream::PartialSumStream(Spectrum s)
    : spectrum_(std::move(s)), sum_(spectrum_.base()), character_(spectrum_.base()) {
  for (auto& v : character_.values()) v = cplx{1.0, 0.0};  // psi_0
}

std::uint64_t PartialSumStream::advance() {
  const auto& base = *spectrum_.base();
  if (index_ < spectrum_.size()) {
    const cplx c = spectrum_[index_];
    if (c != cplx{}) {
      for (std::uint64_t i = 0; i < sum_.size(); ++i) sum_[i] += c * character_[i];
    }
    // psi_{n+1} = psi_n * r_0 * prod r_j over carried digits: incrementing n
    // bumps digit 0 and every digit that wraps from m_j - 1 to 0 changes by
    // 1 - m_j, and r_j^{1 - m_j} = r_j.
    std::uint64_t n = index_;
    int j = 0;
    while (true) {
      const int m = base.radix(j);
      const std::uint64_t inner = base.scale(j);
      const std::uint64_t outer = base.scale(j + 1);
      for (std::uint64_t hi = 0; hi < character_.size(); hi += outer) {
        for (int digit = 0; digit < m; ++digit) {
          const double angle = 2.0 * std::numbers::pi * digit / m;
          const cplx w{std::cos(angle), std::sin(angle)};
          const std::uint64_t lo0 = hi + static_cast<std::uint64_t>(digit) * inner;
          for (std::uint64_t lo = lo0; lo < lo0 + inner; ++lo) character_[lo] *= w;
        }
      }
      if (static_cast<int>(n % static_cast<std::uint64_t>(m)) != m - 1) break;
      n /= static_cast<std::uint64_t>(m);
      ++j;
      if (j >= base.resolution()) break;
    }
  }
  return ++index_;
}

}  // namespace vilenkin
