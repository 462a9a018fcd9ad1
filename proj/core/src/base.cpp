#include "vilenkin/base.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vilenkin {

VilenkinBase::VilenkinBase(std::vector<int> radices, int resolution,
                           std::uint64_t cell_cap)
    : radices_(std::move(radices)), resolution_(resolution) {
  if (resolution_ < 1) {
    throw std::invalid_argument("VilenkinBase: resolution must be >= 1");
  }
  if (radices_.size() < static_cast<std::size_t>(resolution_)) {
    throw std::invalid_argument("VilenkinBase: need at least N radices");
  }
  radices_.resize(static_cast<std::size_t>(resolution_));
  scales_.resize(static_cast<std::size_t>(resolution_) + 1);
  scales_[0] = 1;
  for (int k = 0; k < resolution_; ++k) {
    const int m = radices_[static_cast<std::size_t>(k)];
    if (m < 2) {
      throw std::invalid_argument("VilenkinBase: every radix must be >= 2");
    }
    const std::uint64_t prev = scales_[static_cast<std::size_t>(k)];
    if (prev > cell_cap / static_cast<std::uint64_t>(m)) {
      throw std::overflow_error("VilenkinBase: M_N exceeds the cell cap");
    }
    scales_[static_cast<std::size_t>(k) + 1] = prev * static_cast<std::uint64_t>(m);
    max_radix_ = std::max(max_radix_, m);
  }
}

std::vector<int> VilenkinBase::to_digits(std::uint64_t linear) const {
  std::vector<int> digits(static_cast<std::size_t>(resolution_));
  to_digits(linear, digits);
  return digits;
}

void VilenkinBase::to_digits(std::uint64_t linear, std::span<int> out) const {
  if (linear >= cell_count()) {
    throw std::out_of_range("to_digits: index beyond M_N");
  }
  for (int k = 0; k < resolution_; ++k) {
    const auto m = static_cast<std::uint64_t>(radices_[static_cast<std::size_t>(k)]);
    out[static_cast<std::size_t>(k)] = static_cast<int>(linear % m);
    linear /= m;
  }
}

std::uint64_t VilenkinBase::from_digits(std::span<const int> digits) const {
  if (digits.size() != static_cast<std::size_t>(resolution_)) {
    throw std::invalid_argument("from_digits: expected N digits");
  }
  std::uint64_t linear = 0;
  for (int k = 0; k < resolution_; ++k) {
    const int d = digits[static_cast<std::size_t>(k)];
    if (d < 0 || d >= radices_[static_cast<std::size_t>(k)]) {
      throw std::out_of_range("from_digits: digit out of range");
    }
    linear += static_cast<std::uint64_t>(d) * scales_[static_cast<std::size_t>(k)];
  }
  return linear;
}

std::uint64_t VilenkinBase::unit_point(int n) const {
  if (n < 0 || n >= resolution_) {
    throw std::out_of_range("unit_point: coordinate beyond resolution");
  }
  return scales_[static_cast<std::size_t>(n)];
}

BasePtr make_base(std::vector<int> radices, int resolution, std::uint64_t cell_cap) {
  return std::make_shared<const VilenkinBase>(std::move(radices), resolution, cell_cap);
}

CellFunction::CellFunction(BasePtr base, std::vector<cplx> values)
    : base_(std::move(base)), values_(std::move(values)) {
  if (!base_) throw std::invalid_argument("CellFunction: null base");
  if (values_.size() != base_->cell_count()) {
    throw std::invalid_argument("CellFunction: values must have length M_N");
  }
}

CellFunction::CellFunction(BasePtr base)
    : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("CellFunction: null base");
  values_.assign(base_->cell_count(), cplx{0.0, 0.0});
}

void require_same_base(const CellFunction& f, const CellFunction& g) {
  if (!(*f.base() == *g.base())) {
    throw std::invalid_argument("operands live on different Vilenkin bases");
  }
}

CellFunction& CellFunction::operator+=(const CellFunction& g) {
  require_same_base(*this, g);
  for (std::uint64_t i = 0; i < size(); ++i) values_[i] += g[i];
  return *this;
}

CellFunction& CellFunction::operator-=(const CellFunction& g) {
  require_same_base(*this, g);
  for (std::uint64_t i = 0; i < size(); ++i) values_[i] -= g[i];
  return *this;
}

CellFunction& CellFunction::operator*=(cplx c) {
  for (auto& v : values_) v *= c;
  return *this;
}

CellFunction interval_indicator(const BasePtr& base, int rank, std::uint64_t anchor) {
  if (rank < 0 || rank > base->resolution()) {
    throw std::out_of_range("interval_indicator: rank beyond resolution");
  }
  if (anchor >= base->cell_count()) {
    throw std::out_of_range("interval_indicator: anchor beyond M_N");
  }
  CellFunction f(base);
  const std::uint64_t block = base->scale(rank);
  // Cells sharing digits 0..rank-1 with the anchor form arithmetic strides
  // of step M_rank starting at anchor mod M_rank.
  for (std::uint64_t i = anchor % block; i < base->cell_count(); i += block) {
    f[i] = cplx{1.0, 0.0};
  }
  return f;
}

cplx haar_integral(const CellFunction& f) {
  cplx acc{0.0, 0.0};
  for (std::uint64_t i = 0; i < f.size(); ++i) acc += f[i];
  return acc / static_cast<double>(f.size());
}

std::uint64_t sup_error_cell(const CellFunction& f, const CellFunction& g, double* err) {
  require_same_base(f, g);
  std::uint64_t worst = 0;
  double worst_err = -1.0;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const double e = std::abs(f[i] - g[i]);
    if (e > worst_err) {
      worst_err = e;
      worst = i;
    }
  }
  if (err) *err = worst_err;
  return worst;
}

double sup_distance(const CellFunction& f, const CellFunction& g) {
  double err = 0.0;
  sup_error_cell(f, g, &err);
  return err;
}

}  // namespace vilenkin
