#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace vilenkin {

using cplx = std::complex<double>;

/// Mixed-radix description of the bounded group G_m at finite resolution N.
///
/// Holds the radix sequence m_0..m_{N-1} and the generated scale table
/// M_0 = 1, M_{k+1} = m_k * M_k.  Cells of rank N are indexed linearly in
/// little-endian mixed-radix order: linear = sum_j x_j * M_j (digit 0 fastest).
/// Immutable after construction.
class VilenkinBase {
public:
  // Default cap keeps quadratic sweeps downstream at desk scale.
  static constexpr std::uint64_t kDefaultCellCap = std::uint64_t{1} << 16;

  VilenkinBase(std::vector<int> radices, int resolution,
               std::uint64_t cell_cap = kDefaultCellCap);

  int resolution() const { return resolution_; }
  int radix(int k) const { return radices_.at(static_cast<std::size_t>(k)); }
  const std::vector<int>& radices() const { return radices_; }
  int max_radix() const { return max_radix_; }

  /// M_k for 0 <= k <= N.
  std::uint64_t scale(int k) const { return scales_.at(static_cast<std::size_t>(k)); }
  /// M_N, the number of rank-N cells.
  std::uint64_t cell_count() const { return scales_.back(); }

  std::vector<int> to_digits(std::uint64_t linear) const;
  void to_digits(std::uint64_t linear, std::span<int> out) const;
  std::uint64_t from_digits(std::span<const int> digits) const;

  /// Linear index of e_n (digit n set to 1, all others 0).
  std::uint64_t unit_point(int n) const;

  bool operator==(const VilenkinBase& other) const {
    return resolution_ == other.resolution_ && radices_ == other.radices_;
  }

private:
  std::vector<int> radices_;
  std::vector<std::uint64_t> scales_;
  int resolution_ = 0;
  int max_radix_ = 0;
};

using BasePtr = std::shared_ptr<const VilenkinBase>;

BasePtr make_base(std::vector<int> radices, int resolution,
                  std::uint64_t cell_cap = VilenkinBase::kDefaultCellCap);

/// A complex-valued function on G_m constant on rank-N cells, stored as
/// M_N values in linear cell order.
class CellFunction {
public:
  CellFunction(BasePtr base, std::vector<cplx> values);
  /// Zero function on the given base.
  explicit CellFunction(BasePtr base);

  const BasePtr& base() const { return base_; }
  std::uint64_t size() const { return values_.size(); }
  cplx operator[](std::uint64_t i) const { return values_[i]; }
  cplx& operator[](std::uint64_t i) { return values_[i]; }
  std::span<const cplx> values() const { return values_; }
  std::span<cplx> values() { return values_; }

  CellFunction& operator+=(const CellFunction& g);
  CellFunction& operator-=(const CellFunction& g);
  CellFunction& operator*=(cplx c);

  friend CellFunction operator+(CellFunction f, const CellFunction& g) { return f += g; }
  friend CellFunction operator-(CellFunction f, const CellFunction& g) { return f -= g; }
  friend CellFunction operator*(cplx c, CellFunction f) { return f *= c; }

private:
  BasePtr base_;
  std::vector<cplx> values_;
};

/// Throws std::invalid_argument unless f and g share the same base.
void require_same_base(const CellFunction& f, const CellFunction& g);

/// Indicator of I_n(anchor): 1 on cells agreeing with the anchor in
/// digits 0..n-1, else 0.  I_0 is all of G_m.
CellFunction interval_indicator(const BasePtr& base, int rank, std::uint64_t anchor);

/// (1/M_N) * sum of cell values; exact for cell functions under the
/// normalized Haar measure.
cplx haar_integral(const CellFunction& f);

std::uint64_t sup_error_cell(const CellFunction& f, const CellFunction& g, double* err = nullptr);
double sup_distance(const CellFunction& f, const CellFunction& g);

}  // namespace vilenkin
