#pragma once

#include "vilenkin/sharpness.hpp"

#include <iosfwd>
#include <string>

namespace vilenkin {

// CSV layer: header row, UTF-8, '.' decimal, %.17e values so doubles
// round-trip losslessly.

std::string format_double(double v);

/// Columns: cell, re, im.
void write_cell_function_csv(std::ostream& os, const CellFunction& f);
/// Columns: n, re, im.
void write_spectrum_csv(std::ostream& os, const Spectrum& s);

/// Reads a "cell,re,im" (or "n,re,im") CSV into a value vector of length
/// M_N; missing rows stay zero.
std::vector<cplx> read_values_csv(std::istream& is, std::uint64_t expected_size);

/// Columns: k, n_k, M_2nk, hp_computed, hp_closed, numerator_sparse,
/// numerator_full, ratio, lower_bound, witnessed_c.
void write_ratio_report_csv(std::ostream& os, const RatioReport& report);

/// JSON config echo for reproducing a sweep.
std::string ratio_report_config_json(const RatioReport& report);

}  // namespace vilenkin
