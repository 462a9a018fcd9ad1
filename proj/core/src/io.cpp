#include "vilenkin/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vilenkin {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17e", v);
  return buf;
}

void write_cell_function_csv(std::ostream& os, const CellFunction& f) {
  os << "cell,re,im\n";
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    os << i << ',' << format_double(f[i].real()) << ',' << format_double(f[i].imag())
       << '\n';
  }
}

void write_spectrum_csv(std::ostream& os, const Spectrum& s) {
  os << "n,re,im\n";
  for (std::uint64_t n = 0; n < s.size(); ++n) {
    os << n << ',' << format_double(s[n].real()) << ',' << format_double(s[n].imag())
       << '\n';
  }
}

std::vector<cplx> read_values_csv(std::istream& is, std::uint64_t expected_size) {
  std::vector<cplx> values(expected_size, cplx{});
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (!line.empty() && !(line[0] >= '0' && line[0] <= '9')) continue;  // header
    }
    std::istringstream row(line);
    std::string field;
    std::getline(row, field, ',');
    const std::uint64_t idx = std::stoull(field);
    if (idx >= expected_size) {
      throw std::out_of_range("read_values_csv: index " + field + " beyond M_N");
    }
    std::getline(row, field, ',');
    const double re = std::stod(field);
    double im = 0.0;
    if (std::getline(row, field, ',')) im = std::stod(field);
    values[idx] = cplx{re, im};
  }
  return values;
}

void write_ratio_report_csv(std::ostream& os, const RatioReport& report) {
  os << "k,n_k,M_2nk,hp_computed,hp_closed,numerator_sparse,numerator_full,"
        "ratio,lower_bound,witnessed_c\n";
  int k = 0;
  for (const auto& row : report.rows) {
    os << ++k << ',' << row.n_k << ',' << row.m_2nk << ','
       << format_double(row.hp_computed) << ',' << format_double(row.hp_closed) << ','
       << format_double(row.numerator_sparse) << ',' << format_double(row.numerator_full)
       << ',' << format_double(row.ratio) << ',' << format_double(row.lower_bound) << ','
       << format_double(row.witnessed_c) << '\n';
  }
}

std::string ratio_report_config_json(const RatioReport& report) {
  nlohmann::json j;
  j["part"] = std::string(1, report.part);
  j["m"] = report.radices;
  j["N"] = report.resolution;
  j["q"] = report.q_description;
  j["phi"] = report.phi_description;
  j["p"] = report.p;
  j["log_base"] = report.log_base;
  nlohmann::json ks = nlohmann::json::array();
  for (const auto& row : report.rows) ks.push_back(row.n_k);
  j["ks"] = ks;
  return j.dump(2);
}

}  // namespace vilenkin
