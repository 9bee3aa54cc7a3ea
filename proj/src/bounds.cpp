#include "setramsey/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace setramsey {

namespace {

std::string g12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::string BoundConstants::label() const {
  return "c=" + g12(c) + ";c_prime=" + g12(c_prime) + ";delta=" + g12(delta) + ";c_delta=" + g12(c_delta);
}

double BoundRow::bits(double nats) { return nats / std::numbers::ln2; }

BoundRow evaluate_bounds(std::uint32_t r, std::uint32_t s, std::uint32_t k, const BoundConstants& constants) {
  if (s < 1 || s >= r) throw std::domain_error("evaluate_bounds: need 1 <= s < r");
  if (k < 2) throw std::domain_error("evaluate_bounds: k must be at least 2");
  if (!(constants.c > 0 && constants.c_prime > 0 && constants.delta > 0 && constants.c_delta >= 0))
    throw std::domain_error("evaluate_bounds: c, c' and delta must be positive and c(delta) non-negative");

  const double rd = r;
  const double gap = r - s;
  const double kd = k;
  const double eps = gap / rd;

  BoundRow row;
  row.r = r;
  row.s = s;
  row.k = k;
  row.eps = eps;
  row.constants = constants;
  row.upper_cfhmsv = constants.c * kd * gap * gap / rd * std::log(rd / std::min<double>(s, gap));
  row.lower_cfhmsv = constants.c_prime * kd * gap * gap * gap / (rd * rd);
  row.lower_thm12 = constants.delta * kd * gap * gap / rd * std::numbers::ln2;
  row.lower_thm41 = std::max(0.0, gap / 2.0 * (std::log(eps * (kd - 1.0)) - 1.0));
  row.lower_thm42 = constants.c_delta * gap;
  row.lower_random = eps * kd / 6.0 * std::numbers::ln2;
  if (static_cast<std::uint64_t>(k) * (r - s) <= r) row.turan_upper = kd * kd;
  return row;
}

double chernoff_c_delta(std::uint32_t r, std::uint32_t s, std::uint32_t k) {
  if (s < 1 || s >= r) throw std::domain_error("chernoff_c_delta: need 1 <= s < r");
  if (k < 3) throw std::domain_error("chernoff_c_delta: need k >= 3");
  const double eps = static_cast<double>(r - s) / r;
  const double q = 1.0 / (k - 1.0);
  if (eps <= q) return 0.0;
  const double divergence =
      eps * std::log(eps / q) + (eps < 1.0 ? (1.0 - eps) * std::log((1.0 - eps) / (1.0 - q)) : 0.0);
  return divergence / eps;
}

std::string format_bound_row(const BoundRow& row) {
  std::string out = std::to_string(row.r) + "," + std::to_string(row.s) + "," + std::to_string(row.k) + ",";
  out += g12(row.eps) + "," + g12(row.upper_cfhmsv) + "," + g12(row.lower_cfhmsv) + "," + g12(row.lower_thm12) + ",";
  out += g12(row.lower_thm41) + "," + g12(row.lower_thm42) + "," + g12(row.lower_random) + ",";
  out += (row.turan_upper ? g12(*row.turan_upper) : std::string("NA")) + ",";
  out += row.constants.label();
  return out;
}

std::uint32_t s_minus_log2(std::uint32_t r) {
  std::uint32_t ceil_log = 0;
  while ((std::uint64_t{1} << ceil_log) < r) ++ceil_log;
  return r > ceil_log ? r - ceil_log : 0;
}

std::size_t emit_bounds_table(const std::vector<std::uint32_t>& r_values, const SRule& s_rule,
                              const std::vector<std::uint32_t>& k_values, const BoundConstants& constants,
                              std::ostream& sink) {
  if (r_values.empty() || k_values.empty()) throw std::invalid_argument("emit_bounds_table: empty range");
  sink << bounds_table_header << '\n';
  std::size_t rows = 0;
  for (auto r : r_values) {
    const auto s = s_rule(r);
    if (s < 1 || s >= r) continue;
    for (auto k : k_values) {
      sink << format_bound_row(evaluate_bounds(r, s, k, constants)) << '\n';
      ++rows;
    }
  }
  if (!sink) throw std::ios_base::failure("emit_bounds_table: write failed");
  return rows;
}

}  // namespace setramsey
