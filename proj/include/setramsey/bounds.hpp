#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "setramsey/params.hpp"

namespace setramsey {

/// Constants that the bounds leave unspecified. c, c' and c(delta) default to 1,
/// which is arbitrary; only growth rates are meaningful with the defaults.
struct BoundConstants {
  double c = 1.0;        // upper bound exponent
  double c_prime = 1.0;  // product-colouring lower bound exponent
  double delta = 1.0 / 32.0;
  double c_delta = 1.0;

  std::string label() const;
};

/// All fields are natural-log exponents (nats) except turan_upper, which is the bound k^2 itself.
struct BoundRow {
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  std::uint32_t k = 0;
  double eps = 0.0;
  double upper_cfhmsv = 0.0;  // c k (r-s)^2 / r * ln(r / min(s, r-s))
  double lower_cfhmsv = 0.0;  // c' k (r-s)^3 / r^2
  double lower_thm12 = 0.0;   // delta k (r-s)^2 / r * ln 2
  double lower_thm41 = 0.0;   // max(0, (eps r / 2) ln(eps (k-1) / e))
  double lower_thm42 = 0.0;   // c(delta) eps r
  double lower_random = 0.0;  // (eps k / 6) ln 2
  std::optional<double> turan_upper;  // k^2 when k <= 1/eps
  BoundConstants constants;

  static double bits(double nats);
};

/// Evaluates every bound in log space. Requires 1 <= s < r, k >= 2, positive c, c', delta;
/// c(delta) = 0 is allowed and makes lower_thm42 vacuous.
BoundRow evaluate_bounds(std::uint32_t r, std::uint32_t s, std::uint32_t k, const BoundConstants& constants = {});

/// Largest c with P(Bin(r, 1/(k-1)) >= eps r) <= exp(-c eps r), from the
/// relative-entropy form of the Chernoff bound: c = D(eps || 1/(k-1)) / eps,
/// and 0 when eps <= 1/(k-1).
double chernoff_c_delta(std::uint32_t r, std::uint32_t s, std::uint32_t k);

inline constexpr const char* bounds_table_header =
    "r,s,k,eps,upper_cfhmsv,lower_cfhmsv,lower_thm12,lower_thm41,lower_thm42,lower_random,turan_upper,constants";

std::string format_bound_row(const BoundRow& row);

using SRule = std::function<std::uint32_t(std::uint32_t r)>;

/// s = r - ceil(log2 r).
std::uint32_t s_minus_log2(std::uint32_t r);

/// Writes the header and one row per (r, k) grid point; rows with s outside [1, r) are skipped.
std::size_t emit_bounds_table(const std::vector<std::uint32_t>& r_values, const SRule& s_rule,
                              const std::vector<std::uint32_t>& k_values, const BoundConstants& constants,
                              std::ostream& sink);

}  // namespace setramsey
