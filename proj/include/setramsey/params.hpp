#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace setramsey {

using Rational = boost::rational<std::int64_t>;

/// Parses "a/b", an integer, or a plain decimal such as "0.7" into an exact rational.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);
double to_double(const Rational& q);

/// Default construction constant, 2^-5.
inline const Rational default_delta{1, 32};

/// Parameters of the blow-up construction, with all derived quantities.
///
/// The canonical vertex and part counts are 2^{n_exponent} and 2^{m_exponent};
/// at any parameters a desk run can afford these are either tiny or
/// astronomically large, so integer defaults are provided (ceil for m, floor
/// for n, saturating at 2^64 - 1) and explicit overrides go through
/// override_params().
struct ConstructionParams {
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  std::uint32_t k = 0;
  Rational delta;
  Rational eps;  // (r - s) / r
  Rational C;    // 1 / delta^3

  double m_exponent = 0.0;  // delta^2 eps k
  double n_exponent = 0.0;  // delta^4 eps^2 r k

  std::uint64_t m = 1;
  std::uint64_t n = 2;
  bool m_saturated = false;
  bool n_saturated = false;

  Rational p;  // 1 - 5 delta eps unless overridden

  Rational t;  // delta eps k^2
  std::uint64_t t_int = 0;

  bool in_theorem_regime = false;
  bool in_turan_regime = false;
  bool non_canonical = false;

  double t_real() const { return to_double(t); }
  double p_real() const { return to_double(p); }

  friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
};

/// Computes every derived quantity from (r, s, k, delta).
///
/// Rejects s >= r (no construction exists there; the verifier handles s = r on
/// its own), s < 1, k < 2, r < 2, and delta outside (0, 2^-4). Parameters
/// outside the asymptotic regime are accepted and flagged, never rejected.
/// "log r" in the regime test is the natural logarithm.
ConstructionParams derive_params(std::uint32_t r, std::uint32_t s, std::uint32_t k,
                                 const Rational& delta = default_delta);

/// Replaces m, n and/or p and marks the result non-canonical.
ConstructionParams override_params(ConstructionParams base, std::optional<std::uint64_t> m,
                                   std::optional<std::uint64_t> n, std::optional<Rational> p);

}  // namespace setramsey
