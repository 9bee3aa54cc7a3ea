#include "setramsey/params.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace setramsey {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return value;
}

// Exact products of small rationals, converted once at the end.
long double as_long_double(const Rational& q) {
  return static_cast<long double>(q.numerator()) / static_cast<long double>(q.denominator());
}

std::uint64_t saturating_pow2_ceil(double exponent, bool& saturated) {
  saturated = exponent >= 64.0;
  if (saturated) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(std::exp2(static_cast<long double>(exponent))));
}

std::uint64_t saturating_pow2_floor(double exponent, bool& saturated) {
  saturated = exponent >= 64.0;
  if (saturated) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::floor(std::exp2(static_cast<long double>(exponent))));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 17 || frac.empty())
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    auto whole_text = text.substr(0, dot);
    const bool negative = !whole_text.empty() && whole_text.front() == '-';
    if (negative) whole_text.remove_prefix(1);
    const std::int64_t whole = whole_text.empty() ? 0 : parse_int(whole_text);
    if (frac.front() == '-' || frac.front() == '+')
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    const std::int64_t num = whole * scale + parse_int(frac);
    return Rational(negative ? -num : num, scale);
  }
  return Rational(parse_int(text));
}

std::string format_rational(const Rational& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

double to_double(const Rational& q) { return static_cast<double>(as_long_double(q)); }

ConstructionParams derive_params(std::uint32_t r, std::uint32_t s, std::uint32_t k,
                                 const Rational& delta) {
  if (r < 2) throw std::domain_error("derive_params: r must be at least 2");
  if (r > (1u << 20)) throw std::domain_error("derive_params: r exceeds 2^20");
  if (s < 1) throw std::domain_error("derive_params: s must be at least 1");
  if (s >= r) throw std::domain_error("derive_params: construction requires s < r");
  if (k < 2) throw std::domain_error("derive_params: k must be at least 2");
  if (k > (1u << 20)) throw std::domain_error("derive_params: k exceeds 2^20");
  if (delta <= 0 || delta >= Rational(1, 16))
    throw std::domain_error("derive_params: delta must lie in (0, 1/16)");
  if (delta.denominator() > (1 << 20))
    throw std::domain_error("derive_params: delta denominator exceeds 2^20");

  ConstructionParams out;
  out.r = r;
  out.s = s;
  out.k = k;
  out.delta = delta;
  out.eps = Rational(r - s, r);
  out.C = 1 / (delta * delta * delta);

  const Rational delta_sq_eps_k = delta * delta * out.eps * Rational(k);
  const Rational delta_sq_eps_r = delta * delta * Rational(r - s);
  out.m_exponent = to_double(delta_sq_eps_k);
  out.n_exponent = static_cast<double>(as_long_double(delta_sq_eps_k) * as_long_double(delta_sq_eps_r));

  out.m = saturating_pow2_ceil(out.m_exponent, out.m_saturated);
  out.n = std::max<std::uint64_t>(2, saturating_pow2_floor(out.n_exponent, out.n_saturated));

  out.p = 1 - 5 * delta * out.eps;
  out.t = delta * out.eps * Rational(k) * Rational(k);
  out.t_int = static_cast<std::uint64_t>(
      (out.t.numerator() + out.t.denominator() - 1) / out.t.denominator());

  // k <= 1/eps  <=>  k (r - s) <= r
  out.in_turan_regime = static_cast<std::uint64_t>(k) * (r - s) <= r;

  const long double C = as_long_double(out.C);
  const long double ln_r = std::log(static_cast<long double>(r));
  out.in_theorem_regime = static_cast<long double>(s) <= static_cast<long double>(r) - C * ln_r &&
                          static_cast<long double>(k) * (r - s) >= C * r * ln_r;
  return out;
}

ConstructionParams override_params(ConstructionParams base, std::optional<std::uint64_t> m,
                                   std::optional<std::uint64_t> n, std::optional<Rational> p) {
  if (m) {
    if (*m < 1) throw std::domain_error("override_params: m must be at least 1");
    base.m = *m;
    base.m_saturated = false;
  }
  if (n) {
    if (*n < 2) throw std::domain_error("override_params: n must be at least 2");
    base.n = *n;
    base.n_saturated = false;
  }
  if (p) {
    if (*p < 0 || *p > 1) throw std::domain_error("override_params: p must lie in [0, 1]");
    base.p = *p;
  }
  base.non_canonical = base.non_canonical || m || n || p;
  return base;
}

}  // namespace setramsey
