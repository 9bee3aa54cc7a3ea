#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "setramsey/colouring.hpp"
#include "setramsey/params.hpp"
#include "setramsey/verifier.hpp"

namespace setramsey {

inline constexpr std::uint32_t certificate_version = 1;
inline constexpr std::uint32_t certificate_max_r = 4096;

enum class ConstructionTag { main, simple, external };

std::string_view to_string(ConstructionTag tag);
ConstructionTag parse_construction_tag(std::string_view text);

/// A set-colouring of K_n plus the parameters it claims to witness.
///
/// On disk (all lines end in '\n'):
///
///     RAMSEYCERT 1
///     r=<r> s=<s> k=<k> n=<n> construction=<main|simple|external> seed=<u64|none>
///     m=<m> p=<num>/<den>          (optional)
///     <u> <v> <lowercase hex mask>  one line per edge, u < v, lexicographic
///     sha256=<hex digest of the exact bytes of all edge lines>
struct Certificate {
  std::uint32_t version = certificate_version;
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  std::uint32_t k = 0;
  ConstructionTag construction = ConstructionTag::external;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> m;
  std::optional<Rational> p;
  SetColouring colouring;
  std::optional<VerificationReport> report;  // in memory only

  std::uint32_t n() const { return colouring.n(); }
  /// Hex SHA-256 over the canonical edge lines.
  std::string checksum() const;

  /// Structural equality: header fields and masks (report excluded).
  bool same_content(const Certificate& other) const;
};

class CertificateError : public std::runtime_error {
 public:
  enum class Kind { parse, checksum, version, range };
  CertificateError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}
  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Canonical lowercase hex of one mask (most significant digit first, "0" when empty).
std::string mask_to_hex(std::span<const std::uint64_t> mask);

std::string sha256_hex(std::string_view bytes);

std::string certificate_to_string(const Certificate& cert);
std::size_t write_certificate(const Certificate& cert, std::ostream& sink);
Certificate read_certificate(std::istream& source);
Certificate parse_certificate(std::string_view text);

}  // namespace setramsey
