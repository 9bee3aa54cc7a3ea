#include "setramsey/certificate.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <iterator>
#include <memory>
#include <sstream>
#include <vector>

namespace setramsey {

std::string_view to_string(ConstructionTag tag) {
  switch (tag) {
    case ConstructionTag::main: return "main";
    case ConstructionTag::simple: return "simple";
    case ConstructionTag::external: return "external";
  }
  return "external";
}

ConstructionTag parse_construction_tag(std::string_view text) {
  if (text == "main") return ConstructionTag::main;
  if (text == "simple") return ConstructionTag::simple;
  if (text == "external") return ConstructionTag::external;
  throw std::invalid_argument("unknown construction tag '" + std::string(text) + "'");
}

std::string mask_to_hex(std::span<const std::uint64_t> mask) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  bool leading = true;
  for (std::size_t w = mask.size(); w-- > 0;) {
    for (int shift = 60; shift >= 0; shift -= 4) {
      const auto nibble = static_cast<unsigned>((mask[w] >> shift) & 0xf);
      if (leading && nibble == 0) continue;
      leading = false;
      out.push_back(digits[nibble]);
    }
  }
  return out.empty() ? "0" : out;
}

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

namespace {

std::string edge_lines(const SetColouring& colouring) {
  std::string body;
  std::uint64_t e = 0;
  for (Vertex u = 0; u < colouring.n(); ++u)
    for (Vertex v = u + 1; v < colouring.n(); ++v, ++e) {
      body += std::to_string(u);
      body += ' ';
      body += std::to_string(v);
      body += ' ';
      body += mask_to_hex(colouring.mask(e));
      body += '\n';
    }
  return body;
}

}  // namespace

std::string Certificate::checksum() const { return sha256_hex(edge_lines(colouring)); }

bool Certificate::same_content(const Certificate& other) const {
  return version == other.version && r == other.r && s == other.s && k == other.k &&
         construction == other.construction && seed == other.seed && m == other.m && p == other.p &&
         colouring == other.colouring;
}

std::string certificate_to_string(const Certificate& cert) {
  if (cert.r < 1 || cert.r > certificate_max_r) throw std::domain_error("certificate r outside [1, 4096]");
  if (cert.colouring.r() != cert.r) throw std::domain_error("certificate r disagrees with colouring");
  if (!cert.colouring.well_formed()) throw std::domain_error("certificate mask uses bits at or above r");
  std::string out = "RAMSEYCERT " + std::to_string(cert.version) + "\n";
  out += "r=" + std::to_string(cert.r) + " s=" + std::to_string(cert.s) + " k=" + std::to_string(cert.k) +
         " n=" + std::to_string(cert.n()) + " construction=" + std::string(to_string(cert.construction)) +
         " seed=" + (cert.seed ? std::to_string(*cert.seed) : std::string("none")) + "\n";
  if (cert.m || cert.p) {
    if (!cert.m || !cert.p) throw std::domain_error("certificate m and p must be given together");
    out += "m=" + std::to_string(*cert.m) + " p=" + format_rational(*cert.p) + "\n";
  }
  const auto body = edge_lines(cert.colouring);
  out += body;
  out += "sha256=" + sha256_hex(body) + "\n";
  return out;
}

std::size_t write_certificate(const Certificate& cert, std::ostream& sink) {
  const auto text = certificate_to_string(cert);
  sink.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!sink) throw std::ios_base::failure("write_certificate: write failed");
  return text.size();
}

namespace {

using Kind = CertificateError::Kind;

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next '\n'-terminated line without the terminator; nullopt at end of input.
  std::optional<std::string_view> next() {
    if (pos_ >= text_.size()) return std::nullopt;
    const auto end = text_.find('\n', pos_);
    ++line_;
    if (end == std::string_view::npos)
      throw CertificateError(Kind::parse, line_, "missing final newline");
    auto out = text_.substr(pos_, end - pos_);
    last_start_ = pos_;
    pos_ = end + 1;
    return out;
  }
  std::size_t line() const { return line_; }
  std::size_t last_start() const { return last_start_; }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t last_start_ = 0;
  std::size_t line_ = 0;
};

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || (text.size() > 1 && text[0] == '0'))
    throw CertificateError(Kind::parse, line, "bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const auto end = line.find(' ', pos);
    out.push_back(line.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string_view expect_field(std::string_view token, std::string_view key, std::size_t line) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=')
    throw CertificateError(Kind::parse, line, "expected field '" + std::string(key) + "='");
  return token.substr(key.size() + 1);
}

// Returns false when the mask names a colour at or above r (reported after the checksum check).
bool parse_mask(std::string_view hex, std::span<std::uint64_t> mask, std::uint32_t r, std::size_t line) {
  if (hex.empty() || (hex.size() > 1 && hex[0] == '0'))
    throw CertificateError(Kind::parse, line, "mask is not canonical hex");
  std::size_t bit = 0;
  for (std::size_t i = hex.size(); i-- > 0; bit += 4) {
    const char ch = hex[i];
    unsigned nibble = 0;
    if (ch >= '0' && ch <= '9') nibble = static_cast<unsigned>(ch - '0');
    else if (ch >= 'a' && ch <= 'f') nibble = static_cast<unsigned>(ch - 'a' + 10);
    else throw CertificateError(Kind::parse, line, "bad hex digit in mask");
    for (unsigned b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1u)) continue;
      const auto pos = bit + b;
      if (pos >= r) return false;
      mask[pos / 64] |= std::uint64_t{1} << (pos % 64);
    }
  }
  return true;
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
  LineReader reader(text);
  auto line = reader.next();
  if (!line || line->substr(0, 11) != "RAMSEYCERT ")
    throw CertificateError(Kind::parse, 1, "missing RAMSEYCERT magic");
  const auto version = parse_number<std::uint32_t>(line->substr(11), 1, "version");
  if (version != certificate_version)
    throw CertificateError(Kind::version, 1, "unsupported certificate version " + std::to_string(version));

  Certificate cert;
  cert.version = version;
  line = reader.next();
  if (!line) throw CertificateError(Kind::parse, 2, "missing header line");
  const auto fields = split_spaces(*line);
  if (fields.size() != 6) throw CertificateError(Kind::parse, reader.line(), "header needs six fields");
  const auto ln = reader.line();
  cert.r = parse_number<std::uint32_t>(expect_field(fields[0], "r", ln), ln, "r");
  cert.s = parse_number<std::uint32_t>(expect_field(fields[1], "s", ln), ln, "s");
  cert.k = parse_number<std::uint32_t>(expect_field(fields[2], "k", ln), ln, "k");
  const auto n = parse_number<std::uint32_t>(expect_field(fields[3], "n", ln), ln, "n");
  try {
    cert.construction = parse_construction_tag(expect_field(fields[4], "construction", ln));
  } catch (const std::invalid_argument& e) {
    throw CertificateError(Kind::parse, ln, e.what());
  }
  const auto seed = expect_field(fields[5], "seed", ln);
  if (seed != "none") cert.seed = parse_number<std::uint64_t>(seed, ln, "seed");

  if (cert.r < 1 || cert.r > certificate_max_r) throw CertificateError(Kind::range, ln, "r outside [1, 4096]");
  if (cert.s > cert.r) throw CertificateError(Kind::range, ln, "s exceeds r");
  if (cert.k < 1) throw CertificateError(Kind::range, ln, "k must be positive");
  if (n < 1 || n > 1u << 16) throw CertificateError(Kind::range, ln, "n outside [1, 65536]");

  cert.colouring = SetColouring(n, cert.r);

  line = reader.next();
  if (line && line->substr(0, 2) == "m=") {
    const auto mp = split_spaces(*line);
    if (mp.size() != 2) throw CertificateError(Kind::parse, reader.line(), "bad m/p line");
    cert.m = parse_number<std::uint64_t>(expect_field(mp[0], "m", reader.line()), reader.line(), "m");
    const auto p_text = expect_field(mp[1], "p", reader.line());
    const auto slash = p_text.find('/');
    if (slash == std::string_view::npos) throw CertificateError(Kind::parse, reader.line(), "p must be num/den");
    const auto num = parse_number<std::int64_t>(p_text.substr(0, slash), reader.line(), "p numerator");
    const auto den = parse_number<std::int64_t>(p_text.substr(slash + 1), reader.line(), "p denominator");
    if (den == 0) throw CertificateError(Kind::parse, reader.line(), "p has zero denominator");
    cert.p = Rational(num, den);
    if (cert.p->numerator() != num || *cert.p < 0 || *cert.p > 1)
      throw CertificateError(Kind::range, reader.line(), "p must be a reduced fraction in [0, 1]");
    line = reader.next();
  }

  const std::size_t body_start = line ? reader.last_start() : text.size();
  std::uint64_t e = 0;
  std::size_t first_out_of_range = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++e) {
      const std::string expected = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
      if (!line || line->substr(0, 7) == "sha256=")
        throw CertificateError(Kind::parse, reader.line(), "missing edge line for " + expected);
      const auto parts = split_spaces(*line);
      if (parts.size() != 3) throw CertificateError(Kind::parse, reader.line(), "edge line needs three fields");
      const auto pu = parse_number<std::uint32_t>(parts[0], reader.line(), "vertex");
      const auto pv = parse_number<std::uint32_t>(parts[1], reader.line(), "vertex");
      if (pu != u || pv != v)
        throw CertificateError(Kind::parse, reader.line(), "expected edge line for " + expected);
      if (!parse_mask(parts[2], cert.colouring.mask(e), cert.r, reader.line()) && first_out_of_range == 0)
        first_out_of_range = reader.line();
      line = reader.next();
    }
  }
  const std::size_t body_end = line ? reader.last_start() : text.size();
  if (!line || line->substr(0, 7) != "sha256=")
    throw CertificateError(Kind::parse, reader.line() + 1, "missing sha256 line");
  const auto recorded = line->substr(7);
  const auto actual = sha256_hex(text.substr(body_start, body_end - body_start));
  if (recorded != actual)
    throw CertificateError(Kind::checksum, reader.line(),
                           "checksum mismatch: recorded " + std::string(recorded) + ", computed " + actual);
  if (first_out_of_range != 0)
    throw CertificateError(Kind::range, first_out_of_range, "mask has a colour at or above r");
  if (reader.position() != text.size())
    throw CertificateError(Kind::parse, reader.line() + 1, "trailing data after checksum");
  return cert;
}

Certificate read_certificate(std::istream& source) {
  std::string text{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
  if (source.bad()) throw std::ios_base::failure("read_certificate: read failed");
  return parse_certificate(text);
}

}  // namespace setramsey
