#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "setramsey/certificate.hpp"
#include "setramsey/oracle.hpp"
#include "setramsey/verifier.hpp"
#include "support/oracles.hpp"

using namespace setramsey;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Certificate tiny() {
  Certificate c;
  c.r = 1, c.s = 1, c.k = 2;
  c.colouring = SetColouring(2, 1);
  c.colouring.set(0, 0);
  return c;
}

CertificateError::Kind kind_of(const std::string& text) {
  try {
    parse_certificate(text);
  } catch (const CertificateError& e) {
    return e.kind();
  }
  FAIL("certificate was accepted");
  return CertificateError::Kind::parse;
}

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("sha256 test vectors") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("mask hex is canonical") {
  std::vector<std::uint64_t> w{0};
  CHECK(mask_to_hex(w) == "0");
  w[0] = 0xabc;
  CHECK(mask_to_hex(w) == "abc");
  std::vector<std::uint64_t> two{0x1, 0x2};
  CHECK(mask_to_hex(two) == "20000000000000001");
  std::vector<std::uint64_t> high{0x0, 0x0, 0x0};
  CHECK(mask_to_hex(high) == "0");
}

TEST_CASE("smallest certificate") {
  const auto text = certificate_to_string(tiny());
  const std::string expected = "RAMSEYCERT 1\nr=1 s=1 k=2 n=2 construction=external seed=none\n0 1 1\nsha256=" +
                               sha256_hex("0 1 1\n") + "\n";
  CHECK(text == expected);
  std::ostringstream sink;
  CHECK(write_certificate(tiny(), sink) == expected.size());
  CHECK(sink.str() == expected);
  CHECK(tiny().checksum() == sha256_hex("0 1 1\n"));
}

TEST_CASE("round trip") {
  std::mt19937_64 gen(6);
  for (std::uint32_t r : {1u, 5u, 64u, 65u, 150u}) {
    Certificate c;
    c.r = r, c.s = 1, c.k = 4;
    c.construction = r % 2 ? ConstructionTag::main : ConstructionTag::simple;
    c.seed = gen();
    if (c.construction == ConstructionTag::main) {
      c.m = 20;
      c.p = Rational(7, 10);
    }
    c.colouring = testing::random_bit_colouring(1 + r % 13, r, 0.5, gen);
    const auto text = certificate_to_string(c);
    const auto back = parse_certificate(text);
    CHECK(back.same_content(c));
    CHECK(certificate_to_string(back) == text);
    std::istringstream in(text);
    CHECK(read_certificate(in).same_content(c));
  }
  CHECK(parse_construction_tag("main") == ConstructionTag::main);
  CHECK(to_string(ConstructionTag::simple) == "simple");
  CHECK_THROWS(parse_construction_tag("other"));
}

TEST_CASE("corrupted hex digit is a checksum mismatch") {
  Certificate c = tiny();
  c.r = 4;
  c.colouring = SetColouring(4, 4);
  for (std::uint64_t e = 0; e < 6; ++e) c.colouring.set(e, e % 4);
  const auto text = certificate_to_string(c);
  CHECK(kind_of(replace_once(text, "1 2 8", "1 2 4")) == CertificateError::Kind::checksum);
}

TEST_CASE("missing edge line names the expected pair") {
  Certificate c = tiny();
  c.colouring = SetColouring(3, 1);
  const auto text = certificate_to_string(c);
  const auto broken = replace_once(text, "0 2 0\n", "");
  try {
    parse_certificate(broken);
    FAIL("accepted");
  } catch (const CertificateError& e) {
    CHECK(e.kind() == CertificateError::Kind::parse);
    CHECK(std::string(e.what()).find("(0,2)") != std::string::npos);
    CHECK(e.line() == 4);
  }
}

TEST_CASE("malformed input is rejected") {
  const auto text = certificate_to_string(tiny());
  CHECK(kind_of(replace_once(text, "RAMSEYCERT 1", "RAMSEYCERT 2")) == CertificateError::Kind::version);
  CHECK(kind_of(text + "extra\n") == CertificateError::Kind::parse);
  CHECK(kind_of(text.substr(0, text.size() - 1)) == CertificateError::Kind::parse);
  CHECK(kind_of(replace_once(text, "r=1 ", "r=5000 ")) == CertificateError::Kind::range);
  CHECK(kind_of(replace_once(text, "r=1 ", "r=01 ")) == CertificateError::Kind::parse);
  CHECK(kind_of(replace_once(text, "seed=none", "seed=x")) == CertificateError::Kind::parse);
  CHECK(kind_of("") == CertificateError::Kind::parse);

  Certificate upper = tiny();
  upper.r = 8;
  upper.colouring = SetColouring(2, 8);
  upper.colouring.set(0, 3);
  const auto u = certificate_to_string(upper);
  const auto with_upper = replace_once(u, "0 1 8\n", "0 1 A\n");
  CHECK(kind_of(with_upper) == CertificateError::Kind::parse);

  // A mask bit at or above r with a matching checksum is a range error.
  const std::string body = "0 1 2\n";
  const std::string out_of_range =
      "RAMSEYCERT 1\nr=1 s=1 k=2 n=2 construction=external seed=none\n" + body + "sha256=" + sha256_hex(body) + "\n";
  CHECK(kind_of(out_of_range) == CertificateError::Kind::range);
  const std::string leading_zero = "0 1 01\n";
  CHECK(kind_of("RAMSEYCERT 1\nr=1 s=1 k=2 n=2 construction=external seed=none\n" + leading_zero + "sha256=" +
                sha256_hex(leading_zero) + "\n") == CertificateError::Kind::parse);
}

TEST_CASE("golden (2,1,3) witness on K_5") {
  const auto text = slurp(std::string(SETRAMSEY_GOLDEN_DIR) + "/r2_s1_k3_witness.cert");
  const auto cert = parse_certificate(text);
  CHECK(cert.r == 2);
  CHECK(cert.s == 1);
  CHECK(cert.k == 3);
  CHECK(cert.n() == 5);
  CHECK(cert.construction == ConstructionTag::external);
  CHECK_FALSE(cert.seed.has_value());
  CHECK(cert.checksum() == "6b405c07a8984fa34e1a4b334a8203b4519297809507c500ac06ebfae7aa3689");
  CHECK(verify(cert.colouring, cert.s, cert.k).valid());

  Certificate regenerated;
  regenerated.r = 2, regenerated.s = 1, regenerated.k = 3;
  regenerated.colouring = exact_ramsey(2, 1, 3, 7).witness_colouring;
  CHECK(certificate_to_string(regenerated) == text);
}

TEST_CASE("golden simple-construction certificate") {
  const auto text = slurp(std::string(SETRAMSEY_GOLDEN_DIR) + "/simple_r20_s16_k13_n40.cert");
  const auto cert = parse_certificate(text);
  CHECK(cert.construction == ConstructionTag::simple);
  CHECK(cert.seed == 37935646u);
  CHECK(cert.n() == 40);
  CHECK(cert.checksum() == "d98482e21fb1f3981a458a252a39da7aef7c341e779ef7f8da24dd39b4f95181");
  CHECK(verify(cert.colouring, 16, 13).valid());
}
