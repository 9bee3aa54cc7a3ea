#include <doctest.h>

#include <fstream>
#include <sstream>

#include "setramsey/resample.hpp"

using namespace setramsey;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("golden simple certificate reproduces byte for byte") {
  const auto params = override_params(derive_params(20, 16, 13), std::nullopt, 40, std::nullopt);
  const auto outcome = resample_until_valid(params, ConstructionKind::simple, 1, 37935646);
  REQUIRE(outcome.succeeded());
  CHECK(outcome.attempts == 1);
  CHECK(outcome.success_seed == 37935646u);
  CHECK(certificate_to_string(*outcome.certificate) ==
        slurp(std::string(SETRAMSEY_GOLDEN_DIR) + "/simple_r20_s16_k13_n40.cert"));
}

TEST_CASE("resampling walks consecutive seeds and counts failures") {
  const auto params = override_params(derive_params(20, 16, 13), std::nullopt, 40, std::nullopt);
  const auto outcome = resample_until_valid(params, ConstructionKind::simple, 10, 37935640);
  REQUIRE(outcome.succeeded());
  CHECK(outcome.success_seed == 37935646u);
  CHECK(outcome.attempts == 7);
  CHECK(outcome.min_colour_failures == 6);
  CHECK(outcome.clique_failures == 0);
  CHECK(outcome.certificate->seed == 37935646u);
  CHECK_FALSE(outcome.certificate->m.has_value());
  CHECK_FALSE(outcome.certificate->p.has_value());
}

TEST_CASE("m = 1 fails every attempt on the minimum-colour check") {
  const auto params = override_params(derive_params(12, 8, 6), 1, 20, Rational(7, 10));
  const auto outcome = resample_until_valid(params, ConstructionKind::main, 5, 0);
  CHECK_FALSE(outcome.succeeded());
  CHECK(outcome.attempts == 5);
  CHECK(outcome.min_colour_failures == 5);
  CHECK(outcome.clique_failures == 0);
  CHECK_FALSE(outcome.success_seed.has_value());
}

TEST_CASE("dense main colourings fail on cliques") {
  const auto params = override_params(derive_params(4, 1, 3), 1000, 12, Rational(1));
  const auto outcome = resample_until_valid(params, ConstructionKind::main, 4, 9);
  CHECK_FALSE(outcome.succeeded());
  CHECK(outcome.clique_failures + outcome.min_colour_failures == 4);
  CHECK(outcome.clique_failures >= 3);
}

TEST_CASE("main certificates record m and p; outcome is thread-independent") {
  const auto params = override_params(derive_params(12, 8, 6), 20, 6, Rational(7, 10));
  const auto a = resample_until_valid(params, ConstructionKind::main, 50, 0, 1);
  const auto b = resample_until_valid(params, ConstructionKind::main, 50, 0, 3);
  CHECK(a.attempts == b.attempts);
  CHECK(a.success_seed == b.success_seed);
  REQUIRE(a.succeeded());
  CHECK(a.certificate->m == 20u);
  CHECK(a.certificate->p == Rational(7, 10));
  CHECK(a.certificate->construction == ConstructionTag::main);
  CHECK(certificate_to_string(*a.certificate) == certificate_to_string(*b.certificate));
  CHECK(a.certificate->report.has_value());
  CHECK(a.certificate->report->valid());
}

TEST_CASE("build dispatches on the construction kind") {
  const auto params = override_params(derive_params(12, 8, 6), 20, 15, Rational(7, 10));
  CHECK(build(params, ConstructionKind::main, 3).kind == ConstructionKind::main);
  CHECK(build(params, ConstructionKind::simple, 3).kind == ConstructionKind::simple);
  CHECK(build(params, ConstructionKind::main, 3).colouring == build_main_colouring(params, 3).colouring);
  CHECK(build(params, ConstructionKind::simple, 3).colouring == build_simple_colouring(12, 8, 6, 15, 3).colouring);
}

TEST_CASE("golden main certificate reproduces byte for byte") {
  const auto params = override_params(derive_params(12, 8, 12), 20, 30, Rational(7, 10));
  const auto outcome = resample_until_valid(params, ConstructionKind::main, 1, 54);
  REQUIRE(outcome.succeeded());
  CHECK(outcome.certificate->checksum() == "d473ff08d0d2b883493de27d23dd21f13dce45c657ae44db46441a320c6c0b70");
  CHECK(certificate_to_string(*outcome.certificate) ==
        slurp(std::string(SETRAMSEY_GOLDEN_DIR) + "/main_r12_s8_k12_n30_m20.cert"));
}
