#include "setramsey/resample.hpp"

#include <stdexcept>

namespace setramsey {

ConstructionArtifacts build(const ConstructionParams& params, ConstructionKind kind, std::uint64_t seed,
                            unsigned threads) {
  if (kind == ConstructionKind::main) return build_main_colouring(params, seed, threads);
  if (params.n > 0xffffffffULL) throw std::domain_error("build: n too large to materialise");
  return build_simple_colouring(params.r, params.s, params.k, static_cast<std::uint32_t>(params.n), seed, threads);
}

Certificate make_certificate(const ConstructionParams& params, ConstructionKind kind, const ConstructionArtifacts& artifacts,
                             VerificationReport report) {
  Certificate cert;
  cert.r = params.r;
  cert.s = params.s;
  cert.k = params.k;
  cert.construction = kind == ConstructionKind::main ? ConstructionTag::main : ConstructionTag::simple;
  cert.seed = artifacts.rng_seed;
  if (kind == ConstructionKind::main) {
    cert.m = params.m;
    cert.p = params.p;
  }
  cert.colouring = artifacts.colouring;
  cert.report = std::move(report);
  return cert;
}

ResampleOutcome resample_until_valid(const ConstructionParams& params, ConstructionKind kind,
                                     std::uint64_t max_attempts, std::uint64_t base_seed, unsigned threads) {
  if (max_attempts < 1) throw std::invalid_argument("resample_until_valid: max_attempts must be >= 1");
  ResampleOutcome outcome;
  for (std::uint64_t a = 0; a < max_attempts; ++a) {
    const std::uint64_t seed = base_seed + a;
    ++outcome.attempts;
    auto artifacts = build(params, kind, seed, threads);
    if (!check_min_colours(artifacts.colouring, params.s).empty()) {
      ++outcome.min_colour_failures;
      continue;
    }
    auto report = verify(artifacts.colouring, params.s, params.k, {.threads = threads});
    if (!report.clique_free) {
      ++outcome.clique_failures;
      continue;
    }
    outcome.certificate = make_certificate(params, kind, artifacts, std::move(report));
    outcome.success_seed = seed;
    break;
  }
  return outcome;
}

}  // namespace setramsey
