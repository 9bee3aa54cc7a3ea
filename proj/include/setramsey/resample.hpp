#pragma once

#include <cstdint>
#include <optional>

#include "setramsey/certificate.hpp"
#include "setramsey/construction.hpp"
#include "setramsey/params.hpp"

namespace setramsey {

struct ResampleOutcome {
  std::optional<Certificate> certificate;
  std::uint64_t attempts = 0;
  std::uint64_t min_colour_failures = 0;  // some edge had fewer than s colours
  std::uint64_t clique_failures = 0;      // every edge had >= s colours, but a monochromatic K_k exists
  std::optional<std::uint64_t> success_seed;

  bool succeeded() const { return certificate.has_value(); }
};

/// Certificate for one construction attempt, verified. The colouring is stored untruncated.
Certificate make_certificate(const ConstructionParams& params, ConstructionKind kind, const ConstructionArtifacts& artifacts,
                             VerificationReport report);

/// Builds the requested construction for seeds base_seed, base_seed + 1, ...
/// and returns the first one that verifies. An attempt whose minimum-colour
/// check fails is counted as such without running the clique search.
///
/// For the simple construction only r, s, k and n of `params` are used.
ResampleOutcome resample_until_valid(const ConstructionParams& params, ConstructionKind kind,
                                     std::uint64_t max_attempts, std::uint64_t base_seed, unsigned threads = 1);

ConstructionArtifacts build(const ConstructionParams& params, ConstructionKind kind, std::uint64_t seed,
                            unsigned threads = 1);

}  // namespace setramsey
