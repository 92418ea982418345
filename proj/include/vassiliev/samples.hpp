#pragma once

// Random singular knot diagrams built as braid closures, used by the
// property tests, the acceptance checks and the CLI sample generator.

#include <cstdint>
#include <random>
#include <vector>

#include "vassiliev/codes.hpp"

namespace vassiliev {

struct SampleSpec {
  int nodes = 1;
  int max_letters = 8;  // crossings plus nodes
  int min_strands = 2;
  int max_strands = 4;
};

/// One-component closure of a random braid word with exactly `spec.nodes`
/// singular letters and at most `spec.max_letters` letters in total.
SingularDiagram random_singular_knot(std::mt19937_64& rng, const SampleSpec& spec);

/// `count` samples drawn from a generator seeded with `seed`.
std::vector<SingularDiagram> random_singular_knots(std::uint64_t seed, std::size_t count, const SampleSpec& spec);

}  // namespace vassiliev
