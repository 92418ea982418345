#include "vassiliev/samples.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vassiliev/error.hpp"

namespace vassiliev {

namespace {

bool closes_to_knot(int strands, const std::vector<BraidLetter>& word) {
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& letter : word) std::swap(perm[letter.generator - 1], perm[letter.generator]);
  int length = 0;
  int p = 0;
  do {
    p = perm[p];
    ++length;
  } while (p != 0);
  return length == strands;
}

}  // namespace

SingularDiagram random_singular_knot(std::mt19937_64& rng, const SampleSpec& spec) {
  if (spec.nodes < 0 || spec.min_strands < 2 || spec.max_strands < spec.min_strands)
    throw Error("knot_codes", "invalid sample specification");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    int strands = std::uniform_int_distribution<int>(spec.min_strands, spec.max_strands)(rng);
    // A closure on n strands is a knot only if the word has at least n - 1 letters.
    int min_letters = std::max(spec.nodes, strands - 1);
    if (min_letters > spec.max_letters) continue;
    int letters = std::uniform_int_distribution<int>(min_letters, spec.max_letters)(rng);
    std::vector<BraidLetter> word(letters);
    std::vector<int> slots(letters);
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    for (int k = 0; k < letters; ++k) {
      word[k].generator = std::uniform_int_distribution<int>(1, strands - 1)(rng);
      word[k].kind = std::bernoulli_distribution(0.5)(rng) ? BraidLetter::Kind::Positive : BraidLetter::Kind::Negative;
    }
    for (int k = 0; k < spec.nodes; ++k) word[slots[k]].kind = BraidLetter::Kind::Singular;
    if (!closes_to_knot(strands, word)) continue;
    return braid_closure(strands, word);
  }
  throw Error("knot_codes", "could not generate a sample with " + std::to_string(spec.nodes) + " nodes");
}

std::vector<SingularDiagram> random_singular_knots(std::uint64_t seed, std::size_t count, const SampleSpec& spec) {
  std::mt19937_64 rng(seed);
  std::vector<SingularDiagram> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_singular_knot(rng, spec));
  return out;
}

}  // namespace vassiliev
