// Deterministic random presentation generator backing every property suite.
// A fixed seed yields the same documents on every platform: only raw
// mt19937_64 output is consumed (standard-pinned), never library
// distributions.
#pragma once

#include "homkoszul/document.hpp"

namespace homkoszul {

struct CorpusParams {
  std::uint32_t s_min = 2, s_max = 3;
  std::uint32_t arrows_min = 2, arrows_max = 3;
  std::uint32_t relations_min = 1, relations_max = 3;
  std::uint32_t vertices = 1;
  FieldDesc field = FieldDesc::prime(32003);
  // out of 100: chance that a relation is a single monomial path
  std::uint32_t monomial_bias_percent = 40;
};

std::vector<PresentationDocument> random_corpus(std::uint64_t seed, std::uint32_t count,
                                                const CorpusParams& params);

}  // namespace homkoszul
