#include "homkoszul/corpus.hpp"

#include <random>

namespace homkoszul {

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

}  // namespace

std::vector<PresentationDocument> random_corpus(std::uint64_t seed, std::uint32_t count,
                                                const CorpusParams& params) {
  require(params.s_min >= 2 && params.s_min <= params.s_max, ErrorKind::InputError,
          "bad s range");
  require(params.arrows_min >= 1 && params.arrows_min <= params.arrows_max,
          ErrorKind::InputError, "bad arrow range");
  require(params.relations_min <= params.relations_max, ErrorKind::InputError,
          "bad relation range");
  std::mt19937_64 rng(seed);
  std::vector<PresentationDocument> docs;
  docs.reserve(count);
  for (std::uint32_t n = 0; n < count; ++n) {
    PresentationDocument doc;
    doc.field = params.field;
    doc.vertices = params.vertices;
    doc.s = std::uint32_t(pick(rng, params.s_min, params.s_max));
    std::uint32_t arrows = std::uint32_t(pick(rng, params.arrows_min, params.arrows_max));
    for (std::uint32_t a = 0; a < arrows; ++a) {
      Arrow arrow;
      arrow.name = "a" + std::to_string(a);
      arrow.src = std::uint32_t(pick(rng, 0, params.vertices - 1));
      arrow.tgt = std::uint32_t(pick(rng, 0, params.vertices - 1));
      doc.arrows.push_back(std::move(arrow));
    }
    Quiver q = doc.quiver();
    PathIndexer ix(q, doc.s);
    std::uint32_t rel_count = std::uint32_t(pick(rng, params.relations_min, params.relations_max));
    if (ix.count() == 0) rel_count = 0;  // no degree-s paths at all
    for (std::uint32_t r = 0; r < rel_count; ++r) {
      std::vector<DocTerm> rel;
      std::uint64_t anchor = pick(rng, 0, ix.count() - 1);
      auto anchor_block = ix.block_of(anchor);
      bool monomial = pick(rng, 1, 100) <= params.monomial_bias_percent;
      auto push_term = [&](std::uint64_t rank, long coeff) {
        DocTerm term;
        term.coeff = std::to_string(coeff);
        for (auto a : ix.unrank(rank)) term.path.push_back(q.arrows[a].name);
        rel.push_back(std::move(term));
      };
      if (monomial) {
        push_term(anchor, 1);
      } else {
        std::uint32_t terms = std::uint32_t(pick(rng, 2, 4));
        push_term(anchor, long(pick(rng, 1, 2)));
        for (std::uint32_t t = 1; t < terms; ++t) {
          // stay in the anchor's endpoint block so rows are block pure
          for (std::uint32_t attempt = 0; attempt < 16; ++attempt) {
            std::uint64_t cand = pick(rng, 0, ix.count() - 1);
            if (ix.block_of(cand) == anchor_block) {
              long coeff = long(pick(rng, 1, 4)) - 2;  // -1, 0, 1, 2
              if (coeff != 0) push_term(cand, coeff);
              break;
            }
          }
        }
      }
      doc.relations.push_back(std::move(rel));
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace homkoszul
