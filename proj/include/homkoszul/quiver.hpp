// Quivers over O = k^D with a fixed idempotent basis e_1..e_D, and the path
// bases of the tensor powers U^{(x)n}. Paths of a fixed length are ordered
// degree-lexicographically by arrow index; a PathIndexer ranks and unranks
// words in that order without materializing the basis, so tensor ambients of
// a few hundred thousand words stay cheap to address.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homkoszul/field.hpp"

namespace homkoszul {

using Word = std::vector<std::uint32_t>;  // arrow indices

struct Arrow {
  std::string name;
  std::uint32_t src = 0;  // 0-based vertex
  std::uint32_t tgt = 0;
};

struct Quiver {
  std::uint32_t vertex_count = 1;
  std::vector<Arrow> arrows;

  void validate() const;
  std::size_t arrow_count() const { return arrows.size(); }

  // Endpoints of a path; length-0 paths are the idempotents e_v themselves.
  std::uint32_t path_source(const Word& w, std::uint32_t idempotent = 0) const {
    return w.empty() ? idempotent : arrows[w.front()].src;
  }
  std::uint32_t path_target(const Word& w, std::uint32_t idempotent = 0) const {
    return w.empty() ? idempotent : arrows[w.back()].tgt;
  }
  bool is_path(const Word& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (arrows[w[i]].tgt != arrows[w[i + 1]].src) return false;
    return true;
  }

  // The opposite quiver with arrows reversed; arrow order is kept so the
  // double dual is the identity on indices. A trailing '*' alternates.
  Quiver dual() const;

  bool operator==(const Quiver& o) const;
};

// Rank/unrank of length-n paths in degree-lex order by arrow index.
class PathIndexer {
 public:
  PathIndexer(const Quiver& q, std::uint32_t n);

  std::uint64_t count() const { return total_; }
  std::uint32_t degree() const { return n_; }

  std::uint64_t rank(const Word& w) const;
  Word unrank(std::uint64_t r) const;

  // Endpoint block of the basis element (works for n = 0 idempotents too).
  std::pair<std::uint32_t, std::uint32_t> block_of(std::uint64_t r) const;

 private:
  const Quiver& q_;
  std::uint32_t n_;
  std::uint64_t total_;
  // suffix_[k][v] = number of paths of length k starting at vertex v
  std::vector<std::vector<std::uint64_t>> suffix_;
};

struct PathBasis {
  std::uint32_t n = 0;
  std::vector<Word> words;  // canonical order; empty words are idempotents
};

// Complete, duplicate-free, endpoint-consistent path list in canonical order.
PathBasis enumerate_paths(const Quiver& q, std::uint32_t n, std::uint64_t max_count = 2'000'000);

std::uint64_t path_count(const Quiver& q, std::uint32_t n);

std::string word_str(const Quiver& q, const Word& w);

}  // namespace homkoszul
