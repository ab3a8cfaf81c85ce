#include "homkoszul/quiver.hpp"

#include <algorithm>
#include <set>

namespace homkoszul {

void Quiver::validate() const {
  require(vertex_count >= 1, ErrorKind::InputError, "quiver needs at least one vertex");
  std::set<std::string> names;
  for (const auto& a : arrows) {
    require(!a.name.empty(), ErrorKind::InputError, "arrow with empty name");
    require(names.insert(a.name).second, ErrorKind::DuplicateArrow,
            "duplicate arrow name: " + a.name);
    require(a.src < vertex_count && a.tgt < vertex_count, ErrorKind::InputError,
            "arrow endpoint out of range: " + a.name);
  }
}

Quiver Quiver::dual() const {
  Quiver d;
  d.vertex_count = vertex_count;
  d.arrows.reserve(arrows.size());
  for (const auto& a : arrows) {
    std::string name = a.name;
    if (!name.empty() && name.back() == '*')
      name.pop_back();
    else
      name.push_back('*');
    d.arrows.push_back(Arrow{std::move(name), a.tgt, a.src});
  }
  return d;
}

bool Quiver::operator==(const Quiver& o) const {
  if (vertex_count != o.vertex_count || arrows.size() != o.arrows.size()) return false;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name != o.arrows[i].name || arrows[i].src != o.arrows[i].src ||
        arrows[i].tgt != o.arrows[i].tgt)
      return false;
  return true;
}

PathIndexer::PathIndexer(const Quiver& q, std::uint32_t n) : q_(q), n_(n) {
  suffix_.assign(n + 1, std::vector<std::uint64_t>(q.vertex_count, 0));
  for (std::uint32_t v = 0; v < q.vertex_count; ++v) suffix_[0][v] = 1;
  for (std::uint32_t k = 1; k <= n; ++k)
    for (const auto& a : q.arrows) {
      std::uint64_t add = suffix_[k - 1][a.tgt];
      std::uint64_t& cell = suffix_[k][a.src];
      require(cell <= ~std::uint64_t(0) - add, ErrorKind::ResourceLimit, "path count overflow");
      cell += add;
    }
  if (n == 0) {
    total_ = q.vertex_count;
  } else {
    total_ = 0;
    for (const auto& a : q.arrows) total_ += suffix_[n - 1][a.tgt];
  }
}

std::uint64_t PathIndexer::rank(const Word& w) const {
  if (n_ == 0) return 0;  // caller addresses idempotents directly
  require(w.size() == n_, ErrorKind::InputError, "word length differs from indexer degree");
  std::uint64_t r = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint32_t need_src = i == 0 ? ~0u : q_.arrows[w[i - 1]].tgt;
    for (std::uint32_t a = 0; a < w[i]; ++a)
      if (i == 0 || q_.arrows[a].src == need_src) r += suffix_[n_ - 1 - i][q_.arrows[a].tgt];
    if (i > 0)
      require(q_.arrows[w[i]].src == need_src, ErrorKind::BadEndpoint,
              "word is not a path: " + word_str(q_, w));
  }
  return r;
}

Word PathIndexer::unrank(std::uint64_t r) const {
  Word w;
  w.reserve(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint32_t need_src = i == 0 ? ~0u : q_.arrows[w[i - 1]].tgt;
    bool placed = false;
    for (std::uint32_t a = 0; a < q_.arrows.size(); ++a) {
      if (i > 0 && q_.arrows[a].src != need_src) continue;
      std::uint64_t block = suffix_[n_ - 1 - i][q_.arrows[a].tgt];
      if (r < block) {
        w.push_back(a);
        placed = true;
        break;
      }
      r -= block;
    }
    require(placed, ErrorKind::InputError, "path rank out of range");
  }
  return w;
}

std::pair<std::uint32_t, std::uint32_t> PathIndexer::block_of(std::uint64_t r) const {
  if (n_ == 0) return {std::uint32_t(r), std::uint32_t(r)};
  Word w = unrank(r);
  return {q_.arrows[w.front()].src, q_.arrows[w.back()].tgt};
}

std::uint64_t path_count(const Quiver& q, std::uint32_t n) {
  return PathIndexer(q, n).count();
}

PathBasis enumerate_paths(const Quiver& q, std::uint32_t n, std::uint64_t max_count) {
  PathIndexer ix(q, n);
  require(ix.count() <= max_count, ErrorKind::ResourceLimit,
          "path basis of degree " + std::to_string(n) + " has " + std::to_string(ix.count()) +
              " words, over the cap");
  PathBasis b;
  b.n = n;
  if (n == 0) {
    b.words.assign(q.vertex_count, Word{});
    return b;
  }
  b.words.reserve(std::size_t(ix.count()));
  for (std::uint64_t r = 0; r < ix.count(); ++r) b.words.push_back(ix.unrank(r));
  return b;
}

std::string word_str(const Quiver& q, const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += q.arrows[w[i]].name;
  }
  return s;
}

}  // namespace homkoszul
