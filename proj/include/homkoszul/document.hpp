// The presentation document: the on-disk JSON encoding of a quiver with
// s-homogeneous relations over an exact coefficient field. Coefficients are
// exact literals ("p/q" over QQ, decimal residues over GF:p); every relation
// term is a path of length exactly s with matching endpoints. Vertices are
// 1-based in the document and 0-based in memory.
#pragma once

#include <string>
#include <vector>

#include "homkoszul/algebra.hpp"

namespace homkoszul {

struct DocTerm {
  std::string coeff;
  std::vector<std::string> path;  // arrow names
};

struct PresentationDocument {
  int version = 1;
  FieldDesc field = FieldDesc::rationals();
  std::uint32_t vertices = 1;
  std::vector<Arrow> arrows;
  std::uint32_t s = 2;
  std::vector<std::vector<DocTerm>> relations;

  Quiver quiver() const;
  // Canonical serialization: fixed key order, no whitespace surprises.
  std::string to_json() const;

  static PresentationDocument parse(const std::string& text);
};

// Resolves terms against the quiver and canonicalizes the relation span.
template <class F>
RelPresentation<F> build_presentation(const F& field, const PresentationDocument& doc,
                                      const Budget& budget = Budget::from_env()) {
  Quiver q = doc.quiver();
  q.validate();
  PathIndexer ix(q, doc.s);
  budget.check_ambient(ix.count());
  std::map<std::string, std::uint32_t> arrow_index;
  for (std::uint32_t a = 0; a < q.arrows.size(); ++a) arrow_index[q.arrows[a].name] = a;
  std::vector<SparseVec<F>> rows;
  for (const auto& rel : doc.relations) {
    std::vector<std::pair<std::uint64_t, typename F::Elem>> entries;
    for (const auto& term : rel) {
      require(term.path.size() == doc.s, ErrorKind::BadDegree,
              "relation term has length " + std::to_string(term.path.size()) +
                  ", expected " + std::to_string(doc.s));
      Word w;
      for (const auto& name : term.path) {
        auto it = arrow_index.find(name);
        require(it != arrow_index.end(), ErrorKind::InputError, "unknown arrow: " + name);
        w.push_back(it->second);
      }
      require(q.is_path(w), ErrorKind::BadEndpoint,
              "relation term is not a path: " + word_str(q, w));
      entries.emplace_back(ix.rank(w), field.parse(term.coeff));
    }
    rows.push_back(make_sparse(field, std::move(entries)));
  }
  RelPresentation<F> pres{std::move(q), doc.s, row_space(field, ix.count(), rows, budget)};
  pres.validate();
  return pres;
}

// Serializes a presentation back into a document (used by the dual command).
template <class F>
PresentationDocument document_of(const F& field, const RelPresentation<F>& pres,
                                 const FieldDesc& fd) {
  PresentationDocument doc;
  doc.field = fd;
  doc.vertices = pres.quiver.vertex_count;
  doc.arrows = pres.quiver.arrows;
  doc.s = pres.s;
  PathIndexer ix(pres.quiver, pres.s);
  for (const auto& row : pres.relations.rows) {
    std::vector<DocTerm> rel;
    for (std::size_t t = 0; t < row.nnz(); ++t) {
      Word w = ix.unrank(row.idx[t]);
      DocTerm term;
      term.coeff = field.to_string(row.val[t]);
      for (auto a : w) term.path.push_back(pres.quiver.arrows[a].name);
      rel.push_back(std::move(term));
    }
    doc.relations.push_back(std::move(rel));
  }
  return doc;
}

}  // namespace homkoszul
