#include "homkoszul/document.hpp"

#include <nlohmann/json.hpp>

#include "homkoszul/exact.hpp"

namespace homkoszul {

using nlohmann::json;

Quiver PresentationDocument::quiver() const {
  Quiver q;
  q.vertex_count = vertices;
  q.arrows = arrows;
  return q;
}

std::string PresentationDocument::to_json() const {
  json j;
  j["version"] = version;
  j["field"] = field.str();
  j["vertices"] = vertices;
  json as = json::array();
  for (const auto& a : arrows)
    as.push_back(json{{"name", a.name}, {"src", a.src + 1}, {"tgt", a.tgt + 1}});
  j["arrows"] = as;
  j["s"] = s;
  json rels = json::array();
  for (const auto& rel : relations) {
    json terms = json::array();
    for (const auto& t : rel) terms.push_back(json::array({t.coeff, t.path}));
    rels.push_back(terms);
  }
  j["relations"] = rels;
  return j.dump(2);
}

PresentationDocument PresentationDocument::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InputError, std::string("document is not valid JSON: ") + e.what());
  }
  PresentationDocument doc;
  try {
    doc.version = j.value("version", 1);
    doc.field = FieldDesc::parse(j.at("field").get<std::string>());
    doc.vertices = j.at("vertices").get<std::uint32_t>();
    require(doc.vertices >= 1, ErrorKind::InputError, "vertex count must be positive");
    for (const auto& a : j.at("arrows")) {
      Arrow arrow;
      arrow.name = a.at("name").get<std::string>();
      std::uint32_t src = a.at("src").get<std::uint32_t>();
      std::uint32_t tgt = a.at("tgt").get<std::uint32_t>();
      require(src >= 1 && src <= doc.vertices && tgt >= 1 && tgt <= doc.vertices,
              ErrorKind::BadEndpoint, "arrow endpoint out of range: " + arrow.name);
      arrow.src = src - 1;
      arrow.tgt = tgt - 1;
      for (const auto& other : doc.arrows)
        require(other.name != arrow.name, ErrorKind::DuplicateArrow,
                "duplicate arrow name: " + arrow.name);
      doc.arrows.push_back(std::move(arrow));
    }
    doc.s = j.at("s").get<std::uint32_t>();
    require(doc.s >= 2, ErrorKind::BadDegree, "relation degree s must be at least 2");
    for (const auto& rel : j.at("relations")) {
      std::vector<DocTerm> terms;
      for (const auto& t : rel) {
        require(t.is_array() && t.size() == 2, ErrorKind::InputError,
                "relation term must be [coefficient, path]");
        DocTerm term;
        term.coeff = t.at(0).get<std::string>();
        for (const auto& p : t.at(1)) term.path.push_back(p.get<std::string>());
        require(term.path.size() == doc.s, ErrorKind::BadDegree,
                "relation path length differs from s");
        terms.push_back(std::move(term));
      }
      doc.relations.push_back(std::move(terms));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InputError, std::string("malformed document: ") + e.what());
  }
  // coefficient syntax against the declared field
  for (const auto& rel : doc.relations)
    for (const auto& term : rel) scalar_parse(doc.field, term.coeff);
  // endpoint consistency of every path
  Quiver q = doc.quiver();
  q.validate();
  std::map<std::string, std::uint32_t> arrow_index;
  for (std::uint32_t a = 0; a < q.arrows.size(); ++a) arrow_index[q.arrows[a].name] = a;
  for (const auto& rel : doc.relations)
    for (const auto& term : rel) {
      Word w;
      for (const auto& name : term.path) {
        auto it = arrow_index.find(name);
        require(it != arrow_index.end(), ErrorKind::InputError, "unknown arrow: " + name);
        w.push_back(it->second);
      }
      require(q.is_path(w), ErrorKind::BadEndpoint,
              "relation term is not a path: " + word_str(q, w));
    }
  return doc;
}

}  // namespace homkoszul
