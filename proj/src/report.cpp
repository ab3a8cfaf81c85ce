#include "homkoszul/report.hpp"

#include <chrono>
#include <nlohmann/json.hpp>

#include "homkoszul/hilbert.hpp"
#include "homkoszul/triples.hpp"

namespace homkoszul {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

json series_json(const MatSeries& s) {
  json out = json::array();
  for (const auto& c : s.coeff) out.push_back(c);
  return out;
}

template <class F>
json verdict_json(const AlgebraView<F>& view, const typename KoszulComplex<F>::Verdict& v) {
  json out;
  switch (v.status) {
    case KoszulComplex<F>::Status::s_koszul_up_to_bounds:
      out["status"] = "s_koszul_up_to_bounds";
      break;
    case KoszulComplex<F>::Status::not_s_koszul_certified:
      out["status"] = "not_s_koszul_certified";
      break;
    case KoszulComplex<F>::Status::inconclusive:
      out["status"] = "inconclusive";
      break;
  }
  out["hom_bound"] = v.hom_bound;
  out["degree_bound"] = v.degree_bound;
  if (!v.notes.empty()) out["notes"] = v.notes;
  if (v.witness) {
    json w;
    w["hom_index"] = v.witness->hom_index;
    w["degree"] = v.witness->degree;
    json cyc = json::array();
    for (const auto& [ri, word, coeff] : v.witness->cycle) {
      json entry;
      entry["corelation_row"] = ri;
      entry["word"] = word_str(view.quiver(), word);
      entry["coeff"] = coeff;
      cyc.push_back(entry);
    }
    w["cycle"] = cyc;
    out["witness"] = w;
  }
  return out;
}

template <class F>
json check_command(const F& field, const PresentationDocument& doc, const RunBounds& bounds) {
  Budget budget = Budget::from_env();
  auto pres = build_presentation(field, doc, budget);
  AlgebraView<F> view(field, pres, budget);
  std::uint32_t N = bounds.max_deg ? bounds.max_deg : 4 * pres.s;
  std::uint32_t H = bounds.hom_bound;
  json results = json::array();

  KoszulComplex<F> kc(view);
  auto verdict = kc.verdict(H, N);
  results.push_back(
      json{{"name", "s_koszul_verdict"},
           {"status", verdict_json<F>(view, verdict)["status"]},
           {"data", verdict_json<F>(view, verdict)}});

  try {
    bool ec = extra_condition(view);
    auto range = extra_condition_range(view);
    results.push_back(json{{"name", "extra_condition"},
                           {"status", ec ? "true" : "false"},
                           {"data", json{{"range", range}}}});
  } catch (const Error& e) {
    if (e.kind != ErrorKind::ResourceLimit) throw;
    results.push_back(json{{"name", "extra_condition"}, {"status", "resource_limited"}});
  }

  {
    std::uint32_t kmax = bounds.berger_k ? bounds.berger_k : 2 * pres.s;
    auto table = berger_conditions(view, BergerKind::distributivity, bounds.berger_n, kmax);
    bool any_false = false, any_unknown = false;
    for (const auto& row : table)
      for (int c : row) {
        any_false |= c == 0;
        any_unknown |= c < 0;
      }
    results.push_back(json{{"name", "distributivity"},
                           {"status", any_false   ? "has_false"
                                      : any_unknown ? "partial"
                                                    : "all_true"},
                           {"data", json{{"table", table}}}});
  }

  try {
    MatSeries res = bs_identity_residual(view, N);
    json data;
    data["first_nonzero"] = res.first_nonzero();
    data["series"] = series_json(res);
    results.push_back(json{{"name", "bs_residual"},
                           {"status", res.is_zero() ? "zero" : "nonzero"},
                           {"data", data}});
  } catch (const Error& e) {
    if (e.kind != ErrorKind::ResourceLimit) throw;
    results.push_back(json{{"name", "bs_residual"}, {"status", "resource_limited"}});
  }
  return results;
}

template <class F>
json dual_command(const F& field, const PresentationDocument& doc) {
  Budget budget = Budget::from_env();
  auto pres = build_presentation(field, doc, budget);
  auto dual = shriek_presentation(field, pres, budget);
  PresentationDocument out = document_of(field, dual, doc.field);
  json results = json::array();
  results.push_back(json{{"name", "dual_presentation"},
                         {"status", "ok"},
                         {"data", json::parse(out.to_json())}});
  return results;
}

template <class F>
json triple_command(const F& field, const PresentationDocument& doc, const RunBounds& bounds) {
  Budget budget = Budget::from_env();
  auto pres = build_presentation(field, doc, budget);
  AlgebraView<F> view(field, pres, budget);
  std::uint32_t trunc = bounds.triple_trunc ? bounds.triple_trunc : 3;
  auto t = triple_of(view, trunc);
  TripleOps<F> ops(field, t, budget);
  json results = json::array();
  json dims;
  json a_dims = json::array(), m_dims = json::array();
  for (std::uint32_t i = 0; i <= t.N; ++i) {
    a_dims.push_back(t.a_dim(i));
    m_dims.push_back(t.m_dim(i));
  }
  dims["A"] = a_dims;
  dims["M"] = m_dims;
  results.push_back(json{{"name", "components"}, {"status", "ok"}, {"data", dims}});

  std::uint32_t ax_deg = t.N >= 2 ? t.N - 2 : 0;
  auto rep = ops.axioms_check(ax_deg);
  json ax = json::array();
  for (std::size_t a = 0; a < rep.axioms.size(); ++a) {
    json cells = json::array();
    for (const auto& c : rep.axioms[a]) {
      std::string st = c.status == CellStatus::pass   ? "pass"
                       : c.status == CellStatus::fail ? "fail"
                                                      : "uncomputable";
      cells.push_back(json{{"degree", c.degree}, {"status", st}});
    }
    ax.push_back(cells);
  }
  results.push_back(json{{"name", "axioms"},
                         {"status", rep.all_computed_pass() ? "pass" : "fail"},
                         {"data", json{{"cells", ax}}}});

  try {
    auto sdims = ops.splitting_summand(ax_deg);
    results.push_back(
        json{{"name", "splitting_summand"}, {"status", "ok"}, {"data", json{{"dims", sdims}}}});
  } catch (const Error& e) {
    if (e.kind == ErrorKind::SplittingViolation)
      results.push_back(json{{"name", "splitting_summand"}, {"status", "violation"}});
    else if (e.kind == ErrorKind::ResourceLimit)
      results.push_back(json{{"name", "splitting_summand"}, {"status", "resource_limited"}});
    else
      throw;
  }

  auto witness = ops.degree_zero_summand();
  json dz;
  dz["present"] = witness.has_value();
  if (witness) {
    json coords = json::array();
    for (std::size_t u = 0; u < witness->nnz(); ++u)
      coords.push_back(json::array({witness->idx[u], field.to_string(witness->val[u])}));
    dz["witness"] = coords;
  }
  results.push_back(json{{"name", "degree_zero_summand"},
                         {"status", witness ? "present" : "none"},
                         {"data", dz}});

  auto back = ops.g_functor();
  bool round_trip = back == pres;
  results.push_back(json{{"name", "g_round_trip"},
                         {"status", round_trip ? "equal" : "different"},
                         {"data", json{{"bit_equal", round_trip}}}});

  auto [lin_l, lin_r] = ops.linearity_report(std::min(t.N, 3u));
  results.push_back(json{{"name", "linear_until_first_degree"},
                         {"status", lin_l && lin_r ? "pass" : "fail"},
                         {"data", json{{"left", lin_l}, {"right", lin_r}}}});
  return results;
}

template <class F>
json hilbert_command(const F& field, const PresentationDocument& doc, const RunBounds& bounds) {
  Budget budget = Budget::from_env();
  auto pres = build_presentation(field, doc, budget);
  AlgebraView<F> view(field, pres, budget);
  require(bounds.terms >= 1, ErrorKind::InputError, "terms must be positive");
  // N coefficients cover degrees 0..N-1
  MatSeries h = hilbert(view, bounds.terms - 1);
  json results = json::array();
  results.push_back(
      json{{"name", "hilbert_series"}, {"status", "ok"}, {"data", series_json(h)}});
  return results;
}

template <class F>
json dispatch(const F& field, const PresentationDocument& doc, const std::string& command,
              const RunBounds& bounds) {
  if (command == "check") return check_command(field, doc, bounds);
  if (command == "dual") return dual_command(field, doc);
  if (command == "triple") return triple_command(field, doc, bounds);
  if (command == "hilbert") return hilbert_command(field, doc, bounds);
  throw Error(ErrorKind::InputError, "unknown command: " + command);
}

json bounds_json(const RunBounds& b, std::uint32_t s) {
  json j;
  j["hom_bound"] = b.hom_bound;
  j["max_deg"] = b.max_deg ? b.max_deg : 4 * s;
  j["terms"] = b.terms;
  j["berger_n"] = b.berger_n;
  j["berger_k"] = b.berger_k ? b.berger_k : 2 * s;
  return j;
}

}  // namespace

std::string run_report(const PresentationDocument& doc, const std::string& command,
                       const RunBounds& bounds, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  PresentationDocument effective = doc;
  if (options.field_override) effective.field = *options.field_override;
  json report;
  report["input"] = json::parse(effective.to_json());
  report["input_hash"] = fnv1a64(effective.to_json());
  report["command"] = command;
  report["bounds"] = bounds_json(bounds, effective.s);
  if (effective.field.kind == FieldDesc::QQ) {
    RationalField field;
    report["results"] = dispatch(field, effective, command, bounds);
  } else {
    PrimeField field(effective.field.p);
    report["results"] = dispatch(field, effective, command, bounds);
  }
  if (options.with_timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    report["wall_ms"] = ms;
  }
  return report.dump(2);
}

std::string run_corpus_report(const RunBounds& bounds, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  auto docs = random_corpus(options.seed, options.count, options.corpus_params);
  json report;
  json list = json::array();
  for (const auto& d : docs) list.push_back(json::parse(d.to_json()));
  std::string canonical = list.dump();
  report["input_hash"] = fnv1a64(canonical);
  report["command"] = "corpus";
  const CorpusParams& cp = options.corpus_params;
  report["bounds"] = json{{"seed", options.seed},
                          {"count", options.count},
                          {"s_min", cp.s_min},
                          {"s_max", cp.s_max},
                          {"arrows_min", cp.arrows_min},
                          {"arrows_max", cp.arrows_max},
                          {"relations_min", cp.relations_min},
                          {"relations_max", cp.relations_max},
                          {"vertices", cp.vertices},
                          {"field", cp.field.str()},
                          {"monomial_bias_percent", cp.monomial_bias_percent}};
  report["results"] =
      json::array({json{{"name", "documents"}, {"status", "ok"}, {"data", list}}});
  if (options.with_timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    report["wall_ms"] = ms;
  }
  (void)bounds;
  return report.dump(2);
}

}  // namespace homkoszul
