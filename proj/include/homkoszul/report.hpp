// Command orchestration and machine-readable reports. A report is a JSON
// object {input_hash, command, bounds, results, wall_ms}; with timing
// suppressed, reruns over equal input and bounds are bit-identical.
#pragma once

#include <optional>

#include "homkoszul/corpus.hpp"

namespace homkoszul {

struct RunBounds {
  std::uint32_t hom_bound = 6;
  std::uint32_t max_deg = 0;   // 0 means the default 4s
  std::uint32_t terms = 8;     // hilbert coefficient count
  std::uint32_t berger_n = 1;  // dc table bounds in the check command
  std::uint32_t berger_k = 0;  // 0 means 2s
  std::uint32_t triple_trunc = 0;  // 0 means max(2, ...) from max_deg
};

struct RunOptions {
  bool with_timing = true;
  std::optional<FieldDesc> field_override;
  std::uint64_t seed = 0;          // corpus
  std::uint32_t count = 1;         // corpus
  CorpusParams corpus_params;
};

std::uint64_t fnv1a64(const std::string& data);

// Executes `command` in {check, dual, triple, hilbert} on the document and
// returns the serialized report.
std::string run_report(const PresentationDocument& doc, const std::string& command,
                       const RunBounds& bounds, const RunOptions& options);

// The corpus command does not take a document.
std::string run_corpus_report(const RunBounds& bounds, const RunOptions& options);

}  // namespace homkoszul
