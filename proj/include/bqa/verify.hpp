#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bqa/enumerate.hpp"
#include "bqa/homological.hpp"

namespace bqa {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Suite { MainTheorem, CrossChecks, Qf2Chain, Yamagata, Morita };

std::optional<Suite> parse_suite(const std::string& name);
std::string to_string(Suite s);

struct VerifyOptions {
  CorpusBounds bounds;
  std::size_t max_n = 3;
  std::size_t max_c = 4;
  unsigned workers = 1;
  /// Wall-clock budget; a run that exceeds it stops and is marked incomplete.
  std::optional<double> budget_seconds;
  std::size_t domdim_cutoff = kDefaultDomDimCutoff;
};

struct Counterexample {
  std::string check;
  std::string algebra;  // canonical form, or Kupisch series plus summands
  std::string detail;

  friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, std::size_t> bounds;
  std::map<std::string, std::size_t> counts;
  std::vector<Counterexample> counterexamples;  // sorted
  /// Set-valued results (e.g. Kupisch series sets compared for equality).
  std::map<std::string, std::vector<std::string>> sets;
  bool complete = true;
  double wall_seconds = 0;

  [[nodiscard]] bool passed() const { return complete && counterexamples.empty(); }
  [[nodiscard]] std::size_t failures(const std::string& check) const;

  /// JSON with sorted keys. Wall time is included only when requested, so
  /// that reports of equal runs are byte-identical.
  [[nodiscard]] std::string to_json(bool with_timing = false) const;
  [[nodiscard]] std::string to_csv() const;
};

VerificationReport verify(Suite suite, const VerifyOptions& options);

/// Writes `content` to a sibling temporary file and renames it into place.
void write_file_atomically(const std::string& path, const std::string& content);

struct PaperExampleSummary {
  DomDim domdim;
  bool nakayama = false;
  bool qf2_right = false;
  bool qf2_both = false;
  std::vector<Vertex> faithful_right;  // 0-based
  std::vector<Vertex> faithful_left;
  std::size_t base_dimension = 0;
  std::string base_description;
  bool double_centralizer = false;

  [[nodiscard]] std::string to_text() const;
  [[nodiscard]] std::string to_json() const;
};

PaperExampleSummary paper_example();

}  // namespace bqa
