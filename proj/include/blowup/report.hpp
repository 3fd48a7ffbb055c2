#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "blowup/io.hpp"
#include "blowup/monomial.hpp"

namespace blowup {

struct AnalyzeOptions {
  std::int64_t n_max = 6;
  std::int64_t hilbert_n_max = 12;
  std::int64_t hilbert_cap = 40;
};

struct Analysis {
  io::Json report;
  /// Theorem-level contradictions; non-empty means an implementation bug.
  std::vector<std::string> violations;
};

/// Full pipeline for one ideal. Without an explicit q, the pure powers of I
/// are used when they form a reduction; otherwise the chain and k sections
/// are null. An explicit q must be a three-generated reduction.
Analysis analyze(const MonomialIdeal& ideal, const std::optional<MonomialIdeal>& q, const AnalyzeOptions& opts = {});

/// CSV "n,L" table of normal Hilbert samples.
std::string samples_csv(const io::Json& report);

struct SuiteResult {
  io::Json summary;
  /// (file stem, report) for every instance that parsed.
  std::vector<std::pair<std::string, io::Json>> reports;
  /// 0 clean, 1 violation found, 2 input errors only.
  int exit_code = 0;
};

SuiteResult verify_suite(const std::filesystem::path& corpus_dir, const AnalyzeOptions& opts, unsigned jobs = 1);

/// {"error": {"kind": ..., "message": ...}}.
io::Json error_object(const std::string& kind, const std::string& message);

}  // namespace blowup
