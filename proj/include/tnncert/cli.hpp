#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tnncert/core.hpp"
#include "tnncert/matrix_builder.hpp"

namespace tnncert::cli {

enum class Command { build, check, certify, verify, family, render };
enum class OutputFormat { text, json, dot };
enum class VerifyLevel { none, oracle };
enum class RenderStage { initial, final };

/// Process exit codes. NOT_TNN and a rejected restricted-growth check are
/// determinations, not failures, and get their own code.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNotTnn = 2,
  kExitInvalidCertificate = 3,
  kExitInputError = 4,
  kExitSizeGuard = 5,
  kExitMalformedCertificate = 6,
  kExitInternalError = 7,
};

struct JobSpec {
  Command command = Command::certify;
  std::optional<SequencePair> pair;
  std::optional<FamilySpec> family;
  /// Serialized certificate, for Command::verify.
  std::string certificate_text;
  OutputFormat format = OutputFormat::text;
  VerifyLevel verify_level = VerifyLevel::none;
  RenderStage stage = RenderStage::final;
};

/// Comma-separated rationals, e.g. "3, -1/2, 0.25". Throws InputError.
std::vector<Rational> parse_sequence(std::string_view text);

/// Either a JSON object {"a": [...], "e": [...]} or two non-comment lines
/// holding a and e as comma-separated rationals (an optional "a:"/"e:" or
/// "a="/"e=" prefix is allowed). Throws InputError.
SequencePair parse_pair_document(std::string_view text);

/// Runs one job, writing the result to `out` and diagnostics to `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace tnncert::cli
