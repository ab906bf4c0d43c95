#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tnncert/certifier.hpp"
#include "tnncert/core.hpp"
#include "tnncert/restricted_growth.hpp"

namespace tnncert {

/// Certificate document, version 1. Rationals are JSON strings "p" or "p/q"
/// in lowest terms; indices are JSON integers.
///
///   {
///     "schema":  "tnncert/certificate",
///     "version": 1,
///     "verdict": "TNN" | "NOT_TNN",
///     "n":       <int>,
///     "a":       [<rational>; n],
///     "e":       [<rational>; n],
///     "matrix":  [[<rational>; n+1]; n+1],      M_{e->a}, rows 0..n
///     "network": [[<rational>; m] for m=1..n],  weight [m,k] at network[m-1][k-1]
///     "witness": {                              NOT_TNN only
///       "rows": [lo, hi], "cols": [lo, hi],     inclusive intervals
///       "marked_edges": [[m, k], ...],
///       "minor": <rational>
///     }
///   }
inline constexpr std::string_view kCertificateSchema = "tnncert/certificate";
inline constexpr int kCertificateVersion = 1;

/// A certificate together with the matrix it makes a claim about.
struct CertificateRecord {
  Certificate certificate;
  CobMatrix matrix;
};

CertificateRecord make_record(const Certificate& certificate);

nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const CobMatrix& matrix);
nlohmann::json to_json(const WeightArray& array);
nlohmann::json to_json(const RgReport& report);
nlohmann::json to_json(const CertificateRecord& record);

/// Throws MalformedCertificate on any schema violation.
CertificateRecord record_from_json(const nlohmann::json& doc);

std::string serialize_certificate(const CertificateRecord& record);
CertificateRecord parse_certificate(std::string_view text);

/// Reads {"a": [...], "e": [...]} with rationals as strings or integers.
/// Throws InputError.
SequencePair sequence_pair_from_json(const nlohmann::json& doc);

struct VerifyResult {
  bool valid = true;
  std::vector<std::string> problems;
};

/// Recomputes M_{e->a} from the recorded input and checks every claim of
/// the record against it: the stored matrix, the network's path matrix,
/// the sign conditions of the verdict, and for NOT_TNN the marked edges and
/// the minor value.
VerifyResult verify_certificate(const CertificateRecord& record);

}  // namespace tnncert
