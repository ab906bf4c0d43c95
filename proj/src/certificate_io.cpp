#include "tnncert/certificate_io.hpp"

#include "tnncert/matrix_builder.hpp"

namespace tnncert {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedCertificate(what); }

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) malformed(std::string("missing field '") + name + "'");
  return obj.at(name);
}

Rational rational_from(const json& value, const char* context) {
  try {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
  } catch (const InputError& e) {
    malformed(std::string(context) + ": " + e.what());
  }
  malformed(std::string(context) + ": expected a rational string");
}

std::size_t index_from(const json& value, const char* context) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long>() >= 0)) {
    malformed(std::string(context) + ": expected a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::vector<Rational> rational_list(const json& value, const char* context) {
  if (!value.is_array()) malformed(std::string(context) + ": expected an array");
  std::vector<Rational> out;
  for (const auto& item : value) out.push_back(rational_from(item, context));
  return out;
}

std::pair<std::size_t, std::size_t> interval_from(const json& value, const char* context) {
  if (!value.is_array() || value.size() != 2) malformed(std::string(context) + ": expected [lo, hi]");
  const auto lo = index_from(value[0], context);
  const auto hi = index_from(value[1], context);
  if (hi < lo) malformed(std::string(context) + ": hi < lo");
  return {lo, hi};
}

std::string edge_string(const EdgePos& e) {
  return "[" + std::to_string(e.row) + "," + std::to_string(e.col) + "]";
}

}  // namespace

CertificateRecord make_record(const Certificate& certificate) {
  return CertificateRecord{certificate, build_matrix(certificate.input)};
}

json to_json(const Rational& value) { return value.to_string(); }

json to_json(const CobMatrix& matrix) {
  json rows = json::array();
  for (std::size_t m = 0; m <= matrix.n(); ++m) {
    json row = json::array();
    for (std::size_t k = 0; k <= matrix.n(); ++k) row.push_back(to_json(matrix.at(m, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const WeightArray& array) {
  json rows = json::array();
  for (std::size_t m = 1; m <= array.n(); ++m) {
    json row = json::array();
    for (std::size_t k = 1; k <= m; ++k) row.push_back(to_json(array.at(m, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const RgReport& report) {
  json trace = json::array();
  for (const auto& step : report.trace) {
    json x = json::array();
    for (const auto& v : step.x_before) x.push_back(to_json(v));
    json item{{"i", step.i}, {"x", std::move(x)}, {"action", std::string(to_string(step.action))}};
    if (step.matched_position) item["position"] = *step.matched_position;
    trace.push_back(std::move(item));
  }
  return json{{"report", report.report},
              {"accepted", report.accepted},
              {"comparisons", report.comparisons},
              {"trace", std::move(trace)}};
}

json to_json(const CertificateRecord& record) {
  const Certificate& cert = record.certificate;
  json a = json::array();
  json e = json::array();
  for (const auto& v : cert.input.a_values()) a.push_back(to_json(v));
  for (const auto& v : cert.input.e_values()) e.push_back(to_json(v));
  json doc{{"schema", std::string(kCertificateSchema)},
           {"version", kCertificateVersion},
           {"verdict", std::string(to_string(cert.verdict))},
           {"n", cert.input.n()},
           {"a", std::move(a)},
           {"e", std::move(e)},
           {"matrix", to_json(record.matrix)},
           {"network", to_json(cert.final_array())}};
  if (cert.verdict == Verdict::not_tnn) {
    const auto& w = cert.negative();
    json marked = json::array();
    for (const auto& edge : w.marked_edges) marked.push_back(json::array({edge.row, edge.col}));
    doc["witness"] = json{{"rows", json::array({w.row_lo, w.row_lo + w.size - 1})},
                          {"cols", json::array({w.col_lo, w.col_lo + w.size - 1})},
                          {"marked_edges", std::move(marked)},
                          {"minor", to_json(w.minor_value)}};
  }
  return doc;
}

CertificateRecord record_from_json(const json& doc) {
  if (!doc.is_object()) malformed("certificate must be a JSON object");
  const auto& schema = field(doc, "schema");
  if (!schema.is_string() || schema.get<std::string>() != kCertificateSchema) {
    malformed("unknown schema");
  }
  if (field(doc, "version") != kCertificateVersion) malformed("unsupported version");

  const auto& verdict_field = field(doc, "verdict");
  Verdict verdict;
  if (verdict_field == "TNN") {
    verdict = Verdict::tnn;
  } else if (verdict_field == "NOT_TNN") {
    verdict = Verdict::not_tnn;
  } else {
    malformed("verdict must be TNN or NOT_TNN");
  }

  const std::size_t n = index_from(field(doc, "n"), "n");
  auto a = rational_list(field(doc, "a"), "a");
  auto e = rational_list(field(doc, "e"), "e");
  if (n == 0 || a.size() != n || e.size() != n) malformed("a and e must both have length n >= 1");
  SequencePair pair(std::move(a), std::move(e));

  const auto& matrix_json = field(doc, "matrix");
  if (!matrix_json.is_array() || matrix_json.size() != n + 1) malformed("matrix must have n+1 rows");
  CobMatrix matrix(n);
  for (std::size_t m = 0; m <= n; ++m) {
    const auto row = rational_list(matrix_json[m], "matrix");
    if (row.size() != n + 1) malformed("matrix rows must have n+1 entries");
    for (std::size_t k = 0; k <= n; ++k) matrix.at(m, k) = row[k];
  }

  const auto& network_json = field(doc, "network");
  if (!network_json.is_array() || network_json.size() != n) malformed("network must have n rows");
  WeightArray array(n);
  for (std::size_t m = 1; m <= n; ++m) {
    const auto row = rational_list(network_json[m - 1], "network");
    if (row.size() != m) malformed("network row " + std::to_string(m) + " must have m entries");
    for (std::size_t k = 1; k <= m; ++k) array.at(m, k) = row[k - 1];
  }

  if (verdict == Verdict::tnn) {
    if (doc.contains("witness")) malformed("TNN certificate must not carry a negative-minor witness");
    return CertificateRecord{Certificate{verdict, std::move(pair), PositiveNetwork{std::move(array)}},
                             std::move(matrix)};
  }

  const auto& w = field(doc, "witness");
  const auto [row_lo, row_hi] = interval_from(field(w, "rows"), "witness.rows");
  const auto [col_lo, col_hi] = interval_from(field(w, "cols"), "witness.cols");
  if (row_hi - row_lo != col_hi - col_lo) malformed("witness rows and cols differ in length");
  const auto& marked_json = field(w, "marked_edges");
  if (!marked_json.is_array()) malformed("marked_edges must be an array");
  std::vector<EdgePos> marked;
  for (const auto& edge : marked_json) {
    if (!edge.is_array() || edge.size() != 2) malformed("marked edge must be [m, k]");
    marked.push_back({index_from(edge[0], "marked_edges"), index_from(edge[1], "marked_edges")});
  }
  NegativeMinorWitness witness{row_lo,           col_lo, row_hi - row_lo + 1, std::move(marked),
                               std::move(array), rational_from(field(w, "minor"), "minor")};
  return CertificateRecord{Certificate{verdict, std::move(pair), std::move(witness)},
                           std::move(matrix)};
}

std::string serialize_certificate(const CertificateRecord& record) {
  return to_json(record).dump(2) + "\n";
}

CertificateRecord parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  try {
    return record_from_json(doc);
  } catch (const json::exception& e) {
    malformed(std::string("invalid certificate: ") + e.what());
  } catch (const InputError& e) {
    malformed(std::string("invalid certificate: ") + e.what());
  }
}

SequencePair sequence_pair_from_json(const json& doc) {
  auto list = [&](const char* name) {
    if (!doc.is_object() || !doc.contains(name) || !doc.at(name).is_array()) {
      throw InputError(std::string("expected an array field '") + name + "'");
    }
    std::vector<Rational> out;
    for (const auto& item : doc.at(name)) {
      if (item.is_string()) {
        out.push_back(Rational::parse(item.get<std::string>()));
      } else if (item.is_number_integer()) {
        out.push_back(Rational(item.get<long>()));
      } else {
        throw InputError(std::string("entries of '") + name + "' must be strings or integers");
      }
    }
    return out;
  };
  return SequencePair(list("a"), list("e"));
}

VerifyResult verify_certificate(const CertificateRecord& record) {
  VerifyResult result;
  auto fail = [&](std::string problem) {
    result.valid = false;
    result.problems.push_back(std::move(problem));
  };

  const Certificate& cert = record.certificate;
  const CobMatrix expected = build_matrix(cert.input);
  if (!(record.matrix == expected)) fail("stored matrix differs from M_{e->a} rebuilt from (a,e)");

  const WeightArray& array = cert.final_array();
  if (array.n() != cert.input.n()) {
    fail("network size does not match n");
    return result;
  }
  if (!(path_matrix(array) == expected)) fail("network path matrix differs from M_{e->a}");

  const bool is_positive = std::holds_alternative<PositiveNetwork>(cert.witness);
  if ((cert.verdict == Verdict::tnn) != is_positive) {
    fail("verdict does not match witness kind");
    return result;
  }

  if (cert.verdict == Verdict::tnn) {
    if (!array.all_non_negative()) fail("TNN network has a negative weight");
    return result;
  }

  const auto& w = cert.negative();
  const std::size_t n = cert.input.n();
  if (w.size == 0 || w.row_lo + w.size - 1 > n || w.col_lo + w.size - 1 > n) {
    fail("witness intervals out of range");
    return result;
  }
  const Rational actual = minor(expected, w.spec());
  if (actual != w.minor_value) {
    fail("claimed minor " + w.minor_value.to_string() + " but determinant is " + actual.to_string());
  }
  if (actual.sign() >= 0) fail("witness minor " + actual.to_string() + " is not negative");

  // Marks: one per witness row, bottom row first, columns strictly
  // decreasing, first edge negative and the rest positive, and the sink
  // interval ending one column left of the negative edge.
  if (w.marked_edges.size() != w.size) {
    fail("expected one marked edge per witness row");
    return result;
  }
  for (std::size_t j = 0; j < w.marked_edges.size(); ++j) {
    const EdgePos& e = w.marked_edges[j];
    if (!array.valid(e.row, e.col)) {
      fail("marked edge " + edge_string(e) + " out of range");
      return result;
    }
    if (e.row != w.row_lo + w.size - 1 - j) fail("marked edge " + edge_string(e) + " on wrong row");
    if (j > 0 && e.col >= w.marked_edges[j - 1].col) {
      fail("marked edge columns must strictly decrease");
    }
    const int sign = array.at(e).sign();
    if (j == 0 ? sign >= 0 : sign <= 0) {
      fail("marked edge " + edge_string(e) + " has the wrong sign");
    }
  }
  if (w.marked_edges.front().col != w.col_lo + w.size) {
    fail("sink interval must end just left of the negative edge");
  }
  return result;
}

}  // namespace tnncert
