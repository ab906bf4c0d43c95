#include "tnncert/cli.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "tnncert/certificate_io.hpp"
#include "tnncert/certifier.hpp"
#include "tnncert/oracle.hpp"
#include "tnncert/render.hpp"
#include "tnncert/restricted_growth.hpp"

namespace tnncert::cli {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_label(std::string_view line, char label) {
  line = trim(line);
  if (line.size() >= 2 && std::tolower(static_cast<unsigned char>(line[0])) == label &&
      (line[1] == ':' || line[1] == '=')) {
    line.remove_prefix(2);
  }
  return line;
}

SequencePair job_pair(const JobSpec& job) {
  if (job.pair) return *job.pair;
  if (job.family) return family_sequences(*job.family);
  throw InputError("no input sequences given (use --a/--e, --input or --family)");
}

std::string edges_string(const std::vector<EdgePos>& edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    os << (i ? " " : "") << '[' << edges[i].row << ',' << edges[i].col << ']';
  }
  return os.str();
}

void write_sequence(std::ostream& out, const std::vector<Rational>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
}

json pair_json(const SequencePair& pair) {
  json a = json::array();
  json e = json::array();
  for (const auto& v : pair.a_values()) a.push_back(to_json(v));
  for (const auto& v : pair.e_values()) e.push_back(to_json(v));
  return json{{"a", std::move(a)}, {"e", std::move(e)}};
}

int run_build(const JobSpec& job, std::ostream& out) {
  const CobMatrix matrix = build_matrix(job_pair(job));
  if (job.format == OutputFormat::json) {
    out << json{{"n", matrix.n()}, {"matrix", to_json(matrix)}}.dump(2) << '\n';
  } else {
    out << render_matrix_text(matrix);
  }
  return kExitOk;
}

int run_check(const JobSpec& job, std::ostream& out) {
  const RgReport report = rg_check(job_pair(job));
  if (job.format == OutputFormat::json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    for (const auto& step : report.trace) {
      out << "i=" << step.i << " X=(";
      write_sequence(out, step.x_before);
      out << ") " << to_string(step.action);
      if (step.matched_position) out << " at " << *step.matched_position;
      out << '\n';
    }
    out << "report: " << report.report << '\n';
    out << "accepted: " << (report.accepted ? "yes" : "no") << '\n';
  }
  return report.accepted ? kExitOk : kExitNotTnn;
}

// Re-derives the verdict by independent routes; returns a description of
// the first disagreement, if any.
std::optional<std::string> oracle_cross_check(const SequencePair& pair, const Certificate& cert) {
  const bool tnn = cert.verdict == Verdict::tnn;
  if (rg_check(pair).accepted != tnn) return "restricted-growth scan disagrees with certify";
  if (!(fast_certificate_from_rg(pair) == cert)) return "trace-built certificate differs";
  const CobMatrix matrix = build_matrix(pair);
  if (pair.n() <= kAllMinorsMaxN) {
    if (all_minors_tnn(matrix).has_value() == tnn) return "brute-force minor scan disagrees";
  } else if (pair.n() <= kAndoMaxN) {
    if (ando_tnn(matrix).has_value() == tnn) return "reduced-family minor scan disagrees";
  }
  if (!verify_certificate(make_record(cert)).valid) return "certificate fails verification";
  return std::nullopt;
}

int run_certify(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const SequencePair pair = job_pair(job);
  const Certificate cert = certify(pair);
  if (job.verify_level == VerifyLevel::oracle) {
    if (pair.n() > kAndoMaxN) {
      err << "note: n=" << pair.n() << " above brute-force guard; minor scan skipped\n";
    }
    if (auto problem = oracle_cross_check(pair, cert)) {
      err << "internal error: " << *problem << '\n';
      return kExitInternalError;
    }
  }

  const CertificateRecord record = make_record(cert);
  if (job.format == OutputFormat::json) {
    out << serialize_certificate(record);
  } else if (job.format == OutputFormat::dot) {
    const auto highlight = cert.verdict == Verdict::not_tnn ? cert.negative().marked_edges
                                                            : std::vector<EdgePos>{};
    out << render_network_dot(cert.final_array(), highlight);
  } else {
    out << "verdict: " << to_string(cert.verdict) << '\n';
    out << "n: " << pair.n() << '\n';
    out << "network:\n" << render_array_text(cert.final_array());
    if (cert.verdict == Verdict::not_tnn) {
      const auto& w = cert.negative();
      out << "rows: " << w.row_lo << ".." << w.row_lo + w.size - 1 << '\n';
      out << "cols: " << w.col_lo << ".." << w.col_lo + w.size - 1 << '\n';
      out << "marked: " << edges_string(w.marked_edges) << '\n';
      out << "minor: " << w.minor_value << '\n';
    }
  }
  return cert.verdict == Verdict::tnn ? kExitOk : kExitNotTnn;
}

int run_verify(const JobSpec& job, std::ostream& out) {
  const CertificateRecord record = parse_certificate(job.certificate_text);
  const VerifyResult result = verify_certificate(record);
  if (job.format == OutputFormat::json) {
    out << json{{"valid", result.valid},
                {"verdict", std::string(to_string(record.certificate.verdict))},
                {"problems", result.problems}}
               .dump(2)
        << '\n';
  } else {
    out << (result.valid ? "valid" : "INVALID") << ' ' << to_string(record.certificate.verdict)
        << " certificate\n";
    for (const auto& p : result.problems) out << "  " << p << '\n';
  }
  return result.valid ? kExitOk : kExitInvalidCertificate;
}

int run_family(const JobSpec& job, std::ostream& out) {
  if (!job.family) throw InputError("family command needs a family name and n");
  const SequencePair pair = family_sequences(*job.family);
  if (job.format == OutputFormat::json) {
    json doc = pair_json(pair);
    doc["family"] = std::string(to_string(job.family->kind));
    doc["n"] = pair.n();
    out << doc.dump(2) << '\n';
  } else {
    out << "a=";
    write_sequence(out, pair.a_values());
    out << "\ne=";
    write_sequence(out, pair.e_values());
    out << '\n';
  }
  return kExitOk;
}

int run_render(const JobSpec& job, std::ostream& out) {
  const SequencePair pair = job_pair(job);
  WeightArray array = build_array(pair);
  std::vector<EdgePos> highlight;
  if (job.stage == RenderStage::final) {
    const Certificate cert = certify(pair);
    array = cert.final_array();
    if (cert.verdict == Verdict::not_tnn) highlight = cert.negative().marked_edges;
  }
  if (job.format == OutputFormat::dot) {
    out << render_network_dot(array, highlight);
  } else if (job.format == OutputFormat::json) {
    out << json{{"n", array.n()}, {"network", to_json(array)}}.dump(2) << '\n';
  } else {
    out << render_array_text(array);
  }
  return kExitOk;
}

}  // namespace

std::vector<Rational> parse_sequence(std::string_view text) {
  std::vector<Rational> out;
  text = trim(text);
  if (text.empty()) throw InputError("empty sequence");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

SequencePair parse_pair_document(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    json doc;
    try {
      doc = json::parse(body);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("invalid JSON input: ") + e.what());
    }
    return sequence_pair_from_json(doc);
  }
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto line = trim(text.substr(start, nl == std::string_view::npos ? text.npos : nl - start));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (lines.size() != 2) throw InputError("expected two lines (a, then e)");
  return SequencePair(parse_sequence(strip_label(lines[0], 'a')),
                      parse_sequence(strip_label(lines[1], 'e')));
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    switch (job.command) {
      case Command::build:
        return run_build(job, out);
      case Command::check:
        return run_check(job, out);
      case Command::certify:
        return run_certify(job, out, err);
      case Command::verify:
        return run_verify(job, out);
      case Command::family:
        return run_family(job, out);
      case Command::render:
        return run_render(job, out);
    }
  } catch (const MalformedCertificate& e) {
    err << "malformed certificate: " << e.what() << '\n';
    return kExitMalformedCertificate;
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << '\n';
    return kExitSizeGuard;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  } catch (const PivotError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitUsage;
}

}  // namespace tnncert::cli
