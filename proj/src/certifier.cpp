#include "tnncert/certifier.hpp"

#include <algorithm>

#include "tnncert/restricted_growth.hpp"

namespace tnncert {

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::tnn ? "TNN" : "NOT_TNN";
}

const WeightArray& Certificate::final_array() const {
  if (const auto* p = std::get_if<PositiveNetwork>(&witness)) return p->array;
  return std::get<NegativeMinorWitness>(witness).final_array;
}

namespace {

std::string pos_string(std::size_t m, std::size_t k) {
  return "[" + std::to_string(m) + "," + std::to_string(k) + "]";
}

Certificate not_tnn(const SequencePair& pair, const WeightArray& array, std::size_t m,
                    std::size_t k0) {
  return Certificate{Verdict::not_tnn, pair, extract_negative_minor(array, m, k0)};
}

}  // namespace

CertifyRun certify_traced(const SequencePair& pair) {
  const std::size_t n = pair.n();
  WeightArray array = build_array(pair);
  CertifyRun run{Certificate{Verdict::tnn, pair, PositiveNetwork{WeightArray(0)}}, {}, 0};

  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t m = k; m <= n; ++m) {
      ++run.weights_scanned;
      const int sign = array.at(m, k).sign();
      if (sign > 0) continue;
      if (sign < 0) {
        run.certificate = not_tnn(pair, array, m, k);
        return run;
      }
      if (!triangle_decompose(array, m, k)) {
        throw InternalError("column scan inconclusive: triangle headed at " + pos_string(m, k) +
                            " is not an A(f,g) instance");
      }
      array = pivot(array, m, k);
      run.pivots.push_back({EdgePos{m, k}, array});
      break;
    }
  }
  run.certificate.witness = PositiveNetwork{std::move(array)};
  return run;
}

Certificate certify(const SequencePair& pair) { return certify_traced(pair).certificate; }

NegativeMinorWitness extract_negative_minor(const WeightArray& final_array, std::size_t m,
                                            std::size_t k0) {
  if (!final_array.valid(m, k0)) {
    throw InternalError("negative edge " + pos_string(m, k0) + " out of range");
  }
  if (final_array.at(m, k0).sign() >= 0) {
    throw InternalError("edge " + pos_string(m, k0) + " is not negative");
  }
  for (std::size_t r = k0; r < m; ++r) {
    if (final_array.at(r, k0).sign() <= 0) {
      throw InternalError("edge " + pos_string(r, k0) + " above the negative edge is not positive");
    }
  }
  for (std::size_t col = 1; col < k0; ++col) {
    for (std::size_t r = col; r <= final_array.n(); ++r) {
      if (final_array.at(r, col).sign() < 0) {
        throw InternalError("negative weight at " + pos_string(r, col) + " left of column " +
                            std::to_string(k0));
      }
    }
  }

  std::vector<EdgePos> marked{{m, k0}};
  std::size_t previous_col = k0;
  for (std::size_t row = m - 1; row >= 1; --row) {
    std::size_t found = 0;
    for (std::size_t col = std::min(previous_col - 1, row); col >= 1; --col) {
      if (final_array.at(row, col).sign() > 0) {
        found = col;
        break;
      }
    }
    if (found == 0) break;
    marked.push_back({row, found});
    previous_col = found;
  }

  const std::size_t ell = marked.size() - 1;
  const std::size_t sink_hi = k0 - 1;
  NegativeMinorWitness witness{m - ell, sink_hi - ell, ell + 1, std::move(marked), final_array, 0};
  witness.minor_value = minor(path_matrix(final_array), witness.spec());
  return witness;
}

FastRun fast_certificate_traced(const SequencePair& pair) {
  const std::size_t n = pair.n();
  const RgReport report = rg_check(pair);
  WeightArray array(n);
  FastRun run{Certificate{Verdict::tnn, pair, PositiveNetwork{WeightArray(0)}}, 0};

  for (const RgStep& step : report.trace) {
    const std::size_t i = step.i;
    const auto& x = step.x_before;
    if (step.action == RgAction::stop) {
      // The untouched part of the network is A((a_i..a_n), X).
      for (std::size_t l1 = 0; i + l1 <= n; ++l1) {
        for (std::size_t l2 = 0; l2 <= l1; ++l2) {
          array.at(i + l1, i + l2) = pair.a(i + l2) - x[l1 - l2];
          ++run.cells_written;
        }
      }
      const std::size_t m = i + *step.matched_position - 1;
      run.certificate = Certificate{Verdict::not_tnn, pair, extract_negative_minor(array, m, i)};
      return run;
    }
    // Rows below a match are zero after the pivot.
    const std::size_t last_row =
        step.action == RgAction::delete_match ? i + *step.matched_position - 1 : n;
    for (std::size_t m = i; m <= n; ++m) {
      array.at(m, i) = m <= last_row ? pair.a(i) - x[m - i] : Rational(0);
      ++run.cells_written;
    }
  }
  run.certificate.witness = PositiveNetwork{std::move(array)};
  return run;
}

Certificate fast_certificate_from_rg(const SequencePair& pair) {
  return fast_certificate_traced(pair).certificate;
}

}  // namespace tnncert
