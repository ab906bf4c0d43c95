#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "tnncert/core.hpp"
#include "tnncert/planar_network.hpp"

namespace tnncert {

enum class Verdict { tnn, not_tnn };

std::string_view to_string(Verdict verdict);

/// Non-negative weights whose path matrix is M_{e->a}.
struct PositiveNetwork {
  WeightArray array;

  friend bool operator==(const PositiveNetwork&, const PositiveNetwork&) = default;
};

/// Consecutive rows [row_lo, row_lo+size) and columns [col_lo, col_lo+size)
/// of M_{e->a} with a negative determinant, plus the marked edges that
/// identify them in the final network.
struct NegativeMinorWitness {
  std::size_t row_lo;
  std::size_t col_lo;
  std::size_t size;
  /// marked_edges[0] is the negative edge [m,k0]; later marks climb one row
  /// at a time with strictly decreasing column.
  std::vector<EdgePos> marked_edges;
  WeightArray final_array;
  Rational minor_value;

  MinorSpec spec() const { return MinorSpec::intervals(row_lo, col_lo, size); }

  friend bool operator==(const NegativeMinorWitness&, const NegativeMinorWitness&) = default;
};

struct Certificate {
  Verdict verdict;
  SequencePair input;
  std::variant<PositiveNetwork, NegativeMinorWitness> witness;

  const WeightArray& final_array() const;
  const PositiveNetwork& positive() const { return std::get<PositiveNetwork>(witness); }
  const NegativeMinorWitness& negative() const { return std::get<NegativeMinorWitness>(witness); }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct PivotRecord {
  EdgePos position;
  WeightArray after;
};

/// Certificate together with the intermediate arrays of the column scan.
struct CertifyRun {
  Certificate certificate;
  std::vector<PivotRecord> pivots;
  /// Weights read by the column scan itself, pivot rewrites excluded.
  std::size_t weights_scanned = 0;
};

/// Column scan with pivots on A(a,e). Column k is read from [k,k] down; the
/// first non-positive weight decides: negative stops with a negative-minor
/// witness, zero triggers a pivot there and moves on to column k+1.
/// Throws InternalError if a pivot site fails to decompose (never expected).
CertifyRun certify_traced(const SequencePair& pair);
Certificate certify(const SequencePair& pair);

/// Marks [m,k0], then repeatedly the rightmost positive edge one row up and
/// strictly left of the previous mark. With l+1 marks the witness is rows
/// m-l..m and columns k0-1-l..k0-1; its minor is evaluated on
/// path_matrix(final_array). Throws InternalError when the column-scan
/// stopping state does not hold at [m,k0].
NegativeMinorWitness extract_negative_minor(const WeightArray& final_array, std::size_t m,
                                            std::size_t k0);

struct FastRun {
  Certificate certificate;
  /// Array cells written while assembling the witness network.
  std::size_t cells_written = 0;
};

/// Builds the same certificate as certify() directly from the restricted
/// growth trace in O(n^2): column i of the network is a_i - (X)_j read off
/// the list X at iteration i, zeroed below a match.
FastRun fast_certificate_traced(const SequencePair& pair);
Certificate fast_certificate_from_rg(const SequencePair& pair);

}  // namespace tnncert
