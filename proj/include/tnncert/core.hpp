#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tnncert/errors.hpp"
#include "tnncert/rational.hpp"

namespace tnncert {

/// The input sequences a = (a_1..a_n) and e = (e_1..e_n).
///
/// Accessors are 1-based to match the usual indexing of the two sequences;
/// the raw vectors are 0-based.
class SequencePair {
public:
  SequencePair(std::vector<Rational> a, std::vector<Rational> e);

  std::size_t n() const { return a_.size(); }
  const Rational& a(std::size_t i) const { return a_.at(i - 1); }
  const Rational& e(std::size_t i) const { return e_.at(i - 1); }
  const std::vector<Rational>& a_values() const { return a_; }
  const std::vector<Rational>& e_values() const { return e_; }

  friend bool operator==(const SequencePair&, const SequencePair&) = default;

private:
  std::vector<Rational> a_;
  std::vector<Rational> e_;
};

/// Square (n+1)x(n+1) matrix of rationals with rows and columns indexed 0..n.
///
/// Change-of-basis matrices are lower-triangular with unit diagonal; the
/// type does not enforce that so tests can build arbitrary matrices.
class CobMatrix {
public:
  explicit CobMatrix(std::size_t n);
  static CobMatrix identity(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return n_ + 1; }

  const Rational& at(std::size_t m, std::size_t k) const { return entries_[index(m, k)]; }
  Rational& at(std::size_t m, std::size_t k) { return entries_[index(m, k)]; }

  bool is_lower_unitriangular() const;
  bool is_lower_triangular() const;

  friend bool operator==(const CobMatrix&, const CobMatrix&) = default;

private:
  std::size_t index(std::size_t m, std::size_t k) const;

  std::size_t n_;
  std::vector<Rational> entries_;
};

/// Row and column index sets selecting a square submatrix.
struct MinorSpec {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  /// Sorted, distinct, equal nonzero length. Throws InputError otherwise.
  void validate() const;
  /// Consecutive rows [row_lo, row_lo + size) and cols [col_lo, col_lo + size).
  static MinorSpec intervals(std::size_t row_lo, std::size_t col_lo, std::size_t size);

  std::size_t size() const { return rows.size(); }
  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

std::string to_string(const MinorSpec& spec);

/// Determinant of the submatrix with the given row and column order.
/// Rows need not be sorted; swapping two rows flips the sign.
Rational determinant(const CobMatrix& matrix, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols);

/// Exact minor of `matrix` selected by `spec`.
Rational minor(const CobMatrix& matrix, const MinorSpec& spec);

}  // namespace tnncert
