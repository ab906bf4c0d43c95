#pragma once

// Worked examples: the two running example pairs, their matrices and the
// arrays the column scan passes through.

#include <vector>

#include "tnncert/core.hpp"
#include "tnncert/planar_network.hpp"

namespace tnncert::testing {

inline std::vector<Rational> ints(std::initializer_list<long> values) {
  return std::vector<Rational>(values.begin(), values.end());
}

inline SequencePair good_pair() { return SequencePair(ints({3, 8, 7, 5, 2, 7}), ints({2, 1, 3, 7, 3, 4})); }
inline SequencePair bad_pair() { return SequencePair(ints({11, 8, 3, 1}), ints({10, 9, 2, 1})); }

inline CobMatrix matrix_from(const std::vector<std::vector<long>>& rows) {
  CobMatrix m(rows.size() - 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

inline WeightArray array_from(const std::vector<std::vector<long>>& rows) {
  WeightArray a(rows.size());
  for (std::size_t m = 1; m <= rows.size(); ++m) {
    for (std::size_t k = 1; k <= m; ++k) a.at(m, k) = rows[m - 1][k - 1];
  }
  return a;
}

inline CobMatrix good_matrix() {
  return matrix_from({{1, 0, 0, 0, 0, 0, 0},
                      {1, 1, 0, 0, 0, 0, 0},
                      {2, 8, 1, 0, 0, 0, 0},
                      {0, 42, 12, 1, 0, 0, 0},
                      {0, 42, 42, 10, 1, 0, 0},
                      {0, 210, 210, 62, 9, 1, 0},
                      {0, 840, 840, 272, 44, 12, 1}});
}

inline CobMatrix bad_matrix() {
  return matrix_from({{1, 0, 0, 0, 0},
                      {1, 1, 0, 0, 0},
                      {2, 0, 1, 0, 0},
                      {18, 2, 1, 1, 0},
                      {180, 32, 4, 1, 1}});
}

/// A(a,e) for the accepted example.
inline WeightArray good_initial_array() {
  return array_from({{1}, {2, 6}, {0, 7, 5}, {-4, 5, 6, 3}, {0, 1, 4, 4, 0}, {-1, 5, 0, 2, 1, 5}});
}

/// After pivoting on [3,1].
inline WeightArray good_after_first_pivot() {
  return array_from({{1}, {2, 6}, {0, 7, 5}, {0, 1, 6, 3}, {0, 5, 0, 4, 0}, {0, 4, 4, -2, 1, 5}});
}

/// After the second pivot, on [5,3].
inline WeightArray good_after_second_pivot() {
  return array_from({{1}, {2, 6}, {0, 7, 5}, {0, 1, 6, 3}, {0, 5, 0, 4, 0}, {0, 4, 0, 2, 1, 5}});
}

/// Final network: the scan then meets the zero at [5,5] and pivots once more.
inline WeightArray good_final_array() {
  return array_from({{1}, {2, 6}, {0, 7, 5}, {0, 1, 6, 3}, {0, 5, 0, 4, 0}, {0, 4, 0, 2, 0, 6}});
}

/// A(a,e) for the rejected example, which is also the final network (no
/// pivots). Weight [4,2] is a_2 - e_3 = 8 - 2 = 6.
inline WeightArray bad_array() {
  return array_from({{1}, {2, -2}, {9, -1, -7}, {10, 6, -6, -9}});
}

/// The same array with the value 7 at [4,2], as found in one hand-evaluated
/// reference; its path matrix disagrees with bad_matrix().
inline WeightArray bad_array_as_printed() {
  return array_from({{1}, {2, -2}, {9, -1, -7}, {10, 7, -6, -9}});
}

/// n = 7 final network with the sign pattern
///   +
///   + +
///   + + +
///   + + + +
///   + 0 + + +
///   + 0 + + 0 +
///   + 0 + 0 0 - *
/// and a positive weight at the unscanned [7,7].
inline WeightArray sign_pattern_array() {
  return array_from({{2},
                     {1, 3},
                     {4, 1, 2},
                     {1, 5, 2, 3},
                     {3, 0, 1, 2, 4},
                     {2, 0, 3, 1, 0, 2},
                     {1, 0, 2, 0, 0, -3, 5}});
}

}  // namespace tnncert::testing
