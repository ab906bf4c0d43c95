#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tnncert/core.hpp"

namespace tnncert {

enum class RgAction { delete_last, delete_match, stop };

std::string_view to_string(RgAction action);

/// One iteration of the list-deletion scan.
struct RgStep {
  std::size_t i;                 // 1-based iteration index, compared against a_i
  std::vector<Rational> x_before;  // the list X at the start of the iteration
  RgAction action;
  /// 1-based position in x_before of the first element >= a_i, if any.
  std::optional<std::size_t> matched_position;

  friend bool operator==(const RgStep&, const RgStep&) = default;
};

struct RgReport {
  std::size_t report;  // in 1..n+1
  bool accepted;       // report == n+1
  std::vector<RgStep> trace;
  /// Number of element comparisons against a_i (bounded by n^2).
  std::size_t comparisons = 0;

  friend bool operator==(const RgReport&, const RgReport&) = default;
};

/// Restricted-growth scan for arbitrary a, e.
///
/// Starting from X = (e_1..e_n), iteration i finds the first element of X
/// that is >= a_i. None: drop the last element of X. Equal to a_i: drop that
/// element. Greater: stop and report i. Surviving all n iterations reports
/// n+1, meaning e is a restricted growth sequence relative to a.
RgReport rg_check(const SequencePair& pair);

/// Cap-based test for weakly increasing a: e_i <= a_{f(i)} where f(1) = 1
/// and f advances by one exactly when e_i = a_{f(i)}.
/// Throws InputError if a is not weakly increasing.
bool rg_check_monotone(const SequencePair& pair);

}  // namespace tnncert
