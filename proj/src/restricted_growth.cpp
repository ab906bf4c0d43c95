#include "tnncert/restricted_growth.hpp"

#include <algorithm>

namespace tnncert {

std::string_view to_string(RgAction action) {
  switch (action) {
    case RgAction::delete_last:
      return "delete_last";
    case RgAction::delete_match:
      return "delete_match";
    case RgAction::stop:
      return "stop";
  }
  return "unknown";
}

RgReport rg_check(const SequencePair& pair) {
  const std::size_t n = pair.n();
  std::vector<Rational> x = pair.e_values();
  RgReport result{n + 1, true, {}, 0};
  result.trace.reserve(n);

  for (std::size_t i = 1; i <= n; ++i) {
    const Rational& target = pair.a(i);
    RgStep step{i, x, RgAction::delete_last, std::nullopt};

    auto found = x.end();
    for (auto it = x.begin(); it != x.end(); ++it) {
      ++result.comparisons;
      if (*it >= target) {
        found = it;
        break;
      }
    }

    if (found == x.end()) {
      x.pop_back();
    } else {
      step.matched_position = static_cast<std::size_t>(found - x.begin()) + 1;
      if (*found == target) {
        step.action = RgAction::delete_match;
        x.erase(found);
      } else {
        step.action = RgAction::stop;
        result.trace.push_back(std::move(step));
        result.report = i;
        result.accepted = false;
        return result;
      }
    }
    result.trace.push_back(std::move(step));
  }
  return result;
}

bool rg_check_monotone(const SequencePair& pair) {
  const auto& a = pair.a_values();
  if (!std::is_sorted(a.begin(), a.end())) {
    throw InputError("cap test needs a weakly increasing sequence a");
  }
  const std::size_t n = pair.n();
  std::size_t cap = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    // f(i) <= i always, so the cap index stays within 1..n; keep the guard
    // in case that ever changes and defer to the general scan.
    if (cap > n) return rg_check(pair).accepted;
    const Rational& e = pair.e(i);
    const Rational& limit = pair.a(cap);
    if (e > limit) return false;
    if (e == limit) ++cap;
  }
  return true;
}

}  // namespace tnncert
