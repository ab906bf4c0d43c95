#include "tnncert/matrix_builder.hpp"

#include <algorithm>
#include <array>

namespace tnncert {

namespace {

void check_entry_indices(const SequencePair& pair, std::size_t m, std::size_t k) {
  if (k > m || m > pair.n()) {
    throw InputError("entry (" + std::to_string(m) + "," + std::to_string(k) +
                     ") needs 0 <= k <= m <= " + std::to_string(pair.n()));
  }
}

// out[l] = h_l(values) for l = 0..degree.
std::vector<Rational> complete_homogeneous(std::span<const Rational> values, std::size_t degree) {
  std::vector<Rational> h(degree + 1);
  h[0] = 1;
  // Multiply by 1/(1 - x t) one variable at a time.
  for (const Rational& x : values) {
    for (std::size_t l = 1; l <= degree; ++l) h[l] += x * h[l - 1];
  }
  return h;
}

// out[l] = s_l(values) (elementary symmetric) for l = 0..degree.
std::vector<Rational> elementary(std::span<const Rational> values, std::size_t degree) {
  std::vector<Rational> s(degree + 1);
  s[0] = 1;
  // Multiply by (1 + x t), descending to reuse the previous row.
  for (const Rational& x : values) {
    for (std::size_t l = degree; l >= 1; --l) s[l] += x * s[l - 1];
  }
  return s;
}

}  // namespace

CobMatrix build_matrix(const SequencePair& pair) {
  const std::size_t n = pair.n();
  CobMatrix M(n);
  M.at(0, 0) = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    M.at(m, 0) = M.at(m - 1, 0) * (pair.a(1) - pair.e(m));
    for (std::size_t k = 1; k <= m; ++k) {
      Rational value = M.at(m - 1, k - 1);
      if (k < m) value += (pair.a(k + 1) - pair.e(m)) * M.at(m - 1, k);
      M.at(m, k) = value;
    }
  }
  return M;
}

Rational entry_by_subset_sum(const SequencePair& pair, std::size_t m, std::size_t k) {
  check_entry_indices(pair, m, k);
  if (m > kSubsetSumMaxN) {
    throw SizeGuardError("subset-sum enumeration limited to m <= " +
                         std::to_string(kSubsetSumMaxN));
  }
  const std::size_t size = m - k;
  Rational total;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
    Rational term = 1;
    std::size_t i = 1;
    for (std::size_t s = 1; s <= m; ++s) {
      if ((mask >> (s - 1)) & 1u) {
        term *= pair.a(s - i + 1) - pair.e(s);
        ++i;
      }
    }
    total += term;
  }
  return total;
}

Rational entry_by_symmetric_polys(const SequencePair& pair, std::size_t m, std::size_t k) {
  check_entry_indices(pair, m, k);
  const std::size_t degree = m - k;
  // a_{k+1} exists unless k = n, in which case degree = 0 and h_0 = 1.
  const std::size_t a_count = std::min(k + 1, pair.n());
  const auto h = complete_homogeneous(std::span(pair.a_values()).first(a_count), degree);
  const auto s = elementary(std::span(pair.e_values()).first(m), degree);
  Rational total;
  for (std::size_t l = 0; l <= degree; ++l) {
    Rational term = h[degree - l] * s[l];
    if (l % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

namespace {
constexpr std::array<std::pair<FamilyKind, std::string_view>, 6> kFamilyNames{{
    {FamilyKind::binomial, "binomial"},
    {FamilyKind::stirling2, "stirling2"},
    {FamilyKind::stirling1, "stirling1"},
    {FamilyKind::lah, "lah"},
    {FamilyKind::ferrers_rook, "ferrers_rook"},
    {FamilyKind::central_factorial, "central_factorial"},
}};
}  // namespace

std::string_view to_string(FamilyKind kind) {
  for (const auto& [k, name] : kFamilyNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (const auto& [k, known] : kFamilyNames) {
    if (known == name) return k;
  }
  throw InputError("unknown family '" + std::string(name) + "'");
}

SequencePair family_sequences(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw InputError("family size n must be >= 1");
  if (spec.kind == FamilyKind::ferrers_rook) {
    if (!spec.b) throw InputError("ferrers_rook needs column heights b");
    const auto& b = *spec.b;
    if (b.size() != n) throw InputError("ferrers_rook needs exactly n column heights");
    if (b.front() < 0 || !std::is_sorted(b.begin(), b.end())) {
      throw InputError("ferrers_rook column heights must be non-negative and non-decreasing");
    }
  } else if (spec.b) {
    throw InputError("column heights b only apply to ferrers_rook");
  }

  std::vector<Rational> a(n);
  std::vector<Rational> e(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const long i = static_cast<long>(idx) + 1;
    switch (spec.kind) {
      case FamilyKind::binomial:
        e[idx] = -1;
        a[idx] = 0;
        break;
      case FamilyKind::stirling2:
        e[idx] = 0;
        a[idx] = i - 1;
        break;
      case FamilyKind::stirling1:
        e[idx] = -(i - 1);
        a[idx] = 0;
        break;
      case FamilyKind::lah:
        e[idx] = -(i - 1);
        a[idx] = i - 1;
        break;
      case FamilyKind::ferrers_rook:
        e[idx] = i - 1 - (*spec.b)[idx];
        a[idx] = i - 1;
        break;
      case FamilyKind::central_factorial:
        e[idx] = 0;
        a[idx] = (i - 1) * (i - 1);
        break;
    }
  }
  return SequencePair(std::move(a), std::move(e));
}

}  // namespace tnncert
