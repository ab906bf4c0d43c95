#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tnncert/core.hpp"

namespace tnncert {

/// Builds M_{e->a} with the three-term recurrence
///   M(m,k) = M(m-1,k-1) + (a_{k+1} - e_m) M(m-1,k),
/// first column M(m,0) = prod_{i<=m} (a_1 - e_i). O(n^2) entries.
CobMatrix build_matrix(const SequencePair& pair);

/// Largest m for which entry_by_subset_sum will enumerate subsets of {1..m}.
inline constexpr std::size_t kSubsetSumMaxN = 12;

/// Entry (m,k) as a sum over (m-k)-subsets s_1 < ... < s_{m-k} of {1..m} of
/// prod_i (a_{s_i - i + 1} - e_{s_i}). Exponential; test oracle only.
/// Throws InputError for bad indices and SizeGuardError when m > kSubsetSumMaxN.
Rational entry_by_subset_sum(const SequencePair& pair, std::size_t m, std::size_t k);

/// Entry (m,k) as sum_l (-1)^l h_{m-k-l}(a_1..a_{k+1}) s_l(e_1..e_m) with h
/// complete homogeneous and s elementary symmetric polynomials.
Rational entry_by_symmetric_polys(const SequencePair& pair, std::size_t m, std::size_t k);

enum class FamilyKind { binomial, stirling2, stirling1, lah, ferrers_rook, central_factorial };

std::string_view to_string(FamilyKind kind);
/// Throws InputError on an unknown name.
FamilyKind parse_family_kind(std::string_view name);

struct FamilySpec {
  FamilyKind kind;
  std::size_t n;
  /// Column heights of the Ferrers board; required for ferrers_rook only.
  std::optional<std::vector<long>> b;
};

/// The (a,e) parametrization of a classical triangle:
///   binomial           e_i = -1,          a_i = 0
///   stirling2          e_i = 0,           a_i = i-1
///   stirling1          e_i = -(i-1),      a_i = 0
///   lah                e_i = -(i-1),      a_i = i-1
///   ferrers_rook       e_i = i-1-b_i,     a_i = i-1
///   central_factorial  e_i = 0,           a_i = (i-1)^2
SequencePair family_sequences(const FamilySpec& spec);

}  // namespace tnncert
