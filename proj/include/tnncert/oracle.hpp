#pragma once

#include <cstddef>
#include <optional>

#include "tnncert/core.hpp"

namespace tnncert {

inline constexpr std::size_t kAllMinorsMaxN = 8;
inline constexpr std::size_t kAndoMaxN = 14;

/// Brute-force TNN test over every square submatrix. Returns the first minor
/// with a negative determinant, enumerating by size, then row set, then
/// column set (each lexicographic), or nullopt if the matrix is TNN.
/// Minors of a lower-triangular matrix that vanish structurally (some
/// c_i > r_i) are skipped. Throws SizeGuardError when n > kAllMinorsMaxN.
std::optional<MinorSpec> all_minors_tnn(const CobMatrix& matrix);

/// TNN test restricted to column sets {0..s-1} with arbitrary row sets of
/// size s, valid for lower-triangular matrices. Same order and result
/// convention as all_minors_tnn. Throws InputError on a matrix that is not
/// lower-triangular and SizeGuardError when n > kAndoMaxN.
std::optional<MinorSpec> ando_tnn(const CobMatrix& matrix);

}  // namespace tnncert
