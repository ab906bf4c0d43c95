#include "tnncert/oracle.hpp"

#include <vector>

namespace tnncert {

namespace {

// Matrix with every row multiplied by the lcm of its denominators. Positive
// row scaling keeps the sign of every minor.
class ScaledIntegerMatrix {
public:
  explicit ScaledIntegerMatrix(const CobMatrix& matrix) : dim_(matrix.dim()), cells_(dim_ * dim_) {
    for (std::size_t r = 0; r < dim_; ++r) {
      mpz_class lcm{1};
      for (std::size_t c = 0; c < dim_; ++c) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), matrix.at(r, c).get().get_den_mpz_t());
      }
      for (std::size_t c = 0; c < dim_; ++c) {
        const auto& q = matrix.at(r, c).get();
        cells_[r * dim_ + c] = q.get_num() * (lcm / q.get_den());
      }
    }
  }

  // Sign of the minor on (rows, cols), via Bareiss elimination.
  int minor_sign(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    const std::size_t s = rows.size();
    work_.resize(s * s);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) work_[i * s + j] = cells_[rows[i] * dim_ + cols[j]];
    }
    int sign = 1;
    mpz_class previous{1};
    for (std::size_t k = 0; k + 1 < s; ++k) {
      if (work_[k * s + k] == 0) {
        std::size_t p = k + 1;
        while (p < s && work_[p * s + k] == 0) ++p;
        if (p == s) return 0;
        for (std::size_t j = 0; j < s; ++j) swap(work_[k * s + j], work_[p * s + j]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < s; ++i) {
        for (std::size_t j = k + 1; j < s; ++j) {
          mpz_class& cell = work_[i * s + j];
          cell = cell * work_[k * s + k] - work_[i * s + k] * work_[k * s + j];
          mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), previous.get_mpz_t());
        }
      }
      previous = work_[k * s + k];
    }
    return sign * sgn(work_[(s - 1) * s + (s - 1)]);
  }

private:
  std::size_t dim_;
  std::vector<mpz_class> cells_;
  std::vector<mpz_class> work_;
};

// Advances `subset` to the next size-|subset| subset of {0..dim-1} in
// lexicographic order. Returns false after the last one.
bool next_subset(std::vector<std::size_t>& subset, std::size_t dim) {
  const std::size_t s = subset.size();
  for (std::size_t i = s; i-- > 0;) {
    if (subset[i] < dim - s + i) {
      ++subset[i];
      for (std::size_t j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_subset(std::size_t size) {
  std::vector<std::size_t> v(size);
  for (std::size_t i = 0; i < size; ++i) v[i] = i;
  return v;
}

bool structurally_zero(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (cols[i] > rows[i]) return true;
  }
  return false;
}

}  // namespace

std::optional<MinorSpec> all_minors_tnn(const CobMatrix& matrix) {
  if (matrix.n() > kAllMinorsMaxN) {
    throw SizeGuardError("all-minors enumeration limited to n <= " +
                         std::to_string(kAllMinorsMaxN));
  }
  const std::size_t dim = matrix.dim();
  const bool lower = matrix.is_lower_triangular();
  ScaledIntegerMatrix scaled(matrix);
  for (std::size_t size = 1; size <= dim; ++size) {
    auto rows = first_subset(size);
    do {
      auto cols = first_subset(size);
      do {
        if (lower && structurally_zero(rows, cols)) continue;
        if (scaled.minor_sign(rows, cols) < 0) return MinorSpec{rows, cols};
      } while (next_subset(cols, dim));
    } while (next_subset(rows, dim));
  }
  return std::nullopt;
}

std::optional<MinorSpec> ando_tnn(const CobMatrix& matrix) {
  if (matrix.n() > kAndoMaxN) {
    throw SizeGuardError("reduced-family enumeration limited to n <= " +
                         std::to_string(kAndoMaxN));
  }
  if (!matrix.is_lower_triangular()) {
    throw InputError("reduced-family test needs a lower-triangular matrix");
  }
  const std::size_t dim = matrix.dim();
  ScaledIntegerMatrix scaled(matrix);
  for (std::size_t size = 1; size <= dim; ++size) {
    const auto cols = first_subset(size);
    auto rows = first_subset(size);
    do {
      if (structurally_zero(rows, cols)) continue;
      if (scaled.minor_sign(rows, cols) < 0) return MinorSpec{rows, cols};
    } while (next_subset(rows, dim));
  }
  return std::nullopt;
}

}  // namespace tnncert
