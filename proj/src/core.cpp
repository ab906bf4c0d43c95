#include "tnncert/core.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace tnncert {

SequencePair::SequencePair(std::vector<Rational> a, std::vector<Rational> e)
    : a_(std::move(a)), e_(std::move(e)) {
  if (a_.empty()) throw InputError("sequences must have length n >= 1");
  if (a_.size() != e_.size()) {
    throw InputError("sequence lengths differ: len(a)=" + std::to_string(a_.size()) +
                     ", len(e)=" + std::to_string(e_.size()));
  }
}

CobMatrix::CobMatrix(std::size_t n) : n_(n), entries_((n + 1) * (n + 1)) {}

CobMatrix CobMatrix::identity(std::size_t n) {
  CobMatrix m(n);
  for (std::size_t i = 0; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

std::size_t CobMatrix::index(std::size_t m, std::size_t k) const {
  if (m > n_ || k > n_) {
    throw InputError("matrix index (" + std::to_string(m) + "," + std::to_string(k) +
                     ") outside 0.." + std::to_string(n_));
  }
  return m * (n_ + 1) + k;
}

bool CobMatrix::is_lower_triangular() const {
  for (std::size_t m = 0; m <= n_; ++m) {
    for (std::size_t k = m + 1; k <= n_; ++k) {
      if (!at(m, k).is_zero()) return false;
    }
  }
  return true;
}

bool CobMatrix::is_lower_unitriangular() const {
  if (!is_lower_triangular()) return false;
  for (std::size_t m = 0; m <= n_; ++m) {
    if (at(m, m) != 1) return false;
  }
  return true;
}

void MinorSpec::validate() const {
  if (rows.empty() || rows.size() != cols.size()) {
    throw InputError("minor needs equally many rows and columns (at least one)");
  }
  auto strictly_increasing = [](const std::vector<std::size_t>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  };
  if (!strictly_increasing(rows) || !strictly_increasing(cols)) {
    throw InputError("minor indices must be sorted and distinct");
  }
}

MinorSpec MinorSpec::intervals(std::size_t row_lo, std::size_t col_lo, std::size_t size) {
  MinorSpec spec;
  for (std::size_t i = 0; i < size; ++i) {
    spec.rows.push_back(row_lo + i);
    spec.cols.push_back(col_lo + i);
  }
  return spec;
}

std::string to_string(const MinorSpec& spec) {
  std::ostringstream os;
  auto list = [&](const std::vector<std::size_t>& v) {
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
  };
  os << "rows ";
  list(spec.rows);
  os << " cols ";
  list(spec.cols);
  return os.str();
}

Rational determinant(const CobMatrix& matrix, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols) {
  const std::size_t size = rows.size();
  if (size != cols.size()) throw InputError("determinant needs a square selection");
  if (size == 0) return 1;

  // Clear denominators row by row, then run Bareiss fraction-free elimination
  // over the integers. det(selection) = det(scaled) / prod(row scales).
  std::vector<std::vector<mpz_class>> work(size, std::vector<mpz_class>(size));
  mpz_class scale_product{1};
  for (std::size_t i = 0; i < size; ++i) {
    mpz_class lcm{1};
    for (std::size_t j = 0; j < size; ++j) {
      const auto& q = matrix.at(rows[i], cols[j]).get();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < size; ++j) {
      const auto& q = matrix.at(rows[i], cols[j]).get();
      work[i][j] = q.get_num() * (lcm / q.get_den());
    }
    scale_product *= lcm;
  }

  int sign = 1;
  mpz_class previous_pivot{1};
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (work[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && work[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(work[k], work[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        work[i][j] = work[i][j] * work[k][k] - work[i][k] * work[k][j];
        mpz_divexact(work[i][j].get_mpz_t(), work[i][j].get_mpz_t(),
                     previous_pivot.get_mpz_t());
      }
    }
    previous_pivot = work[k][k];
  }
  mpq_class result(work[size - 1][size - 1] * sign, scale_product);
  result.canonicalize();
  return Rational(result);
}

Rational minor(const CobMatrix& matrix, const MinorSpec& spec) {
  spec.validate();
  for (std::size_t r : spec.rows) {
    if (r > matrix.n()) throw InputError("minor row " + std::to_string(r) + " out of range");
  }
  for (std::size_t c : spec.cols) {
    if (c > matrix.n()) throw InputError("minor column " + std::to_string(c) + " out of range");
  }
  return determinant(matrix, spec.rows, spec.cols);
}

}  // namespace tnncert
