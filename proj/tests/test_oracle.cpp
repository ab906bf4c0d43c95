#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "tnncert/matrix_builder.hpp"
#include "tnncert/oracle.hpp"

using namespace tnncert;
using namespace tnncert::testing;

namespace {

CobMatrix random_lower_triangular(PairGenerator& gen, std::size_t n, bool unit_diagonal = false) {
  CobMatrix m(n);
  for (std::size_t r = 0; r <= n; ++r) {
    for (std::size_t c = 0; c <= r; ++c) m.at(r, c) = unit_diagonal && r == c ? 1 : gen.value();
  }
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("worked examples") {
  CHECK_FALSE(all_minors_tnn(good_matrix()).has_value());
  CHECK_FALSE(ando_tnn(good_matrix()).has_value());
  const auto bad = all_minors_tnn(bad_matrix());
  REQUIRE(bad.has_value());
  CHECK(minor(bad_matrix(), *bad).sign() < 0);
  const auto bad_ando = ando_tnn(bad_matrix());
  REQUIRE(bad_ando.has_value());
  CHECK(minor(bad_matrix(), *bad_ando).sign() < 0);
  CHECK(bad_ando->cols.front() == 0);
}

TEST_CASE("first negative minor in enumeration order") {
  // Only 1x1 entry (1,0) is negative.
  const CobMatrix m = matrix_from({{1, 0}, {-1, 1}});
  CHECK(all_minors_tnn(m) == MinorSpec{{1}, {0}});
  CHECK(ando_tnn(m) == MinorSpec{{1}, {0}});
}

TEST_CASE("identity is TNN") {
  for (std::size_t n = 1; n <= 8; ++n) CHECK_FALSE(all_minors_tnn(CobMatrix::identity(n)));
  CHECK_FALSE(ando_tnn(CobMatrix::identity(kAndoMaxN)));
}

TEST_CASE("agreement with cofactor brute force") {
  PairGenerator gen(79, -2, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const CobMatrix m = random_lower_triangular(gen, gen.size(1, 4));
    const auto found = all_minors_tnn(m);
    REQUIRE(found.has_value() != brute_force_tnn(m));
    if (found) CHECK(cofactor_minor(m, found->rows, found->cols).sign() < 0);
  }
  PairGenerator pairs(83);
  for (int trial = 0; trial < 200; ++trial) {
    const CobMatrix m = build_matrix(pairs.pair(pairs.size(1, 4)));
    REQUIRE(all_minors_tnn(m).has_value() != brute_force_tnn(m));
  }
}

TEST_CASE("reduced family agrees with the full scan") {
  PairGenerator gen(89, -1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const CobMatrix m = random_lower_triangular(gen, gen.size(1, 5), true);
    REQUIRE(ando_tnn(m).has_value() == all_minors_tnn(m).has_value());
  }
  PairGenerator pairs(97);
  for (int trial = 0; trial < 300; ++trial) {
    const CobMatrix m = build_matrix(pairs.pair(pairs.size(1, 6)));
    REQUIRE(ando_tnn(m).has_value() == all_minors_tnn(m).has_value());
  }
}

TEST_CASE("reduced family needs a nonsingular diagonal") {
  // Column {1} alone is never inspected; a zero pivot hides the -1.
  const CobMatrix m = matrix_from({{0, 0}, {1, -1}});
  CHECK_FALSE(ando_tnn(m).has_value());
  CHECK(all_minors_tnn(m) == MinorSpec{{1}, {1}});
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(all_minors_tnn(CobMatrix::identity(kAllMinorsMaxN + 1)), SizeGuardError);
  CHECK_THROWS_AS(ando_tnn(CobMatrix::identity(kAndoMaxN + 1)), SizeGuardError);
  CHECK_THROWS_AS(ando_tnn(matrix_from({{1, 1}, {0, 1}})), InputError);
}

TEST_CASE("full scan also handles non-triangular input") {
  CHECK(all_minors_tnn(matrix_from({{1, 1}, {1, 1}})) == std::nullopt);
  const auto found = all_minors_tnn(matrix_from({{1, 2}, {1, 1}}));
  REQUIRE(found.has_value());
  CHECK(*found == MinorSpec{{0, 1}, {0, 1}});
}
