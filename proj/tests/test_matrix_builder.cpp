#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "tnncert/matrix_builder.hpp"

using namespace tnncert;
using namespace tnncert::testing;

TEST_SUITE_BEGIN("matrix-builder");

TEST_CASE("recurrence reproduces the worked example matrices") {
  const CobMatrix good = build_matrix(good_pair());
  CHECK(good == good_matrix());
  CHECK(good.at(3, 1) == 42);
  CHECK(good.at(6, 3) == 272);

  const CobMatrix bad = build_matrix(bad_pair());
  CHECK(bad == bad_matrix());
  CHECK(bad.at(2, 1) == 0);
  CHECK(bad.at(4, 0) == 180);
}

TEST_CASE("e = a gives first column prod(a_1 - a_i) and unit diagonal") {
  const SequencePair p(ints({2, -1, 3, 5}), ints({2, -1, 3, 5}));
  const CobMatrix m = build_matrix(p);
  Rational product = 1;
  for (std::size_t i = 1; i <= 4; ++i) {
    product *= p.a(1) - p.a(i);
    CHECK(m.at(i, 0) == product);
    CHECK(m.at(i, i) == 1);
  }
}

TEST_CASE("build_matrix output is lower unitriangular") {
  PairGenerator gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    CHECK(build_matrix(gen.rational_pair(gen.size(1, 7))).is_lower_unitriangular());
  }
}

TEST_CASE("subset-sum entries") {
  CHECK(entry_by_subset_sum(good_pair(), 3, 3) == 1);
  // (a_1 - e_1) + (a_2 - e_2) = 1 + 7.
  CHECK(entry_by_subset_sum(good_pair(), 2, 1) == 8);
  CHECK_THROWS_AS(entry_by_subset_sum(good_pair(), 2, 3), InputError);
  CHECK_THROWS_AS(entry_by_subset_sum(good_pair(), 7, 0), InputError);

  std::vector<Rational> big(13, Rational(1));
  CHECK_THROWS_AS(entry_by_subset_sum(SequencePair(big, big), 13, 0), SizeGuardError);
  CHECK(entry_by_subset_sum(SequencePair(big, big), 12, 12) == 1);
}

TEST_CASE("symmetric-polynomial entries") {
  CHECK(entry_by_symmetric_polys(good_pair(), 4, 4) == 1);
  // h_2(11) - h_1(11) s_1(10,9) + s_2(10,9) = 121 - 209 + 90.
  CHECK(entry_by_symmetric_polys(bad_pair(), 2, 0) == 2);
  CHECK(entry_by_symmetric_polys(good_pair(), 6, 6) == 1);
  CHECK_THROWS_AS(entry_by_symmetric_polys(bad_pair(), 1, 2), InputError);
}

TEST_CASE("three constructions agree on random pairs") {
  PairGenerator gen(99);
  for (int trial = 0; trial < 500; ++trial) {
    const SequencePair p = trial % 2 ? gen.pair(gen.size(1, 6)) : gen.rational_pair(gen.size(1, 6));
    const CobMatrix m = build_matrix(p);
    for (std::size_t row = 0; row <= p.n(); ++row) {
      for (std::size_t col = 0; col <= row; ++col) {
        REQUIRE(entry_by_subset_sum(p, row, col) == m.at(row, col));
        REQUIRE(entry_by_symmetric_polys(p, row, col) == m.at(row, col));
      }
    }
  }
}

TEST_CASE("family parametrizations") {
  const auto check_family = [](FamilyKind kind, std::size_t n, auto expected) {
    const CobMatrix m = build_matrix(family_sequences({kind, n, std::nullopt}));
    for (std::size_t row = 0; row <= n; ++row) {
      for (std::size_t col = 0; col <= row; ++col) {
        CAPTURE(row);
        CAPTURE(col);
        REQUIRE(m.at(row, col) == Rational(expected(long(row), long(col))));
      }
    }
    return m;
  };

  CHECK(check_family(FamilyKind::binomial, 6, binomial).at(4, 2) == 6);
  CHECK(check_family(FamilyKind::stirling2, 6, [](long m, long k) {
          return count_set_partitions(int(m), int(k));
        }).at(4, 2) == 7);
  check_family(FamilyKind::stirling1, 6, [](long m, long k) {
    return count_permutations_with_cycles(int(m), int(k));
  });
  CHECK(check_family(FamilyKind::lah, 6, lah_closed_form).at(3, 1) == 6);
}

TEST_CASE("family sequences") {
  const auto cf = family_sequences({FamilyKind::central_factorial, 4, std::nullopt});
  CHECK(cf.a_values() == ints({0, 1, 4, 9}));
  CHECK(cf.e_values() == ints({0, 0, 0, 0}));

  const auto lah = family_sequences({FamilyKind::lah, 3, std::nullopt});
  CHECK(lah.a_values() == ints({0, 1, 2}));
  CHECK(lah.e_values() == ints({0, -1, -2}));

  // b_i = i-1 recovers the Stirling numbers of the second kind.
  const auto rook = family_sequences({FamilyKind::ferrers_rook, 5, std::vector<long>{0, 1, 2, 3, 4}});
  CHECK(rook == family_sequences({FamilyKind::stirling2, 5, std::nullopt}));

  CHECK(parse_family_kind("lah") == FamilyKind::lah);
  CHECK(to_string(FamilyKind::central_factorial) == "central_factorial");
  CHECK_THROWS_AS(parse_family_kind("catalan"), InputError);
}

TEST_CASE("ferrers_rook validation") {
  CHECK_THROWS_AS(family_sequences({FamilyKind::ferrers_rook, 3, std::nullopt}), InputError);
  CHECK_THROWS_AS(family_sequences({FamilyKind::ferrers_rook, 3, std::vector<long>{0, 1}}),
                  InputError);
  CHECK_THROWS_AS(family_sequences({FamilyKind::ferrers_rook, 3, std::vector<long>{0, 2, 1}}),
                  InputError);
  CHECK_THROWS_AS(family_sequences({FamilyKind::ferrers_rook, 3, std::vector<long>{-1, 0, 1}}),
                  InputError);
  CHECK_THROWS_AS(family_sequences({FamilyKind::binomial, 3, std::vector<long>{0, 1, 2}}),
                  InputError);
  CHECK_THROWS_AS(family_sequences({FamilyKind::binomial, 0, std::nullopt}), InputError);
}

TEST_CASE("ferrers_rook entries are rook numbers of small boards") {
  const std::vector<std::vector<long>> boards{
      {0, 1, 1, 3}, {1, 1, 2, 2, 4}, {0, 0, 2, 3, 3}, {2, 2, 2}, {0, 1, 3, 3, 5, 5}};
  for (const auto& b : boards) {
    const std::size_t n = b.size();
    const CobMatrix m = build_matrix(family_sequences({FamilyKind::ferrers_rook, n, b}));
    for (std::size_t row = 0; row <= n; ++row) {
      const std::vector<long> board(b.begin(), b.begin() + long(row));
      for (std::size_t col = 0; col <= row; ++col) {
        CAPTURE(row);
        CAPTURE(col);
        CHECK(m.at(row, col) == Rational(count_rook_placements(board, int(row - col))));
      }
    }
  }
}
