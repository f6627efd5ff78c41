#include <doctest.h>
#include "gmp_compare.hpp"

#include "permfact/closed_forms.hpp"
#include "permfact/enumerate.hpp"

using namespace permfact;

TEST_CASE("hurwitz formula values") {
  CHECK(hurwitz_count(CycleType({3})) == 3);
  CHECK(hurwitz_count(CycleType({6})) == 1296);  // n^{n-2}
  CHECK(hurwitz_count(CycleType({2, 1})) == 8);
  CHECK(hurwitz_count(CycleType({1, 1, 1})) == 24);
}

TEST_CASE("full-cycle signature formula") {
  Signature two2;
  two2.add(2, 2);
  CHECK(fullcycle_signature_count(3, two2) == 3);
  Signature mixed;
  mixed.add(2, 1);
  mixed.add(3, 1);
  CHECK(fullcycle_signature_count(4, mixed) == 8);
  Signature single3;
  single3.add(3, 1);
  CHECK(fullcycle_signature_count(3, single3) == 1);
  CHECK_THROWS_AS(fullcycle_signature_count(4, two2), DomainViolation);
}

TEST_CASE("springer formula, pinned against the brute-force oracle") {
  Signature two2;
  two2.add(2, 2);
  CHECK(springer_count(3, two2) == 3);
  Signature single3;
  single3.add(3, 1);
  CHECK(springer_count(3, single3) == 1);
  Signature three2;
  three2.add(2, 3);
  // the value the formula must take at n=4, beta2=3: brute force pins 12
  CHECK(count_inequivalent(CycleType({4}), three2, 0) == 12);
  CHECK(springer_count(4, three2) == 12);
  CHECK(springer_count(4, three2) == eidswick_longyear(4));
}

TEST_CASE("springer matches brute force for every signature with n <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& beta : signatures_with_depth(n - 1))
      CHECK(springer_count(n, beta) == make_int(count_inequivalent(CycleType({n}), beta, 0)));
}

TEST_CASE("eidswick-longyear and the two-part coefficient extraction") {
  CHECK(eidswick_longyear(3) == 3);
  CHECK(eidswick_longyear(4) == 12);
  CHECK(eidswick_longyear(6) == 273);
  CHECK(two_part_transpositions(2, 1) == 8);
  Signature beta;
  beta.add(2, 3);
  CHECK(make_int(count_inequivalent(CycleType({2, 1}), beta, 0)) == two_part_transpositions(2, 1));
}

TEST_CASE("constellation polynomial at the printed conventions") {
  for (long long r = 0; r <= 4; ++r) CHECK(constellation_count(CycleType({1}), r) == Rat(1));
  CHECK(constellation_count(CycleType({3}), 2) == Rat(5));
  CHECK(constellation_count(CycleType({3}), -1) == Rat(2));
}

TEST_CASE("constellation agrees with the binomial-transform polynomial") {
  for (const auto& parts : {std::vector<int>{3}, {2, 1}, {1, 1, 1}, {2, 2}, {4}}) {
    CycleType alpha(parts);
    for (long long r = -1; r <= minimal_depth(alpha, 0); ++r)
      CHECK(constellation_count(alpha, r) == count_all(alpha, r, 0));
  }
}

TEST_CASE("monotone closed form") {
  CHECK(goulden_monotone(CycleType({3})) == 2);
  CHECK(goulden_monotone(CycleType({2, 1})) == 4);
  CHECK(goulden_monotone(CycleType({1})) == 1);
  // catalan diagonal
  CHECK(goulden_monotone(CycleType({7})) == 132);
  for (const auto& parts : {std::vector<int>{2, 2}, {3, 1}, {1, 1, 1}, {2, 1, 1}}) {
    CycleType alpha(parts);
    CHECK(goulden_monotone(alpha) == make_int(count_monotone(alpha, 0)));
  }
}
