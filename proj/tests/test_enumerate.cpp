#include <doctest.h>
#include "gmp_compare.hpp"

#include <set>

#include "permfact/closed_forms.hpp"
#include "permfact/enumerate.hpp"

using namespace permfact;

TEST_CASE("minimal transitive transposition factorizations of a 3-cycle") {
  EnumSpec spec;
  spec.target = Permutation::from_cycles(3, {{1, 2, 3}});
  spec.kind = FactorKind::Transpositions;
  spec.genus = 0;
  spec.transitive_only = true;
  std::set<std::vector<Cycle>> seen;
  enumerate_cycle_factorizations(spec, [&](const CycleFactorization& f) {
    seen.insert(f.factors);
    return true;
  });
  std::set<std::vector<Cycle>> expected = {
      {Cycle({1, 2}), Cycle({2, 3})}, {Cycle({2, 3}), Cycle({1, 3})},
      {Cycle({1, 3}), Cycle({1, 2})}};
  CHECK(seen == expected);
}

TEST_CASE("edge cases of the enumerator") {
  EnumSpec spec;
  spec.target = Permutation::identity(1);
  spec.kind = FactorKind::Cycles;
  spec.length = 0;
  long long count = 0;
  enumerate_cycle_factorizations(spec, [&](const CycleFactorization& f) {
    CHECK(f.length() == 0);
    ++count;
    return true;
  });
  CHECK(count == 1);

  // genus without transitivity is rejected, resource bounds are explicit
  EnumSpec bad;
  bad.target = Permutation::identity(3);
  bad.genus = 0;
  CHECK_THROWS_AS(enumerate_cycle_factorizations(bad, [](const CycleFactorization&) {
    return true;
  }),
                  DomainViolation);
  EnumSpec big;
  big.target = Permutation::identity(8);
  big.kind = FactorKind::Transpositions;
  big.depth = 2;
  CHECK_THROWS_AS(enumerate_cycle_factorizations(big, [](const CycleFactorization&) {
    return true;
  }),
                  ResourceLimit);
}

TEST_CASE("higher-genus transposition count in S3") {
  // factorizations of (1 2) in S3 into three transpositions, transitive
  Signature beta;
  beta.add(2, 3);
  CHECK(count_ordinary_cycle(CycleType({2, 1}), beta, 1) == 8);
}

TEST_CASE("inequivalent counts against the printed full-cycle values") {
  Signature two2;
  two2.add(2, 2);
  CHECK(count_inequivalent(CycleType({3}), two2, 0) == 3);
  Signature three2;
  three2.add(2, 3);
  CHECK(count_inequivalent(CycleType({4}), three2, 0) == 12);
  CHECK(count_inequivalent(CycleType({2, 1}), three2, 0) == 8);
  // inconsistent genus/signature combinations are empty
  CHECK(count_inequivalent(CycleType({3}), three2, 0) == 0);
}

TEST_CASE("parallel counting is independent of the job count") {
  Signature beta;
  beta.add(2, 5);
  for (int jobs : {1, 2, 3, 7}) {
    CHECK(count_inequivalent(CycleType({4, 2}), beta, 0, jobs) ==
          count_inequivalent(CycleType({4, 2}), beta, 0, 1));
    CHECK(count_ordinary_cycle(CycleType({4, 2}), beta, 0, jobs) ==
          count_ordinary_cycle(CycleType({4, 2}), beta, 0, 1));
  }
}

TEST_CASE("ordinary cycle counts") {
  Signature two2;
  two2.add(2, 2);
  CHECK(count_ordinary_cycle(CycleType({3}), two2, 0) == 3);
  Signature mixed;
  mixed.add(2, 1);
  mixed.add(3, 1);
  CHECK(count_ordinary_cycle(CycleType({4}), mixed, 0) == 8);
  Signature four2;
  four2.add(2, 4);
  CHECK(count_ordinary_cycle(CycleType({1, 1, 1}), four2, 0) == 24);
  CHECK(count_inequivalent(CycleType({1, 1, 1}), four2, 0) == 24);
}

TEST_CASE("monotone counts: catalan numbers and small classes") {
  CHECK(count_monotone(CycleType({3}), 0) == 2);
  CHECK(count_monotone(CycleType({1}), 0) == 1);
  CHECK(count_monotone(CycleType({2, 1}), 0) == 4);
  CHECK(count_monotone(CycleType({7}), 0) == 132);
}

TEST_CASE("proper and polynomial counts for the 3-cycle") {
  CHECK(count_proper(CycleType({3}), 2, 0) == 3);
  CHECK(count_all(CycleType({3}), 2, 0) == Rat(5));
  CHECK(count_all_direct(CycleType({3}), 2, 0) == 5);
  CHECK(count_all(CycleType({3}), -1, 0) == Rat(2));
  for (long long r = 0; r <= 4; ++r) CHECK(count_all(CycleType({1}), r, 0) == Rat(1));
}

TEST_CASE("count_all agrees with direct enumeration with identity factors") {
  for (const auto& parts : {std::vector<int>{3}, {2, 1}, {2, 2}, {1, 1, 1}}) {
    CycleType alpha(parts);
    long long dmax = minimal_depth(alpha, 0);
    for (long long r = 0; r <= dmax; ++r)
      CHECK(count_all(alpha, r, 0) == Rat(static_cast<long>(count_all_direct(alpha, r, 0))));
  }
}

TEST_CASE("theorem of four connections at small sizes") {
  auto r1 = verify_connections(CycleType({3}), 0);
  CHECK(r1.ok);
  CHECK(r1.monotone_side == 2);
  auto r2 = verify_connections(CycleType({1}), 0);
  CHECK(r2.ok);
  CHECK(r2.monotone_side == 1);
  auto r3 = verify_connections(CycleType({2, 1}), 0);
  CHECK(r3.ok);
  CHECK(r3.monotone_side == -4);
  auto hist = inequivalent_by_length(CycleType({2, 1}), 0);
  CHECK(hist[2] == 4);
  CHECK(hist[3] == 8);
}

TEST_CASE("inequivalent counts do not depend on the class representative") {
  Signature beta;
  beta.add(2, 3);
  CHECK(count_inequivalent(CycleType({2, 1}), beta, 0) ==
        count_inequivalent(CycleType({1, 2}), beta, 0));
  Signature beta2;
  beta2.add(2, 2);
  beta2.add(3, 1);
  CHECK(count_inequivalent(CycleType({3, 2}), beta2, 0) ==
        count_inequivalent(CycleType({2, 3}), beta2, 0));
}

TEST_CASE("hurwitz closed form against enumeration for small classes") {
  for (const auto& parts : {std::vector<int>{2}, {3}, {2, 1}, {1, 1, 1}, {4}, {2, 2}}) {
    CycleType alpha(parts);
    Signature beta;
    beta.add(2, minimal_depth(alpha, 0));
    CHECK(make_int(count_ordinary_cycle(alpha, beta, 0)) == hurwitz_count(alpha));
  }
}

TEST_CASE("signature and composition helpers") {
  auto sigs = signatures_with_depth(3);
  CHECK(sigs.size() == 3);  // (2,2,2), (2,3), (4) as cycle lengths
  CHECK(compositions_of(4).size() == 8);
  CHECK(partitions_of(5).size() == 7);
}
