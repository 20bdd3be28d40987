#include "doctest.h"

#include <thread>

#include "posg/spectrum.hpp"
#include "oracle_helpers.hpp"

using namespace posg;

namespace {

OrderSpectrum spectrum_of(std::map<std::uint64_t, std::uint64_t> entries) {
  OrderSpectrum sp;
  for (const auto& [order, count] : entries) sp.add(order, count);
  return sp;
}

}  // namespace

TEST_CASE("partition enumeration") {
  SUBCASE("n = 1") {
    const auto parts = partitions_of(1);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].multiplicities == std::map<std::uint64_t, std::uint64_t>{{1, 1}});
  }
  SUBCASE("counts match the independent recursive counter") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(10).size() == 42);
    for (std::uint64_t n = 1; n <= 20; ++n)
      CHECK(BigInt(partitions_of(n).size()) == oracle::partition_count(n));
  }
  SUBCASE("reverse-lexicographic order, deterministic") {
    std::vector<std::vector<std::uint64_t>> seen;
    for_each_partition(5, [&](std::span<const std::uint64_t> parts) {
      seen.emplace_back(parts.begin(), parts.end());
    });
    const std::vector<std::vector<std::uint64_t>> expected = {
        {5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1},
        {1, 1, 1, 1, 1}};
    CHECK(seen == expected);

    std::vector<std::vector<std::uint64_t>> again;
    for_each_partition(5, [&](std::span<const std::uint64_t> parts) {
      again.emplace_back(parts.begin(), parts.end());
    });
    CHECK(seen == again);
  }
  SUBCASE("every visit is a descending partition of n") {
    for_each_partition(13, [&](std::span<const std::uint64_t> parts) {
      std::uint64_t sum = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        sum += parts[i];
        if (i) CHECK(parts[i] <= parts[i - 1]);
      }
      CHECK(sum == 13);
    });
  }
  SUBCASE("bound is enforced") {
    CHECK_THROWS_AS(partitions_of(kDefaultPartitionBound + 1), BudgetError);
    CHECK_THROWS_AS(partitions_of(0), BudgetError);
    CHECK_NOTHROW(partitions_of(6, 6));
    CHECK_THROWS_AS(partitions_of(7, 6), BudgetError);
  }
}

TEST_CASE("cycle type counts against the S_7 census") {
  const oracle::SymmetricCensus census(7);

  const auto count_of = [&](std::vector<std::uint64_t> sorted_cycles) {
    auto it = census.by_cycle_type.find(sorted_cycles);
    REQUIRE(it != census.by_cycle_type.end());
    return it->second;
  };

  // one 3-cycle, four fixed points
  const auto one3 =
      CycleType::from_parts(std::vector<std::uint64_t>{3, 1, 1, 1, 1});
  CHECK(cycle_type_count(one3) == 70);
  CHECK(cycle_type_count(one3) == BigInt(count_of({1, 1, 1, 1, 3})));

  // two 3-cycles, one fixed point
  const auto two3 = CycleType::from_parts(std::vector<std::uint64_t>{3, 3, 1});
  CHECK(cycle_type_count(two3) == 280);
  CHECK(cycle_type_count(two3) == BigInt(count_of({1, 3, 3})));

  // every class of S_6 and S_7, exhaustively
  for (unsigned n : {6u, 7u}) {
    const oracle::SymmetricCensus full(n);
    for (const auto& [cycles, count] : full.by_cycle_type) {
      const auto ct = CycleType::from_parts(cycles);
      CHECK(cycle_type_count(ct) == BigInt(count));
    }
  }
}

TEST_CASE("cycle type basics") {
  const auto identity =
      CycleType::from_parts(std::vector<std::uint64_t>{1, 1, 1, 1});
  CHECK(cycle_type_count(identity) == 1);
  CHECK(cycle_type_order(identity) == 1);
  CHECK(cycle_type_order(CycleType::from_parts(
            std::vector<std::uint64_t>{6, 4, 3})) == 12);

  SUBCASE("class sizes over all partitions sum to n!") {
    for (std::uint64_t n = 1; n <= 10; ++n) {
      BigInt sum = 0;
      for (const auto& ct : partitions_of(n)) sum += cycle_type_count(ct);
      CHECK(sum == factorial(n));
    }
  }
}

TEST_CASE("count_p_products") {
  const oracle::SymmetricCensus census6(6);
  CHECK(count_p_products(6, 3, 1) == 40);
  CHECK(count_p_products(6, 3, 1) ==
        BigInt(census6.by_cycle_type.at({1, 1, 1, 3})));

  for (std::uint64_t p : {3, 5, 7, 11})
    CHECK(count_p_products(p, p, 1) == factorial(p - 1));

  CHECK(count_p_products(12, 3, 4) == 246400);
  CHECK(count_p_products(12, 3, 4) ==
        factorial(12) / (BigInt(81) * 24));
  CHECK(count_p_products(12, 3, 4) ==
        cycle_type_count(CycleType::from_parts(
            std::vector<std::uint64_t>{3, 3, 3, 3})));

  // agreement with the general cycle-type formula wherever both apply
  for (std::uint64_t j = 1; j <= 3; ++j) {
    std::vector<std::uint64_t> parts(j, 5);
    parts.resize(j + (17 - 5 * j), 1);
    CHECK(count_p_products(17, 5, j) ==
          cycle_type_count(CycleType::from_parts(parts)));
  }

  CHECK_THROWS_AS(count_p_products(6, 7, 1), ParameterError);
  CHECK_THROWS_AS(count_p_products(10, 3, 4), ParameterError);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(360) == 96);
  CHECK(euler_phi(360) == oracle::totient_by_gcd(360));
  for (std::uint64_t m = 1; m <= 500; ++m)
    CHECK(euler_phi(m) == oracle::totient_by_gcd(m));

  SUBCASE("totient sums over divisors") {
    for (std::uint64_t m = 1; m <= 2000; ++m) {
      std::uint64_t sum = 0;
      for (auto d : divisors_of(m)) sum += euler_phi(d);
      CHECK(sum == m);
    }
  }
}

TEST_CASE("divisors") {
  CHECK(divisors_of(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors_of(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors_of(360).size() == 24);
  CHECK(divisors_of(97) == std::vector<std::uint64_t>{1, 97});
}

TEST_CASE("closed-form spectra match the frozen examples") {
  CHECK(spectrum_closed_form(GroupSpec::cyclic_power2_product(2, 2)) ==
        spectrum_of({{1, 1}, {2, 3}, {4, 12}}));
  CHECK(spectrum_closed_form(GroupSpec::dihedral(3)) ==
        spectrum_of({{1, 1}, {2, 3}, {3, 2}}));
  CHECK(spectrum_closed_form(GroupSpec::symmetric(4)) ==
        spectrum_of({{1, 1}, {2, 9}, {3, 8}, {4, 6}}));
  CHECK(spectrum_closed_form(GroupSpec::generalized_quaternion(3)) ==
        spectrum_of({{1, 1}, {2, 1}, {4, 6}}));
  CHECK(spectrum_closed_form(GroupSpec::cyclic(1)) == spectrum_of({{1, 1}}));
}

TEST_CASE("brute-force spectra match the frozen examples") {
  CHECK(spectrum_bruteforce(GroupSpec::cyclic(1)) == spectrum_of({{1, 1}}));
  CHECK(spectrum_bruteforce(GroupSpec::generalized_quaternion(3)) ==
        spectrum_of({{1, 1}, {2, 1}, {4, 6}}));

  const auto s5 = spectrum_bruteforce(GroupSpec::symmetric(5));
  CHECK(s5.count_of(2) == 25);
  CHECK(s5.count_of(6) == 20);
  CHECK(s5.total == 120);
}

TEST_CASE("spectrum structural invariants") {
  for (const auto& spec :
       {GroupSpec::symmetric(6), GroupSpec::cyclic(360),
        GroupSpec::cyclic_power2_product(3, 2), GroupSpec::dihedral(24),
        GroupSpec::generalized_quaternion(5)}) {
    CAPTURE(spec.describe());
    const auto sp = spectrum_closed_form(spec);
    CHECK(sp.total == group_order(spec));
    CHECK(sp.count_of(1) == 1);
    BigInt sum = 0;
    for (const auto& [order, count] : sp.entries) {
      CHECK(count >= 1);
      CHECK(sp.total % order == 0);  // orders divide the group order
      sum += count;
    }
    CHECK(sum == sp.total);
  }
}

TEST_CASE("dihedral order-2 counts") {
  for (std::uint64_t n : {2, 4, 6, 10, 100}) {
    CHECK(spectrum_closed_form(GroupSpec::dihedral(n)).count_of(2) ==
          BigInt(n) + 1);
  }
  for (std::uint64_t n : {3, 7, 15}) {
    CHECK(spectrum_closed_form(GroupSpec::dihedral(n)).count_of(2) ==
          BigInt(n));
  }
}

TEST_CASE("oracle equivalence on a fast sample") {
  for (std::uint64_t n = 1; n <= 7; ++n)
    CHECK(spectrum_bruteforce(GroupSpec::symmetric(n)) ==
          spectrum_closed_form(GroupSpec::symmetric(n)));
  for (std::uint64_t n = 2; n <= 30; ++n)
    CHECK(spectrum_bruteforce(GroupSpec::dihedral(n)) ==
          spectrum_closed_form(GroupSpec::dihedral(n)));
  for (std::uint64_t n = 3; n <= 8; ++n)
    CHECK(spectrum_bruteforce(GroupSpec::generalized_quaternion(n)) ==
          spectrum_closed_form(GroupSpec::generalized_quaternion(n)));
  for (std::uint64_t m = 1; m <= 50; ++m)
    CHECK(spectrum_bruteforce(GroupSpec::cyclic(m)) ==
          spectrum_closed_form(GroupSpec::cyclic(m)));
  for (std::uint64_t alpha = 1; alpha <= 5; ++alpha)
    for (std::uint64_t t = 1; alpha * t <= 10; ++t)
      CHECK(spectrum_bruteforce(GroupSpec::cyclic_power2_product(alpha, t)) ==
            spectrum_closed_form(GroupSpec::cyclic_power2_product(alpha, t)));
}

TEST_CASE("parallel brute force is deterministic") {
  const auto spec = GroupSpec::symmetric(7);
  const auto sequential = spectrum_bruteforce(spec, kDefaultEnumerationBudget, 1);
  const auto parallel = spectrum_bruteforce(spec, kDefaultEnumerationBudget, 3);
  CHECK(sequential == parallel);
}

TEST_CASE("order-p counts below 2p are single p-cycles") {
  for (const auto& [n, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {5, 3}, {8, 5}, {12, 7}, {6, 5}, {13, 7}}) {
    REQUIRE(n < 2 * p);
    CHECK(spectrum_closed_form(GroupSpec::symmetric(n)).count_of(p) ==
          count_p_products(n, p, 1));
  }
}

TEST_CASE("spectrum budget refusals") {
  CHECK_THROWS_AS(spectrum_bruteforce(GroupSpec::symmetric(11)), BudgetError);
  CHECK_THROWS_AS(spectrum_closed_form(GroupSpec::symmetric(91)), BudgetError);
  CHECK_NOTHROW(spectrum_closed_form(GroupSpec::symmetric(40)));
}
