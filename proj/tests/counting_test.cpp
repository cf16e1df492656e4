// Copyright 2026 The monocount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "monocount/counting.hpp"
#include "monocount/types.hpp"

namespace monocount {

  namespace {
    constexpr std::array<count_type, 20> table_s
        = {1, 1, 2, 3, 4, 6, 6, 9, 11, 14, 16, 20, 23, 27, 31, 35, 43, 47, 55, 61};
    constexpr std::array<count_type, 20> table_t
        = {1,  1,  3,   6,   10,  16,  22,  31,  42,  56,
           72, 92, 115, 142, 173, 208, 251, 298, 353, 414};
    constexpr std::array<count_type, 20> table_i
        = {1,  2,  4,   7,   11,  17,  23,  32,  43,  57,
           73, 93, 116, 143, 174, 209, 252, 299, 354, 415};

    // lcm of parts over all partitions, by plain recursion on the largest
    // part; independent of the library's partition enumerator.
    void collect_lcms(std::size_t             remaining,
                      std::size_t             max_part,
                      std::uint64_t           lcm,
                      std::set<std::uint64_t>& out) {
      if (remaining == 0) {
        out.insert(lcm);
        return;
      }
      for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
        collect_lcms(remaining - part, part, std::lcm(lcm, part), out);
      }
    }

    std::size_t naive_order_count(std::size_t n) {
      std::set<std::uint64_t> out;
      collect_lcms(n, n, 1, out);
      return out.size();
    }
  }  // namespace

  TEST_CASE("primes and prime powers", "[counting]") {
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(20)
          == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
    CHECK(prime_power_decomposition(360) == std::vector<std::uint64_t>{8, 9, 5});
    CHECK(prime_power_decomposition(1).empty());
    CHECK(prime_power_decomposition(97) == std::vector<std::uint64_t>{97});
    CHECK_THROWS_AS(prime_power_decomposition(0), InputError);
  }

  TEST_CASE("minimal_permutation_degree", "[counting]") {
    CHECK(minimal_permutation_degree(1) == 0);
    CHECK(minimal_permutation_degree(6) == 5);
    CHECK(minimal_permutation_degree(12) == 7);
    CHECK(minimal_permutation_degree(60) == 12);
    // Agrees with the least n whose partitions reach m.
    std::vector<std::set<std::uint64_t>> sets;
    for (std::size_t n = 0; n <= 30; ++n) {
      sets.push_back(partition_lcm_set(n));
    }
    for (std::uint64_t m = 2; m <= 200; ++m) {
      std::size_t least = 0;
      while (least < sets.size() && !sets[least].contains(m)) {
        ++least;
      }
      if (least < sets.size()) {
        REQUIRE(minimal_permutation_degree(m) == least);
      } else {
        REQUIRE(minimal_permutation_degree(m) > 30);
      }
    }
  }

  TEST_CASE("partitions", "[counting]") {
    std::vector<Partition> parts;
    for_each_partition(4, [&parts](Partition const& p) { parts.push_back(p); });
    CHECK(parts
          == std::vector<Partition>{
              {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    std::size_t zero = 0;
    for_each_partition(0, [&zero](Partition const& p) {
      CHECK(p.empty());
      ++zero;
    });
    CHECK(zero == 1);
    std::size_t count = 0;
    for_each_partition(20, [&count](Partition const&) { ++count; });
    CHECK(count == 627);

    CHECK(partition_lcm_set(5) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6});
    CHECK(partition_lcm_set(0) == std::set<std::uint64_t>{1});
    CHECK(partition_lcm_set(7)
          == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 10, 12});
    CHECK_THROWS_AS(partition_lcm_set(51), LimitExceeded);
    CHECK(partition_lcm_set(51, 60).size() == element_order_count(51));
  }

  TEST_CASE("reference values", "[counting]") {
    auto const table = count_table(19);
    REQUIRE(table.size() == 20);
    for (std::size_t n = 0; n < 20; ++n) {
      INFO("n = " << n);
      CHECK(element_order_count(n) == table_s[n]);
      CHECK(monoid_type_count(n) == table_t[n]);
      CHECK(inverse_monoid_type_count(n) == table_i[n]);
      CHECK(table[n].n == n);
      CHECK(table[n].element_orders == table_s[n]);
      CHECK(table[n].monoids == table_t[n]);
      CHECK(table[n].inverse_monoids == table_i[n]);
    }
  }

  TEST_CASE("DP agrees with partition enumeration", "[counting][oracle]") {
    auto const s = element_order_counts(50);
    for (std::size_t n = 0; n <= 50; ++n) {
      INFO("n = " << n);
      REQUIRE(s[n] == partition_lcm_set(n).size());
      if (n <= 30) {
        REQUIRE(s[n] == naive_order_count(n));
      }
    }
  }

  TEST_CASE("telescoping and monotonicity", "[counting][property]") {
    auto const s = element_order_counts(300);
    for (std::size_t n = 1; n <= 300; ++n) {
      INFO("n = " << n);
      REQUIRE(s[n] >= s[n - 1]);
      REQUIRE(monoid_type_count(n) - monoid_type_count(n - 1) == s[n]
              - (n == 1 ? 1 : 0));
      REQUIRE(inverse_monoid_type_count(n) - inverse_monoid_type_count(n - 1)
              == s[n]);
      REQUIRE(inverse_monoid_type_count(n) == monoid_type_count(n) + 1);
    }
  }

  TEST_CASE("semigroup counts", "[counting]") {
    CHECK(semigroup_type_count(1) == 1);
    CHECK(semigroup_type_count(2) == 2);
    CHECK(semigroup_type_count(5) == 12);
    CHECK(inverse_semigroup_type_count(1) == 1);
    CHECK(inverse_semigroup_type_count(5) == 13);
    CHECK_THROWS_AS(semigroup_type_count(0), InputError);
    CHECK_THROWS_AS(inverse_semigroup_type_count(0), InputError);
    for (std::size_t n = 2; n <= 40; ++n) {
      REQUIRE(semigroup_type_count(n)
              == monoid_type_count(n) - element_order_count(n - 1));
      REQUIRE(inverse_semigroup_type_count(n)
              == inverse_monoid_type_count(n) - element_order_count(n - 1));
    }
    auto const table = count_table(3);
    CHECK_FALSE(table[0].semigroups.has_value());
    CHECK_FALSE(table[0].inverse_semigroups.has_value());
    CHECK(table[1].semigroups == 1);
    CHECK(table[3].inverse_semigroups == 5);
  }

  TEST_CASE("64-bit limits", "[counting]") {
    CHECK_NOTHROW(element_order_count(2610));
    CHECK_THROWS_AS(element_order_count(2611), std::overflow_error);
    CHECK_NOTHROW(monoid_type_count(2036));
    CHECK_THROWS_AS(monoid_type_count(2037), std::overflow_error);
    CHECK_NOTHROW(inverse_monoid_type_count(2036));
    CHECK_THROWS_AS(inverse_monoid_type_count(2037), std::overflow_error);
  }

  TEST_CASE("table formats", "[counting]") {
    auto const table = count_table(2);
    CHECK(to_csv(table)
          == "n,s,t,i,semi_t,semi_i\n"
             "0,1,1,1,,\n"
             "1,1,1,2,1,1\n"
             "2,2,3,4,2,3\n");
    CHECK(to_json(table)
          == "[\n"
             R"({"n":0,"s":1,"t":1,"i":1,"semi_t":null,"semi_i":null},)" "\n"
             R"({"n":1,"s":1,"t":1,"i":2,"semi_t":1,"semi_i":1},)" "\n"
             R"({"n":2,"s":2,"t":3,"i":4,"semi_t":2,"semi_i":3})" "\n"
             "]\n");
    CHECK(to_markdown(table)
          == "|   n |   0 |   1 |   2 |\n"
             "| --: | --: | --: | --: |\n"
             "|   s |   1 |   1 |   2 |\n"
             "|   t |   1 |   1 |   3 |\n"
             "|   i |   1 |   2 |   4 |\n");
    CHECK(format_table(table, TableFormat::csv) == to_csv(table));
    CHECK(format_table(table, TableFormat::markdown) == to_markdown(table));
    // Columns widen independently; every line stays the same length.
    std::istringstream wide(to_markdown(count_table(40)));
    std::string        line;
    std::set<std::size_t> lengths;
    while (std::getline(wide, line)) {
      lengths.insert(line.size());
    }
    CHECK(lengths.size() == 1);
  }

}  // namespace monocount
