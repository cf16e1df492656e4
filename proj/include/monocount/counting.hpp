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

#ifndef MONOCOUNT_COUNTING_HPP_
#define MONOCOUNT_COUNTING_HPP_

// Counts of isomorphism types of monogenic monoids, inverse monoids,
// semigroups and inverse semigroups embedded in T_n and I_n.
//
// Every count is derived from the number of distinct element orders of the
// symmetric group S_n. That number is computed from the characterisation
// "m is the order of a permutation of n points iff the sum of the maximal
// prime-power divisors of m is at most n", which is checked against a direct
// enumeration of the partitions of n (partition_lcm_set) in the test suite.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace monocount {

  using count_type = std::uint64_t;

  // Primes p <= n in increasing order.
  std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

  // The maximal prime-power divisors of m in increasing order of prime,
  // e.g. 360 -> {8, 9, 5}. Empty for m = 1. Throws InputError for m = 0.
  std::vector<std::uint64_t> prime_power_decomposition(std::uint64_t m);

  // Least n such that S_n has an element of order m: the sum of the maximal
  // prime-power divisors of m (0 for m = 1).
  std::uint64_t minimal_permutation_degree(std::uint64_t m);

  // s(0), ..., s(max_n) where s(n) is the number of distinct orders of
  // elements of S_n. Throws std::overflow_error when a value does not fit in
  // 64 bits (first at n = 2611).
  std::vector<count_type> element_order_counts(std::size_t max_n);

  // s(n).
  count_type element_order_count(std::size_t n);

  // t(n), the number of monogenic submonoids of T_n up to isomorphism:
  // s(1) + ... + s(n) for n >= 1, and 1 for n = 0.
  count_type monoid_type_count(std::size_t n);

  // i(n), the number of monogenic inverse submonoids of I_n up to
  // isomorphism: s(0) + ... + s(n).
  count_type inverse_monoid_type_count(std::size_t n);

  // Monogenic subsemigroups of T_n up to isomorphism, t(n) - s(n - 1) for
  // n >= 2 and 1 for n = 1. Throws InputError for n = 0.
  count_type semigroup_type_count(std::size_t n);

  // Monogenic inverse subsemigroups of I_n up to isomorphism,
  // i(n) - s(n - 1). Throws InputError for n = 0.
  count_type inverse_semigroup_type_count(std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Partitions
  ////////////////////////////////////////////////////////////////////////

  using Partition = std::vector<std::size_t>;

  // Calls fn on every partition of n (parts non-increasing), starting with
  // {n} and descending lexicographically to {1, ..., 1}. The empty partition
  // is the only partition of 0.
  void for_each_partition(std::size_t                                n,
                          std::function<void(Partition const&)> const& fn);

  inline constexpr std::size_t default_partition_bound = 50;

  // {lcm(a_1, ..., a_k) : a_1 + ... + a_k = n} by enumerating every
  // partition. Throws LimitExceeded if n > bound.
  std::set<std::uint64_t>
  partition_lcm_set(std::size_t n, std::size_t bound = default_partition_bound);

  ////////////////////////////////////////////////////////////////////////
  // CountTable
  ////////////////////////////////////////////////////////////////////////

  struct CountRow {
    std::size_t n;
    count_type  element_orders;       // s
    count_type  monoids;              // t
    count_type  inverse_monoids;      // i
    // Undefined for n = 0.
    std::optional<count_type> semigroups;          // t(n) - s(n - 1)
    std::optional<count_type> inverse_semigroups;  // i(n) - s(n - 1)

    friend bool operator==(CountRow const&, CountRow const&) = default;
  };

  using CountTable = std::vector<CountRow>;

  // Rows for n = 0, ..., max_n.
  CountTable count_table(std::size_t max_n);

  enum class TableFormat { csv, json, markdown };

  // CSV: header "n,s,t,i,semi_t,semi_i", empty fields where undefined.
  std::string to_csv(CountTable const& table);
  // JSON: an array with one object per row, one row per line; undefined
  // fields are null.
  std::string to_json(CountTable const& table);
  // Markdown: rows n, s, t, i against columns 0, ..., max_n, right aligned.
  std::string to_markdown(CountTable const& table);
  std::string format_table(CountTable const& table, TableFormat format);

}  // namespace monocount

#endif  // MONOCOUNT_COUNTING_HPP_
