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

#include "monocount/counting.hpp"

#include <algorithm>
#include <numeric>

#include "monocount/arith.hpp"
#include "monocount/types.hpp"

namespace monocount {

  std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> result;
    if (n < 2) {
      return result;
    }
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t p = 2; p <= n; ++p) {
      if (composite[p]) {
        continue;
      }
      result.push_back(p);
      for (std::uint64_t q = p * p; q <= n; q += p) {
        composite[q] = true;
      }
    }
    return result;
  }

  std::vector<std::uint64_t> prime_power_decomposition(std::uint64_t m) {
    if (m == 0) {
      throw InputError("0 has no prime-power decomposition");
    }
    std::vector<std::uint64_t> result;
    for (std::uint64_t p = 2; p <= m / p; ++p) {
      if (m % p == 0) {
        std::uint64_t q = 1;
        while (m % p == 0) {
          m /= p;
          q *= p;
        }
        result.push_back(q);
      }
    }
    if (m > 1) {
      result.push_back(m);
    }
    return result;
  }

  std::uint64_t minimal_permutation_degree(std::uint64_t m) {
    std::uint64_t total = 0;
    for (auto q : prime_power_decomposition(m)) {
      total = arith::checked_add(total, q);
    }
    return total;
  }

  std::vector<count_type> element_order_counts(std::size_t max_n) {
    // ways[j] = number of integers whose maximal prime-power divisors sum to
    // exactly j. Each prime contributes at most one of its powers, so this
    // is a 0/1 knapsack over primes with a choice of exponent.
    std::vector<count_type> ways(max_n + 1, 0);
    ways[0] = 1;
    for (auto p : primes_up_to(max_n)) {
      for (std::size_t j = max_n; j >= p; --j) {
        for (std::uint64_t q = p; q <= j; q *= p) {
          ways[j] = arith::checked_add(ways[j], ways[j - q]);
        }
      }
    }
    std::vector<count_type> result(max_n + 1);
    count_type              running = 0;
    for (std::size_t j = 0; j <= max_n; ++j) {
      running   = arith::checked_add(running, ways[j]);
      result[j] = running;
    }
    return result;
  }

  count_type element_order_count(std::size_t n) {
    return element_order_counts(n).back();
  }

  namespace {
    count_type sum_of(std::vector<count_type> const& values, std::size_t from) {
      count_type total = 0;
      for (std::size_t j = from; j < values.size(); ++j) {
        total = arith::checked_add(total, values[j]);
      }
      return total;
    }
  }  // namespace

  count_type monoid_type_count(std::size_t n) {
    if (n == 0) {
      return 1;
    }
    return sum_of(element_order_counts(n), 1);
  }

  count_type inverse_monoid_type_count(std::size_t n) {
    return sum_of(element_order_counts(n), 0);
  }

  count_type semigroup_type_count(std::size_t n) {
    if (n == 0) {
      throw InputError("the semigroup count is defined for n >= 1");
    }
    // T_1 has no element of threshold 1, so no monoid type collapses onto a
    // group type when the identity is dropped.
    if (n == 1) {
      return 1;
    }
    return monoid_type_count(n) - element_order_count(n - 1);
  }

  count_type inverse_semigroup_type_count(std::size_t n) {
    if (n == 0) {
      throw InputError("the inverse semigroup count is defined for n >= 1");
    }
    return inverse_monoid_type_count(n) - element_order_count(n - 1);
  }

  void for_each_partition(std::size_t                                n,
                          std::function<void(Partition const&)> const& fn) {
    Partition parts;
    if (n == 0) {
      fn(parts);
      return;
    }
    parts.push_back(n);
    while (true) {
      fn(parts);
      // Strip the trailing 1s, decrement the last part > 1 and refill the
      // freed amount greedily with parts no larger than it.
      std::size_t freed = 0;
      while (!parts.empty() && parts.back() == 1) {
        parts.pop_back();
        ++freed;
      }
      if (parts.empty()) {
        return;
      }
      std::size_t const part = --parts.back();
      ++freed;
      while (freed > 0) {
        std::size_t const next = std::min(part, freed);
        parts.push_back(next);
        freed -= next;
      }
    }
  }

  std::set<std::uint64_t> partition_lcm_set(std::size_t n, std::size_t bound) {
    if (n > bound) {
      throw LimitExceeded("partition enumeration is capped at n = "
                          + std::to_string(bound));
    }
    std::set<std::uint64_t> result;
    for_each_partition(n, [&result](Partition const& parts) {
      std::uint64_t value = 1;
      for (auto a : parts) {
        value = arith::checked_lcm(value, a);
      }
      result.insert(value);
    });
    return result;
  }

  CountTable count_table(std::size_t max_n) {
    auto const s = element_order_counts(max_n);
    CountTable table;
    table.reserve(max_n + 1);
    count_type running = 0;
    for (std::size_t n = 0; n <= max_n; ++n) {
      running = arith::checked_add(running, s[n]);
      CountRow row{n, s[n], n == 0 ? 1 : running - 1, running, {}, {}};
      if (n >= 1) {
        row.semigroups = n == 1 ? 1 : row.monoids - s[n - 1];
        row.inverse_semigroups = row.inverse_monoids - s[n - 1];
      }
      table.push_back(row);
    }
    return table;
  }

}  // namespace monocount
