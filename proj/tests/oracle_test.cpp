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

#include <algorithm>
#include <random>
#include <set>

#include "monocount/counting.hpp"
#include "monocount/freeinv.hpp"
#include "monocount/oracle.hpp"

namespace monocount {

  namespace {
    using T = Transformation;
    using P = PartialPerm;

    std::set<oracle::TypeKey> keys(oracle::EnumerationReport const& r) {
      std::set<oracle::TypeKey> result;
      for (auto const& [key, count] : r.witnesses) {
        result.insert(key);
      }
      return result;
    }

    std::uint64_t total_witnesses(oracle::EnumerationReport const& r) {
      std::uint64_t total = 0;
      for (auto const& [key, count] : r.witnesses) {
        total += count;
      }
      return total;
    }

    oracle::SweepOptions const single_thread{1, 3};
  }  // namespace

  TEST_CASE("enumeration", "[oracle]") {
    std::size_t count = 0;
    oracle::for_each_transformation(3, [&count](T const&) { ++count; });
    CHECK(count == 27);

    std::vector<P> i2;
    oracle::for_each_partial_perm(2, [&i2](P const& f) { i2.push_back(f); });
    REQUIRE(i2.size() == 7);
    CHECK(to_string(i2.front()) == "- -");
    CHECK(to_string(i2.back()) == "2 1");
    CHECK(std::is_sorted(i2.begin(), i2.end(), [](P const& x, P const& y) {
      // "undefined" sorts first, so compare with UNDEFINED lowest.
      auto key = [](P const& f) {
        std::vector<std::int64_t> k;
        for (auto v : f.images()) {
          k.push_back(v == UNDEFINED ? -1 : std::int64_t(v));
        }
        return k;
      };
      return key(x) < key(y);
    }));

    for (std::size_t n = 0; n <= 5; ++n) {
      std::uint64_t in = 0;
      oracle::for_each_partial_perm(n, [&in](P const&) { ++in; });
      REQUIRE(in == oracle::symmetric_inverse_monoid_size(n));
    }
    CHECK(oracle::symmetric_inverse_monoid_size(7) == 130922);
    CHECK(oracle::all_permutations(3).size() == 6);
  }

  TEST_CASE("transformation sweeps", "[oracle]") {
    auto const r1 = oracle::sweep_transformations(1, single_thread);
    CHECK(keys(r1) == std::set<oracle::TypeKey>{{0, 1}});
    auto const r2 = oracle::sweep_transformations(2, single_thread);
    CHECK(keys(r2) == std::set<oracle::TypeKey>{{0, 1}, {0, 2}, {1, 1}});
    CHECK(r2.universe_size == 4);
    CHECK(r2.formula_value == 3);
    CHECK(r2.match);
    auto const r5 = oracle::sweep_transformations(5);
    CHECK(r5.distinct_types == 16);
    CHECK(r5.match);
    CHECK(r5.slices_match == true);
    CHECK(total_witnesses(r5) == 3125);

    for (std::size_t n = 1; n <= 6; ++n) {
      auto const r = oracle::sweep_transformations(n);
      INFO("n = " << n);
      REQUIRE(r.match);
      REQUIRE(r.distinct_types == monoid_type_count(n));
      REQUIRE(r.slices_match == true);
    }
    CHECK_THROWS_AS(oracle::sweep_transformations(0), InputError);
    CHECK_THROWS_AS(oracle::sweep_transformations(8), InputError);
  }

  TEST_CASE("partial permutation sweeps", "[oracle]") {
    auto const r1 = oracle::sweep_partial_perms(1, single_thread);
    CHECK(keys(r1) == std::set<oracle::TypeKey>{{0, 1}, {1, 1}});
    auto const r2 = oracle::sweep_partial_perms(2, single_thread);
    CHECK(keys(r2)
          == std::set<oracle::TypeKey>{{0, 1}, {0, 2}, {1, 1}, {2, 1}});
    CHECK(r2.universe_size == 7);
    CHECK(total_witnesses(r2) == 7);
    auto const r5 = oracle::sweep_partial_perms(5);
    CHECK(r5.distinct_types == 17);
    CHECK(r5.match);

    for (std::size_t n = 1; n <= 6; ++n) {
      auto const r = oracle::sweep_partial_perms(n);
      INFO("n = " << n);
      REQUIRE(r.match);
      REQUIRE(r.distinct_types == inverse_monoid_type_count(n));
    }
    CHECK_THROWS_AS(oracle::sweep_partial_perms(0), InputError);
    CHECK_THROWS_AS(oracle::sweep_partial_perms(8), InputError);
  }

  TEST_CASE("sweeps do not depend on the thread count", "[oracle]") {
    for (std::size_t threads : {1, 2, 3, 8}) {
      auto const t = oracle::sweep_transformations(5, {threads, 3});
      auto const i = oracle::sweep_partial_perms(5, {threads, 3});
      REQUIRE(t.witnesses == oracle::sweep_transformations(5, single_thread).witnesses);
      REQUIRE(i.witnesses == oracle::sweep_partial_perms(5, single_thread).witnesses);
    }
  }

  TEST_CASE("semigroup sweeps", "[oracle]") {
    auto const s2 = oracle::sweep_semigroup_types(2, single_thread);
    CHECK(s2.transformations.distinct_types == 2);
    CHECK(s2.partial_perms.distinct_types == 3);
    CHECK(s2.transformations.brute_force_agrees == true);
    CHECK(s2.partial_perms.brute_force_agrees == true);

    auto const s5 = oracle::sweep_semigroup_types(5);
    CHECK(s5.transformations.distinct_types == 12);
    CHECK(s5.partial_perms.distinct_types == 13);

    for (std::size_t n = 1; n <= 6; ++n) {
      INFO("n = " << n);
      auto const s = oracle::sweep_semigroup_types(n);
      REQUIRE(s.transformations.match);
      REQUIRE(s.partial_perms.match);
      REQUIRE(s.transformations.formula_value == semigroup_type_count(n));
      REQUIRE(s.partial_perms.formula_value
              == inverse_semigroup_type_count(n));
    }
    CHECK_THROWS_AS(oracle::sweep_semigroup_types(0), InputError);
    CHECK_THROWS_AS(oracle::sweep_semigroup_types(7), InputError);
  }

  TEST_CASE("inverse semigroup invariant", "[oracle]") {
    CHECK(oracle::inverse_semigroup_invariant(P::from_one_based({2, 1}))
          == oracle::TypeKey{0, 2});
    CHECK(oracle::inverse_semigroup_invariant(P::from_one_based({0, 3, 2}))
          == oracle::TypeKey{0, 2});
    CHECK(oracle::inverse_semigroup_invariant(P::from_one_based({2, 0}))
          == oracle::TypeKey{2, 1});
  }

  TEST_CASE("closure examples", "[oracle]") {
    CHECK(oracle::closure({T::identity(3)}, true).elements.size() == 1);
    CHECK(oracle::closure({P::identity(3)}, true, true).elements.size() == 1);

    auto const c = oracle::closure({P::from_one_based({2, 0, 4, 5, 3})}, true, true);
    CHECK(c.elements.size() == 8);
    CHECK(c.elements.size() == snk_size(2, 3));
    REQUIRE(c.monoid.identity.has_value());
    CHECK(c.elements[*c.monoid.identity] == P::identity(5));
    CHECK(c.elements[c.monoid.generator] == P::from_one_based({2, 0, 4, 5, 3}));
    CHECK(oracle::satisfies_inverse_axioms(c.monoid));

    auto const s = oracle::closure({T::from_one_based({2, 3, 1, 1})}, false);
    CHECK(s.elements.size() == 3);
    CHECK_FALSE(s.monoid.identity.has_value());
    CHECK(oracle::satisfies_monoid_axioms(s.monoid));

    CHECK_THROWS_AS(oracle::closure(std::vector<T>{}, true), InputError);
    // A 5-cycle and a transposition generate all 120 permutations.
    CHECK_THROWS_AS(oracle::closure({T::from_one_based({2, 3, 4, 5, 1}),
                                     T::from_one_based({2, 1, 3, 4, 5})},
                                    true,
                                    10),
                    LimitExceeded);
    CHECK(oracle::closure({T::from_one_based({2, 3, 4, 5, 1}),
                           T::from_one_based({2, 1, 3, 4, 5})},
                          true)
              .elements.size()
          == 120);
  }

  TEST_CASE("closure is independent of generator order", "[oracle][property]") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<point_type> dist(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<T> gens;
      for (int g = 0; g < 3; ++g) {
        std::vector<point_type> images(4);
        for (auto& x : images) {
          x = dist(rng);
        }
        gens.emplace_back(images);
      }
      auto const reference = oracle::closure(gens, true);
      std::set<T> expected(reference.elements.begin(), reference.elements.end());
      std::sort(gens.begin(), gens.end());
      do {
        auto const c = oracle::closure(gens, true);
        REQUIRE(std::set<T>(c.elements.begin(), c.elements.end()) == expected);
      } while (std::next_permutation(gens.begin(), gens.end()));
    }
  }

  TEST_CASE("brute-force isomorphism", "[oracle]") {
    auto const c2 = oracle::closure({T::from_one_based({2, 1})}, true).monoid;
    auto const c3 = oracle::closure({T::from_one_based({2, 3, 1})}, true).monoid;
    CHECK(oracle::brute_iso_monogenic(c2, c2));
    CHECK(oracle::brute_iso_monogenic(c3, c3));
    CHECK_FALSE(oracle::brute_iso_monogenic(c2, c3));

    // The (2, 3) generator padded with fixed points.
    auto const small
        = oracle::closure({P::from_one_based({2, 0, 4, 5, 3})}, true, true).monoid;
    auto const padded
        = oracle::closure({P::from_one_based({2, 0, 4, 5, 3, 6, 7, 8, 9})},
                          true,
                          true)
              .monoid;
    CHECK(oracle::brute_iso_monogenic(small, padded));
    // Same size, different presentation parameters.
    auto const other
        = oracle::closure({canonical_generator({1, 2})}, true, true).monoid;
    CHECK_FALSE(oracle::brute_iso_monogenic(small, other));

    CHECK_THROWS_AS(oracle::brute_iso_monogenic(small, padded, 4),
                    LimitExceeded);
  }

  TEST_CASE("S_{n,k} realizations", "[oracle]") {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (std::uint64_t k = 1; k <= 3; ++k) {
        INFO("n = " << n << ", k = " << k);
        auto const r = oracle::snk_realization(n, k);
        REQUIRE(r.isomorphic());
        REQUIRE(r.abstract_size == snk_size(n, k));
        REQUIRE(r.concrete_size == snk_size(n, k));
        auto const m = oracle::snk_monoid(n, k);
        REQUIRE(oracle::satisfies_monoid_axioms(m));
        REQUIRE(oracle::satisfies_inverse_axioms(m));
      }
    }
  }

  TEST_CASE("report serialization", "[oracle]") {
    auto r   = oracle::sweep_transformations(2, single_thread);
    r.millis = 7;
    CHECK(oracle::to_json(r)
          == R"({"degree":2,"universe_size":4,"distinct_types":3,)"
             R"("formula_value":3,"match":true,"millis":7})");
  }

  TEST_CASE("property suite", "[oracle]") {
    auto const results = oracle::run_property_suite(5);
    REQUIRE(results.size() == 13);
    for (auto const& r : results) {
      INFO(r.name << ": " << r.detail);
      CHECK(r.passed);
    }
  }

}  // namespace monocount
