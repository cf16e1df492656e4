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

#ifndef MONOCOUNT_ORACLE_HPP_
#define MONOCOUNT_ORACLE_HPP_

// Definition-level verification. Everything here works from first
// principles (powers, closures, exhaustive enumeration and brute-force
// isomorphism search) and is deliberately independent of the structural
// shortcuts in transform, pperm, freeinv and counting that it checks.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monocount/counting.hpp"
#include "monocount/freeinv.hpp"
#include "monocount/pperm.hpp"
#include "monocount/transform.hpp"

namespace monocount::oracle {

  // Least (t, p) with f^(t+p) = f^t, found by listing f^0, f^1, ... until the
  // first repetition.
  ThresholdPeriod threshold_period_by_powers(Transformation const& f);
  // As above, starting from f^1.
  IndexPeriod index_period_by_powers(Transformation const& f);

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  // All n^n transformations, lexicographically by image list.
  void for_each_transformation(std::size_t                                  n,
                               std::function<void(Transformation const&)> fn);

  // All of I_n: every domain subset with every injection, lexicographically
  // by image list with "undefined" before every point.
  void for_each_partial_perm(std::size_t                               n,
                             std::function<void(PartialPerm const&)> fn);

  // All permutations of degree n in lexicographic order.
  std::vector<Transformation> all_permutations(std::size_t n);

  // |I_n| = sum over r of C(n, r)^2 r!.
  std::uint64_t symmetric_inverse_monoid_size(std::size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Finite monoids
  ////////////////////////////////////////////////////////////////////////

  struct FiniteMonoid {
    // table[i][j] is the index of the product of elements i and j.
    std::vector<std::vector<std::size_t>> table;
    std::optional<std::size_t>            identity;
    // The designated generator.
    std::size_t generator = 0;
    // All generators used to build the closure (generator and, for inverse
    // monoids, its inverse).
    std::vector<std::size_t> generators;
    // inverses[i] is the index of the inverse of element i; empty unless the
    // structure is an inverse semigroup.
    std::vector<std::size_t> inverses;

    std::size_t size() const noexcept {
      return table.size();
    }
  };

  template <typename Element>
  struct Closure {
    std::vector<Element> elements;
    FiniteMonoid         monoid;
  };

  inline constexpr std::size_t default_closure_cap = 100'000;
  inline constexpr std::size_t default_iso_cap     = 500;

  // Breadth-first closure of generators under composition. Elements are
  // listed in discovery order: the identity first (if adjoined), then the
  // sorted, deduplicated generators, then products in breadth-first order
  // with generators tried in sorted order. generators.front() becomes the
  // designated generator. Throws LimitExceeded past cap elements, and
  // InputError for an empty generator list.
  Closure<Transformation> closure(std::vector<Transformation> generators,
                                  bool        with_identity,
                                  std::size_t cap = default_closure_cap);

  // As above; with_inverses adds the inverse of every generator, and then
  // monoid.inverses is filled in.
  Closure<PartialPerm> closure(std::vector<PartialPerm> generators,
                               bool                     with_inverses,
                               bool                     with_identity,
                               std::size_t cap = default_closure_cap);

  // S_{n,k} built from its normal forms (freeinv), with the generator x,
  // the identity and inverses marked.
  FiniteMonoid snk_monoid(std::size_t n, std::uint64_t k);

  // Table closed, identity (when present) two-sided, associativity.
  bool satisfies_monoid_axioms(FiniteMonoid const& m);
  // x x' x = x, x' x x' = x' for the recorded inverses, and idempotents
  // commute.
  bool satisfies_inverse_axioms(FiniteMonoid const& m);

  // True iff some assignment of m1's generator to an element of m2 extends
  // to a bijective homomorphism, sending the identity to the identity and,
  // for inverse monoids, the generator's inverse to the image's inverse.
  // Throws LimitExceeded if either size exceeds cap.
  bool brute_iso_monogenic(FiniteMonoid const& m1,
                           FiniteMonoid const& m2,
                           std::size_t         cap = default_iso_cap);

  ////////////////////////////////////////////////////////////////////////
  // Sweeps
  ////////////////////////////////////////////////////////////////////////

  using TypeKey = std::pair<std::uint64_t, std::uint64_t>;

  struct EnumerationReport {
    std::size_t   degree        = 0;
    std::uint64_t universe_size = 0;
    // Each invariant pair found, with the number of elements realising it.
    std::map<TypeKey, std::uint64_t> witnesses;
    std::size_t                      distinct_types = 0;
    count_type                       formula_value  = 0;
    bool                             match          = false;
    std::int64_t                     millis         = 0;
    // Transformation sweeps: the achievable periods for each threshold t
    // are exactly the element orders of S_(n - t).
    std::optional<bool> slices_match;
    // Sweeps that also classified by brute-force isomorphism: whether that
    // classification coincides with the one by invariants.
    std::optional<bool> brute_force_agrees;
  };

  struct SweepOptions {
    // 0 picks std::thread::hardware_concurrency().
    std::size_t threads = 0;
    // Degrees up to which semigroup types are also classified by
    // brute-force isomorphism of closures.
    std::size_t brute_force_max_degree = 3;
  };

  inline constexpr std::size_t max_sweep_degree           = 7;
  inline constexpr std::size_t max_semigroup_sweep_degree = 6;

  // Distinct (threshold, period) over T_n against monoid_type_count(n).
  // Throws InputError unless 1 <= n <= 7.
  EnumerationReport sweep_transformations(std::size_t         n,
                                          SweepOptions const& opts = {});

  // Distinct classify(f) over I_n against inverse_monoid_type_count(n).
  // Throws InputError unless 1 <= n <= 7.
  EnumerationReport sweep_partial_perms(std::size_t         n,
                                        SweepOptions const& opts = {});

  // The semigroup type of the inverse subsemigroup generated by f and f^-1
  // without adjoining the identity of I_n: (0, k) when every chain of f is a
  // single point (the subsemigroup is a cyclic group of order k), and (a, k)
  // otherwise.
  TypeKey inverse_semigroup_invariant(PartialPerm const& f);

  struct SemigroupSweep {
    EnumerationReport transformations;  // against semigroup_type_count(n)
    EnumerationReport partial_perms;    // against inverse_semigroup_type_count
  };

  // Throws InputError unless 1 <= n <= 6.
  SemigroupSweep sweep_semigroup_types(std::size_t         n,
                                       SweepOptions const& opts = {});

  // JSON object {degree, universe_size, distinct_types, formula_value,
  // match, millis}.
  std::string to_json(EnumerationReport const& report);

  ////////////////////////////////////////////////////////////////////////
  // Property checks
  ////////////////////////////////////////////////////////////////////////

  struct SnkRealization {
    std::size_t abstract_size   = 0;  // distinct normal forms
    std::size_t concrete_size   = 0;  // closure in I_{n+k}
    bool        bijective       = false;
    bool        tables_agree    = false;

    bool isomorphic() const noexcept {
      return bijective && tables_agree;
    }
  };

  // Compares the normal-form monoid S_{n,k} with the closure of
  // canonical_generator({n, k}) through snk_to_pperm.
  SnkRealization snk_realization(std::size_t n, std::uint64_t k);

  struct PropertyResult {
    std::string name;
    bool        passed = false;
    std::string detail;
  };

  // Property checks scaled to max_degree (each capped at the degree where it
  // stays fast).
  std::vector<PropertyResult> run_property_suite(std::size_t max_degree);

}  // namespace monocount::oracle

#endif  // MONOCOUNT_ORACLE_HPP_
