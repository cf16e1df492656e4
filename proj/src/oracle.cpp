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

#include "monocount/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "json.hpp"

namespace monocount::oracle {

  ThresholdPeriod threshold_period_by_powers(Transformation const& f) {
    if (f.degree() == 0) {
      throw InputError("threshold and period require degree at least 1");
    }
    std::map<Transformation, std::size_t> first_seen;
    Transformation current = Transformation::identity(f.degree());
    for (std::size_t e = 0;; ++e) {
      auto [it, inserted] = first_seen.emplace(current, e);
      if (!inserted) {
        return {it->second, e - it->second};
      }
      current = compose(current, f);
    }
  }

  IndexPeriod index_period_by_powers(Transformation const& f) {
    if (f.degree() == 0) {
      throw InputError("index and period require degree at least 1");
    }
    std::map<Transformation, std::size_t> first_seen;
    Transformation                        current = f;
    for (std::size_t e = 1;; ++e) {
      auto [it, inserted] = first_seen.emplace(current, e);
      if (!inserted) {
        return {it->second, e - it->second};
      }
      current = compose(current, f);
    }
  }

  namespace {

    constexpr std::size_t NONE = std::numeric_limits<std::size_t>::max();

    std::size_t thread_count(SweepOptions const& opts) {
      std::size_t n = opts.threads;
      if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
      }
      return n;
    }

    // Runs fn(shard) for shard = 0, ..., shards - 1 on a pool of threads and
    // returns the results indexed by shard.
    template <typename Fn>
    auto run_shards(std::size_t shards, std::size_t threads, Fn fn) {
      using Result = std::invoke_result_t<Fn, std::size_t>;
      std::vector<Result>      results(shards);
      std::atomic<std::size_t> next{0};
      auto                     worker = [&]() {
        for (std::size_t s = next++; s < shards; s = next++) {
          results[s] = fn(s);
        }
      };
      threads = std::min(threads, shards);
      if (threads <= 1) {
        worker();
        return results;
      }
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
      }
      pool.clear();
      return results;
    }

    // Transformations whose first image is `first`.
    void transformations_with_first(
        std::size_t                                        n,
        point_type                                         first,
        std::function<void(Transformation const&)> const& fn) {
      std::vector<point_type> images(n, 0);
      images[0] = first;
      while (true) {
        fn(Transformation(images));
        std::size_t i = n;
        while (i > 1) {
          --i;
          if (++images[i] < n) {
            break;
          }
          images[i] = 0;
          if (i == 1) {
            return;
          }
        }
        if (n == 1) {
          return;
        }
      }
    }

    void partial_perms_from(std::size_t                                     n,
                            std::size_t                                     i,
                            std::vector<point_type>&                        images,
                            std::vector<bool>&                              used,
                            std::function<void(PartialPerm const&)> const& fn) {
      if (i == n) {
        fn(PartialPerm(images));
        return;
      }
      images[i] = UNDEFINED;
      partial_perms_from(n, i + 1, images, used, fn);
      for (point_type x = 0; x < n; ++x) {
        if (!used[x]) {
          used[x]   = true;
          images[i] = x;
          partial_perms_from(n, i + 1, images, used, fn);
          used[x] = false;
        }
      }
      images[i] = UNDEFINED;
    }

    // Partial perms whose first image is `first` (UNDEFINED allowed).
    void partial_perms_with_first(
        std::size_t                                     n,
        point_type                                      first,
        std::function<void(PartialPerm const&)> const& fn) {
      std::vector<point_type> images(n, UNDEFINED);
      std::vector<bool>       used(n, false);
      images[0] = first;
      if (first != UNDEFINED) {
        used[first] = true;
      }
      partial_perms_from(n, 1, images, used, fn);
    }

    point_type shard_to_first_pperm_image(std::size_t shard) {
      return shard == 0 ? UNDEFINED : static_cast<point_type>(shard - 1);
    }

    template <typename Element, typename Hash>
    Closure<Element> build_closure(Element const&         designated,
                                   std::vector<Element>   gens,
                                   std::optional<Element> identity,
                                   std::size_t            cap) {
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

      Closure<Element>                             result;
      auto&                                        elements = result.elements;
      std::unordered_map<Element, std::size_t, Hash> index;
      auto add = [&](Element const& e) -> std::size_t {
        auto [it, inserted] = index.emplace(e, elements.size());
        if (inserted) {
          if (elements.size() >= cap) {
            throw LimitExceeded("closure exceeds " + std::to_string(cap)
                                + " elements");
          }
          elements.push_back(e);
        }
        return it->second;
      };

      if (identity) {
        result.monoid.identity = add(*identity);
      }
      for (auto const& g : gens) {
        result.monoid.generators.push_back(add(g));
      }
      result.monoid.generator = index.at(designated);
      for (std::size_t i = 0; i < elements.size(); ++i) {
        Element const current = elements[i];
        for (auto const& g : gens) {
          add(compose(current, g));
        }
      }
      std::size_t const size = elements.size();
      result.monoid.table.assign(size, std::vector<std::size_t>(size));
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          result.monoid.table[i][j]
              = index.at(compose(elements[i], elements[j]));
        }
      }
      return result;
    }

  }  // namespace

  void for_each_transformation(std::size_t                                  n,
                               std::function<void(Transformation const&)> fn) {
    if (n == 0) {
      fn(Transformation());
      return;
    }
    for (point_type first = 0; first < n; ++first) {
      transformations_with_first(n, first, fn);
    }
  }

  void for_each_partial_perm(std::size_t                               n,
                             std::function<void(PartialPerm const&)> fn) {
    if (n == 0) {
      fn(PartialPerm());
      return;
    }
    for (std::size_t shard = 0; shard <= n; ++shard) {
      partial_perms_with_first(n, shard_to_first_pperm_image(shard), fn);
    }
  }

  std::vector<Transformation> all_permutations(std::size_t n) {
    std::vector<point_type> images(n);
    std::iota(images.begin(), images.end(), point_type(0));
    std::vector<Transformation> result;
    do {
      result.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return result;
  }

  std::uint64_t symmetric_inverse_monoid_size(std::size_t n) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(n, r)
    std::uint64_t fact  = 1;  // r!
    for (std::uint64_t r = 0; r <= n; ++r) {
      if (r > 0) {
        binom = binom * (n - r + 1) / r;
        fact *= r;
      }
      total += binom * binom * fact;
    }
    return total;
  }

  Closure<Transformation> closure(std::vector<Transformation> generators,
                                  bool                        with_identity,
                                  std::size_t                 cap) {
    if (generators.empty()) {
      throw InputError("a closure needs at least one generator");
    }
    Transformation const designated = generators.front();
    std::optional<Transformation> one;
    if (with_identity) {
      one = Transformation::identity(designated.degree());
    }
    return build_closure<Transformation, TransformationHash>(
        designated, std::move(generators), one, cap);
  }

  Closure<PartialPerm> closure(std::vector<PartialPerm> generators,
                               bool                     with_inverses,
                               bool                     with_identity,
                               std::size_t              cap) {
    if (generators.empty()) {
      throw InputError("a closure needs at least one generator");
    }
    PartialPerm const designated = generators.front();
    if (with_inverses) {
      std::size_t const count = generators.size();
      for (std::size_t i = 0; i < count; ++i) {
        generators.push_back(inverse(generators[i]));
      }
    }
    std::optional<PartialPerm> one;
    if (with_identity) {
      one = PartialPerm::identity(designated.degree());
    }
    auto result = build_closure<PartialPerm, PartialPermHash>(
        designated, std::move(generators), one, cap);
    if (with_inverses) {
      std::map<PartialPerm, std::size_t> index;
      for (std::size_t i = 0; i < result.elements.size(); ++i) {
        index.emplace(result.elements[i], i);
      }
      result.monoid.inverses.reserve(result.elements.size());
      for (auto const& e : result.elements) {
        result.monoid.inverses.push_back(index.at(inverse(e)));
      }
    }
    return result;
  }

  FiniteMonoid snk_monoid(std::size_t n, std::uint64_t k) {
    auto const   cayley = cayley_table(n, k, std::numeric_limits<std::size_t>::max());
    FiniteMonoid m;
    m.table = cayley.products;
    std::map<SnkElement, std::size_t> index;
    for (std::size_t i = 0; i < cayley.elements.size(); ++i) {
      index.emplace(snk_normalize(cayley.elements[i]), i);
    }
    m.identity  = index.at(snk_normalize(snk_identity(n, k)));
    m.generator = index.at(snk_normalize(snk_generator(n, k)));
    for (auto const& e : cayley.elements) {
      m.inverses.push_back(index.at(snk_normalize(snk_invert(e))));
    }
    m.generators = {m.generator};
    if (m.inverses[m.generator] != m.generator) {
      m.generators.push_back(m.inverses[m.generator]);
    }
    return m;
  }

  bool satisfies_monoid_axioms(FiniteMonoid const& m) {
    std::size_t const n = m.size();
    for (auto const& row : m.table) {
      if (row.size() != n) {
        return false;
      }
      for (auto x : row) {
        if (x >= n) {
          return false;
        }
      }
    }
    if (m.identity) {
      std::size_t const one = *m.identity;
      for (std::size_t x = 0; x < n; ++x) {
        if (m.table[one][x] != x || m.table[x][one] != x) {
          return false;
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (m.table[m.table[x][y]][z] != m.table[x][m.table[y][z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool satisfies_inverse_axioms(FiniteMonoid const& m) {
    std::size_t const n = m.size();
    if (m.inverses.size() != n) {
      return false;
    }
    auto const& t = m.table;
    std::vector<std::size_t> idempotents;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t const y = m.inverses[x];
      if (y >= n || t[t[x][y]][x] != x || t[t[y][x]][y] != y) {
        return false;
      }
      if (t[x][x] == x) {
        idempotents.push_back(x);
      }
    }
    for (auto e : idempotents) {
      for (auto f : idempotents) {
        if (t[e][f] != t[f][e]) {
          return false;
        }
      }
    }
    return true;
  }

  bool brute_iso_monogenic(FiniteMonoid const& m1,
                           FiniteMonoid const& m2,
                           std::size_t         cap) {
    if (m1.size() > cap || m2.size() > cap) {
      throw LimitExceeded("brute-force isomorphism is capped at "
                          + std::to_string(cap) + " elements");
    }
    if (m1.size() != m2.size() || m1.identity.has_value() != m2.identity.has_value()
        || m1.inverses.empty() != m2.inverses.empty()) {
      return false;
    }
    std::size_t const n     = m1.size();
    auto const&       t1    = m1.table;
    auto const&       t2    = m2.table;
    bool const        inv   = !m1.inverses.empty();

    for (std::size_t h = 0; h < n; ++h) {
      std::vector<std::size_t> phi(n, NONE);
      std::vector<std::size_t> queue;
      bool                     ok   = true;
      auto                     seed = [&](std::size_t x, std::size_t y) {
        if (phi[x] == NONE) {
          phi[x] = y;
          queue.push_back(x);
        } else if (phi[x] != y) {
          ok = false;
        }
      };
      seed(m1.generator, h);
      if (m1.identity) {
        seed(*m1.identity, *m2.identity);
      }
      if (inv) {
        seed(m1.inverses[m1.generator], m2.inverses[h]);
      }
      for (auto g : m1.generators) {
        if (phi[g] == NONE) {
          throw InputError("brute_iso_monogenic needs a monogenic structure");
        }
      }
      // Propagate along the right Cayley graph of m1.
      for (std::size_t q = 0; ok && q < queue.size(); ++q) {
        std::size_t const x = queue[q];
        for (auto g : m1.generators) {
          seed(t1[x][g], t2[phi[x]][phi[g]]);
        }
      }
      if (!ok || queue.size() != n) {
        continue;
      }
      std::vector<bool> hit(n, false);
      for (auto y : phi) {
        if (hit[y]) {
          ok = false;
          break;
        }
        hit[y] = true;
      }
      for (std::size_t x = 0; ok && x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (phi[t1[x][y]] != t2[phi[x]][phi[y]]) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        return true;
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sweeps
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using Witnesses = std::map<TypeKey, std::uint64_t>;

    void merge_into(Witnesses& into, Witnesses const& from) {
      for (auto const& [key, count] : from) {
        into[key] += count;
      }
    }

    void check_degree(std::size_t n, std::size_t max) {
      if (n < 1 || n > max) {
        throw InputError("degree must be between 1 and " + std::to_string(max)
                         + ", got " + std::to_string(n));
      }
    }

    std::int64_t millis_since(std::chrono::steady_clock::time_point start) {
      return std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - start)
          .count();
    }

    Witnesses sweep_transformation_keys(
        std::size_t                                           n,
        SweepOptions const&                                   opts,
        std::function<TypeKey(Transformation const&)> const& key) {
      auto shards = run_shards(n, thread_count(opts), [&](std::size_t s) {
        Witnesses local;
        transformations_with_first(
            n, static_cast<point_type>(s), [&](Transformation const& f) {
              ++local[key(f)];
            });
        return local;
      });
      Witnesses all;
      for (auto const& w : shards) {
        merge_into(all, w);
      }
      return all;
    }

    Witnesses sweep_partial_perm_keys(
        std::size_t                                        n,
        SweepOptions const&                                opts,
        std::function<TypeKey(PartialPerm const&)> const& key) {
      auto shards = run_shards(n + 1, thread_count(opts), [&](std::size_t s) {
        Witnesses local;
        partial_perms_with_first(
            n, shard_to_first_pperm_image(s), [&](PartialPerm const& f) {
              ++local[key(f)];
            });
        return local;
      });
      Witnesses all;
      for (auto const& w : shards) {
        merge_into(all, w);
      }
      return all;
    }

    // Groups the structures into isomorphism classes by brute force and
    // checks that the classes coincide with the classes of keys. Returns the
    // number of classes and whether they agree.
    std::pair<std::size_t, bool>
    brute_force_classes(std::vector<FiniteMonoid> const& structures,
                        std::vector<TypeKey> const&      keys) {
      std::vector<std::size_t> reps;  // index into structures
      std::vector<std::size_t> class_of(structures.size());
      for (std::size_t i = 0; i < structures.size(); ++i) {
        std::size_t found = NONE;
        for (std::size_t c = 0; c < reps.size(); ++c) {
          if (brute_iso_monogenic(structures[reps[c]], structures[i])) {
            found = c;
            break;
          }
        }
        if (found == NONE) {
          found = reps.size();
          reps.push_back(i);
        }
        class_of[i] = found;
      }
      std::map<std::size_t, TypeKey> key_of_class;
      std::map<TypeKey, std::size_t> class_of_key;
      bool                           agree = true;
      for (std::size_t i = 0; i < structures.size(); ++i) {
        auto [it1, new1] = key_of_class.emplace(class_of[i], keys[i]);
        auto [it2, new2] = class_of_key.emplace(keys[i], class_of[i]);
        if (it1->second != keys[i] || it2->second != class_of[i]) {
          agree = false;
        }
      }
      return {reps.size(), agree};
    }

  }  // namespace

  EnumerationReport sweep_transformations(std::size_t         n,
                                          SweepOptions const& opts) {
    check_degree(n, max_sweep_degree);
    auto const        start = std::chrono::steady_clock::now();
    EnumerationReport report;
    report.degree        = n;
    report.universe_size = 1;
    for (std::size_t i = 0; i < n; ++i) {
      report.universe_size *= n;
    }
    report.witnesses = sweep_transformation_keys(n, opts, [](auto const& f) {
      auto tp = threshold_period(f);
      return TypeKey{tp.threshold, tp.period};
    });
    report.distinct_types = report.witnesses.size();
    report.formula_value  = monoid_type_count(n);
    report.match          = report.distinct_types == report.formula_value;

    std::map<std::uint64_t, std::set<std::uint64_t>> periods;
    for (auto const& [key, count] : report.witnesses) {
      periods[key.first].insert(key.second);
    }
    bool slices = periods.size() == n;
    for (std::size_t t = 0; slices && t < n; ++t) {
      slices = periods.count(t) > 0 && periods[t] == partition_lcm_set(n - t);
    }
    report.slices_match = slices;
    report.millis       = millis_since(start);
    return report;
  }

  EnumerationReport sweep_partial_perms(std::size_t n, SweepOptions const& opts) {
    check_degree(n, max_sweep_degree);
    auto const        start = std::chrono::steady_clock::now();
    EnumerationReport report;
    report.degree        = n;
    report.universe_size = symmetric_inverse_monoid_size(n);
    report.witnesses = sweep_partial_perm_keys(n, opts, [](auto const& f) {
      auto type = classify(f);
      return TypeKey{type.chain_param, type.cycle_param};
    });
    report.distinct_types = report.witnesses.size();
    report.formula_value  = inverse_monoid_type_count(n);
    report.match          = report.distinct_types == report.formula_value;
    report.millis         = millis_since(start);
    return report;
  }

  TypeKey inverse_semigroup_invariant(PartialPerm const& f) {
    auto const type = classify(f);
    if (type.chain_param <= 1) {
      return {0, type.cycle_param};
    }
    return {type.chain_param, type.cycle_param};
  }

  SemigroupSweep sweep_semigroup_types(std::size_t n, SweepOptions const& opts) {
    check_degree(n, max_semigroup_sweep_degree);
    bool const     brute = n <= opts.brute_force_max_degree;
    SemigroupSweep result;
    {
      auto const         start  = std::chrono::steady_clock::now();
      EnumerationReport& report = result.transformations;
      report.degree             = n;
      report.universe_size      = 1;
      for (std::size_t i = 0; i < n; ++i) {
        report.universe_size *= n;
      }
      auto key = [](Transformation const& f) {
        auto ip = semigroup_index_period(f);
        return TypeKey{ip.index, ip.period};
      };
      report.witnesses      = sweep_transformation_keys(n, opts, key);
      report.distinct_types = report.witnesses.size();
      if (brute) {
        std::vector<FiniteMonoid> structures;
        std::vector<TypeKey>      keys;
        for_each_transformation(n, [&](Transformation const& f) {
          structures.push_back(closure({f}, false).monoid);
          keys.push_back(key(f));
        });
        auto [classes, agree]     = brute_force_classes(structures, keys);
        report.distinct_types     = classes;
        report.brute_force_agrees = agree;
      }
      report.formula_value = semigroup_type_count(n);
      report.match         = report.distinct_types == report.formula_value;
      report.millis        = millis_since(start);
    }
    {
      auto const         start  = std::chrono::steady_clock::now();
      EnumerationReport& report = result.partial_perms;
      report.degree             = n;
      report.universe_size      = symmetric_inverse_monoid_size(n);
      report.witnesses
          = sweep_partial_perm_keys(n, opts, inverse_semigroup_invariant);
      report.distinct_types = report.witnesses.size();
      if (brute) {
        std::vector<FiniteMonoid> structures;
        std::vector<TypeKey>      keys;
        for_each_partial_perm(n, [&](PartialPerm const& f) {
          structures.push_back(closure({f}, true, false).monoid);
          keys.push_back(inverse_semigroup_invariant(f));
        });
        auto [classes, agree]     = brute_force_classes(structures, keys);
        report.distinct_types     = classes;
        report.brute_force_agrees = agree;
      }
      report.formula_value = inverse_semigroup_type_count(n);
      report.match         = report.distinct_types == report.formula_value;
      report.millis        = millis_since(start);
    }
    return result;
  }

  std::string to_json(EnumerationReport const& report) {
    nlohmann::ordered_json out;
    out["degree"]         = report.degree;
    out["universe_size"]  = report.universe_size;
    out["distinct_types"] = report.distinct_types;
    out["formula_value"]  = report.formula_value;
    out["match"]          = report.match;
    out["millis"]         = report.millis;
    return out.dump();
  }

  SnkRealization snk_realization(std::size_t n, std::uint64_t k) {
    SnkRealization result;
    auto const     abstract = snk_monoid(n, k);
    auto const     elements = snk_distinct_elements(n, k);
    auto const concrete = closure({canonical_generator({n, k})}, true, true);
    result.abstract_size = abstract.size();
    result.concrete_size = concrete.elements.size();

    std::map<PartialPerm, std::size_t> concrete_index;
    for (std::size_t i = 0; i < concrete.elements.size(); ++i) {
      concrete_index.emplace(concrete.elements[i], i);
    }
    std::vector<std::size_t> phi;
    std::set<std::size_t>    image;
    for (auto const& e : elements) {
      auto it = concrete_index.find(snk_to_pperm(e));
      if (it == concrete_index.end()) {
        return result;
      }
      phi.push_back(it->second);
      image.insert(it->second);
    }
    result.bijective = image.size() == phi.size()
                       && image.size() == result.concrete_size;
    if (!result.bijective) {
      return result;
    }
    result.tables_agree = phi[*abstract.identity] == *concrete.monoid.identity
                          && phi[abstract.generator]
                                 == concrete.monoid.generator;
    for (std::size_t i = 0; result.tables_agree && i < phi.size(); ++i) {
      for (std::size_t j = 0; j < phi.size(); ++j) {
        if (phi[abstract.table[i][j]]
            != concrete.monoid.table[phi[i]][phi[j]]) {
          result.tables_agree = false;
          break;
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Property suite
  ////////////////////////////////////////////////////////////////////////

  namespace {

    PropertyResult check(std::string name, std::function<std::string()> fn) {
      // fn returns an empty string on success and a counterexample otherwise.
      std::string detail = fn();
      return {std::move(name), detail.empty(), std::move(detail)};
    }

    // Every word over {x, X} of length <= max_length, shortest first.
    std::vector<Word> words_up_to(std::size_t max_length) {
      std::vector<Word> result{Word{}};
      for (std::size_t i = 0; i < result.size(); ++i) {
        if (result[i].size() == max_length) {
          continue;
        }
        for (auto letter : {Letter::generator, Letter::inverse}) {
          Word w = result[i];
          w.push_back(letter);
          result.push_back(std::move(w));
        }
      }
      return result;
    }

    std::string tp_string(ThresholdPeriod tp) {
      return "(" + std::to_string(tp.threshold) + ", "
             + std::to_string(tp.period) + ")";
    }

    std::vector<SnkType> small_snk_types() {
      std::vector<SnkType> result;
      for (std::size_t a = 0; a <= 3; ++a) {
        for (std::uint64_t k = 1; k <= 3; ++k) {
          result.push_back({a, k});
        }
      }
      return result;
    }

  }  // namespace

  std::vector<PropertyResult> run_property_suite(std::size_t max_degree) {
    std::vector<PropertyResult> results;
    auto const                  up_to = [max_degree](std::size_t cap) {
      return std::min(max_degree, cap);
    };

    results.push_back(check("threshold and period are minimal", [&] {
      for (std::size_t n = 1; n <= up_to(5); ++n) {
        std::string failure;
        for_each_transformation(n, [&](Transformation const& f) {
          if (!failure.empty()) {
            return;
          }
          auto const tp = threshold_period(f);
          auto const pw = [&](std::size_t e) { return power(f, e); };
          bool ok = tp == threshold_period_by_powers(f) && tp.threshold < n
                    && pw(tp.threshold + tp.period) == pw(tp.threshold);
          for (std::size_t p = 1; ok && p < tp.period; ++p) {
            ok = pw(tp.threshold + p) != pw(tp.threshold);
          }
          if (ok && tp.threshold > 0) {
            ok = pw(tp.threshold - 1 + tp.period) != pw(tp.threshold - 1);
          }
          if (!ok) {
            failure = to_string(f) + " gives " + tp_string(tp);
          }
        });
        if (!failure.empty()) {
          return failure;
        }
      }
      return std::string();
    }));

    results.push_back(check("constructed generator realises (t, order)", [&] {
      for (std::size_t n = 1; n <= up_to(6); ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
          for (auto const& perm : all_permutations(m)) {
            std::size_t const order = permutation_order(perm);
            for (std::size_t t = 0; t <= n - m; ++t) {
              auto const f  = construct_generator(n, t, perm);
              auto const tp = threshold_period_by_powers(f);
              if (tp != ThresholdPeriod{t, order}) {
                return to_string(f) + " gives " + tp_string(tp);
              }
            }
          }
        }
      }
      return std::string();
    }));

    results.push_back(check("monogenic monoid size equals closure size", [&] {
      for (std::size_t n = 1; n <= up_to(4); ++n) {
        std::string failure;
        for_each_transformation(n, [&](Transformation const& f) {
          if (failure.empty()
              && closure({f}, true).elements.size()
                     != monogenic_monoid_size(f)) {
            failure = to_string(f);
          }
        });
        if (!failure.empty()) {
          return failure;
        }
      }
      return std::string();
    }));

    results.push_back(check("threshold and period decide isomorphism", [&] {
      std::vector<Transformation> all;
      for (std::size_t n = 1; n <= up_to(3); ++n) {
        for_each_transformation(
            n, [&](Transformation const& f) { all.push_back(f); });
      }
      std::vector<FiniteMonoid> monoids;
      for (auto const& f : all) {
        monoids.push_back(closure({f}, true).monoid);
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          if (brute_iso_monogenic(monoids[i], monoids[j])
              != are_isomorphic_monogenic(all[i], all[j])) {
            return to_string(all[i]) + " vs " + to_string(all[j]);
          }
        }
      }
      return std::string();
    }));

    results.push_back(check("inverse monoid axioms hold in I_n", [&] {
      for (std::size_t n = 1; n <= up_to(4); ++n) {
        std::string              failure;
        std::vector<PartialPerm> idempotents;
        for_each_partial_perm(n, [&](PartialPerm const& f) {
          auto const g = inverse(f);
          if (compose(compose(f, g), f) != f || compose(compose(g, f), g) != g
              || inverse(g) != f || !is_idempotent(compose(f, g))) {
            failure = to_string(f);
          }
          if (is_idempotent(f)) {
            idempotents.push_back(f);
          }
        });
        for (auto const& e : idempotents) {
          for (auto const& e2 : idempotents) {
            if (compose(e, e2) != compose(e2, e)) {
              failure = to_string(e) + " and " + to_string(e2);
            }
          }
        }
        if (!failure.empty()) {
          return failure;
        }
      }
      return std::string();
    }));

    results.push_back(check("closure size equals |S_{a,k}|", [&] {
      for (std::size_t n = 1; n <= up_to(5); ++n) {
        std::string failure;
        for_each_partial_perm(n, [&](PartialPerm const& f) {
          auto const type = classify(f);
          if (failure.empty()
              && closure({f}, true, true).elements.size()
                     != snk_size(type.chain_param, type.cycle_param)) {
            failure = to_string(f);
          }
        });
        if (!failure.empty()) {
          return failure;
        }
      }
      return std::string();
    }));

    results.push_back(check("(a, k) decides inverse monoid isomorphism", [&] {
      std::vector<PartialPerm> all;
      for (std::size_t n = 1; n <= up_to(3); ++n) {
        for_each_partial_perm(n,
                              [&](PartialPerm const& f) { all.push_back(f); });
      }
      std::vector<FiniteMonoid> monoids;
      for (auto const& f : all) {
        monoids.push_back(closure({f}, true, true).monoid);
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          if (brute_iso_monogenic(monoids[i], monoids[j])
              != are_isomorphic_monogenic_inverse(all[i], all[j])) {
            return to_string(all[i]) + " vs " + to_string(all[j]);
          }
        }
      }
      return std::string();
    }));

    results.push_back(check("normal forms realise S_{n,k} in I_{n+k}", [&] {
      for (auto type : small_snk_types()) {
        auto const r = snk_realization(type.chain_param, type.cycle_param);
        if (!r.isomorphic()
            || r.concrete_size
                   != snk_size(type.chain_param, type.cycle_param)) {
          return "S_{" + std::to_string(type.chain_param) + ","
                 + std::to_string(type.cycle_param) + "}";
        }
      }
      return std::string();
    }));

    results.push_back(check("S_{n,k} are pairwise non-isomorphic", [&] {
      auto const                types = small_snk_types();
      std::vector<FiniteMonoid> monoids;
      for (auto type : types) {
        monoids.push_back(
            closure({canonical_generator(type)}, true, true).monoid);
      }
      for (std::size_t i = 0; i < types.size(); ++i) {
        for (std::size_t j = 0; j < types.size(); ++j) {
          if (brute_iso_monogenic(monoids[i], monoids[j]) != (i == j)) {
            return std::to_string(i) + " vs " + std::to_string(j);
          }
        }
      }
      return std::string();
    }));

    results.push_back(check("element-order DP equals partition lcm sets", [] {
      auto const s = element_order_counts(default_partition_bound);
      for (std::size_t n = 0; n <= default_partition_bound; ++n) {
        if (s[n] != partition_lcm_set(n).size()) {
          return "n = " + std::to_string(n);
        }
      }
      return std::string();
    }));

    results.push_back(check("chain actions agree and are faithful", [] {
      for (std::size_t j = 2; j <= 12; ++j) {
        if (!chain_action_check(j)) {
          return "j = " + std::to_string(j);
        }
      }
      return std::string();
    }));

    results.push_back(check("free evaluation is a homomorphism", [] {
      auto const words = words_up_to(8);
      for (auto const& u : words) {
        for (auto const& v : words) {
          Word uv = u;
          uv.insert(uv.end(), v.begin(), v.end());
          if (free_eval(uv) != free_multiply(free_eval(u), free_eval(v))) {
            return to_string(u) + " " + to_string(v);
          }
        }
      }
      return std::string();
    }));

    results.push_back(check("closure is independent of generator order", [&] {
      std::vector<PartialPerm> all;
      for_each_partial_perm(up_to(3), [&](PartialPerm const& f) {
        all.push_back(f);
      });
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          auto const c1 = closure({all[i], all[j]}, true, true).elements;
          auto const c2 = closure({all[j], all[i]}, true, true).elements;
          if (std::set<PartialPerm>(c1.begin(), c1.end())
              != std::set<PartialPerm>(c2.begin(), c2.end())) {
            return to_string(all[i]) + " and " + to_string(all[j]);
          }
        }
      }
      return std::string();
    }));

    return results;
  }

}  // namespace monocount::oracle
