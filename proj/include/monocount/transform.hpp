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

#ifndef MONOCOUNT_TRANSFORM_HPP_
#define MONOCOUNT_TRANSFORM_HPP_

// Transformations (total self-maps of {1, ..., n}) and the invariants that
// classify the monogenic monoids and semigroups they generate.
//
// Functions act on the right and compose from left to right: the point i is
// mapped by compose(f, g) to (i)f then g.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monocount/types.hpp"

namespace monocount {

  class Transformation {
   public:
    // The unique element of T_0.
    Transformation() = default;

    // images[i] is the 0-based image of the 0-based point i.
    explicit Transformation(std::vector<point_type> images);

    static Transformation identity(std::size_t degree);

    // 1-based images, as written in text: from_one_based({2, 3, 1, 1}).
    static Transformation from_one_based(std::initializer_list<std::size_t> il);
    static Transformation from_one_based(std::vector<std::size_t> const& v);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    point_type operator[](std::size_t i) const {
      return _images[i];
    }

    std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    bool is_permutation() const;

    friend bool operator==(Transformation const&, Transformation const&)
        = default;
    friend auto operator<=>(Transformation const&, Transformation const&)
        = default;

   private:
    std::vector<point_type> _images;
  };

  struct TransformationHash {
    std::size_t operator()(Transformation const& f) const noexcept;
  };

  // Maps i to ((i)f)g. Throws InputError on a degree mismatch.
  Transformation compose(Transformation const& f, Transformation const& g);

  // f^e by repeated squaring; f^0 is the identity of the same degree.
  Transformation power(Transformation const& f, std::size_t e);

  // Least (t, p) with p >= 1 and f^(t + p) = f^t.
  struct ThresholdPeriod {
    std::size_t threshold = 0;
    std::size_t period    = 1;

    friend bool operator==(ThresholdPeriod const&, ThresholdPeriod const&)
        = default;
    friend auto operator<=>(ThresholdPeriod const&, ThresholdPeriod const&)
        = default;
  };

  // Least (i, p) with i >= 1, p >= 1 and f^(i + p) = f^i; the isomorphism
  // invariant of the monogenic subsemigroup {f^m : m >= 1}.
  struct IndexPeriod {
    std::size_t index  = 1;
    std::size_t period = 1;

    friend bool operator==(IndexPeriod const&, IndexPeriod const&) = default;
    friend auto operator<=>(IndexPeriod const&, IndexPeriod const&) = default;
  };

  // Computed from the functional digraph in O(n): the period is the lcm of
  // the cycle lengths and the threshold is the longest tail entering a
  // cycle. Throws InputError for degree 0 and std::overflow_error if the
  // period does not fit in 64 bits.
  ThresholdPeriod threshold_period(Transformation const& f);

  // |{f^m : m >= 0}|, which is t + p when t >= 1 and p otherwise.
  std::size_t monogenic_monoid_size(Transformation const& f);

  // (max(t, 1), p) where (t, p) = threshold_period(f).
  IndexPeriod semigroup_index_period(Transformation const& f);

  // The monogenic submonoids generated by f and g are isomorphic. Degrees may
  // differ.
  bool are_isomorphic_monogenic(Transformation const& f,
                                Transformation const& g);

  // Returns the transformation of degree n that acts as perm on {1, ..., m},
  // maps i to i - 1 for m < i <= m + threshold, and fixes every other point.
  // Its threshold is `threshold` and its period is the order of perm.
  //
  // Throws InputError if perm is not a permutation of degree m >= 1, if
  // m > n, or if threshold > n - m.
  Transformation construct_generator(std::size_t            n,
                                     std::size_t            threshold,
                                     Transformation const& perm);

  // A permutation of least degree with the given order: one cycle per maximal
  // prime-power divisor, in increasing order of prime, on consecutive points.
  // The order 1 yields the identity of degree 1.
  Transformation permutation_of_order(std::uint64_t order);

  // Order of a permutation, the lcm of its cycle lengths.
  std::uint64_t permutation_order(Transformation const& perm);

  struct FunctionalDigraph {
    std::size_t num_vertices = 0;
    // 0-based (source, target) pairs.
    std::vector<std::pair<point_type, point_type>> edges;
  };

  // Edges (v, (v)f), sorted by source.
  FunctionalDigraph functional_digraph(Transformation const& f);

  // Inverse of functional_digraph. Throws InputError unless every vertex has
  // exactly one out-edge and every endpoint is a vertex.
  Transformation from_digraph(FunctionalDigraph const& d);

  // Lengths of the cycles of the functional digraph of f, sorted
  // non-increasingly.
  std::vector<std::size_t> cycle_lengths(Transformation const& f);

  // Text format: 1-based images separated by single spaces, e.g. "2 3 1 1".
  // Throws ParseError with the offset of the first offending character.
  Transformation parse_transformation(std::string_view text);
  std::string    to_string(Transformation const& f);

}  // namespace monocount

#endif  // MONOCOUNT_TRANSFORM_HPP_
