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

#ifndef MONOCOUNT_PPERM_HPP_
#define MONOCOUNT_PPERM_HPP_

// Partial permutations (elements of the symmetric inverse monoid I_n) and the
// classification of the monogenic inverse submonoids they generate.
//
// The inverse submonoid of I_n generated by f is determined up to isomorphism
// by two numbers: the largest number of points on a chain of f, and the lcm
// of the lengths of the cycles of f. A point outside both the domain and the
// image of f is a chain on one point.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monocount/transform.hpp"
#include "monocount/types.hpp"

namespace monocount {

  inline constexpr point_type UNDEFINED = std::numeric_limits<point_type>::max();

  class PartialPerm {
   public:
    PartialPerm() = default;

    // images[i] is the 0-based image of i, or UNDEFINED. Throws InputError if
    // a defined image is out of range or repeated.
    explicit PartialPerm(std::vector<point_type> images);

    static PartialPerm identity(std::size_t degree);
    static PartialPerm empty(std::size_t degree);

    // 1-based images with 0 standing for "undefined":
    // from_one_based({2, 0, 4, 5, 3}) is "2 - 4 5 3".
    static PartialPerm from_one_based(std::initializer_list<std::size_t> il);
    static PartialPerm from_one_based(std::vector<std::size_t> const& v);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    point_type operator[](std::size_t i) const {
      return _images[i];
    }

    std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    bool is_defined(std::size_t i) const {
      return _images[i] != UNDEFINED;
    }

    // Size of the domain.
    std::size_t rank() const;

    friend bool operator==(PartialPerm const&, PartialPerm const&) = default;
    friend auto operator<=>(PartialPerm const&, PartialPerm const&) = default;

   private:
    std::vector<point_type> _images;
  };

  struct PartialPermHash {
    std::size_t operator()(PartialPerm const& f) const noexcept;
  };

  // Relational composition, left to right. Throws InputError on a degree
  // mismatch.
  PartialPerm compose(PartialPerm const& f, PartialPerm const& g);

  PartialPerm inverse(PartialPerm const& f);

  // f^e; f^0 is the identity of I_n.
  PartialPerm power(PartialPerm const& f, std::size_t e);

  bool is_idempotent(PartialPerm const& f);

  struct OrbitDecomposition {
    // Both sorted non-increasingly.
    std::vector<std::size_t> cycles;
    std::vector<std::size_t> chains;  // number of points on each chain

    friend bool operator==(OrbitDecomposition const&, OrbitDecomposition const&)
        = default;
  };

  OrbitDecomposition orbit_decomposition(PartialPerm const& f);

  // Identifies the monogenic inverse monoid with presentation
  //   <x | x^a x^-a = x^(a+1) x^-(a+1), x^a x^-a = x^a x^-a x^k>.
  struct SnkType {
    std::size_t   chain_param = 0;  // a, the longest chain (0 if none)
    std::uint64_t cycle_param = 1;  // k, lcm of the cycle lengths (1 if none)

    friend bool operator==(SnkType const&, SnkType const&) = default;
    friend auto operator<=>(SnkType const&, SnkType const&) = default;
  };

  SnkType classify(PartialPerm const& f);

  // The chain 1 -> 2 -> ... -> a together with the cycle (a+1 ... a+k), of
  // degree a + k. For a = 1 the chain is a single untouched point.
  PartialPerm canonical_generator(SnkType type);

  bool are_isomorphic_monogenic_inverse(PartialPerm const& f,
                                        PartialPerm const& g);

  // A generating partial permutation with the same threshold and period as a
  // transformation: the chain carries the threshold, the cycle the period.
  SnkType embed_transformation_type(ThresholdPeriod tp);

  // Checks that the chain on j points and the chain on j - 1 points act
  // identically on the pairs X = {(1, 2), ..., (j - 1, j)} when acting by
  //   (a, a + 1)f = ((a)f, (a + 1)f)   and   (b, b + 1)g = ((b)g, (b)g + 1),
  // and that the inverse monoid generated by the shorter chain acts
  // faithfully on X. Throws InputError for j < 2.
  bool chain_action_check(std::size_t j);

  // Text format: entries separated by single spaces, "-" for undefined,
  // e.g. "2 - 4 5 3". Throws ParseError (with position) on bad syntax, range
  // or injectivity violations.
  PartialPerm parse_partial_perm(std::string_view text);
  std::string to_string(PartialPerm const& f);

}  // namespace monocount

#endif  // MONOCOUNT_PPERM_HPP_
