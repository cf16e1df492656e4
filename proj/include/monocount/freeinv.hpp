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

#ifndef MONOCOUNT_FREEINV_HPP_
#define MONOCOUNT_FREEINV_HPP_

// The monogenic free inverse monoid and its finite quotients S_{n,k}.
//
// An element of the free inverse monoid on {x} is determined by its Munn
// tree, which for one generator is an integer interval [left, right]
// containing the origin 0, together with an end point inside it. The word
// x^-a x^b x^-b x^c (a, c <= b) has left = -a, right = b - a, end = c - a.
//
// S_{n,k} is the quotient by x^n x^-n = x^(n+1) x^-(n+1) and
// x^n x^-n = x^n x^-n x^k. It is realised concretely as the inverse submonoid
// of I_{n+k} generated by canonical_generator({n, k}).

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "monocount/counting.hpp"
#include "monocount/pperm.hpp"

namespace monocount {

  struct WordParams {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;

    friend bool operator==(WordParams const&, WordParams const&) = default;
  };

  struct MunnElement {
    std::int64_t left  = 0;  // <= 0
    std::int64_t right = 0;  // >= 0
    std::int64_t end   = 0;  // in [left, right]

    friend bool operator==(MunnElement const&, MunnElement const&) = default;
    friend auto operator<=>(MunnElement const&, MunnElement const&) = default;
  };

  // Throws InputError unless left <= 0 <= right and left <= end <= right.
  MunnElement make_munn_element(std::int64_t left,
                                std::int64_t right,
                                std::int64_t end);

  // The element x^-a x^b x^-b x^c. Throws InputError unless a, c <= b.
  MunnElement munn_from_word_params(WordParams params);
  WordParams  word_params(MunnElement const& u);

  enum class Letter : std::uint8_t { generator, inverse };
  using Word = std::vector<Letter>;

  // 'x' is the generator and 'X' its inverse.
  Word        parse_word(std::string_view text);
  std::string to_string(Word const& w);

  MunnElement free_identity();
  MunnElement free_generator();
  // Walk from 0: +1 for x, -1 for X.
  MunnElement free_eval(Word const& w);
  MunnElement free_multiply(MunnElement const& u, MunnElement const& v);
  MunnElement free_invert(MunnElement const& u);

  ////////////////////////////////////////////////////////////////////////
  // S_{n,k}
  ////////////////////////////////////////////////////////////////////////

  // A representative x^-a x^b x^-b x^c with either b < n and a, c <= b, or
  // b = n and a, c < k.
  struct SnkElement {
    std::size_t   n = 0;
    std::uint64_t k = 1;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;

    friend bool operator==(SnkElement const&, SnkElement const&) = default;
    friend auto operator<=>(SnkElement const&, SnkElement const&) = default;
  };

  bool        is_valid(SnkElement const& e);
  // "x^-a x^b x^-b x^c".
  std::string to_string(SnkElement const& e);

  // Rewrites x^-a x^b x^-b x^c to x^-(a mod k) x^n x^-n x^(c mod k) when
  // b >= n and leaves it alone otherwise. Throws InputError if k = 0.
  SnkElement  snk_reduce(MunnElement const& u, std::size_t n, std::uint64_t k);
  // The free inverse monoid element of the word x^-a x^b x^-b x^c.
  MunnElement snk_lift(SnkElement const& e);

  SnkElement snk_identity(std::size_t n, std::uint64_t k);
  SnkElement snk_generator(std::size_t n, std::uint64_t k);
  // Throws InputError if the parameters differ.
  SnkElement snk_multiply(SnkElement const& e1, SnkElement const& e2);
  SnkElement snk_invert(SnkElement const& e);

  // Distinct representatives can denote the same element: when b = n only
  // c - a mod k matters. Maps e to x^-0 x^n x^-n x^((c - a) mod k) in that
  // case and leaves it alone otherwise.
  SnkElement snk_normalize(SnkElement const& e);

  // Every representative, ordered by b, then a, then c.
  std::vector<SnkElement> snk_elements(std::size_t n, std::uint64_t k);
  // The number of representatives, 1^2 + ... + n^2 + k^2.
  count_type snk_representative_count(std::size_t n, std::uint64_t k);

  // One representative per element of S_{n,k}, identified through
  // snk_to_pperm, keeping the first in the order of snk_elements.
  std::vector<SnkElement> snk_distinct_elements(std::size_t n, std::uint64_t k);
  // |S_{n,k}| = 1^2 + ... + n^2 + k.
  count_type snk_size(std::size_t n, std::uint64_t k);

  // The value of x^-a x^b x^-b x^c at canonical_generator({n, k}) in
  // I_{n+k}.
  PartialPerm snk_to_pperm(SnkElement const& e);

  inline constexpr std::size_t default_cayley_limit = 10;

  struct CayleyTable {
    std::vector<SnkElement>               elements;
    // products[i][j] is the index of elements[i] * elements[j].
    std::vector<std::vector<std::size_t>> products;
  };

  // Multiplication table of S_{n,k} over snk_distinct_elements(n, k). Throws
  // LimitExceeded if n + k > limit.
  CayleyTable cayley_table(std::size_t   n,
                           std::uint64_t k,
                           std::size_t   limit = default_cayley_limit);

  // Header row of element names, then one row of product indices per
  // element.
  std::string to_csv(CayleyTable const& table);
  std::string to_json(CayleyTable const& table);

}  // namespace monocount

#endif  // MONOCOUNT_FREEINV_HPP_
